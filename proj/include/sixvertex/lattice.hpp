// Square-ice states under the lambda boundary condition and the exact
// partition function.
//
// The grid has n rows (row 1 on top) and m = n + lambda_1 columns (column 1
// on the left).  Every edge of the grid carries exactly one hydrogen, bonded
// to exactly one of its two endpoint oxygens; a VertexConfig records, per
// oxygen, which of its four incident edges hold a hydrogen bonded to it.
// Boundary convention: the hydrogens on the left and right boundary edges
// bond inward (W on column 1, E on column m), the bottom boundary carries no
// hydrogens, and the top boundary carries a down-bonded hydrogen on every
// column except the gaps top_row(lambda).

#pragma once

#include <array>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "sixvertex/ring.hpp"
#include "sixvertex/shapes.hpp"

namespace sixvertex {

enum class Direction : int { North = 0, South = 1, East = 2, West = 3 };

class VertexConfig {
 public:
  VertexConfig(Direction a, Direction b);

  static VertexConfig from_name(const std::string& name);  // "NS", "EW", ...
  // The six admissible configurations, in a fixed order; ordinal() indexes it.
  static const std::array<VertexConfig, 6>& all();

  bool has(Direction d) const { return bits_ & (1u << static_cast<int>(d)); }
  int ordinal() const;
  std::string name() const;  // letters in N, S, E, W order

  friend auto operator<=>(const VertexConfig&, const VertexConfig&) = default;

 private:
  unsigned bits_;
};

struct BoundarySpec {
  int rows = 0;
  int cols = 0;
  std::vector<int> top_gaps;  // sorted columns with no top hydrogen

  // m defaults to lambda_1 + n; cols_override may only widen it (the extra
  // columns get ordinary gapless top hydrogens).
  static BoundarySpec for_partition(const Partition& lambda,
                                    std::optional<int> cols_override = std::nullopt);

  friend bool operator==(const BoundarySpec&, const BoundarySpec&) = default;
};

class IceState {
 public:
  // Validates edge consistency and the boundary condition.
  IceState(BoundarySpec boundary, std::vector<std::vector<VertexConfig>> grid);

  int rows() const { return boundary_.rows; }
  int cols() const { return boundary_.cols; }
  const BoundarySpec& boundary() const { return boundary_; }
  VertexConfig at(int i, int j) const;  // 1-based (row, column)

  friend bool operator==(const IceState&, const IceState&) = default;

 private:
  BoundarySpec boundary_;
  std::vector<std::vector<VertexConfig>> grid_;
};

// One weight per vertex configuration, as a function of the ambient space and
// the (row, column) position; entries are swappable so tests can knock a
// single one out and watch the identities fail.
struct RectWeightTable {
  using Entry = std::function<LaurentPoly(const VarSpace&, int row, int col)>;
  std::array<Entry, 6> entries;  // indexed by VertexConfig::ordinal()

  // {N,S} -> x_i/a_j, {N,W} -> x_i/a_j - 1, the other four -> 1.
  static RectWeightTable standard();

  const Entry& entry(VertexConfig c) const { return entries[c.ordinal()]; }
  Entry& entry(VertexConfig c) { return entries[c.ordinal()]; }
};

LaurentPoly vertex_weight(const VarSpace& space, VertexConfig c, int row, int col,
                          const RectWeightTable& table = RectWeightTable::standard());

enum class EnumerationStrategy { via_gt, backtrack };

// All states for the lambda boundary.  Both strategies return the same
// canonical order (lexicographic on the row-major configuration ordinals),
// so agreement is plain vector equality.
std::vector<IceState> enumerate_states(
    const Partition& lambda, EnumerationStrategy strategy,
    std::optional<int> cols_override = std::nullopt);

// Row 1 of the pattern is the sorted top-gap set; row i+1 collects the
// columns whose hydrogen between grid rows i and i+1 bonds upward.
GTPattern state_to_gt(const IceState& s);
IceState gt_to_state(const GTPattern& g, const Partition& lambda,
                     std::optional<int> cols_override = std::nullopt);

// Product of vertex weights over the whole grid, in VarSpace{rows, cols}.
LaurentPoly state_weight(const IceState& s,
                         const RectWeightTable& table = RectWeightTable::standard());

// Sum of state_weight over all states for the lambda boundary.
LaurentPoly partition_function(
    const Partition& lambda,
    const RectWeightTable& table = RectWeightTable::standard(),
    EnumerationStrategy strategy = EnumerationStrategy::via_gt,
    std::optional<int> cols_override = std::nullopt);

// ASCII drawing: O per oxygen, * per bonded hydrogen, dashes and bars for the
// remaining halves of the edges.  Injective on states for a fixed boundary.
std::string render_state(const IceState& s);

// {"n":.., "m":.., "grid":[["NS","EW",..],..]}; the boundary is recovered
// from the grid on parse.
nlohmann::json state_to_json(const IceState& s);
IceState state_from_json(const nlohmann::json& j);

}  // namespace sixvertex
