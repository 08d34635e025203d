// The star-triangle identity: sliding a crossing of two horizontal strings
// past a column of two ordinary vertices leaves the partition function of
// the little three-oxygen diagram unchanged, for each of the 20 ways of
// fixing the six external hydrogen positions.
//
// Everything lives in VarSpace{2, 1}: x1 is the variable of the string that
// enters the crossing at its lower-left, x2 the other string's, a1 the
// single column variable of the two ordinary vertices.

#pragma once

#include <array>
#include <functional>
#include <string>
#include <vector>

#include "sixvertex/lattice.hpp"
#include "sixvertex/ring.hpp"

namespace sixvertex {

enum class DiagonalDirection : int {
  SouthWest = 0,
  NorthWest = 1,
  NorthEast = 2,
  SouthEast = 3,
};

class CrossingConfig {
 public:
  CrossingConfig(DiagonalDirection a, DiagonalDirection b);

  static const std::array<CrossingConfig, 6>& all();

  bool has(DiagonalDirection d) const { return bits_ & (1u << static_cast<int>(d)); }
  int ordinal() const;
  std::string name() const;  // e.g. "SW+NE"

  friend auto operator<=>(const CrossingConfig&, const CrossingConfig&) = default;

 private:
  unsigned bits_;
};

// Weight of a crossing as a function of the two string variables; `lower` is
// the index of the string entering at the lower-left.
struct CrossingWeightTable {
  using Entry = std::function<LaurentPoly(const VarSpace&, int lower, int upper)>;
  std::array<Entry, 6> entries;  // indexed by CrossingConfig::ordinal()

  // {SW,NE} -> 1/x_lower, {NW,SE} -> 1/x_upper, {NW,NE} -> 1/x_lower - 1/x_upper,
  // {SW,SE} -> 0, {NE,SE} -> 1/x_lower, {SW,NW} -> 1/x_upper.
  static CrossingWeightTable standard();

  const Entry& entry(CrossingConfig c) const { return entries[c.ordinal()]; }
  Entry& entry(CrossingConfig c) { return entries[c.ordinal()]; }
};

LaurentPoly crossing_weight(
    const VarSpace& space, CrossingConfig c, int lower, int upper,
    const CrossingWeightTable& table = CrossingWeightTable::standard());

// Hydrogen present / absent at the six external positions, exactly three
// present.  Positions are indexed 0..5 in the order alpha (lower left),
// beta (upper left), gamma (top), delta (upper right), epsilon (lower
// right), zeta (bottom); from_mask(mask) reads position k from bit k.
class BoundarySextuple {
 public:
  explicit BoundarySextuple(const std::array<bool, 6>& flags);

  static BoundarySextuple from_mask(unsigned mask);
  static std::vector<BoundarySextuple> all();  // the 20, ascending by mask

  bool at(int position) const;
  unsigned mask() const;
  std::string name() const;  // e.g. "beta+gamma+zeta"

  friend bool operator==(const BoundarySextuple&, const BoundarySextuple&) = default;

 private:
  std::array<bool, 6> flags_;
};

struct StarTriangleSides {
  LaurentPoly left;
  LaurentPoly right;
};

// Sums, on each side, over all ways of bonding one hydrogen per internal
// segment such that every oxygen ends up with exactly two bonds.
StarTriangleSides star_triangle_sides(
    const BoundarySextuple& b,
    const RectWeightTable& rect = RectWeightTable::standard(),
    const CrossingWeightTable& cross = CrossingWeightTable::standard());

struct StarTriangleCase {
  unsigned mask = 0;
  std::string boundary;
  std::string lhs;
  std::string rhs;
  bool pass = false;
};

struct StarTriangleReport {
  std::vector<StarTriangleCase> cases;
  bool all_pass() const;
};

StarTriangleReport verify_star_triangle(
    const RectWeightTable& rect = RectWeightTable::standard(),
    const CrossingWeightTable& cross = CrossingWeightTable::standard());

}  // namespace sixvertex
