// Partitions, strict Gelfand-Tsetlin patterns, staircases, and semistandard
// tableaux, together with their enumerators and the pattern <-> staircase
// bijection.
//
// Conventions fixed here and relied on everywhere else:
//   - a Partition carries an explicit part count, so (1) with one part and
//     (1,0) with two parts are different objects (both Z and the Schur sum
//     depend on the number of rows, not just the nonzero parts);
//   - GT rows are numbered 1..n from the top; row i has n+1-i entries,
//     strictly increasing left to right;
//   - a staircase is stored column by column, each column a strictly
//     increasing subset of {1..m} where m = first column size; reading each
//     column bottom-to-top in French orientation gives the implied filling.

#pragma once

#include <string>
#include <vector>

#include <json.hpp>

namespace sixvertex {

class Partition {
 public:
  Partition() = default;  // the empty partition, zero parts
  explicit Partition(std::vector<int> parts);

  static Partition zeros(int n);

  int part_count() const { return static_cast<int>(parts_.size()); }
  const std::vector<int>& parts() const { return parts_; }
  int part(int i) const;  // 1-based; 0 beyond the stored parts
  int first_part() const { return parts_.empty() ? 0 : parts_.front(); }
  int sum() const;

  bool contains(const Partition& inner) const;  // Young-diagram containment
  Partition conjugate() const;
  Partition padded(int n) const;  // same shape, at least n parts

  // rho = (n-1,...,0), delta = (0,1,...,n-1), lambda+rho componentwise.
  std::vector<int> rho() const;
  std::vector<int> delta() const;
  std::vector<int> plus_rho() const;

  friend auto operator<=>(const Partition&, const Partition&) = default;

 private:
  std::vector<int> parts_;
};

// Columns lacking a top-boundary hydrogen, and row 1 of the matching GT
// pattern: {lambda_i + n + 1 - i}, sorted increasing. n is the part count.
std::vector<int> top_row(const Partition& lambda);

// All partitions with exactly max_parts parts (trailing zeros included),
// first part at most max_first. Ordered lexicographically on the parts.
std::vector<Partition> partitions_in_box(int max_parts, int max_first);

class GTPattern {
 public:
  explicit GTPattern(std::vector<std::vector<int>> rows);

  int row_count() const { return static_cast<int>(rows_.size()); }
  const std::vector<int>& row(int i) const;  // 1-based from the top
  const std::vector<std::vector<int>>& rows() const { return rows_; }
  int rightmost(int i) const { return row(i).back(); }

  friend bool operator==(const GTPattern&, const GTPattern&) = default;

 private:
  std::vector<std::vector<int>> rows_;
};

// All strict GT patterns with row 1 = top_row(lambda), in lexicographic
// order on the flattened row data.
std::vector<GTPattern> enumerate_gt(const Partition& lambda);

class Staircase {
 public:
  explicit Staircase(std::vector<std::vector<int>> columns);

  int column_count() const { return static_cast<int>(columns_.size()); }
  int ground_size() const;  // m: the size of column 1
  const std::vector<int>& column(int c) const;  // 1-based from the left
  const std::vector<std::vector<int>>& columns() const { return columns_; }

  friend bool operator==(const Staircase&, const Staircase&) = default;

 private:
  std::vector<std::vector<int>> columns_;
};

// Column j+1 of the staircase is the complement in {1..m} of GT row n+1-j
// (the whole row; rows past the bottom count as empty), m = max of row 1.
Staircase gt_to_staircase(const GTPattern& g);
GTPattern staircase_to_gt(const Staircase& s);

class Tableau {
 public:
  Tableau(Partition shape, std::vector<std::vector<int>> rows);

  const Partition& shape() const { return shape_; }
  int entry(int i, int j) const;  // 1-based (row, column), English orientation
  const std::vector<std::vector<int>>& rows() const { return rows_; }

  friend bool operator==(const Tableau&, const Tableau&) = default;

 private:
  Partition shape_;
  std::vector<std::vector<int>> rows_;
};

// All semistandard tableaux of the given shape with entries in {1..max_entry},
// in lexicographic order on the row-major entry list.
std::vector<Tableau> enumerate_ssyt(const Partition& shape, int max_entry);

std::string render_gt(const GTPattern& g);
std::string render_staircase(const Staircase& s);

// JSON forms: GT and tableau as arrays of rows, staircase as an array of
// sorted column arrays.
nlohmann::json gt_to_json(const GTPattern& g);
GTPattern gt_from_json(const nlohmann::json& j);
nlohmann::json staircase_to_json(const Staircase& s);
Staircase staircase_from_json(const nlohmann::json& j);
nlohmann::json tableau_to_json(const Tableau& t);
Tableau tableau_from_json(const nlohmann::json& j);

}  // namespace sixvertex
