#include "sixvertex/shapes.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace sixvertex {

namespace {

int digits(int v) { return static_cast<int>(std::to_string(v).size()); }

std::string pad_left(int v, int width) {
  std::string s = std::to_string(v);
  return std::string(width - s.size(), ' ') + s;
}

}  // namespace

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 0) throw std::invalid_argument("negative partition part");
    if (i > 0 && parts_[i] > parts_[i - 1]) {
      throw std::invalid_argument("partition parts must weakly decrease");
    }
  }
}

Partition Partition::zeros(int n) {
  if (n < 0) throw std::invalid_argument("negative part count");
  return Partition(std::vector<int>(n, 0));
}

int Partition::part(int i) const {
  if (i < 1) throw std::invalid_argument("part index is 1-based");
  return i <= part_count() ? parts_[i - 1] : 0;
}

int Partition::sum() const {
  return std::accumulate(parts_.begin(), parts_.end(), 0);
}

bool Partition::contains(const Partition& inner) const {
  for (int i = 1; i <= inner.part_count(); ++i) {
    if (inner.part(i) > part(i)) return false;
  }
  return true;
}

Partition Partition::conjugate() const {
  std::vector<int> cols(first_part(), 0);
  for (int p : parts_) {
    for (int k = 0; k < p; ++k) ++cols[k];
  }
  return Partition(std::move(cols));
}

Partition Partition::padded(int n) const {
  std::vector<int> p = parts_;
  if (static_cast<int>(p.size()) < n) p.resize(n, 0);
  return Partition(std::move(p));
}

std::vector<int> Partition::rho() const {
  const int n = part_count();
  std::vector<int> r(n);
  for (int i = 0; i < n; ++i) r[i] = n - 1 - i;
  return r;
}

std::vector<int> Partition::delta() const {
  std::vector<int> d(part_count());
  std::iota(d.begin(), d.end(), 0);
  return d;
}

std::vector<int> Partition::plus_rho() const {
  const int n = part_count();
  std::vector<int> v(n);
  for (int i = 0; i < n; ++i) v[i] = parts_[i] + n - 1 - i;
  return v;
}

std::vector<int> top_row(const Partition& lambda) {
  const int n = lambda.part_count();
  std::vector<int> cols(n);
  for (int i = 1; i <= n; ++i) cols[n - i] = lambda.part(i) + n + 1 - i;
  return cols;  // increasing: part i lands at position n+1-i
}

std::vector<Partition> partitions_in_box(int max_parts, int max_first) {
  if (max_parts < 0 || max_first < 0) {
    throw std::invalid_argument("box dimensions must be nonnegative");
  }
  std::vector<Partition> out;
  std::vector<int> parts;
  auto rec = [&](auto&& self, int bound) -> void {
    if (static_cast<int>(parts.size()) == max_parts) {
      out.emplace_back(parts);
      return;
    }
    for (int v = 0; v <= bound; ++v) {
      parts.push_back(v);
      self(self, v);
      parts.pop_back();
    }
  };
  rec(rec, max_first);
  return out;
}

GTPattern::GTPattern(std::vector<std::vector<int>> rows) : rows_(std::move(rows)) {
  const int n = static_cast<int>(rows_.size());
  if (n < 1) throw std::invalid_argument("pattern needs at least one row");
  for (int i = 0; i < n; ++i) {
    const auto& row = rows_[i];
    if (static_cast<int>(row.size()) != n - i) {
      throw std::invalid_argument("row " + std::to_string(i + 1) +
                                  " has the wrong number of entries");
    }
    for (std::size_t j = 0; j < row.size(); ++j) {
      if (row[j] < 1) throw std::invalid_argument("pattern entries must be positive");
      if (j > 0 && row[j] <= row[j - 1]) {
        throw std::invalid_argument("row entries must strictly increase");
      }
    }
  }
  for (int i = 0; i + 1 < n; ++i) {
    const auto& upper = rows_[i];
    const auto& lower = rows_[i + 1];
    for (std::size_t j = 0; j < lower.size(); ++j) {
      if (!(upper[j] <= lower[j] && lower[j] <= upper[j + 1])) {
        throw std::invalid_argument("rows fail the interlacing condition");
      }
    }
  }
}

const std::vector<int>& GTPattern::row(int i) const {
  if (i < 1 || i > row_count()) throw std::invalid_argument("row index out of range");
  return rows_[i - 1];
}

std::vector<GTPattern> enumerate_gt(const Partition& lambda) {
  if (lambda.part_count() < 1) {
    throw std::invalid_argument("enumeration needs at least one part");
  }
  std::vector<GTPattern> out;
  std::vector<std::vector<int>> rows{top_row(lambda)};
  // Extend downward: entry j of the next row ranges over
  // [prev[j], prev[j+1]], kept strictly above its left neighbor.  Visiting
  // candidates in increasing order makes the output lexicographic.
  auto rec = [&](auto&& self) -> void {
    // copy: pushing the next row may reallocate the row storage
    const std::vector<int> prev = rows.back();
    if (prev.size() == 1) {
      out.emplace_back(rows);
      return;
    }
    const std::size_t len = prev.size() - 1;
    std::vector<int> next(len);
    auto fill = [&](auto&& fill_self, std::size_t j) -> void {
      if (j == len) {
        rows.push_back(next);
        self(self);
        rows.pop_back();
        return;
      }
      int lo = prev[j];
      if (j > 0) lo = std::max(lo, next[j - 1] + 1);
      for (int v = lo; v <= prev[j + 1]; ++v) {
        next[j] = v;
        fill_self(fill_self, j + 1);
      }
    };
    fill(fill, 0);
  };
  rec(rec);
  return out;
}

Staircase::Staircase(std::vector<std::vector<int>> columns)
    : columns_(std::move(columns)) {
  if (columns_.empty()) throw std::invalid_argument("staircase needs columns");
  const int m = static_cast<int>(columns_[0].size());
  const int n = static_cast<int>(columns_.size()) - 1;
  if (m < n) throw std::invalid_argument("first column too short for the column count");
  for (int c = 0; c <= n; ++c) {
    const auto& col = columns_[c];
    if (static_cast<int>(col.size()) != m - c) {
      throw std::invalid_argument("column " + std::to_string(c + 1) +
                                  " has the wrong size");
    }
    for (std::size_t y = 0; y < col.size(); ++y) {
      if (col[y] < 1 || col[y] > m) {
        throw std::invalid_argument("column entries must lie in 1..m");
      }
      if (y > 0 && col[y] <= col[y - 1]) {
        throw std::invalid_argument("column entries must strictly increase");
      }
    }
  }
  // Semistandardness of the implied French-orientation filling (rows weakly
  // increase rightward) and the weak decrease along south-east diagonals.
  for (int c = 0; c < n; ++c) {
    const auto& left = columns_[c];
    const auto& right = columns_[c + 1];
    for (std::size_t y = 0; y < right.size(); ++y) {
      if (left[y] > right[y]) {
        throw std::invalid_argument("implied filling is not semistandard");
      }
    }
    for (std::size_t y = 1; y < left.size(); ++y) {
      if (y - 1 < right.size() && left[y] < right[y - 1]) {
        throw std::invalid_argument("diagonals must weakly decrease to the south-east");
      }
    }
  }
}

int Staircase::ground_size() const { return static_cast<int>(columns_[0].size()); }

const std::vector<int>& Staircase::column(int c) const {
  if (c < 1 || c > column_count()) {
    throw std::invalid_argument("column index out of range");
  }
  return columns_[c - 1];
}

namespace {

std::vector<int> complement_in(int m, const std::vector<int>& subset) {
  std::vector<bool> present(m + 1, false);
  for (int v : subset) {
    if (v < 1 || v > m) throw std::invalid_argument("entry outside 1..m");
    present[v] = true;
  }
  std::vector<int> out;
  for (int v = 1; v <= m; ++v) {
    if (!present[v]) out.push_back(v);
  }
  return out;
}

}  // namespace

Staircase gt_to_staircase(const GTPattern& g) {
  const int n = g.row_count();
  const int m = g.rightmost(1);
  std::vector<std::vector<int>> cols(n + 1);
  for (int j = 0; j <= n; ++j) {
    // Column j+1 misses exactly the entries of row n+1-j; for j = 0 that row
    // is past the bottom of the pattern, so the column is all of {1..m}.
    const int source_row = n + 1 - j;
    cols[j] = source_row > n ? complement_in(m, {})
                             : complement_in(m, g.row(source_row));
  }
  return Staircase(std::move(cols));
}

GTPattern staircase_to_gt(const Staircase& s) {
  const int n = s.column_count() - 1;
  if (n < 1) throw std::invalid_argument("staircase has no pattern rows");
  const int m = s.ground_size();
  std::vector<std::vector<int>> rows(n);
  for (int i = 1; i <= n; ++i) {
    rows[i - 1] = complement_in(m, s.column(n + 2 - i));
  }
  return GTPattern(std::move(rows));
}

Tableau::Tableau(Partition shape, std::vector<std::vector<int>> rows)
    : shape_(std::move(shape)), rows_(std::move(rows)) {
  if (static_cast<int>(rows_.size()) != shape_.part_count()) {
    throw std::invalid_argument("row count does not match the shape");
  }
  for (int i = 0; i < shape_.part_count(); ++i) {
    if (static_cast<int>(rows_[i].size()) != shape_.part(i + 1)) {
      throw std::invalid_argument("row length does not match the shape");
    }
    for (std::size_t j = 0; j < rows_[i].size(); ++j) {
      if (rows_[i][j] < 1) throw std::invalid_argument("entries must be positive");
      if (j > 0 && rows_[i][j] < rows_[i][j - 1]) {
        throw std::invalid_argument("rows must weakly increase");
      }
      if (i > 0 && j < rows_[i - 1].size() && rows_[i][j] <= rows_[i - 1][j]) {
        throw std::invalid_argument("columns must strictly increase");
      }
    }
  }
}

int Tableau::entry(int i, int j) const {
  if (i < 1 || i > shape_.part_count() || j < 1 || j > shape_.part(i)) {
    throw std::invalid_argument("cell outside the shape");
  }
  return rows_[i - 1][j - 1];
}

std::vector<Tableau> enumerate_ssyt(const Partition& shape, int max_entry) {
  if (max_entry < 0) throw std::invalid_argument("entry bound must be nonnegative");
  std::vector<Tableau> out;
  std::vector<std::vector<int>> rows(shape.part_count());
  for (int i = 0; i < shape.part_count(); ++i) rows[i].resize(shape.part(i + 1));

  auto rec = [&](auto&& self, int i, int j) -> void {
    if (i == shape.part_count()) {
      out.emplace_back(shape, rows);
      return;
    }
    if (j == shape.part(i + 1)) {
      self(self, i + 1, 0);
      return;
    }
    int lo = 1;
    if (j > 0) lo = std::max(lo, rows[i][j - 1]);
    if (i > 0 && j < static_cast<int>(rows[i - 1].size())) {
      lo = std::max(lo, rows[i - 1][j] + 1);
    }
    for (int v = lo; v <= max_entry; ++v) {
      rows[i][j] = v;
      self(self, i, j + 1);
    }
  };
  rec(rec, 0, 0);
  return out;
}

std::string render_gt(const GTPattern& g) {
  int width = 1;
  for (const auto& row : g.rows()) {
    for (int v : row) width = std::max(width, digits(v));
  }
  std::ostringstream os;
  for (int i = 1; i <= g.row_count(); ++i) {
    os << std::string((i - 1) * (width + 1) / 2, ' ');
    const auto& row = g.row(i);
    for (std::size_t j = 0; j < row.size(); ++j) {
      if (j > 0) os << ' ';
      os << pad_left(row[j], width);
    }
    os << '\n';
  }
  return os.str();
}

std::string render_staircase(const Staircase& s) {
  const int m = s.ground_size();
  const int width = digits(m);
  std::ostringstream os;
  // French orientation: columns aligned at the bottom, printed top row first.
  for (int y = m; y >= 1; --y) {
    std::string line;
    for (int c = 1; c <= s.column_count(); ++c) {
      if (static_cast<int>(s.column(c).size()) < y) break;
      if (c > 1) line += ' ';
      line += pad_left(s.column(c)[y - 1], width);
    }
    os << line << '\n';
  }
  return os.str();
}

nlohmann::json gt_to_json(const GTPattern& g) { return g.rows(); }

GTPattern gt_from_json(const nlohmann::json& j) {
  return GTPattern(j.get<std::vector<std::vector<int>>>());
}

nlohmann::json staircase_to_json(const Staircase& s) { return s.columns(); }

Staircase staircase_from_json(const nlohmann::json& j) {
  return Staircase(j.get<std::vector<std::vector<int>>>());
}

nlohmann::json tableau_to_json(const Tableau& t) { return t.rows(); }

Tableau tableau_from_json(const nlohmann::json& j) {
  auto rows = j.get<std::vector<std::vector<int>>>();
  std::vector<int> parts;
  parts.reserve(rows.size());
  for (const auto& row : rows) parts.push_back(static_cast<int>(row.size()));
  return Tableau(Partition(std::move(parts)), std::move(rows));
}

}  // namespace sixvertex
