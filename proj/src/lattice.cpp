#include "sixvertex/lattice.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace sixvertex {

namespace {

unsigned bit(Direction d) { return 1u << static_cast<int>(d); }

constexpr char kLetters[4] = {'N', 'S', 'E', 'W'};

}  // namespace

VertexConfig::VertexConfig(Direction a, Direction b) : bits_(bit(a) | bit(b)) {
  if (a == b) throw std::invalid_argument("a configuration needs two distinct directions");
}

VertexConfig VertexConfig::from_name(const std::string& name) {
  if (name.size() != 2) throw std::invalid_argument("bad configuration name: " + name);
  auto dir = [](char ch) {
    switch (ch) {
      case 'N': return Direction::North;
      case 'S': return Direction::South;
      case 'E': return Direction::East;
      case 'W': return Direction::West;
    }
    throw std::invalid_argument(std::string("bad direction letter: ") + ch);
  };
  return VertexConfig(dir(name[0]), dir(name[1]));
}

const std::array<VertexConfig, 6>& VertexConfig::all() {
  static const std::array<VertexConfig, 6> configs = {
      VertexConfig(Direction::North, Direction::South),
      VertexConfig(Direction::North, Direction::East),
      VertexConfig(Direction::South, Direction::East),
      VertexConfig(Direction::North, Direction::West),
      VertexConfig(Direction::South, Direction::West),
      VertexConfig(Direction::East, Direction::West),
  };
  return configs;
}

int VertexConfig::ordinal() const {
  const auto& configs = all();
  for (int k = 0; k < 6; ++k) {
    if (configs[k] == *this) return k;
  }
  throw std::logic_error("unreachable: configuration not in the admissible six");
}

std::string VertexConfig::name() const {
  std::string s;
  for (int d = 0; d < 4; ++d) {
    if (bits_ & (1u << d)) s += kLetters[d];
  }
  return s;
}

BoundarySpec BoundarySpec::for_partition(const Partition& lambda,
                                         std::optional<int> cols_override) {
  const int n = lambda.part_count();
  if (n < 1) throw std::invalid_argument("boundary needs at least one row");
  const int m_default = n + lambda.first_part();
  const int m = cols_override.value_or(m_default);
  if (m < m_default) {
    throw std::invalid_argument("column override may only widen the grid");
  }
  return BoundarySpec{n, m, top_row(lambda)};
}

IceState::IceState(BoundarySpec boundary, std::vector<std::vector<VertexConfig>> grid)
    : boundary_(std::move(boundary)), grid_(std::move(grid)) {
  const int n = boundary_.rows;
  const int m = boundary_.cols;
  if (n < 1 || m < 1) throw std::invalid_argument("empty grid");
  if (static_cast<int>(boundary_.top_gaps.size()) != n) {
    throw std::invalid_argument("a lambda boundary has exactly n top gaps");
  }
  for (std::size_t k = 0; k < boundary_.top_gaps.size(); ++k) {
    const int col = boundary_.top_gaps[k];
    if (col < 1 || col > m) throw std::invalid_argument("top gap outside the grid");
    if (k > 0 && col <= boundary_.top_gaps[k - 1]) {
      throw std::invalid_argument("top gaps must strictly increase");
    }
  }
  if (static_cast<int>(grid_.size()) != n) {
    throw std::invalid_argument("grid row count mismatch");
  }
  for (const auto& row : grid_) {
    if (static_cast<int>(row.size()) != m) {
      throw std::invalid_argument("grid column count mismatch");
    }
  }

  auto has = [&](int i, int j, Direction d) {
    return grid_[i - 1][j - 1].has(d);
  };
  for (int i = 1; i <= n; ++i) {
    if (!has(i, 1, Direction::West) || !has(i, m, Direction::East)) {
      throw std::invalid_argument("left/right boundary hydrogens must bond inward");
    }
    for (int j = 1; j < m; ++j) {
      if (has(i, j, Direction::East) == has(i, j + 1, Direction::West)) {
        throw std::invalid_argument("each horizontal edge carries exactly one bonded hydrogen");
      }
    }
  }
  for (int j = 1; j <= m; ++j) {
    const bool gap = std::binary_search(boundary_.top_gaps.begin(),
                                        boundary_.top_gaps.end(), j);
    if (has(1, j, Direction::North) == gap) {
      throw std::invalid_argument("top boundary bonds must match the gap set");
    }
    if (has(n, j, Direction::South)) {
      throw std::invalid_argument("the bottom boundary is devoid of hydrogens");
    }
    for (int i = 1; i < n; ++i) {
      if (has(i, j, Direction::South) == has(i + 1, j, Direction::North)) {
        throw std::invalid_argument("each vertical edge carries exactly one bonded hydrogen");
      }
    }
  }
}

VertexConfig IceState::at(int i, int j) const {
  if (i < 1 || i > rows() || j < 1 || j > cols()) {
    throw std::invalid_argument("vertex position out of range");
  }
  return grid_[i - 1][j - 1];
}

RectWeightTable RectWeightTable::standard() {
  RectWeightTable t;
  auto unit = [](const VarSpace& space, int, int) { return LaurentPoly::one(space); };
  for (auto& e : t.entries) e = unit;
  t.entry(VertexConfig(Direction::North, Direction::South)) =
      [](const VarSpace& space, int row, int col) {
        Monomial m{1, std::vector<int>(space.nx, 0), std::vector<int>(space.na, 0)};
        m.x[row - 1] = 1;
        m.a[col - 1] = -1;
        return LaurentPoly::from_monomial(space, m);
      };
  t.entry(VertexConfig(Direction::North, Direction::West)) =
      [](const VarSpace& space, int row, int col) {
        Monomial m{1, std::vector<int>(space.nx, 0), std::vector<int>(space.na, 0)};
        m.x[row - 1] = 1;
        m.a[col - 1] = -1;
        return LaurentPoly::from_monomial(space, m) - LaurentPoly::one(space);
      };
  return t;
}

LaurentPoly vertex_weight(const VarSpace& space, VertexConfig c, int row, int col,
                          const RectWeightTable& table) {
  if (row < 1 || row > space.nx || col < 1 || col > space.na) {
    throw std::invalid_argument("vertex position outside the variable space");
  }
  return table.entry(c)(space, row, col);
}

namespace {

std::vector<IceState> enumerate_by_backtracking(const BoundarySpec& boundary) {
  const int n = boundary.rows;
  const int m = boundary.cols;
  std::vector<IceState> out;
  std::vector<std::vector<VertexConfig>> grid(
      n, std::vector<VertexConfig>(m, VertexConfig(Direction::East, Direction::West)));

  // Row-major fill.  The bonds toward already-placed neighbors (north, west)
  // are forced, so each cell has at most two viable configurations: the
  // choice of where its remaining bonds point (south/east), pruned by the
  // bottom/right boundary.
  auto rec = [&](auto&& self, int i, int j) -> void {
    if (i == n) {
      out.emplace_back(boundary, grid);
      return;
    }
    if (j == m) {
      self(self, i + 1, 0);
      return;
    }
    const bool gap = std::binary_search(boundary.top_gaps.begin(),
                                        boundary.top_gaps.end(), j + 1);
    const bool north = i == 0 ? !gap : !grid[i - 1][j].has(Direction::South);
    const bool west = j == 0 ? true : !grid[i][j - 1].has(Direction::East);
    for (int south = 0; south <= 1; ++south) {
      if (south == 1 && i == n - 1) continue;
      const int east = 2 - (north + west + south);
      if (east < 0 || east > 1) continue;
      if (j == m - 1 && east != 1) continue;
      std::vector<Direction> dirs;
      if (north) dirs.push_back(Direction::North);
      if (south) dirs.push_back(Direction::South);
      if (east) dirs.push_back(Direction::East);
      if (west) dirs.push_back(Direction::West);
      grid[i][j] = VertexConfig(dirs[0], dirs[1]);
      self(self, i, j + 1);
    }
  };
  rec(rec, 0, 0);
  return out;
}

// Canonical output order shared by both strategies: lexicographic on the
// row-major list of configuration ordinals.
void sort_states(std::vector<IceState>& states) {
  auto key = [](const IceState& s) {
    std::vector<int> k;
    k.reserve(static_cast<std::size_t>(s.rows()) * s.cols());
    for (int i = 1; i <= s.rows(); ++i) {
      for (int j = 1; j <= s.cols(); ++j) k.push_back(s.at(i, j).ordinal());
    }
    return k;
  };
  std::sort(states.begin(), states.end(),
            [&](const IceState& a, const IceState& b) { return key(a) < key(b); });
}

}  // namespace

std::vector<IceState> enumerate_states(const Partition& lambda,
                                       EnumerationStrategy strategy,
                                       std::optional<int> cols_override) {
  std::vector<IceState> states;
  if (strategy == EnumerationStrategy::via_gt) {
    for (const GTPattern& g : enumerate_gt(lambda)) {
      states.push_back(gt_to_state(g, lambda, cols_override));
    }
  } else {
    states = enumerate_by_backtracking(BoundarySpec::for_partition(lambda, cols_override));
  }
  sort_states(states);
  return states;
}

GTPattern state_to_gt(const IceState& s) {
  std::vector<std::vector<int>> rows;
  rows.push_back(s.boundary().top_gaps);
  for (int i = 1; i < s.rows(); ++i) {
    std::vector<int> row;
    for (int j = 1; j <= s.cols(); ++j) {
      if (s.at(i, j).has(Direction::South)) row.push_back(j);
    }
    rows.push_back(std::move(row));
  }
  return GTPattern(std::move(rows));
}

IceState gt_to_state(const GTPattern& g, const Partition& lambda,
                     std::optional<int> cols_override) {
  const BoundarySpec boundary = BoundarySpec::for_partition(lambda, cols_override);
  const int n = boundary.rows;
  const int m = boundary.cols;
  if (g.row_count() != n || g.row(1) != boundary.top_gaps) {
    throw std::invalid_argument("pattern row 1 must be the top gap set of lambda");
  }

  auto in_row = [&](int i, int j) {
    return i <= n && std::binary_search(g.row(i).begin(), g.row(i).end(), j);
  };

  std::vector<std::vector<VertexConfig>> grid;
  grid.reserve(n);
  for (int i = 1; i <= n; ++i) {
    // Vertical bonds first: the hydrogen above (i,j) bonds down unless j is
    // in row i of the pattern; the hydrogen below bonds up exactly when j is
    // in row i+1.  Horizontal bonds then propagate left to right, each oxygen
    // topping itself up to two bonds.
    std::vector<VertexConfig> row;
    row.reserve(m);
    bool west = true;
    for (int j = 1; j <= m; ++j) {
      const bool north = !in_row(i, j);
      const bool south = in_row(i + 1, j);
      const int east = 2 - (north + south + west);
      if (east < 0 || east > 1 || (j == m && east != 1)) {
        throw std::invalid_argument("pattern does not yield a consistent state");
      }
      std::vector<Direction> dirs;
      if (north) dirs.push_back(Direction::North);
      if (south) dirs.push_back(Direction::South);
      if (east) dirs.push_back(Direction::East);
      if (west) dirs.push_back(Direction::West);
      row.emplace_back(dirs[0], dirs[1]);
      west = east == 0;
    }
    grid.push_back(std::move(row));
  }
  return IceState(boundary, std::move(grid));
}

LaurentPoly state_weight(const IceState& s, const RectWeightTable& table) {
  const VarSpace space{s.rows(), s.cols()};
  LaurentPoly w = LaurentPoly::one(space);
  for (int i = 1; i <= s.rows(); ++i) {
    for (int j = 1; j <= s.cols(); ++j) {
      w *= table.entry(s.at(i, j))(space, i, j);
    }
  }
  return w;
}

LaurentPoly partition_function(const Partition& lambda, const RectWeightTable& table,
                               EnumerationStrategy strategy,
                               std::optional<int> cols_override) {
  const BoundarySpec boundary = BoundarySpec::for_partition(lambda, cols_override);
  LaurentPoly z(VarSpace{boundary.rows, boundary.cols});
  for (const IceState& s : enumerate_states(lambda, strategy, cols_override)) {
    z += state_weight(s, table);
  }
  return z;
}

std::string render_state(const IceState& s) {
  const int n = s.rows();
  const int m = s.cols();
  const auto oxygen_pos = [](int j) { return 1 + (j - 1) * 4; };

  auto marks_line = [&](auto&& mark) {
    std::string line(oxygen_pos(m) + 1, ' ');
    for (int j = 1; j <= m; ++j) line[oxygen_pos(j)] = mark(j);
    while (!line.empty() && line.back() == ' ') line.pop_back();
    return line;
  };

  std::ostringstream os;
  os << marks_line([&](int j) { return s.at(1, j).has(Direction::North) ? '*' : ' '; })
     << '\n';
  for (int i = 1; i <= n; ++i) {
    std::string line = "*O";
    for (int j = 1; j < m; ++j) {
      line += s.at(i, j).has(Direction::East) ? "*--" : "--*";
      line += 'O';
    }
    line += '*';
    os << line << '\n';
    if (i < n) {
      os << marks_line([&](int j) { return s.at(i, j).has(Direction::South) ? '*' : '|'; })
         << '\n';
      os << marks_line([&](int j) { return s.at(i + 1, j).has(Direction::North) ? '*' : '|'; })
         << '\n';
    }
  }
  return os.str();
}

nlohmann::json state_to_json(const IceState& s) {
  nlohmann::json grid = nlohmann::json::array();
  for (int i = 1; i <= s.rows(); ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (int j = 1; j <= s.cols(); ++j) row.push_back(s.at(i, j).name());
    grid.push_back(std::move(row));
  }
  return {{"n", s.rows()}, {"m", s.cols()}, {"grid", std::move(grid)}};
}

IceState state_from_json(const nlohmann::json& j) {
  const int n = j.at("n").get<int>();
  const int m = j.at("m").get<int>();
  std::vector<std::vector<VertexConfig>> grid;
  for (const auto& row : j.at("grid")) {
    std::vector<VertexConfig> out;
    for (const auto& cell : row) out.push_back(VertexConfig::from_name(cell.get<std::string>()));
    grid.push_back(std::move(out));
  }
  if (static_cast<int>(grid.size()) != n || (n > 0 && static_cast<int>(grid[0].size()) != m)) {
    throw std::invalid_argument("grid dimensions disagree with n and m");
  }
  std::vector<int> gaps;
  for (int col = 1; col <= m; ++col) {
    if (!grid[0][col - 1].has(Direction::North)) gaps.push_back(col);
  }
  return IceState(BoundarySpec{n, m, std::move(gaps)}, std::move(grid));
}

}  // namespace sixvertex
