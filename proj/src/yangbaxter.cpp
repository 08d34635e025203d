#include "sixvertex/yangbaxter.hpp"

#include <bit>
#include <stdexcept>

namespace sixvertex {

namespace {

unsigned bit(DiagonalDirection d) { return 1u << static_cast<int>(d); }

constexpr const char* kCorner[4] = {"SW", "NW", "NE", "SE"};
constexpr const char* kPosition[6] = {"alpha", "beta",    "gamma",
                                      "delta", "epsilon", "zeta"};

}  // namespace

CrossingConfig::CrossingConfig(DiagonalDirection a, DiagonalDirection b)
    : bits_(bit(a) | bit(b)) {
  if (a == b) throw std::invalid_argument("a crossing needs two distinct half-edges");
}

const std::array<CrossingConfig, 6>& CrossingConfig::all() {
  using D = DiagonalDirection;
  static const std::array<CrossingConfig, 6> configs = {
      CrossingConfig(D::SouthWest, D::NorthWest),
      CrossingConfig(D::SouthWest, D::NorthEast),
      CrossingConfig(D::SouthWest, D::SouthEast),
      CrossingConfig(D::NorthWest, D::NorthEast),
      CrossingConfig(D::NorthWest, D::SouthEast),
      CrossingConfig(D::NorthEast, D::SouthEast),
  };
  return configs;
}

int CrossingConfig::ordinal() const {
  const auto& configs = all();
  for (int k = 0; k < 6; ++k) {
    if (configs[k] == *this) return k;
  }
  throw std::logic_error("unreachable: crossing configuration not among the six");
}

std::string CrossingConfig::name() const {
  std::string s;
  for (int d = 0; d < 4; ++d) {
    if (bits_ & (1u << d)) {
      if (!s.empty()) s += '+';
      s += kCorner[d];
    }
  }
  return s;
}

CrossingWeightTable CrossingWeightTable::standard() {
  using D = DiagonalDirection;
  auto inverse_of = [](int which) {
    // which = 0 -> 1/x_lower, 1 -> 1/x_upper
    return [which](const VarSpace& space, int lower, int upper) {
      return LaurentPoly::variable(space, xref(which == 0 ? lower : upper), -1);
    };
  };
  CrossingWeightTable t;
  t.entry(CrossingConfig(D::SouthWest, D::NorthEast)) = inverse_of(0);
  t.entry(CrossingConfig(D::NorthWest, D::SouthEast)) = inverse_of(1);
  t.entry(CrossingConfig(D::NorthWest, D::NorthEast)) =
      [](const VarSpace& space, int lower, int upper) {
        return LaurentPoly::variable(space, xref(lower), -1) -
               LaurentPoly::variable(space, xref(upper), -1);
      };
  t.entry(CrossingConfig(D::SouthWest, D::SouthEast)) =
      [](const VarSpace& space, int, int) { return LaurentPoly(space); };
  t.entry(CrossingConfig(D::NorthEast, D::SouthEast)) = inverse_of(0);
  t.entry(CrossingConfig(D::SouthWest, D::NorthWest)) = inverse_of(1);
  return t;
}

LaurentPoly crossing_weight(const VarSpace& space, CrossingConfig c, int lower,
                            int upper, const CrossingWeightTable& table) {
  return table.entry(c)(space, lower, upper);
}

BoundarySextuple::BoundarySextuple(const std::array<bool, 6>& flags) : flags_(flags) {
  int count = 0;
  for (bool f : flags_) count += f;
  if (count != 3) {
    throw std::invalid_argument("exactly three of the six positions carry a hydrogen");
  }
}

BoundarySextuple BoundarySextuple::from_mask(unsigned mask) {
  if (mask >= 64) throw std::invalid_argument("mask needs six bits");
  std::array<bool, 6> flags{};
  for (int k = 0; k < 6; ++k) flags[k] = (mask >> k) & 1u;
  return BoundarySextuple(flags);
}

std::vector<BoundarySextuple> BoundarySextuple::all() {
  std::vector<BoundarySextuple> out;
  for (unsigned mask = 0; mask < 64; ++mask) {
    if (std::popcount(mask) == 3) out.push_back(from_mask(mask));
  }
  return out;
}

bool BoundarySextuple::at(int position) const {
  if (position < 0 || position > 5) throw std::invalid_argument("position out of range");
  return flags_[position];
}

unsigned BoundarySextuple::mask() const {
  unsigned m = 0;
  for (int k = 0; k < 6; ++k) {
    if (flags_[k]) m |= 1u << k;
  }
  return m;
}

std::string BoundarySextuple::name() const {
  std::string s;
  for (int k = 0; k < 6; ++k) {
    if (!flags_[k]) continue;
    if (!s.empty()) s += '+';
    s += kPosition[k];
  }
  return s;
}

namespace {

// A diagram is three oxygens, each with four half-edges.  A half-edge either
// carries one of the six external positions or one end of an internal
// segment; each segment appears on exactly two half-edges.  Rectilinear
// half-edges are indexed by Direction, crossing half-edges by
// DiagonalDirection.
struct HalfEdge {
  int external = -1;  // 0..5, or
  int segment = -1;   // 0..2
};

struct DiagramOxygen {
  bool is_crossing = false;
  int row_var = 0;  // rectilinear only: which x variable the string carries
  std::array<HalfEdge, 4> half_edges;
};

using Diagram = std::array<DiagramOxygen, 3>;

HalfEdge ext(int position) { return HalfEdge{position, -1}; }
HalfEdge seg(int segment) { return HalfEdge{-1, segment}; }

// The left-hand diagram: the crossing sits west of the column.  The string
// entering at the lower left (variable x1) crosses to the north-east and
// feeds the upper rectilinear vertex; the other string (x2) feeds the lower
// one.  Externals: alpha/beta on the crossing's west corners, gamma/delta on
// the upper vertex (N/E), epsilon/zeta on the lower vertex (E/S).
Diagram left_diagram() {
  Diagram d;
  d[0].is_crossing = true;
  d[0].half_edges[static_cast<int>(DiagonalDirection::SouthWest)] = ext(0);
  d[0].half_edges[static_cast<int>(DiagonalDirection::NorthWest)] = ext(1);
  d[0].half_edges[static_cast<int>(DiagonalDirection::NorthEast)] = seg(0);
  d[0].half_edges[static_cast<int>(DiagonalDirection::SouthEast)] = seg(1);
  d[1].row_var = 1;
  d[1].half_edges[static_cast<int>(Direction::North)] = ext(2);
  d[1].half_edges[static_cast<int>(Direction::South)] = seg(2);
  d[1].half_edges[static_cast<int>(Direction::East)] = ext(3);
  d[1].half_edges[static_cast<int>(Direction::West)] = seg(0);
  d[2].row_var = 2;
  d[2].half_edges[static_cast<int>(Direction::North)] = seg(2);
  d[2].half_edges[static_cast<int>(Direction::South)] = ext(5);
  d[2].half_edges[static_cast<int>(Direction::East)] = ext(4);
  d[2].half_edges[static_cast<int>(Direction::West)] = seg(1);
  return d;
}

// The mirrored right-hand diagram: the crossing sits east of the column, so
// the x1 string passes through the lower rectilinear vertex first and enters
// the crossing at its lower left; x2 passes through the upper vertex.
Diagram right_diagram() {
  Diagram d;
  d[0].row_var = 2;
  d[0].half_edges[static_cast<int>(Direction::North)] = ext(2);
  d[0].half_edges[static_cast<int>(Direction::South)] = seg(2);
  d[0].half_edges[static_cast<int>(Direction::East)] = seg(0);
  d[0].half_edges[static_cast<int>(Direction::West)] = ext(1);
  d[1].row_var = 1;
  d[1].half_edges[static_cast<int>(Direction::North)] = seg(2);
  d[1].half_edges[static_cast<int>(Direction::South)] = ext(5);
  d[1].half_edges[static_cast<int>(Direction::East)] = seg(1);
  d[1].half_edges[static_cast<int>(Direction::West)] = ext(0);
  d[2].is_crossing = true;
  d[2].half_edges[static_cast<int>(DiagonalDirection::SouthWest)] = seg(1);
  d[2].half_edges[static_cast<int>(DiagonalDirection::NorthWest)] = seg(0);
  d[2].half_edges[static_cast<int>(DiagonalDirection::NorthEast)] = ext(3);
  d[2].half_edges[static_cast<int>(DiagonalDirection::SouthEast)] = ext(4);
  return d;
}

// Each internal segment hosts exactly one hydrogen bonded to one of its two
// endpoint oxygens: 2^3 assignments, filtered by the two-bonds-per-oxygen
// rule.  External hydrogens always bond to their adjacent oxygen.
LaurentPoly sum_over_completions(const Diagram& diagram, const BoundarySextuple& b,
                                 const RectWeightTable& rect,
                                 const CrossingWeightTable& cross,
                                 const VarSpace& space) {
  struct Endpoint {
    int oxygen;
    int half_edge;
  };
  std::array<std::vector<Endpoint>, 3> endpoints;
  for (int o = 0; o < 3; ++o) {
    for (int h = 0; h < 4; ++h) {
      const int s = diagram[o].half_edges[h].segment;
      if (s >= 0) endpoints[s].push_back({o, h});
    }
  }
  for (const auto& e : endpoints) {
    if (e.size() != 2) throw std::logic_error("segment wiring must have two endpoints");
  }

  LaurentPoly total(space);
  for (unsigned choice = 0; choice < 8; ++choice) {
    std::array<std::vector<int>, 3> bonded;
    for (int o = 0; o < 3; ++o) {
      for (int h = 0; h < 4; ++h) {
        const HalfEdge& he = diagram[o].half_edges[h];
        if (he.external >= 0 && b.at(he.external)) bonded[o].push_back(h);
      }
    }
    for (int s = 0; s < 3; ++s) {
      const Endpoint& e = endpoints[s][(choice >> s) & 1u];
      bonded[e.oxygen].push_back(e.half_edge);
    }

    bool feasible = true;
    for (int o = 0; o < 3 && feasible; ++o) feasible = bonded[o].size() == 2;
    if (!feasible) continue;

    LaurentPoly w = LaurentPoly::one(space);
    for (int o = 0; o < 3; ++o) {
      if (diagram[o].is_crossing) {
        CrossingConfig c(static_cast<DiagonalDirection>(bonded[o][0]),
                         static_cast<DiagonalDirection>(bonded[o][1]));
        w *= cross.entry(c)(space, 1, 2);
      } else {
        VertexConfig c(static_cast<Direction>(bonded[o][0]),
                       static_cast<Direction>(bonded[o][1]));
        w *= rect.entry(c)(space, diagram[o].row_var, 1);
      }
    }
    total += w;
  }
  return total;
}

}  // namespace

StarTriangleSides star_triangle_sides(const BoundarySextuple& b,
                                      const RectWeightTable& rect,
                                      const CrossingWeightTable& cross) {
  const VarSpace space{2, 1};
  return StarTriangleSides{
      sum_over_completions(left_diagram(), b, rect, cross, space),
      sum_over_completions(right_diagram(), b, rect, cross, space),
  };
}

bool StarTriangleReport::all_pass() const {
  for (const auto& c : cases) {
    if (!c.pass) return false;
  }
  return true;
}

StarTriangleReport verify_star_triangle(const RectWeightTable& rect,
                                        const CrossingWeightTable& cross) {
  StarTriangleReport report;
  for (const BoundarySextuple& b : BoundarySextuple::all()) {
    const StarTriangleSides sides = star_triangle_sides(b, rect, cross);
    report.cases.push_back(StarTriangleCase{
        b.mask(),
        b.name(),
        render_canonical(sides.left),
        render_canonical(sides.right),
        sides.left == sides.right,
    });
  }
  return report;
}

}  // namespace sixvertex
