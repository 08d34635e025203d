#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "sixvertex/lattice.hpp"

using namespace sixvertex;

namespace {

VertexConfig cfg(const char* name) { return VertexConfig::from_name(name); }

std::vector<std::vector<VertexConfig>> grid_of(
    const std::vector<std::vector<const char*>>& names) {
  std::vector<std::vector<VertexConfig>> grid;
  for (const auto& row : names) {
    std::vector<VertexConfig> out;
    for (const char* name : row) out.push_back(cfg(name));
    grid.push_back(std::move(out));
  }
  return grid;
}

// The sample state for lambda = (5,4,1): derived from its pattern
// (2,6,8),(4,7),(4) and checked against the boundary by hand.
const Partition kSampleShape({5, 4, 1});
const std::vector<std::vector<const char*>> kSampleGrid = {
    {"NW", "EW", "NE", "NS", "NW", "EW", "NS", "EW"},
    {"NW", "NW", "NW", "SW", "NW", "NW", "EW", "NE"},
    {"NW", "NW", "NW", "EW", "NE", "NE", "NE", "NE"},
};

LaurentPoly term(const VarSpace& space, int coef, std::vector<int> x, std::vector<int> a) {
  return LaurentPoly::from_monomial(space, Monomial{coef, std::move(x), std::move(a)});
}

}  // namespace

TEST_CASE("vertex configurations") {
  CHECK(VertexConfig::all().size() == 6);
  for (const VertexConfig& c : VertexConfig::all()) {
    CHECK(VertexConfig::from_name(c.name()) == c);
    CHECK(VertexConfig::all()[c.ordinal()] == c);
  }
  CHECK(cfg("NS").has(Direction::North));
  CHECK(cfg("NS").has(Direction::South));
  CHECK(!cfg("NS").has(Direction::East));
  CHECK_THROWS_AS(cfg("NN"), std::invalid_argument);
  CHECK_THROWS_AS(cfg("NSE"), std::invalid_argument);
}

TEST_CASE("standard weights") {
  const VarSpace space{2, 4};
  CHECK(vertex_weight(space, cfg("NS"), 1, 4) == term(space, 1, {1, 0}, {0, 0, 0, -1}));
  CHECK(vertex_weight(space, cfg("NW"), 1, 1) ==
        term(space, 1, {1, 0}, {-1, 0, 0, 0}) - LaurentPoly::one(space));
  CHECK(vertex_weight(space, cfg("EW"), 2, 3) == LaurentPoly::one(space));
  CHECK(vertex_weight(space, cfg("NE"), 2, 3) == LaurentPoly::one(space));
  CHECK(vertex_weight(space, cfg("SE"), 1, 2) == LaurentPoly::one(space));
  CHECK(vertex_weight(space, cfg("SW"), 1, 2) == LaurentPoly::one(space));
}

TEST_CASE("state validation") {
  const BoundarySpec b0 = BoundarySpec::for_partition(Partition({0}));
  CHECK_NOTHROW(IceState(b0, grid_of({{"EW"}})));
  CHECK_THROWS_AS(IceState(b0, grid_of({{"NS"}})), std::invalid_argument);

  const BoundarySpec b1 = BoundarySpec::for_partition(Partition({1}));
  CHECK_NOTHROW(IceState(b1, grid_of({{"NW", "EW"}})));
  // misses the left-boundary bond
  CHECK_THROWS_AS(IceState(b1, grid_of({{"NE", "EW"}})), std::invalid_argument);
  // horizontal edge bonded twice
  CHECK_THROWS_AS(IceState(b1, grid_of({{"NE", "NW"}})), std::invalid_argument);

  CHECK_NOTHROW(IceState(BoundarySpec::for_partition(kSampleShape), grid_of(kSampleGrid)));
}

TEST_CASE("forced states for tiny shapes") {
  const auto trivial = enumerate_states(Partition({0}), EnumerationStrategy::via_gt);
  REQUIRE(trivial.size() == 1);
  CHECK(trivial[0].at(1, 1) == cfg("EW"));

  const auto single = enumerate_states(Partition({1}), EnumerationStrategy::backtrack);
  REQUIRE(single.size() == 1);
  CHECK(single[0].at(1, 1) == cfg("NW"));
  CHECK(single[0].at(1, 2) == cfg("EW"));
}

TEST_CASE("figure state and its pattern") {
  const IceState state(BoundarySpec::for_partition(kSampleShape), grid_of(kSampleGrid));
  const GTPattern expected({{2, 6, 8}, {4, 7}, {4}});
  CHECK(state_to_gt(state) == expected);
  CHECK(gt_to_state(expected, kSampleShape) == state);
}

TEST_CASE("round trips and strategy agreement") {
  for (const Partition& lambda : partitions_in_box(3, 2)) {
    const auto via_gt = enumerate_states(lambda, EnumerationStrategy::via_gt);
    CHECK(via_gt == enumerate_states(lambda, EnumerationStrategy::backtrack));
    CHECK(via_gt.size() == enumerate_gt(lambda).size());
    for (const IceState& s : via_gt) {
      CHECK(gt_to_state(state_to_gt(s), lambda) == s);
    }
  }
}

TEST_CASE("domain wall counts") {
  CHECK(enumerate_states(Partition::zeros(1), EnumerationStrategy::backtrack).size() == 1);
  CHECK(enumerate_states(Partition::zeros(2), EnumerationStrategy::backtrack).size() == 2);
  CHECK(enumerate_states(Partition::zeros(3), EnumerationStrategy::backtrack).size() == 7);
}

TEST_CASE("weights and the partition function") {
  CHECK(state_weight(enumerate_states(Partition({0}), EnumerationStrategy::via_gt)[0]) ==
        LaurentPoly::one(VarSpace{1, 1}));

  const LaurentPoly z1 = partition_function(Partition({1}));
  CHECK(render_canonical(z1) == "-1 + x1*a1^-1");

  // lambda = (1,0): three states, summed by hand.
  const VarSpace space{2, 3};
  const LaurentPoly expected = term(space, 1, {1, 1}, {-1, -1, 0}) +
                               term(space, 1, {0, 2}, {-1, -1, 0}) +
                               term(space, -1, {0, 1}, {-1, 0, 0}) +
                               term(space, -1, {0, 1}, {0, -1, 0});
  CHECK(partition_function(Partition({1, 0})) == expected);
  CHECK(partition_function(Partition({1, 0}), RectWeightTable::standard(),
                           EnumerationStrategy::backtrack) == expected);
}

TEST_CASE("columns beyond the shape change nothing") {
  for (const Partition& lambda : {Partition({1}), Partition({2, 1}), Partition({0, 0})}) {
    const int wide = lambda.part_count() + lambda.first_part() + 2;
    const LaurentPoly z = partition_function(lambda);
    const LaurentPoly z_wide = partition_function(lambda, RectWeightTable::standard(),
                                                  EnumerationStrategy::via_gt, wide);
    CHECK(z_wide == embedded(z, z_wide.space()));
    // the padding vertices all carry a north-east molecule (weight 1)
    for (const IceState& s : enumerate_states(lambda, EnumerationStrategy::via_gt, wide)) {
      for (int i = 1; i <= s.rows(); ++i) {
        for (int j = lambda.part_count() + lambda.first_part() + 1; j <= wide; ++j) {
          CHECK(s.at(i, j) == cfg("NE"));
        }
      }
    }
  }
}

TEST_CASE("ascii render") {
  const auto states = enumerate_states(Partition({1}), EnumerationStrategy::via_gt);
  CHECK(render_state(states[0]) == " *\n*O--*O*\n");

  // injective on the state set of a fixed boundary
  const auto many = enumerate_states(Partition({2, 1, 0}), EnumerationStrategy::via_gt);
  std::vector<std::string> renders;
  for (const IceState& s : many) renders.push_back(render_state(s));
  std::sort(renders.begin(), renders.end());
  CHECK(std::adjacent_find(renders.begin(), renders.end()) == renders.end());
}

TEST_CASE("state json") {
  const IceState state(BoundarySpec::for_partition(kSampleShape), grid_of(kSampleGrid));
  CHECK(state_from_json(state_to_json(state)) == state);

  const auto single = enumerate_states(Partition({1}), EnumerationStrategy::via_gt);
  CHECK(state_to_json(single[0]).dump() == R"({"grid":[["NW","EW"]],"m":2,"n":1})");
}
