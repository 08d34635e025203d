// Acceptance battery for the library: nine end-to-end criteria, one line of
// output each, exit status 1 if anything fails.  Each criterion is checked
// exactly (no tolerances); the timed ones also enforce a wall-clock budget.

#include <algorithm>
#include <chrono>
#include <iomanip>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "sixvertex/fschur.hpp"
#include "sixvertex/lattice.hpp"
#include "sixvertex/ring.hpp"
#include "sixvertex/shapes.hpp"
#include "sixvertex/yangbaxter.hpp"

using namespace sixvertex;

namespace {

int failures = 0;

class Stopwatch {
 public:
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

void report(int index, const std::string& label, bool pass, double seconds,
            double budget_seconds = 0.0) {
  std::ostringstream line;
  line << (pass ? "[PASS]" : "[FAIL]") << " criterion " << index << ": " << label << " ("
       << std::fixed << std::setprecision(2) << seconds << "s";
  if (budget_seconds > 0.0) line << ", budget " << std::setprecision(0) << budget_seconds << "s";
  line << ")";
  std::cout << line.str() << std::endl;
  if (!pass) ++failures;
}

// The desk-scale suite: every shape with n rows and first part at most the
// per-n cap, trailing zeros included.
std::vector<Partition> desk_suite() {
  std::vector<Partition> suite;
  const std::vector<std::pair<int, int>> caps = {{1, 5}, {2, 4}, {3, 3}};
  for (const auto& [n, first_max] : caps) {
    for (Partition& p : partitions_in_box(n, first_max)) suite.push_back(std::move(p));
  }
  return suite;
}

LaurentPoly normalized_z(const Partition& lambda, const RectWeightTable& rect) {
  const LaurentPoly z = partition_function(lambda, rect);
  return row_power_monomial(z.space(), -1) * z;
}

bool bijections_agree(const Partition& lambda) {
  const auto patterns = enumerate_gt(lambda);
  const auto states = enumerate_states(lambda, EnumerationStrategy::via_gt);
  const auto backtracked = enumerate_states(lambda, EnumerationStrategy::backtrack);
  if (!(states == backtracked)) return false;
  if (patterns.size() != states.size()) return false;

  std::set<std::vector<std::vector<int>>> staircase_keys;
  for (const GTPattern& g : patterns) {
    const Staircase s = gt_to_staircase(g);
    staircase_keys.insert(s.columns());
    if (!(staircase_to_gt(s) == g)) return false;
    if (!(state_to_gt(gt_to_state(g, lambda)) == g)) return false;
  }
  if (staircase_keys.size() != patterns.size()) return false;

  for (const IceState& s : states) {
    if (!(gt_to_state(state_to_gt(s), lambda) == s)) return false;
  }
  return true;
}

// The worked single-column slide with hydrogens at the upper-left, top, and
// bottom positions, written out term for term on both sides.
bool golden_star_triangle_case() {
  const VarSpace space{2, 1};
  const auto x_inv = [&space](int i) {
    return LaurentPoly::variable(space, xref(i), -1);
  };
  const auto x_over_a = [&space](int i) {
    return LaurentPoly::from_monomial(
        space, Monomial{1, {i == 1 ? 1 : 0, i == 2 ? 1 : 0}, {-1}});
  };
  const LaurentPoly one = LaurentPoly::one(space);

  const LaurentPoly lhs =
      (x_inv(1) - x_inv(2)) * x_over_a(1) + x_inv(2) * (x_over_a(1) - one) * x_over_a(2);
  const LaurentPoly rhs = (x_over_a(2) - one) * x_over_a(1) * x_inv(2);

  const BoundarySextuple boundary = BoundarySextuple::from_mask(0b100110);
  const StarTriangleSides sides = star_triangle_sides(boundary);
  return render_canonical(sides.left) == render_canonical(lhs) &&
         render_canonical(sides.right) == render_canonical(rhs) &&
         sides.left == sides.right;
}

bool interpolation_recovers(const Partition& lambda) {
  const LaurentPoly z = partition_function(lambda);
  const LaurentPoly f = row_power_monomial(z.space(), -1) * z;
  const int n = lambda.part_count();
  const int degree = lambda.sum();
  const std::vector<Rational> a_values = default_a_values(n + degree);

  const ExpansionResult result = expand_in_factorial_basis(f, degree, a_values);

  const LaurentPoly prefactor = column_prefactor(lambda, z.space());
  const std::vector<Rational> x_ones(z.space().nx, Rational(1));
  const std::vector<Rational> a_slice(a_values.begin(), a_values.begin() + z.space().na);
  const Rational expected_diagonal = Rational(1) / evaluate(prefactor, x_ones, a_slice);

  for (const auto& [mu, c] : result.coeffs) {
    if (c != (mu == lambda ? expected_diagonal : Rational(0))) return false;
  }
  return true;
}

template <typename Table, typename Config>
Table with_bumped_entry(const Table& table, Config config) {
  Table bent = table;
  const auto original = bent.entry(config);
  bent.entry(config) = [original](const VarSpace& space, int lo, int hi) {
    return original(space, lo, hi) + LaurentPoly::one(space);
  };
  return bent;
}

// A single corrupted weight must push at least one of the identity checks
// (main, symmetry, star-triangle) off true.
bool mutation_is_detected_rect(VertexConfig config) {
  const RectWeightTable bent = with_bumped_entry(RectWeightTable::standard(), config);
  const std::vector<Partition> probes = {Partition({1, 0}), Partition({2, 1})};
  for (const Partition& lambda : probes) {
    if (!verify_main_theorem(lambda, bent).pass) return true;
    if (!is_symmetric_in_x(normalized_z(lambda, bent))) return true;
  }
  return !verify_star_triangle(bent, CrossingWeightTable::standard()).all_pass();
}

bool mutation_is_detected_crossing(CrossingConfig config) {
  const CrossingWeightTable bent = with_bumped_entry(CrossingWeightTable::standard(), config);
  return !verify_star_triangle(RectWeightTable::standard(), bent).all_pass();
}

}  // namespace

int main() {
  const std::vector<Partition> suite = desk_suite();

  {
    Stopwatch watch;
    bool pass = true;
    for (const Partition& lambda : suite) {
      if (!verify_main_theorem(lambda).pass) pass = false;
    }
    const double t = watch.seconds();
    report(1, "main identity across the desk suite", pass && t < 60.0, t, 60.0);
  }

  {
    Stopwatch watch;
    const bool all_cases = verify_star_triangle().all_pass() &&
                           verify_star_triangle().cases.size() == 20;
    const bool golden = golden_star_triangle_case();
    const double t = watch.seconds();
    report(2, "star-triangle for all twenty boundaries", all_cases && golden && t < 1.0, t, 1.0);
  }

  {
    Stopwatch watch;
    bool pass = true;
    for (const Partition& lambda : suite) {
      if (!bijections_agree(lambda)) pass = false;
    }
    report(3, "pattern/staircase/state bijections", pass, watch.seconds());
  }

  {
    bool pass = true;
    double t4 = 0.0;
    const std::vector<std::size_t> expected = {1, 2, 7, 42};
    Stopwatch watch;
    for (int n = 1; n <= 4; ++n) {
      Stopwatch inner;
      const auto states = enumerate_states(Partition::zeros(n), EnumerationStrategy::backtrack);
      if (n == 4) t4 = inner.seconds();
      if (states.size() != expected[n - 1]) pass = false;
    }
    report(4, "domain-wall state counts 1, 2, 7, 42", pass && t4 < 30.0, watch.seconds(), 30.0);
  }

  {
    Stopwatch watch;
    bool pass = true;
    for (const Partition& lambda : suite) {
      if (!is_symmetric_in_x(normalized_z(lambda, RectWeightTable::standard()))) pass = false;
    }
    report(5, "row-variable symmetry of the normalized partition function", pass, watch.seconds());
  }

  {
    Stopwatch watch;
    bool pass = true;
    const std::vector<Partition> grid = partitions_in_box(3, 3);
    for (const Partition& lambda : grid) {
      for (const Partition& mu : grid) {
        if (!vanishing_check(lambda, mu, VanishingTarget::schur).pass) pass = false;
        if (!vanishing_check(lambda, mu, VanishingTarget::z).pass) pass = false;
      }
    }
    const double t = watch.seconds();
    report(6, "vanishing grid over the 3x3x3 box, both targets", pass && t < 120.0, t, 120.0);
  }

  {
    Stopwatch watch;
    bool pass = true;
    for (const Partition& lambda : suite) {
      const int n = lambda.part_count();
      const int bound = lambda.sum() + n * (n - 1) / 2;
      if (partition_function(lambda).total_x_degree() > bound) pass = false;
    }
    report(7, "x-degree bound on the partition function", pass, watch.seconds());
  }

  {
    Stopwatch watch;
    bool pass = true;
    for (const Partition& lambda : suite) {
      if (lambda.first_part() > 3) continue;
      if (!interpolation_recovers(lambda)) pass = false;
    }
    report(8, "interpolation returns the expected basis coefficients", pass, watch.seconds());
  }

  {
    Stopwatch watch;
    bool pass = true;
    for (const VertexConfig& config : VertexConfig::all()) {
      if (!mutation_is_detected_rect(config)) pass = false;
    }
    for (const CrossingConfig& config : CrossingConfig::all()) {
      if (!mutation_is_detected_crossing(config)) pass = false;
    }
    report(9, "every single-entry weight mutation is detected", pass, watch.seconds());
  }

  std::cout << "overall: " << (failures == 0 ? "PASS" : "FAIL") << " (9 criteria)" << std::endl;
  return failures == 0 ? 0 : 1;
}
