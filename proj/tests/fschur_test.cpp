#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "sixvertex/fschur.hpp"

using namespace sixvertex;

namespace {

LaurentPoly xv(const VarSpace& s, int i, int e = 1) {
  return LaurentPoly::variable(s, xref(i), e);
}
LaurentPoly av(const VarSpace& s, int j, int e = 1) {
  return LaurentPoly::variable(s, aref(j), e);
}

}  // namespace

TEST_CASE("factorial schur basics") {
  CHECK(factorial_schur(Partition({0}), 1, 1) == LaurentPoly::one(VarSpace{1, 1}));

  const VarSpace s11{1, 2};
  CHECK(factorial_schur(Partition({1}), 1, 2) == xv(s11, 1) - av(s11, 1));

  const VarSpace s22{2, 3};
  CHECK(factorial_schur(Partition({1, 0}), 2, 3) ==
        (xv(s22, 1) - av(s22, 1)) + (xv(s22, 2) - av(s22, 2)));

  CHECK_THROWS_AS(factorial_schur(Partition({2}), 1, 2), std::invalid_argument);
}

TEST_CASE("schur polynomial properties") {
  for (const Partition& lambda : partitions_in_box(3, 2)) {
    const LaurentPoly s = factorial_schur(lambda, 3, 5);
    CHECK(!s.has_negative_x_exponent());
    CHECK(!s.has_negative_a_exponent());
    CHECK(is_symmetric_in_x(s));
    if (!s.is_zero()) CHECK(s.total_x_degree() == lambda.sum());
  }
  // with every a pinned to zero the classical Schur value appears
  const LaurentPoly s1 = factorial_schur(Partition({1, 0}), 2, 3);
  const Rational value = evaluate(s1, {Rational(2), Rational(3)},
                                  {Rational(0), Rational(0), Rational(0)});
  CHECK(value == Rational(5));
}

TEST_CASE("specialization points") {
  CHECK(a_mu(Partition({0}), 1, 1).a_indices() == std::vector<int>{1});
  CHECK(a_mu(Partition({1}), 1, 2).a_indices() == std::vector<int>{2});
  CHECK(a_mu(Partition({2, 1, 0}), 3, 5).a_indices() == std::vector<int>{5, 3, 1});
  CHECK_THROWS_AS(a_mu(Partition({2}), 1, 2), std::invalid_argument);

  const VarSpace space{1, 2};
  const LaurentPoly p = xv(space, 1) - av(space, 1);
  CHECK(substitute_x_at(p, a_mu(Partition({1}), 1, 2)) == av(space, 2) - av(space, 1));
}

TEST_CASE("vanishing and diagonal values") {
  SUBCASE("z vanishes when lambda is not inside mu") {
    const VanishingResult r = vanishing_check(Partition({1}), Partition({0}), VanishingTarget::z);
    CHECK(!r.lambda_in_mu);
    CHECK(r.value_is_zero);
    CHECK(r.pass);
  }
  SUBCASE("diagonal value of z") {
    const VanishingResult r = vanishing_check(Partition({1}), Partition({1}), VanishingTarget::z);
    const VarSpace space{1, 2};
    const LaurentPoly expected =
        LaurentPoly::from_monomial(space, Monomial{1, {0}, {-1, 1}}) - LaurentPoly::one(space);
    REQUIRE(r.diagonal.has_value());
    CHECK(*r.diagonal == expected);
    CHECK(r.value == expected);
    CHECK(r.pass);
  }
  SUBCASE("diagonal value of schur") {
    const VanishingResult r =
        vanishing_check(Partition({1}), Partition({1}), VanishingTarget::schur);
    const VarSpace space{1, 2};
    CHECK(r.value == av(space, 2) - av(space, 1));
    CHECK(r.pass);
  }
  SUBCASE("a small grid, both targets") {
    for (const Partition& lambda : partitions_in_box(2, 2)) {
      for (const Partition& mu : partitions_in_box(2, 2)) {
        CHECK(vanishing_check(lambda, mu, VanishingTarget::schur).pass);
        CHECK(vanishing_check(lambda, mu, VanishingTarget::z).pass);
      }
    }
  }
}

TEST_CASE("prefactors") {
  const VarSpace space{2, 3};
  CHECK(row_power_monomial(space, 1) == xv(space, 2));
  CHECK(row_power_monomial(space, -1) == xv(space, 2, -1));
  // (lambda + rho) for (1,0) is (2,0); its conjugate is (1,1)
  CHECK(column_prefactor(Partition({1, 0}), space) == av(space, 1) * av(space, 2));
  CHECK(column_prefactor(Partition({0}), VarSpace{1, 1}) == LaurentPoly::one(VarSpace{1, 1}));
}

TEST_CASE("default numeric a sequence") {
  const auto v = default_a_values(6);
  CHECK(v == std::vector<Rational>{1, 2, 5, 11, 23, 47});
}

TEST_CASE("expansion in the factorial basis") {
  SUBCASE("the constant") {
    const ExpansionResult r =
        expand_in_factorial_basis(LaurentPoly::one(VarSpace{1, 1}), 0, default_a_values(1));
    CHECK(r.coeffs.size() == 1);
    CHECK(r.coeffs.at(Partition({0})) == Rational(1));
  }
  SUBCASE("x^-delta Z for a single box") {
    const LaurentPoly z = partition_function(Partition({1}));
    const ExpansionResult r = expand_in_factorial_basis(z, 1, default_a_values(2));
    CHECK(r.coeffs.at(Partition({0})) == Rational(0));
    CHECK(r.coeffs.at(Partition({1})) == Rational(1));  // 1 / a_1 with a_1 = 1
  }
  SUBCASE("basis elements expand to themselves") {
    const Partition mu({2, 1});
    const LaurentPoly s = factorial_schur(mu, 2, 5);
    const ExpansionResult r = expand_in_factorial_basis(s, 3, default_a_values(5));
    for (const auto& [nu, c] : r.coeffs) {
      CHECK(c == (nu == mu ? Rational(1) : Rational(0)));
    }
  }
  SUBCASE("bad inputs are rejected") {
    const VarSpace space{2, 2};
    CHECK_THROWS_AS(expand_in_factorial_basis(xv(space, 1), 1, default_a_values(3)),
                    std::invalid_argument);  // not symmetric
    CHECK_THROWS_AS(expand_in_factorial_basis(xv(space, 1, -1) + xv(space, 2, -1), 1,
                                              default_a_values(3)),
                    std::invalid_argument);  // not a polynomial
    CHECK_THROWS_AS(
        expand_in_factorial_basis(xv(space, 1) + xv(space, 2), 1, {Rational(1), Rational(1), Rational(2)}),
        std::invalid_argument);  // repeated a values
  }
}

TEST_CASE("main identity certificates") {
  CHECK(verify_main_theorem(Partition({0})).pass);

  const MainTheoremCertificate one_box = verify_main_theorem(Partition({1}));
  CHECK(one_box.pass);
  CHECK(one_box.lhs_text == "-1*a1 + x1");
  CHECK(one_box.lhs_text == one_box.rhs_text);

  CHECK(verify_main_theorem(Partition({1, 0})).pass);
  CHECK(verify_main_theorem(Partition({5, 4, 1})).pass);  // the headline shape

  RectWeightTable bent = RectWeightTable::standard();
  bent.entry(VertexConfig(Direction::East, Direction::West)) =
      [](const VarSpace& space, int, int) { return LaurentPoly(space, 2); };
  CHECK(!verify_main_theorem(Partition({0}), bent).pass);
}
