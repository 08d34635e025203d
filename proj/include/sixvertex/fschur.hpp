// Factorial Schur polynomials, the a_mu specialization points, vanishing
// checks, expansion in the factorial basis by triangular interpolation, and
// the verifier tying the partition function to the factorial Schur side.

#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "sixvertex/lattice.hpp"
#include "sixvertex/ring.hpp"
#include "sixvertex/shapes.hpp"

namespace sixvertex {

// Sum over semistandard tableaux of shape lambda with entries <= num_x of
// the cell products (x_T - a_{T + column - row}), in VarSpace{num_x, num_a}.
// Needs num_a >= num_x + lambda_1 so every a index is in range.
LaurentPoly factorial_schur(const Partition& lambda, int num_x, int num_a);

// The substitution x_i -> a_{n+1-i+mu_i}.
struct SpecializationPoint {
  Partition mu;
  int n = 0;
  int m = 0;
  std::vector<int> a_indices() const;  // 1-based target index per x_i
};

SpecializationPoint a_mu(const Partition& mu, int n, int m);

// Applies the point's bindings; p must have nx = n and na >= every target.
LaurentPoly substitute_x_at(const LaurentPoly& p, const SpecializationPoint& pt);

enum class VanishingTarget { schur, z };

struct VanishingResult {
  bool lambda_in_mu = false;
  bool value_is_zero = false;
  LaurentPoly value;                    // specialized, a variables only
  std::optional<LaurentPoly> diagonal;  // closed product form, when lambda == mu
  bool pass = false;                    // the claim asserted for this pair holds
};

// Substitutes a_mu into s_lambda or Z_lambda.  Claim checked: zero when
// lambda is not contained in mu; the diagonal product when lambda == mu.
VanishingResult vanishing_check(const Partition& lambda, const Partition& mu,
                                VanishingTarget target);

struct ExpansionResult {
  std::map<Partition, Rational> coeffs;  // every mu with |mu| <= bound, n parts
  std::vector<Rational> a_values;
};

// Writes f (a symmetric polynomial in x, coefficients may involve the a
// variables, which are pinned numerically to a_values) as sum of c_mu
// s_mu(x|a) by substituting the points a_mu in increasing |mu|.  Needs
// a_values distinct, with at least nx + degree_bound of them.
ExpansionResult expand_in_factorial_basis(const LaurentPoly& f, int degree_bound,
                                          const std::vector<Rational>& a_values);

struct MainTheoremCertificate {
  bool pass = false;
  LaurentPoly lhs;  // Z_lambda * a^{(lambda+rho)'}
  LaurentPoly rhs;  // x^delta * s_lambda(x|a)
  std::string lhs_text;
  std::string rhs_text;
};

MainTheoremCertificate verify_main_theorem(
    const Partition& lambda,
    const RectWeightTable& table = RectWeightTable::standard());

// prod_i x_i^{sign*(i-1)}; sign is +1 or -1.
LaurentPoly row_power_monomial(const VarSpace& space, int sign);

// a^{(lambda+rho)'}: exponent of a_k is part k of the conjugate of lambda+rho.
LaurentPoly column_prefactor(const Partition& lambda, const VarSpace& space);

// 1, 2, 5, 11, 23, 47, ...: each term one more than twice the previous.
std::vector<Rational> default_a_values(int count);

}  // namespace sixvertex
