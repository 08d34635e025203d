// Exact multivariate Laurent polynomial arithmetic over arbitrary-precision
// integers.
//
// Every symbolic quantity in this library is a sparse Laurent polynomial in
// two blocks of variables, x_1..x_nx (row variables) and a_1..a_na (column
// variables), with mpz coefficients.  Terms are kept in one canonical order:
// total degree ascending, ties broken lexicographically on the concatenated
// (x, a) exponent vector.  Equal values therefore render identically, and
// rendering doubles as the equality test surface.
//
// Rational numbers enter only at the evaluation boundary (numeric
// specialization of all variables); the ring itself stays over the integers.

#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

namespace sixvertex {

using Rational = mpq_class;

// base^e with e possibly negative. Throws std::domain_error on 0^-k.
Rational rational_pow(const Rational& base, long e);

// "7", "-3/4": the canonical mpq text form.
std::string rational_to_string(const Rational& r);
Rational rational_from_string(const std::string& s);

struct VarSpace {
  int nx = 1;  // x_1 .. x_nx
  int na = 1;  // a_1 .. a_na
  friend bool operator==(const VarSpace&, const VarSpace&) = default;
};

struct VarRef {
  enum class Kind : int { X = 0, A = 1 };
  Kind kind = Kind::X;
  int index = 1;  // 1-based
  friend auto operator<=>(const VarRef&, const VarRef&) = default;
};

inline VarRef xref(int i) { return VarRef{VarRef::Kind::X, i}; }
inline VarRef aref(int j) { return VarRef{VarRef::Kind::A, j}; }

// A single term: integer coefficient plus one exponent per variable.
// Exponents may be negative; vector lengths must match the ambient space.
struct Monomial {
  mpz_class coef;
  std::vector<int> x;
  std::vector<int> a;
};

class LaurentPoly {
 public:
  LaurentPoly() = default;                                 // zero in VarSpace{1,1}
  explicit LaurentPoly(const VarSpace& space);             // zero
  LaurentPoly(const VarSpace& space, const mpz_class& c);  // constant

  static LaurentPoly one(const VarSpace& space);
  static LaurentPoly variable(const VarSpace& space, VarRef v, int exponent = 1);
  static LaurentPoly from_monomial(const VarSpace& space, const Monomial& m);
  static LaurentPoly from_monomials(const VarSpace& space,
                                    const std::vector<Monomial>& ms);

  const VarSpace& space() const { return space_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }

  // Terms in canonical order. Coefficients are always nonzero.
  std::vector<Monomial> monomials() const;

  // Max over terms of the summed x exponents; 0 for the zero polynomial.
  int total_x_degree() const;
  bool has_negative_x_exponent() const;
  bool has_negative_a_exponent() const;

  LaurentPoly operator-() const;
  LaurentPoly& operator+=(const LaurentPoly& rhs);
  LaurentPoly& operator-=(const LaurentPoly& rhs);
  LaurentPoly& operator*=(const LaurentPoly& rhs);

  friend LaurentPoly operator+(LaurentPoly lhs, const LaurentPoly& rhs) {
    lhs += rhs;
    return lhs;
  }
  friend LaurentPoly operator-(LaurentPoly lhs, const LaurentPoly& rhs) {
    lhs -= rhs;
    return lhs;
  }
  friend LaurentPoly operator*(const LaurentPoly& lhs, const LaurentPoly& rhs);

  friend bool operator==(const LaurentPoly&, const LaurentPoly&);

 private:
  struct Key {
    std::vector<int> x;
    std::vector<int> a;
    friend bool operator==(const Key&, const Key&) = default;
  };
  // Total degree ascending, then lex on (x, a).
  struct KeyLess {
    bool operator()(const Key& l, const Key& r) const;
  };
  using TermMap = std::map<Key, mpz_class, KeyLess>;

  void insert_term(Key key, const mpz_class& c);  // accumulates, drops zeros
  void check_same_space(const LaurentPoly& other) const;

  VarSpace space_;
  TermMap terms_;
};

// Applies the given variable bindings, each variable going to a (nonzero)
// monomial in the same space; unbound variables are left alone.  The result
// must land back in the integer-coefficient ring (it always does when the
// binding coefficients are units); otherwise std::domain_error.
LaurentPoly substitute(const LaurentPoly& p,
                       const std::vector<std::pair<VarRef, Monomial>>& bindings);

// Full numeric specialization of every variable. Throws std::domain_error
// when a variable with a negative exponent is bound to zero.
Rational evaluate(const LaurentPoly& p, const std::vector<Rational>& x_values,
                  const std::vector<Rational>& a_values);

// Relabels x variables: the exponent of x_sigma(i) in the result is the
// exponent of x_i in the input. sigma is 1-based and must be a bijection.
LaurentPoly permute_x(const LaurentPoly& p, const std::vector<int>& sigma);

// Reinterprets p in a larger space; existing variables keep their indices.
LaurentPoly embedded(const LaurentPoly& p, const VarSpace& into);

// Deterministic text form, e.g. "-1 + x1*a1^-1". Equal polynomials render
// identically.
std::string render_canonical(const LaurentPoly& p);

// Fixed by every adjacent transposition of the x variables?
bool is_symmetric_in_x(const LaurentPoly& p);

// {"nx":.., "na":.., "terms":[{"c":"<int>","x":[..],"a":[..]},..]},
// terms in canonical order, coefficient as a decimal string.
nlohmann::json poly_to_json(const LaurentPoly& p);
LaurentPoly poly_from_json(const nlohmann::json& j);

}  // namespace sixvertex
