#include "sixvertex/fschur.hpp"

#include <algorithm>
#include <stdexcept>

namespace sixvertex {

namespace {

Monomial unit_monomial(const VarSpace& space) {
  return Monomial{1, std::vector<int>(space.nx, 0), std::vector<int>(space.na, 0)};
}

LaurentPoly x_minus_a(const VarSpace& space, int x_index, int a_index) {
  return LaurentPoly::variable(space, xref(x_index)) -
         LaurentPoly::variable(space, aref(a_index));
}

}  // namespace

LaurentPoly factorial_schur(const Partition& lambda, int num_x, int num_a) {
  if (num_x < 1) throw std::invalid_argument("need at least one x variable");
  if (num_a < num_x + lambda.first_part()) {
    throw std::invalid_argument("a alphabet too small: need num_x + lambda_1 values");
  }
  const VarSpace space{num_x, num_a};
  LaurentPoly sum(space);
  for (const Tableau& t : enumerate_ssyt(lambda, num_x)) {
    LaurentPoly prod = LaurentPoly::one(space);
    for (int i = 1; i <= lambda.part_count(); ++i) {
      for (int j = 1; j <= lambda.part(i); ++j) {
        const int entry = t.entry(i, j);
        prod *= x_minus_a(space, entry, entry + j - i);
      }
    }
    sum += prod;
  }
  return sum;
}

std::vector<int> SpecializationPoint::a_indices() const {
  std::vector<int> idx(n);
  for (int i = 1; i <= n; ++i) idx[i - 1] = n + 1 - i + mu.part(i);
  return idx;
}

SpecializationPoint a_mu(const Partition& mu, int n, int m) {
  if (mu.part_count() > n) throw std::invalid_argument("mu has more than n parts");
  if (m < n + mu.first_part()) {
    throw std::invalid_argument("a alphabet too small for this specialization");
  }
  return SpecializationPoint{mu.padded(n), n, m};
}

LaurentPoly substitute_x_at(const LaurentPoly& p, const SpecializationPoint& pt) {
  const VarSpace& space = p.space();
  if (space.nx != pt.n) throw std::invalid_argument("point and polynomial disagree on n");
  std::vector<std::pair<VarRef, Monomial>> bindings;
  const std::vector<int> idx = pt.a_indices();
  for (int i = 1; i <= pt.n; ++i) {
    if (idx[i - 1] > space.na) {
      throw std::invalid_argument("specialization index outside the a alphabet");
    }
    Monomial m = unit_monomial(space);
    m.a[idx[i - 1] - 1] = 1;
    bindings.emplace_back(xref(i), std::move(m));
  }
  return substitute(p, bindings);
}

VanishingResult vanishing_check(const Partition& lambda, const Partition& mu,
                                VanishingTarget target) {
  const int n = lambda.part_count();
  if (mu.part_count() != n) {
    throw std::invalid_argument("lambda and mu need the same part count");
  }
  const int m = n + std::max(lambda.first_part(), mu.first_part());
  const VarSpace space{n, m};

  LaurentPoly f = target == VanishingTarget::schur
                      ? factorial_schur(lambda, n, m)
                      : embedded(partition_function(lambda), space);

  VanishingResult out;
  out.value = substitute_x_at(f, a_mu(mu, n, m));
  out.lambda_in_mu = mu.contains(lambda);
  out.value_is_zero = out.value.is_zero();

  if (lambda == mu) {
    const Partition conj = lambda.conjugate();
    LaurentPoly prod = LaurentPoly::one(space);
    for (int i = 1; i <= n; ++i) {
      for (int j = 1; j <= lambda.part(i); ++j) {
        const int upper = n + 1 - i + lambda.part(i);
        const int lower = n - conj.part(j) + j;
        if (target == VanishingTarget::schur) {
          prod *= LaurentPoly::variable(space, aref(upper)) -
                  LaurentPoly::variable(space, aref(lower));
        } else {
          Monomial ratio = unit_monomial(space);
          ratio.a[upper - 1] = 1;
          ratio.a[lower - 1] = -1;
          prod *= LaurentPoly::from_monomial(space, ratio) - LaurentPoly::one(space);
        }
      }
    }
    out.diagonal = prod;
    out.pass = out.value == prod;
  } else if (!out.lambda_in_mu) {
    out.pass = out.value_is_zero;
  } else {
    out.pass = true;  // strict containment: no claim to check
  }
  return out;
}

namespace {

// All partitions with exactly n parts and |mu| <= bound, ordered by weight
// and then lexicographically: the order the triangular solve runs in.
std::vector<Partition> interpolation_order(int n, int bound) {
  std::vector<Partition> all = partitions_in_box(n, bound);
  std::erase_if(all, [&](const Partition& p) { return p.sum() > bound; });
  std::stable_sort(all.begin(), all.end(),
                   [](const Partition& a, const Partition& b) { return a.sum() < b.sum(); });
  return all;
}

}  // namespace

ExpansionResult expand_in_factorial_basis(const LaurentPoly& f, int degree_bound,
                                          const std::vector<Rational>& a_values) {
  const int n = f.space().nx;
  const int needed = n + degree_bound;
  if (static_cast<int>(a_values.size()) < needed) {
    throw std::invalid_argument("need at least nx + degree_bound a values");
  }
  if (f.space().na > static_cast<int>(a_values.size())) {
    throw std::invalid_argument("f mentions more a variables than values given");
  }
  {
    std::vector<Rational> sorted = a_values;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
      throw std::invalid_argument("a values must be distinct");
    }
  }
  if (f.has_negative_x_exponent()) {
    throw std::invalid_argument("f must be a polynomial in x");
  }
  if (f.total_x_degree() > degree_bound) {
    throw std::invalid_argument("f exceeds the degree bound");
  }
  if (!is_symmetric_in_x(f)) {
    throw std::invalid_argument("f must be symmetric in x");
  }

  const int big_m = static_cast<int>(a_values.size());
  const std::vector<Rational> f_a(a_values.begin(), a_values.begin() + f.space().na);

  auto x_point = [&](const Partition& mu) {
    std::vector<Rational> xs(n);
    const std::vector<int> idx = a_mu(mu, n, big_m).a_indices();
    for (int i = 0; i < n; ++i) xs[i] = a_values[idx[i] - 1];
    return xs;
  };

  const std::vector<Partition> order = interpolation_order(n, degree_bound);
  const std::size_t count = order.size();

  // Evaluate everything once up front: f and each basis polynomial at each
  // specialization point.  The triangular solve and the reconstruction check
  // below then run on plain rationals.
  std::vector<Rational> f_at(count);
  std::vector<std::vector<Rational>> basis_at(count, std::vector<Rational>(count));
  for (std::size_t k = 0; k < count; ++k) {
    const LaurentPoly basis_poly = factorial_schur(order[k], n, big_m);
    for (std::size_t p = 0; p < count; ++p) {
      basis_at[k][p] = evaluate(basis_poly, x_point(order[p]), a_values);
    }
  }
  for (std::size_t p = 0; p < count; ++p) {
    f_at[p] = evaluate(f, x_point(order[p]), f_a);
  }

  ExpansionResult out;
  out.a_values = a_values;
  std::vector<Rational> coeffs(count);
  for (std::size_t k = 0; k < count; ++k) {
    Rational residue = f_at[k];
    for (std::size_t prior = 0; prior < k; ++prior) {
      residue -= coeffs[prior] * basis_at[prior][k];
    }
    if (basis_at[k][k] == 0) {
      throw std::domain_error("zero diagonal value; a values are not in general position");
    }
    coeffs[k] = residue / basis_at[k][k];
    out.coeffs[order[k]] = coeffs[k];
  }

  // The solve consumed each point once; re-checking the full reconstruction
  // at every point guards the vanishing assumption it rests on.
  for (std::size_t p = 0; p < count; ++p) {
    Rational sum(0);
    for (std::size_t k = 0; k < count; ++k) sum += coeffs[k] * basis_at[k][p];
    if (sum != f_at[p]) {
      throw std::logic_error("factorial-basis reconstruction failed at a sample point");
    }
  }
  return out;
}

LaurentPoly row_power_monomial(const VarSpace& space, int sign) {
  if (sign != 1 && sign != -1) throw std::invalid_argument("sign must be +1 or -1");
  Monomial m = unit_monomial(space);
  for (int i = 1; i <= space.nx; ++i) m.x[i - 1] = sign * (i - 1);
  return LaurentPoly::from_monomial(space, m);
}

LaurentPoly column_prefactor(const Partition& lambda, const VarSpace& space) {
  const Partition conj = Partition(lambda.plus_rho()).conjugate();
  if (conj.part_count() > space.na) {
    throw std::invalid_argument("space has too few a variables for the prefactor");
  }
  Monomial m = unit_monomial(space);
  for (int k = 1; k <= conj.part_count(); ++k) m.a[k - 1] = conj.part(k);
  return LaurentPoly::from_monomial(space, m);
}

MainTheoremCertificate verify_main_theorem(const Partition& lambda,
                                           const RectWeightTable& table) {
  const int n = lambda.part_count();
  const int m = n + lambda.first_part();
  const VarSpace space{n, m};

  const LaurentPoly lhs = partition_function(lambda, table) * column_prefactor(lambda, space);
  const LaurentPoly rhs = row_power_monomial(space, 1) * factorial_schur(lambda, n, m);

  MainTheoremCertificate cert;
  cert.pass = lhs == rhs;
  cert.lhs = lhs;
  cert.rhs = rhs;
  cert.lhs_text = render_canonical(lhs);
  cert.rhs_text = render_canonical(rhs);
  return cert;
}

std::vector<Rational> default_a_values(int count) {
  if (count < 0) throw std::invalid_argument("count must be nonnegative");
  std::vector<Rational> v;
  v.reserve(count);
  if (count >= 1) v.emplace_back(1);
  if (count >= 2) v.emplace_back(2);
  while (static_cast<int>(v.size()) < count) v.push_back(2 * v.back() + 1);
  return v;
}

}  // namespace sixvertex
