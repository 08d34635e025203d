#include "sixvertex/ring.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace sixvertex {

namespace {

void check_space_valid(const VarSpace& s) {
  if (s.nx < 1 || s.na < 1) {
    throw std::invalid_argument("variable space needs nx >= 1 and na >= 1");
  }
}

int vec_sum(const std::vector<int>& v) {
  return std::accumulate(v.begin(), v.end(), 0);
}

mpz_class int_pow(const mpz_class& base, unsigned long e) {
  mpz_class out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), e);
  return out;
}

}  // namespace

Rational rational_pow(const Rational& base, long e) {
  if (e == 0) return Rational(1);
  if (base == 0) {
    if (e < 0) throw std::domain_error("zero raised to a negative exponent");
    return Rational(0);
  }
  const unsigned long mag = static_cast<unsigned long>(e < 0 ? -e : e);
  Rational out(int_pow(base.get_num(), mag), int_pow(base.get_den(), mag));
  out.canonicalize();
  if (e < 0) out = 1 / out;
  return out;
}

std::string rational_to_string(const Rational& r) { return r.get_str(); }

Rational rational_from_string(const std::string& s) {
  Rational r;
  if (r.set_str(s, 10) != 0) {
    throw std::invalid_argument("malformed rational: " + s);
  }
  r.canonicalize();
  return r;
}

bool LaurentPoly::KeyLess::operator()(const Key& l, const Key& r) const {
  const int dl = vec_sum(l.x) + vec_sum(l.a);
  const int dr = vec_sum(r.x) + vec_sum(r.a);
  if (dl != dr) return dl < dr;
  if (l.x != r.x) return l.x < r.x;
  return l.a < r.a;
}

LaurentPoly::LaurentPoly(const VarSpace& space) : space_(space) {
  check_space_valid(space);
}

LaurentPoly::LaurentPoly(const VarSpace& space, const mpz_class& c)
    : LaurentPoly(space) {
  if (c != 0) {
    terms_.emplace(Key{std::vector<int>(space.nx, 0), std::vector<int>(space.na, 0)}, c);
  }
}

LaurentPoly LaurentPoly::one(const VarSpace& space) {
  return LaurentPoly(space, 1);
}

LaurentPoly LaurentPoly::variable(const VarSpace& space, VarRef v, int exponent) {
  check_space_valid(space);
  Monomial m{1, std::vector<int>(space.nx, 0), std::vector<int>(space.na, 0)};
  if (v.kind == VarRef::Kind::X) {
    if (v.index < 1 || v.index > space.nx) {
      throw std::invalid_argument("x variable index out of range");
    }
    m.x[v.index - 1] = exponent;
  } else {
    if (v.index < 1 || v.index > space.na) {
      throw std::invalid_argument("a variable index out of range");
    }
    m.a[v.index - 1] = exponent;
  }
  return from_monomial(space, m);
}

LaurentPoly LaurentPoly::from_monomial(const VarSpace& space, const Monomial& m) {
  return from_monomials(space, {m});
}

LaurentPoly LaurentPoly::from_monomials(const VarSpace& space,
                                        const std::vector<Monomial>& ms) {
  LaurentPoly p(space);
  for (const Monomial& m : ms) {
    if (m.x.size() != static_cast<std::size_t>(space.nx) ||
        m.a.size() != static_cast<std::size_t>(space.na)) {
      throw std::invalid_argument("monomial exponent lengths do not match the space");
    }
    p.insert_term(Key{m.x, m.a}, m.coef);
  }
  return p;
}

std::vector<Monomial> LaurentPoly::monomials() const {
  std::vector<Monomial> out;
  out.reserve(terms_.size());
  for (const auto& [key, coef] : terms_) {
    out.push_back(Monomial{coef, key.x, key.a});
  }
  return out;
}

int LaurentPoly::total_x_degree() const {
  int deg = 0;
  bool first = true;
  for (const auto& [key, coef] : terms_) {
    const int d = vec_sum(key.x);
    if (first || d > deg) deg = d;
    first = false;
  }
  return deg;
}

bool LaurentPoly::has_negative_x_exponent() const {
  for (const auto& [key, coef] : terms_) {
    for (int e : key.x) {
      if (e < 0) return true;
    }
  }
  return false;
}

bool LaurentPoly::has_negative_a_exponent() const {
  for (const auto& [key, coef] : terms_) {
    for (int e : key.a) {
      if (e < 0) return true;
    }
  }
  return false;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly out(space_);
  for (const auto& [key, coef] : terms_) {
    out.terms_.emplace(key, -coef);
  }
  return out;
}

void LaurentPoly::insert_term(Key key, const mpz_class& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(std::move(key), c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

void LaurentPoly::check_same_space(const LaurentPoly& other) const {
  if (!(space_ == other.space_)) {
    throw std::invalid_argument("variable-space mismatch");
  }
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& rhs) {
  check_same_space(rhs);
  for (const auto& [key, coef] : rhs.terms_) {
    insert_term(key, coef);
  }
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& rhs) {
  check_same_space(rhs);
  for (const auto& [key, coef] : rhs.terms_) {
    insert_term(key, -coef);
  }
  return *this;
}

LaurentPoly operator*(const LaurentPoly& lhs, const LaurentPoly& rhs) {
  lhs.check_same_space(rhs);
  LaurentPoly out(lhs.space_);
  for (const auto& [lk, lc] : lhs.terms_) {
    for (const auto& [rk, rc] : rhs.terms_) {
      LaurentPoly::Key key = lk;
      for (std::size_t i = 0; i < key.x.size(); ++i) key.x[i] += rk.x[i];
      for (std::size_t i = 0; i < key.a.size(); ++i) key.a[i] += rk.a[i];
      out.insert_term(std::move(key), lc * rc);
    }
  }
  return out;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& rhs) {
  *this = *this * rhs;
  return *this;
}

bool operator==(const LaurentPoly& lhs, const LaurentPoly& rhs) {
  return lhs.space_ == rhs.space_ && lhs.terms_ == rhs.terms_;
}

LaurentPoly substitute(const LaurentPoly& p,
                       const std::vector<std::pair<VarRef, Monomial>>& bindings) {
  const VarSpace& sp = p.space();
  std::vector<const Monomial*> xbind(sp.nx, nullptr);
  std::vector<const Monomial*> abind(sp.na, nullptr);
  for (const auto& [ref, mono] : bindings) {
    if (mono.coef == 0) {
      throw std::invalid_argument("monomial binding with zero coefficient");
    }
    if (mono.x.size() != static_cast<std::size_t>(sp.nx) ||
        mono.a.size() != static_cast<std::size_t>(sp.na)) {
      throw std::invalid_argument("binding monomial does not live in the polynomial's space");
    }
    auto& slot = (ref.kind == VarRef::Kind::X) ? xbind : abind;
    const int limit = (ref.kind == VarRef::Kind::X) ? sp.nx : sp.na;
    if (ref.index < 1 || ref.index > limit) {
      throw std::invalid_argument("unknown variable index in substitution");
    }
    if (slot[ref.index - 1] != nullptr) {
      throw std::invalid_argument("duplicate binding for one variable");
    }
    slot[ref.index - 1] = &mono;
  }

  std::map<std::pair<std::vector<int>, std::vector<int>>, Rational> acc;
  for (const Monomial& term : p.monomials()) {
    Rational c(term.coef);
    std::vector<int> ex(sp.nx, 0), ea(sp.na, 0);
    auto apply = [&](int e, const Monomial* bound, std::vector<int>& own, int idx) {
      if (e == 0) return;
      if (bound == nullptr) {
        own[idx] += e;
        return;
      }
      c *= rational_pow(Rational(bound->coef), e);
      for (int k = 0; k < sp.nx; ++k) ex[k] += e * bound->x[k];
      for (int k = 0; k < sp.na; ++k) ea[k] += e * bound->a[k];
    };
    for (int i = 0; i < sp.nx; ++i) apply(term.x[i], xbind[i], ex, i);
    for (int j = 0; j < sp.na; ++j) apply(term.a[j], abind[j], ea, j);
    acc[{std::move(ex), std::move(ea)}] += c;
  }

  std::vector<Monomial> out;
  for (const auto& [key, c] : acc) {
    if (c == 0) continue;
    if (c.get_den() != 1) {
      throw std::domain_error("substitution leaves the integer-coefficient ring");
    }
    out.push_back(Monomial{c.get_num(), key.first, key.second});
  }
  return LaurentPoly::from_monomials(sp, out);
}

Rational evaluate(const LaurentPoly& p, const std::vector<Rational>& x_values,
                  const std::vector<Rational>& a_values) {
  const VarSpace& sp = p.space();
  if (x_values.size() != static_cast<std::size_t>(sp.nx) ||
      a_values.size() != static_cast<std::size_t>(sp.na)) {
    throw std::invalid_argument("evaluation needs one value per variable");
  }
  Rational sum(0);
  for (const Monomial& term : p.monomials()) {
    Rational t(term.coef);
    for (int i = 0; i < sp.nx; ++i) {
      if (term.x[i] != 0) t *= rational_pow(x_values[i], term.x[i]);
    }
    for (int j = 0; j < sp.na; ++j) {
      if (term.a[j] != 0) t *= rational_pow(a_values[j], term.a[j]);
    }
    sum += t;
  }
  return sum;
}

LaurentPoly permute_x(const LaurentPoly& p, const std::vector<int>& sigma) {
  const VarSpace& sp = p.space();
  if (sigma.size() != static_cast<std::size_t>(sp.nx)) {
    throw std::invalid_argument("permutation length does not match nx");
  }
  std::vector<bool> seen(sp.nx, false);
  for (int image : sigma) {
    if (image < 1 || image > sp.nx || seen[image - 1]) {
      throw std::invalid_argument("not a permutation of the x variables");
    }
    seen[image - 1] = true;
  }
  std::vector<Monomial> out;
  for (Monomial term : p.monomials()) {
    std::vector<int> ex(sp.nx, 0);
    for (int i = 0; i < sp.nx; ++i) ex[sigma[i] - 1] = term.x[i];
    term.x = std::move(ex);
    out.push_back(std::move(term));
  }
  return LaurentPoly::from_monomials(sp, out);
}

LaurentPoly embedded(const LaurentPoly& p, const VarSpace& into) {
  const VarSpace& sp = p.space();
  if (into.nx < sp.nx || into.na < sp.na) {
    throw std::invalid_argument("target space is smaller than the source space");
  }
  std::vector<Monomial> out;
  for (Monomial term : p.monomials()) {
    term.x.resize(into.nx, 0);
    term.a.resize(into.na, 0);
    out.push_back(std::move(term));
  }
  return LaurentPoly::from_monomials(into, out);
}

std::string render_canonical(const LaurentPoly& p) {
  if (p.is_zero()) return "0";
  std::string text;
  bool first = true;
  for (const Monomial& term : p.monomials()) {
    if (!first) text += " + ";
    first = false;
    std::string vars;
    auto append_vars = [&vars](char letter, const std::vector<int>& exps) {
      for (std::size_t i = 0; i < exps.size(); ++i) {
        if (exps[i] == 0) continue;
        if (!vars.empty()) vars += '*';
        vars += letter;
        vars += std::to_string(i + 1);
        if (exps[i] != 1) {
          vars += '^';
          vars += std::to_string(exps[i]);
        }
      }
    };
    append_vars('x', term.x);
    append_vars('a', term.a);
    if (vars.empty()) {
      text += term.coef.get_str();
    } else if (term.coef == 1) {
      text += vars;
    } else {
      text += term.coef.get_str();
      text += '*';
      text += vars;
    }
  }
  return text;
}

bool is_symmetric_in_x(const LaurentPoly& p) {
  const int n = p.space().nx;
  for (int i = 1; i < n; ++i) {
    std::vector<int> sigma(n);
    for (int k = 0; k < n; ++k) sigma[k] = k + 1;
    std::swap(sigma[i - 1], sigma[i]);
    if (!(permute_x(p, sigma) == p)) return false;
  }
  return true;
}

nlohmann::json poly_to_json(const LaurentPoly& p) {
  nlohmann::json terms = nlohmann::json::array();
  for (const Monomial& m : p.monomials()) {
    terms.push_back({{"c", m.coef.get_str()}, {"x", m.x}, {"a", m.a}});
  }
  return {{"nx", p.space().nx}, {"na", p.space().na}, {"terms", std::move(terms)}};
}

LaurentPoly poly_from_json(const nlohmann::json& j) {
  const VarSpace sp{j.at("nx").get<int>(), j.at("na").get<int>()};
  std::vector<Monomial> ms;
  for (const auto& t : j.at("terms")) {
    Monomial m;
    m.coef = mpz_class(t.at("c").get<std::string>());
    m.x = t.at("x").get<std::vector<int>>();
    m.a = t.at("a").get<std::vector<int>>();
    ms.push_back(std::move(m));
  }
  return LaurentPoly::from_monomials(sp, ms);
}

}  // namespace sixvertex
