#ifndef GOODSLICE_MPOLY_HPP
#define GOODSLICE_MPOLY_HPP

#include <algorithm>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "goodslice/errors.hpp"
#include "goodslice/rational.hpp"

namespace goodslice {

using VarList = std::vector<std::string>;

// Fixed global variable order; unknown names rank after the known ones,
// alphabetically. Canonical equality of polynomials rests on every caller
// ordering variables the same way.
inline int var_rank(const std::string& v) {
  static const char* known[] = {"p", "q", "s", "t", "a", "b", "d", "e"};
  for (int i = 0; i < 8; ++i)
    if (v == known[i]) return i;
  return 100;
}

inline bool var_less(const std::string& u, const std::string& v) {
  int ru = var_rank(u), rv = var_rank(v);
  if (ru != rv) return ru < rv;
  return u < v;
}

inline VarList make_vars(std::vector<std::string> names) {
  std::sort(names.begin(), names.end(), var_less);
  names.erase(std::unique(names.begin(), names.end()), names.end());
  return names;
}

// Multivariate polynomial over a coefficient ring C: an ordered variable
// list plus a map from exponent vectors to nonzero coefficients. The map
// never stores zeros, so equal polynomials have equal representations.
template <class C>
class MPoly {
 public:
  using Expo = std::vector<int>;
  using TermMap = std::map<Expo, C>;

  MPoly() = default;
  explicit MPoly(VarList vars) : vars_(std::move(vars)) {}

  static MPoly constant(VarList vars, const C& c) {
    MPoly f(std::move(vars));
    if (!gs_is_zero(c)) f.terms_.emplace(Expo(f.vars_.size(), 0), c);
    return f;
  }

  static MPoly variable(const VarList& vars, const std::string& name, const C& one) {
    MPoly f(vars);
    Expo e(vars.size(), 0);
    auto it = std::find(vars.begin(), vars.end(), name);
    if (it == vars.end())
      throw MathError(MathError::Kind::BadInput, "variable '" + name + "' not in list");
    e[static_cast<size_t>(it - vars.begin())] = 1;
    f.terms_.emplace(std::move(e), one);
    return f;
  }

  const VarList& vars() const { return vars_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  bool is_constant() const {
    if (terms_.empty()) return true;
    if (terms_.size() != 1) return false;
    const Expo& e = terms_.begin()->first;
    return std::all_of(e.begin(), e.end(), [](int k) { return k == 0; });
  }

  // Constant term (zero of C must be supplied when the poly could be zero
  // over a prototype-needing coefficient ring).
  C constant_term(const C& zero) const {
    Expo e(vars_.size(), 0);
    auto it = terms_.find(e);
    return it == terms_.end() ? zero : it->second;
  }

  int total_degree() const {
    int d = 0;
    for (const auto& [e, c] : terms_) {
      int s = 0;
      for (int k : e) s += k;
      d = std::max(d, s);
    }
    return d;
  }

  int degree_in(const std::string& var) const {
    size_t i = index_of(var);
    int d = 0;
    for (const auto& [e, c] : terms_) d = std::max(d, e[i]);
    return d;
  }

  void add_term(const Expo& e, const C& c) {
    if (gs_is_zero(c)) return;
    auto [it, inserted] = terms_.emplace(e, c);
    if (!inserted) {
      it->second = it->second + c;
      if (gs_is_zero(it->second)) terms_.erase(it);
    }
  }

  MPoly operator-() const {
    MPoly r(vars_);
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, mul_int(c, -1));
    return r;
  }

  friend MPoly operator+(const MPoly& f, const MPoly& g) {
    f.require_same_vars(g);
    MPoly r = f;
    for (const auto& [e, c] : g.terms_) r.add_term(e, c);
    return r;
  }

  friend MPoly operator-(const MPoly& f, const MPoly& g) {
    f.require_same_vars(g);
    MPoly r = f;
    for (const auto& [e, c] : g.terms_) r.add_term(e, mul_int(c, -1));
    return r;
  }

  friend MPoly operator*(const MPoly& f, const MPoly& g) {
    f.require_same_vars(g);
    MPoly r(f.vars_);
    for (const auto& [ef, cf] : f.terms_)
      for (const auto& [eg, cg] : g.terms_) {
        Expo e = ef;
        for (size_t i = 0; i < e.size(); ++i) e[i] += eg[i];
        r.add_term(e, cf * cg);
      }
    return r;
  }

  friend bool operator==(const MPoly& f, const MPoly& g) {
    if (f.vars_ != g.vars_) return false;
    if (f.terms_.size() != g.terms_.size()) return false;
    auto it = f.terms_.begin(), jt = g.terms_.begin();
    for (; it != f.terms_.end(); ++it, ++jt) {
      if (it->first != jt->first) return false;
      if (!gs_is_zero(it->second - jt->second)) return false;
    }
    return true;
  }
  friend bool operator!=(const MPoly& f, const MPoly& g) { return !(f == g); }

  MPoly scaled(const C& c) const {
    MPoly r(vars_);
    for (const auto& [e, cf] : terms_) r.add_term(e, cf * c);
    return r;
  }

  MPoly scaled_int(long k) const {
    MPoly r(vars_);
    if (k == 0) return r;
    for (const auto& [e, cf] : terms_) r.terms_.emplace(e, mul_int(cf, k));
    return r;
  }

  friend MPoly operator*(long k, const MPoly& f) { return f.scaled_int(k); }

  MPoly div_by_int(long k) const {
    MPoly r(vars_);
    for (const auto& [e, cf] : terms_) r.terms_.emplace(e, div_int(cf, k));
    return r;
  }

  // Full evaluation; every variable occurring with a positive exponent must
  // be assigned.
  C eval(const std::map<std::string, C>& assignment, const C& zero) const {
    std::vector<std::optional<C>> vals(vars_.size());
    for (size_t i = 0; i < vars_.size(); ++i) {
      auto it = assignment.find(vars_[i]);
      if (it != assignment.end()) vals[i] = it->second;
    }
    C acc = zero;
    for (const auto& [e, c] : terms_) {
      C term = c;
      for (size_t i = 0; i < e.size(); ++i) {
        if (e[i] == 0) continue;
        if (!vals[i])
          throw MathError(MathError::Kind::BadInput, "missing assignment for '" + vars_[i] + "'");
        for (int k = 0; k < e[i]; ++k) term = term * *vals[i];
      }
      acc = acc + term;
    }
    return acc;
  }

  MPoly derivative(const std::string& var) const {
    size_t i = index_of(var);
    MPoly r(vars_);
    for (const auto& [e, c] : terms_) {
      if (e[i] == 0) continue;
      Expo d = e;
      d[i] -= 1;
      r.add_term(d, mul_int(c, e[i]));
    }
    return r;
  }

  // Substitute one variable by a polynomial over the same variable list.
  MPoly subst(const std::string& var, const MPoly& value) const {
    require_same_vars(value);
    size_t i = index_of(var);
    MPoly r(vars_);
    for (const auto& [e, c] : terms_) {
      Expo base = e;
      int k = base[i];
      base[i] = 0;
      MPoly term(vars_);
      term.add_term(base, c);
      for (int j = 0; j < k; ++j) term = term * value;
      r = r + term;
    }
    return r;
  }

  // Embed into a superset variable list (target must contain all variables).
  MPoly extended_to(const VarList& target) const {
    std::vector<size_t> where(vars_.size());
    for (size_t i = 0; i < vars_.size(); ++i) {
      auto it = std::find(target.begin(), target.end(), vars_[i]);
      if (it == target.end())
        throw MathError(MathError::Kind::BadInput, "extend: missing variable " + vars_[i]);
      where[i] = static_cast<size_t>(it - target.begin());
    }
    MPoly r(target);
    for (const auto& [e, c] : terms_) {
      Expo ne(target.size(), 0);
      for (size_t i = 0; i < e.size(); ++i) ne[where[i]] = e[i];
      r.terms_.emplace(std::move(ne), c);
    }
    return r;
  }

  // Exact division by g using lex reduction; nullopt when g does not divide.
  std::optional<MPoly> divided_exactly_by(const MPoly& g) const {
    require_same_vars(g);
    if (g.is_zero()) throw MathError(MathError::Kind::BadInput, "division by zero polynomial");
    MPoly rem = *this;
    MPoly quo(vars_);
    auto glead = g.terms_.rbegin();
    while (!rem.is_zero()) {
      auto rlead = rem.terms_.rbegin();
      Expo qe(vars_.size());
      for (size_t i = 0; i < qe.size(); ++i) {
        qe[i] = rlead->first[i] - glead->first[i];
        if (qe[i] < 0) return std::nullopt;
      }
      C qc = coeff_div(rlead->second, glead->second);
      MPoly mono(vars_);
      mono.add_term(qe, qc);
      quo = quo + mono;
      rem = rem - mono * g;
    }
    return quo;
  }

  std::string str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
      if (!first) os << " + ";
      first = false;
      os << "(" << coeff_str(it->second) << ")";
      for (size_t i = 0; i < vars_.size(); ++i) {
        if (it->first[i] == 0) continue;
        os << "*" << vars_[i];
        if (it->first[i] > 1) os << "^" << it->first[i];
      }
    }
    return os.str();
  }

  friend std::ostream& operator<<(std::ostream& os, const MPoly& f) { return os << f.str(); }

 private:
  size_t index_of(const std::string& var) const {
    auto it = std::find(vars_.begin(), vars_.end(), var);
    if (it == vars_.end())
      throw MathError(MathError::Kind::BadInput, "unknown variable '" + var + "'");
    return static_cast<size_t>(it - vars_.begin());
  }

  void require_same_vars(const MPoly& g) const {
    if (vars_ != g.vars_)
      throw MathError(MathError::Kind::BadInput, "operands over different variable lists");
  }

  static C coeff_div(const C& a, const C& b) { return a / b; }
  static std::string coeff_str(const C& c) {
    std::ostringstream os;
    os << c;
    return os.str();
  }

  VarList vars_;
  TermMap terms_;
};

template <class C>
MPoly<C> zero_like(const MPoly<C>& f) {
  return MPoly<C>(f.vars());
}
inline MPoly<Rational> one_like(const MPoly<Rational>& f) {
  return MPoly<Rational>::constant(f.vars(), Rational(1));
}
template <class C>
MPoly<C> div_int(const MPoly<C>& f, long k) {
  return f.div_by_int(k);
}
template <class C>
MPoly<C> mul_int(const MPoly<C>& f, long k) {
  return f.scaled_int(k);
}
template <class C>
bool gs_is_zero(const MPoly<C>& f) {
  return f.is_zero();
}

// ---------------------------------------------------------------------------
// Dense univariate polynomials: just enough for Sylvester resultants and the
// discriminant oracle. Coefficients ascending; the top coefficient nonzero.
// ---------------------------------------------------------------------------

template <class C>
struct UPoly {
  std::vector<C> c;  // c[0] + c[1] t + ...

  static UPoly from(std::vector<C> coeffs) {
    while (!coeffs.empty() && gs_is_zero(coeffs.back())) coeffs.pop_back();
    return UPoly{std::move(coeffs)};
  }
  bool is_zero() const { return c.empty(); }
  int degree() const { return static_cast<int>(c.size()) - 1; }

  UPoly derivative() const {
    std::vector<C> d;
    for (size_t i = 1; i < c.size(); ++i) d.push_back(mul_int(c[i], static_cast<long>(i)));
    return from(std::move(d));
  }

  C eval(const C& x) const {
    if (c.empty()) throw MathError(MathError::Kind::BadInput, "eval of zero polynomial");
    C acc = c.back();
    for (size_t i = c.size() - 1; i-- > 0;) acc = acc * x + c[i];
    return acc;
  }
};

// Determinant by fraction-free (Bareiss) elimination; all divisions exact.
template <class C>
C bareiss_det(std::vector<std::vector<C>> m, const C& zero, const C& one) {
  const size_t n = m.size();
  if (n == 0) return one;
  C denom = one;
  int sign = 1;
  for (size_t k = 0; k + 1 < n; ++k) {
    if (gs_is_zero(m[k][k])) {
      size_t piv = k + 1;
      while (piv < n && gs_is_zero(m[piv][k])) ++piv;
      if (piv == n) return zero;
      std::swap(m[k], m[piv]);
      sign = -sign;
    }
    for (size_t i = k + 1; i < n; ++i)
      for (size_t j = k + 1; j < n; ++j)
        m[i][j] = (m[k][k] * m[i][j] - m[i][k] * m[k][j]) / denom;
    denom = m[k][k];
  }
  C det = m[n - 1][n - 1];
  return sign < 0 ? mul_int(det, -1) : det;
}

// Resultant via the dense Sylvester matrix. Degrees must both be >= 1.
template <class C>
C resultant(const UPoly<C>& p, const UPoly<C>& q, const C& zero, const C& one) {
  if (p.is_zero() || q.is_zero())
    throw MathError(MathError::Kind::BadInput, "resultant of the zero polynomial");
  const int m = p.degree(), n = q.degree();
  if (m < 1 || n < 1)
    throw MathError(MathError::Kind::BadInput, "resultant needs degrees >= 1");
  const size_t dim = static_cast<size_t>(m + n);
  std::vector<std::vector<C>> s(dim, std::vector<C>(dim, zero));
  for (int r = 0; r < n; ++r)
    for (int j = 0; j <= m; ++j) s[static_cast<size_t>(r)][static_cast<size_t>(r + j)] = p.c[static_cast<size_t>(m - j)];
  for (int r = 0; r < m; ++r)
    for (int j = 0; j <= n; ++j) s[static_cast<size_t>(n + r)][static_cast<size_t>(r + j)] = q.c[static_cast<size_t>(n - j)];
  return bareiss_det(std::move(s), zero, one);
}

inline Rational resultant(const UPoly<Rational>& p, const UPoly<Rational>& q) {
  return resultant(p, q, Rational(0), Rational(1));
}

// Discriminant of the monic quartic t^4 - a t^3 + b t^2 - c t + d computed
// as resultant(P, P'); equals the product of squared root differences.
inline Rational quartic_discriminant_oracle(const Rational& a, const Rational& b,
                                            const Rational& c, const Rational& d) {
  UPoly<Rational> p = UPoly<Rational>::from({d, -c, b, -a, Rational(1)});
  return resultant(p, p.derivative());
}

}  // namespace goodslice

#endif
