#ifndef GOODSLICE_RATFUNC_HPP
#define GOODSLICE_RATFUNC_HPP

#include <ostream>
#include <sstream>
#include <string>

#include "goodslice/errors.hpp"
#include "goodslice/mpoly.hpp"
#include "goodslice/rational.hpp"

namespace goodslice {

// Formal quotient of two multivariate polynomials over Q. Never reduced by
// multivariate gcd; equality goes through cross-multiplication, which keeps
// the type correct without factorization machinery. The denominators met in
// practice (powers of 4pq-1 and 2p^2q) stay tiny.
class RatFunc {
 public:
  using Poly = MPoly<Rational>;

  RatFunc() = default;
  explicit RatFunc(Poly num)
      : num_(std::move(num)), den_(Poly::constant(num_.vars(), Rational(1))) {}
  RatFunc(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero())
      throw MathError(MathError::Kind::BadInput, "rational function with zero denominator");
    if (num_.vars() != den_.vars())
      throw MathError(MathError::Kind::BadInput, "num/den over different variable lists");
  }

  static RatFunc zero(const VarList& vars) { return RatFunc(Poly(vars)); }
  static RatFunc one(const VarList& vars) {
    return RatFunc(Poly::constant(vars, Rational(1)));
  }
  static RatFunc constant(const VarList& vars, const Rational& r) {
    return RatFunc(Poly::constant(vars, r));
  }
  static RatFunc variable(const VarList& vars, const std::string& name) {
    return RatFunc(Poly::variable(vars, name, Rational(1)));
  }

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }
  const VarList& vars() const { return num_.vars(); }
  bool is_zero() const { return num_.is_zero(); }

  RatFunc reciprocal() const {
    if (is_zero()) throw MathError(MathError::Kind::BadInput, "reciprocal of zero");
    return RatFunc(den_, num_);
  }

  RatFunc operator-() const { return RatFunc(-num_, den_); }

  friend RatFunc operator+(const RatFunc& x, const RatFunc& y) {
    return RatFunc(x.num_ * y.den_ + y.num_ * x.den_, x.den_ * y.den_);
  }
  friend RatFunc operator-(const RatFunc& x, const RatFunc& y) {
    return RatFunc(x.num_ * y.den_ - y.num_ * x.den_, x.den_ * y.den_);
  }
  friend RatFunc operator*(const RatFunc& x, const RatFunc& y) {
    return RatFunc(x.num_ * y.num_, x.den_ * y.den_);
  }
  friend RatFunc operator/(const RatFunc& x, const RatFunc& y) {
    return x * y.reciprocal();
  }
  // a/b == c/d iff ad - bc == 0
  friend bool operator==(const RatFunc& x, const RatFunc& y) {
    return (x.num_ * y.den_ - y.num_ * x.den_).is_zero();
  }
  friend bool operator!=(const RatFunc& x, const RatFunc& y) { return !(x == y); }

  std::string str() const {
    std::ostringstream os;
    os << "(" << num_.str() << ")";
    if (!(den_.is_constant() && den_.constant_term(Rational(0)) == Rational(1)))
      os << "/(" << den_.str() << ")";
    return os.str();
  }
  friend std::ostream& operator<<(std::ostream& os, const RatFunc& f) { return os << f.str(); }

 private:
  Poly num_, den_;
};

inline RatFunc zero_like(const RatFunc& f) { return RatFunc::zero(f.vars()); }
inline RatFunc one_like(const RatFunc& f) { return RatFunc::one(f.vars()); }
inline RatFunc div_int(const RatFunc& f, long k) {
  return RatFunc(f.num().div_by_int(k), f.den());
}
inline RatFunc mul_int(const RatFunc& f, long k) {
  return RatFunc(f.num().scaled_int(k), f.den());
}
inline bool gs_is_zero(const RatFunc& f) { return f.is_zero(); }

}  // namespace goodslice

#endif
