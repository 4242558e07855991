#ifndef GOODSLICE_RATIONAL_HPP
#define GOODSLICE_RATIONAL_HPP

#include <gmpxx.h>

#include <optional>
#include <ostream>
#include <string>

#include "goodslice/errors.hpp"

namespace goodslice {

// Arbitrary-precision rational, always in lowest terms with positive
// denominator (mpq_canonicalize maintains both). Arithmetic is exact.
class Rational {
 public:
  Rational() : v_(0) {}
  Rational(long n) : v_(n) {}  // NOLINT: implicit on purpose, mirrors int literals
  Rational(long n, long d) {
    if (d == 0) throw MathError(MathError::Kind::BadInput, "rational with zero denominator");
    v_ = mpq_class(n, d);
    v_.canonicalize();
  }
  explicit Rational(const mpq_class& q) : v_(q) { v_.canonicalize(); }
  explicit Rational(const mpz_class& z) : v_(z) {}

  // Accepts "num", "num/den", optional leading '-'/'+' on the numerator.
  static Rational parse(const std::string& s) {
    auto bad = [&] { return MathError(MathError::Kind::BadInput, "bad rational: '" + s + "'"); };
    std::string text = s;
    // trim
    const char* ws = " \t\r\n";
    auto b = text.find_first_not_of(ws);
    auto e = text.find_last_not_of(ws);
    if (b == std::string::npos) throw bad();
    text = text.substr(b, e - b + 1);
    std::string num = text, den = "1";
    if (auto slash = text.find('/'); slash != std::string::npos) {
      num = text.substr(0, slash);
      den = text.substr(slash + 1);
      if (num.empty() || den.empty()) throw bad();
    }
    mpz_class n, d;
    if (n.set_str(num, 10) != 0) throw bad();
    if (d.set_str(den, 10) != 0) throw bad();
    if (d == 0) throw bad();
    mpq_class q(n, d);
    q.canonicalize();
    return Rational(q);
  }

  std::string str() const {
    if (v_.get_den() == 1) return v_.get_num().get_str();
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
  }

  mpz_class num() const { return v_.get_num(); }
  mpz_class den() const { return v_.get_den(); }
  double to_double() const { return v_.get_d(); }
  bool is_zero() const { return v_ == 0; }
  bool is_one() const { return v_ == 1; }
  int sign() const { return sgn(v_); }

  Rational operator-() const { return Rational(mpq_class(-v_)); }
  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o) {
    if (o.is_zero()) throw MathError(MathError::Kind::BadInput, "division by zero");
    v_ /= o.v_;
    return *this;
  }

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
  friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
  friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
  friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }
  friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

  // Exact square root when the value is a perfect square in Q.
  static std::optional<Rational> sqrt_exact(const Rational& r) {
    if (r.sign() < 0) return std::nullopt;
    mpz_class n = r.num(), d = r.den();
    if (!mpz_perfect_square_p(n.get_mpz_t()) || !mpz_perfect_square_p(d.get_mpz_t()))
      return std::nullopt;
    mpz_class sn, sd;
    mpz_sqrt(sn.get_mpz_t(), n.get_mpz_t());
    mpz_sqrt(sd.get_mpz_t(), d.get_mpz_t());
    return Rational(mpq_class(sn, sd));
  }

  Rational pow_int(long k) const {
    if (k < 0) return (Rational(1) / *this).pow_int(-k);
    Rational acc(1), base = *this;
    while (k > 0) {
      if (k & 1) acc *= base;
      base *= base;
      k >>= 1;
    }
    return acc;
  }

 private:
  mpq_class v_;
};

inline Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }

// Ring helpers shared by the generic (matrix / polynomial) code. Every
// coefficient ring used in the library overloads this trio.
inline Rational zero_like(const Rational&) { return Rational(0); }
inline Rational one_like(const Rational&) { return Rational(1); }
inline Rational div_int(const Rational& x, long k) { return x / Rational(k); }
inline Rational mul_int(const Rational& x, long k) { return x * Rational(k); }
inline bool gs_is_zero(const Rational& x) { return x.is_zero(); }

}  // namespace goodslice

#endif
