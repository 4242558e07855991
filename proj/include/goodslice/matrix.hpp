#ifndef GOODSLICE_MATRIX_HPP
#define GOODSLICE_MATRIX_HPP

#include <array>
#include <cmath>
#include <complex>
#include <ostream>
#include <sstream>

#include "goodslice/errors.hpp"
#include "goodslice/rational.hpp"

namespace goodslice {

// Floating-point rings get the same helper trio as the exact ones so the
// matrix templates work for the numeric oracles too. "Zero" for doubles is
// exact zero; numeric code does its own tolerance handling.
inline double zero_like(double) { return 0.0; }
inline double one_like(double) { return 1.0; }
inline double div_int(double x, long k) { return x / static_cast<double>(k); }
inline double mul_int(double x, long k) { return x * static_cast<double>(k); }
inline bool gs_is_zero(double x) { return x == 0.0; }

inline std::complex<double> zero_like(const std::complex<double>&) { return {0.0, 0.0}; }
inline std::complex<double> one_like(const std::complex<double>&) { return {1.0, 0.0}; }
inline std::complex<double> div_int(const std::complex<double>& x, long k) {
  return x / static_cast<double>(k);
}
inline std::complex<double> mul_int(const std::complex<double>& x, long k) {
  return x * static_cast<double>(k);
}
inline bool gs_is_zero(const std::complex<double>& x) { return x == std::complex<double>(0.0, 0.0); }

// Fixed-size 2x2 and 4x4 matrices over an exact coefficient ring. Only the
// two sizes the formulas need exist; everything is a value type.

template <class R>
struct Mat2 {
  std::array<R, 4> e;

  static Mat2 from_rows(R a, R b, R c, R d) { return Mat2{{a, b, c, d}}; }

  const R& at(int i, int j) const { return e[static_cast<size_t>(2 * i + j)]; }
  R& at(int i, int j) { return e[static_cast<size_t>(2 * i + j)]; }

  R trace() const { return at(0, 0) + at(1, 1); }
  R det() const { return at(0, 0) * at(1, 1) - at(0, 1) * at(1, 0); }
  bool is_trace_zero() const { return gs_is_zero(trace()); }
  bool is_zero() const {
    for (const R& x : e)
      if (!gs_is_zero(x)) return false;
    return true;
  }

  Mat2 operator-() const { return scaled_int(-1); }
  friend Mat2 operator+(const Mat2& x, const Mat2& y) {
    Mat2 r = x;
    for (size_t i = 0; i < 4; ++i) r.e[i] = r.e[i] + y.e[i];
    return r;
  }
  friend Mat2 operator-(const Mat2& x, const Mat2& y) {
    Mat2 r = x;
    for (size_t i = 0; i < 4; ++i) r.e[i] = r.e[i] - y.e[i];
    return r;
  }
  friend Mat2 operator*(const Mat2& x, const Mat2& y) {
    Mat2 r = x;
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j)
        r.at(i, j) = x.at(i, 0) * y.at(0, j) + x.at(i, 1) * y.at(1, j);
    return r;
  }

  Mat2 scaled(const R& c) const {
    Mat2 r = *this;
    for (R& x : r.e) x = x * c;
    return r;
  }
  Mat2 scaled_int(long k) const {
    Mat2 r = *this;
    for (R& x : r.e) x = mul_int(x, k);
    return r;
  }

  Mat2 transpose() const { return from_rows(at(0, 0), at(1, 0), at(0, 1), at(1, 1)); }

  Mat2 inverse() const {
    R d = det();
    if (gs_is_zero(d)) throw MathError(MathError::Kind::SingularMatrix, "singular 2x2 matrix");
    return from_rows(at(1, 1) / d, mul_int(at(0, 1), -1) / d, mul_int(at(1, 0), -1) / d,
                     at(0, 0) / d);
  }
};

template <class R>
struct Vec4 {
  std::array<R, 4> v;
  const R& operator[](int i) const { return v[static_cast<size_t>(i)]; }
  R& operator[](int i) { return v[static_cast<size_t>(i)]; }
};

template <class R>
struct Mat4 {
  std::array<R, 16> e;

  const R& at(int i, int j) const { return e[static_cast<size_t>(4 * i + j)]; }
  R& at(int i, int j) { return e[static_cast<size_t>(4 * i + j)]; }

  static Mat4 filled(const R& x) {
    Mat4 m;
    m.e.fill(x);
    return m;
  }
  static Mat4 diag(const R& a, const R& b, const R& c, const R& d) {
    Mat4 m = filled(zero_like(a));
    m.at(0, 0) = a;
    m.at(1, 1) = b;
    m.at(2, 2) = c;
    m.at(3, 3) = d;
    return m;
  }
  static Mat4 identity_like(const R& proto) {
    R one = one_like(proto);
    return diag(one, one, one, one);
  }

  R trace() const { return at(0, 0) + at(1, 1) + at(2, 2) + at(3, 3); }

  bool is_symmetric() const {
    for (int i = 0; i < 4; ++i)
      for (int j = i + 1; j < 4; ++j)
        if (!gs_is_zero(at(i, j) - at(j, i))) return false;
    return true;
  }
  bool is_trace_zero() const { return gs_is_zero(trace()); }
  bool is_zero() const {
    for (const R& x : e)
      if (!gs_is_zero(x)) return false;
    return true;
  }

  Mat4 operator-() const { return scaled_int(-1); }
  friend Mat4 operator+(const Mat4& x, const Mat4& y) {
    Mat4 r = x;
    for (size_t i = 0; i < 16; ++i) r.e[i] = r.e[i] + y.e[i];
    return r;
  }
  friend Mat4 operator-(const Mat4& x, const Mat4& y) {
    Mat4 r = x;
    for (size_t i = 0; i < 16; ++i) r.e[i] = r.e[i] - y.e[i];
    return r;
  }
  friend Mat4 operator*(const Mat4& x, const Mat4& y) {
    Mat4 r = x;
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) {
        R acc = x.at(i, 0) * y.at(0, j);
        for (int k = 1; k < 4; ++k) acc = acc + x.at(i, k) * y.at(k, j);
        r.at(i, j) = acc;
      }
    return r;
  }

  Mat4 scaled(const R& c) const {
    Mat4 r = *this;
    for (R& x : r.e) x = x * c;
    return r;
  }
  Mat4 scaled_int(long k) const {
    Mat4 r = *this;
    for (R& x : r.e) x = mul_int(x, k);
    return r;
  }
  Mat4 transpose() const {
    Mat4 r = *this;
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) r.at(i, j) = at(j, i);
    return r;
  }

  friend Vec4<R> operator*(const Mat4& m, const Vec4<R>& v) {
    Vec4<R> r{{m.at(0, 0), m.at(0, 0), m.at(0, 0), m.at(0, 0)}};
    for (int i = 0; i < 4; ++i) {
      R acc = m.at(i, 0) * v[0];
      for (int k = 1; k < 4; ++k) acc = acc + m.at(i, k) * v[k];
      r[i] = acc;
    }
    return r;
  }

  R det() const {
    // cofactor expansion along the first row; ring-generic (no division)
    R d = at(0, 0) * minor3(1, 2, 3, 1, 2, 3);
    d = d - at(0, 1) * minor3(1, 2, 3, 0, 2, 3);
    d = d + at(0, 2) * minor3(1, 2, 3, 0, 1, 3);
    d = d - at(0, 3) * minor3(1, 2, 3, 0, 1, 2);
    return d;
  }

  Mat4 adjugate() const {
    static const int idx[4][3] = {{1, 2, 3}, {0, 2, 3}, {0, 1, 3}, {0, 1, 2}};
    Mat4 r = *this;
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) {
        R m = minor3(idx[j][0], idx[j][1], idx[j][2], idx[i][0], idx[i][1], idx[i][2]);
        r.at(i, j) = ((i + j) % 2 == 0) ? m : mul_int(m, -1);
      }
    return r;
  }

  // Requires a coefficient field (Rational, RatFunc); rejects det == 0.
  Mat4 inverse() const {
    R d = det();
    if (gs_is_zero(d))
      throw MathError(MathError::Kind::SingularMatrix, "inverse of a singular matrix");
    Mat4 a = adjugate();
    for (R& x : a.e) x = x / d;
    return a;
  }

  std::string str() const {
    std::ostringstream os;
    for (int i = 0; i < 4; ++i) {
      os << (i == 0 ? "[" : " ") << "[";
      for (int j = 0; j < 4; ++j) os << at(i, j) << (j == 3 ? "]" : ", ");
      os << (i == 3 ? "]" : "\n");
    }
    return os.str();
  }

 private:
  R minor3(int r0, int r1, int r2, int c0, int c1, int c2) const {
    return at(r0, c0) * (at(r1, c1) * at(r2, c2) - at(r1, c2) * at(r2, c1)) -
           at(r0, c1) * (at(r1, c0) * at(r2, c2) - at(r1, c2) * at(r2, c0)) +
           at(r0, c2) * (at(r1, c0) * at(r2, c1) - at(r1, c1) * at(r2, c0));
  }
};

// t^t v X v for a 4x4 matrix and a 4-vector over the same ring.
template <class R>
R quad_form(const Mat4<R>& m, const Vec4<R>& v) {
  R acc = m.at(0, 0) * v[0] * v[0];
  bool first = true;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      if (first) {
        first = false;
        continue;  // (0,0) already seeded
      }
      acc = acc + m.at(i, j) * v[i] * v[j];
    }
  return acc;
}

// Characteristic polynomial t^4 - c1 t^3 + c2 t^2 - c3 t + c4 by Newton's
// identities on the power traces; c1 = tr, c4 = det.
template <class R>
std::array<R, 4> char_poly4(const Mat4<R>& m) {
  Mat4<R> m2 = m * m;
  Mat4<R> m3 = m2 * m;
  Mat4<R> m4 = m3 * m;
  R p1 = m.trace(), p2 = m2.trace(), p3 = m3.trace(), p4 = m4.trace();
  R c1 = p1;
  R c2 = div_int(c1 * p1 - p2, 2);
  R c3 = div_int(c2 * p1 - c1 * p2 + p3, 3);
  R c4 = div_int(c3 * p1 - c2 * p2 + c1 * p3 - p4, 4);
  return {c1, c2, c3, c4};
}

// Rank over a coefficient field by Gaussian elimination.
template <class R>
int rank4(Mat4<R> m) {
  int rank = 0;
  for (int col = 0; col < 4 && rank < 4; ++col) {
    int piv = -1;
    for (int i = rank; i < 4; ++i)
      if (!gs_is_zero(m.at(i, col))) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    for (int j = 0; j < 4; ++j) std::swap(m.at(rank, j), m.at(piv, j));
    for (int i = rank + 1; i < 4; ++i) {
      if (gs_is_zero(m.at(i, col))) continue;
      R f = m.at(i, col) / m.at(rank, col);
      for (int j = col; j < 4; ++j) m.at(i, j) = m.at(i, j) - f * m.at(rank, j);
    }
    ++rank;
  }
  return rank;
}

}  // namespace goodslice

#endif
