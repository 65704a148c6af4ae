#pragma once

// Fixed-size vectors and matrices over any scalar flavor.  Mat3 and Mat2 are
// row-major.  Exact flavors never round; all identities stated in the docs
// hold bit-for-bit with Rational/Integer entries.

#include "latdyn/scalar.hpp"

#include <array>
#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <stdexcept>

namespace latdyn {

template <class T>
struct Vec3 {
  std::array<T, 3> c{T(0), T(0), T(0)};

  Vec3() = default;
  Vec3(T x, T y, T z) : c{std::move(x), std::move(y), std::move(z)} {}

  T& operator[](std::size_t i) { return c[i]; }
  const T& operator[](std::size_t i) const { return c[i]; }

  friend bool operator==(const Vec3& a, const Vec3& b) {
    return a.c[0] == b.c[0] && a.c[1] == b.c[1] && a.c[2] == b.c[2];
  }

  static Vec3 unit(std::size_t i) {
    Vec3 v;
    v.c[i] = T(1);
    return v;
  }
};

template <class T>
Vec3<T> operator+(const Vec3<T>& a, const Vec3<T>& b) {
  return {T(a[0] + b[0]), T(a[1] + b[1]), T(a[2] + b[2])};
}
template <class T>
Vec3<T> operator-(const Vec3<T>& a, const Vec3<T>& b) {
  return {T(a[0] - b[0]), T(a[1] - b[1]), T(a[2] - b[2])};
}
template <class T>
Vec3<T> operator-(const Vec3<T>& a) {
  return {T(-a[0]), T(-a[1]), T(-a[2])};
}
template <class T>
Vec3<T> operator*(const T& s, const Vec3<T>& a) {
  return {T(s * a[0]), T(s * a[1]), T(s * a[2])};
}

template <class T>
T dot(const Vec3<T>& a, const Vec3<T>& b) {
  T r = a[0] * b[0];
  r += a[1] * b[1];
  r += a[2] * b[2];
  return r;
}

template <class T>
T norm2(const Vec3<T>& a) {
  return dot(a, a);
}

// Coordinates of u∧w in ∧²R³ with respect to e2∧e3, e3∧e1, e1∧e2, i.e. the
// cross product.  Its Euclidean norm is the covolume of span_Z{u, w}.
template <class T>
Vec3<T> wedge2(const Vec3<T>& u, const Vec3<T>& w) {
  return {T(u[1] * w[2] - u[2] * w[1]), T(u[2] * w[0] - u[0] * w[2]),
          T(u[0] * w[1] - u[1] * w[0])};
}

template <class T>
bool is_zero(const Vec3<T>& a) {
  return is_zero(a[0]) && is_zero(a[1]) && is_zero(a[2]);
}

template <class U, class T>
Vec3<U> cast(const Vec3<T>& a) {
  return {convert<U>(a[0]), convert<U>(a[1]), convert<U>(a[2])};
}

template <class T>
std::ostream& operator<<(std::ostream& os, const Vec3<T>& a) {
  return os << '(' << a[0] << ", " << a[1] << ", " << a[2] << ')';
}

// ---------------------------------------------------------------------------

template <class T>
struct Mat3 {
  std::array<T, 9> a{T(0), T(0), T(0), T(0), T(0), T(0), T(0), T(0), T(0)};

  Mat3() = default;
  Mat3(std::initializer_list<T> rows) {
    if (rows.size() != 9) throw std::invalid_argument("Mat3 needs 9 entries");
    std::size_t i = 0;
    for (const T& x : rows) a[i++] = x;
  }

  T& operator()(std::size_t i, std::size_t j) { return a[3 * i + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return a[3 * i + j]; }

  static Mat3 identity() {
    Mat3 m;
    m(0, 0) = T(1);
    m(1, 1) = T(1);
    m(2, 2) = T(1);
    return m;
  }

  static Mat3 diagonal(const T& x, const T& y, const T& z) {
    Mat3 m;
    m(0, 0) = x;
    m(1, 1) = y;
    m(2, 2) = z;
    return m;
  }

  static Mat3 from_columns(const Vec3<T>& c0, const Vec3<T>& c1, const Vec3<T>& c2) {
    Mat3 m;
    for (std::size_t i = 0; i < 3; ++i) {
      m(i, 0) = c0[i];
      m(i, 1) = c1[i];
      m(i, 2) = c2[i];
    }
    return m;
  }

  Vec3<T> column(std::size_t j) const { return {a[j], a[3 + j], a[6 + j]}; }

  friend bool operator==(const Mat3& x, const Mat3& y) { return x.a == y.a; }
};

template <class T>
Mat3<T> operator*(const Mat3<T>& x, const Mat3<T>& y) {
  Mat3<T> r;
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) {
      T s = x(i, 0) * y(0, j);
      s += x(i, 1) * y(1, j);
      s += x(i, 2) * y(2, j);
      r(i, j) = std::move(s);
    }
  return r;
}

template <class T>
Vec3<T> operator*(const Mat3<T>& m, const Vec3<T>& v) {
  Vec3<T> r;
  for (std::size_t i = 0; i < 3; ++i) {
    T s = m(i, 0) * v[0];
    s += m(i, 1) * v[1];
    s += m(i, 2) * v[2];
    r[i] = std::move(s);
  }
  return r;
}

template <class T>
Mat3<T> transpose(const Mat3<T>& m) {
  Mat3<T> r;
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) r(i, j) = m(j, i);
  return r;
}

template <class T>
T det(const Mat3<T>& m) {
  T r = m(0, 0) * (m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1));
  r -= m(0, 1) * (m(1, 0) * m(2, 2) - m(1, 2) * m(2, 0));
  r += m(0, 2) * (m(1, 0) * m(2, 1) - m(1, 1) * m(2, 0));
  return r;
}

// Cofactor matrix: cof(m) = det(m) · m^{-T}.  For det-1 matrices this is the
// action on ∧²R³ in the wedge2 coordinates.
template <class T>
Mat3<T> cofactor(const Mat3<T>& m) {
  Mat3<T> c;
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) {
      const std::size_t i1 = (i + 1) % 3, i2 = (i + 2) % 3;
      const std::size_t j1 = (j + 1) % 3, j2 = (j + 2) % 3;
      c(i, j) = T(m(i1, j1) * m(i2, j2) - m(i1, j2) * m(i2, j1));
    }
  return c;
}

template <class T>
Mat3<T> inverse(const Mat3<T>& m) {
  const T d = det(m);
  if (is_zero(d)) throw std::domain_error("singular 3x3 matrix");
  Mat3<T> adj = transpose(cofactor(m));
  for (auto& x : adj.a) x /= d;
  return adj;
}

template <class U, class T>
Mat3<U> cast(const Mat3<T>& m) {
  Mat3<U> r;
  for (std::size_t i = 0; i < 9; ++i) r.a[i] = convert<U>(m.a[i]);
  return r;
}

template <class T>
std::ostream& operator<<(std::ostream& os, const Mat3<T>& m) {
  os << '[';
  for (std::size_t i = 0; i < 3; ++i) {
    os << (i ? "; " : "") << m(i, 0) << ' ' << m(i, 1) << ' ' << m(i, 2);
  }
  return os << ']';
}

// ---------------------------------------------------------------------------

template <class T>
struct Mat2 {
  std::array<T, 4> a{T(1), T(0), T(0), T(1)};

  Mat2() = default;
  Mat2(T m00, T m01, T m10, T m11) : a{std::move(m00), std::move(m01), std::move(m10), std::move(m11)} {}

  T& operator()(std::size_t i, std::size_t j) { return a[2 * i + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return a[2 * i + j]; }

  static Mat2 identity() { return {}; }

  friend bool operator==(const Mat2& x, const Mat2& y) { return x.a == y.a; }
};

template <class T>
Mat2<T> operator*(const Mat2<T>& x, const Mat2<T>& y) {
  return {T(x(0, 0) * y(0, 0) + x(0, 1) * y(1, 0)), T(x(0, 0) * y(0, 1) + x(0, 1) * y(1, 1)),
          T(x(1, 0) * y(0, 0) + x(1, 1) * y(1, 0)), T(x(1, 0) * y(0, 1) + x(1, 1) * y(1, 1))};
}

template <class T>
T det(const Mat2<T>& m) {
  return T(m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0));
}

// Inverse of a matrix with determinant ±1 (stays integral).
template <class T>
Mat2<T> unimodular_inverse(const Mat2<T>& m) {
  const T d = det(m);
  if (d == T(1)) return {m(1, 1), T(-m(0, 1)), T(-m(1, 0)), m(0, 0)};
  if (d == T(-1)) return {T(-m(1, 1)), m(0, 1), m(1, 0), T(-m(0, 0))};
  throw std::domain_error("matrix is not unimodular");
}

template <class U, class T>
Mat2<U> cast(const Mat2<T>& m) {
  return {convert<U>(m.a[0]), convert<U>(m.a[1]), convert<U>(m.a[2]), convert<U>(m.a[3])};
}

template <class T>
std::ostream& operator<<(std::ostream& os, const Mat2<T>& m) {
  return os << '[' << m(0, 0) << ' ' << m(0, 1) << "; " << m(1, 0) << ' ' << m(1, 1) << ']';
}

}  // namespace latdyn
