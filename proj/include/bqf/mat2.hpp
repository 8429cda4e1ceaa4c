#pragma once

#include <array>

namespace bqf {

/// Dense 2x2 matrix over a scalar type with value semantics.
///
/// Storage is row-major. Action matrices follow the column convention
/// throughout the library: column j holds the coordinates of the image of
/// the j-th basis vector.
template <class T>
struct Mat2 {
  std::array<T, 4> m{};

  Mat2() = default;
  Mat2(T a00, T a01, T a10, T a11) : m{std::move(a00), std::move(a01), std::move(a10), std::move(a11)} {}

  static Mat2 scalar(const T& s, const T& zero) { return {s, zero, zero, s}; }

  T& operator()(int r, int c) { return m[2 * r + c]; }
  const T& operator()(int r, int c) const { return m[2 * r + c]; }

  T det() const { return m[0] * m[3] - m[1] * m[2]; }
  T trace() const { return m[0] + m[3]; }
  Mat2 adjugate() const { return {m[3], -m[1], -m[2], m[0]}; }
  Mat2 transpose() const { return {m[0], m[2], m[1], m[3]}; }

  Mat2& operator+=(const Mat2& o) {
    for (int i = 0; i < 4; ++i) m[i] += o.m[i];
    return *this;
  }
  Mat2& operator-=(const Mat2& o) {
    for (int i = 0; i < 4; ++i) m[i] -= o.m[i];
    return *this;
  }
  friend Mat2 operator+(Mat2 x, const Mat2& y) { return x += y; }
  friend Mat2 operator-(Mat2 x, const Mat2& y) { return x -= y; }
  friend Mat2 operator*(const Mat2& x, const Mat2& y) {
    return {x.m[0] * y.m[0] + x.m[1] * y.m[2], x.m[0] * y.m[1] + x.m[1] * y.m[3],
            x.m[2] * y.m[0] + x.m[3] * y.m[2], x.m[2] * y.m[1] + x.m[3] * y.m[3]};
  }
  friend Mat2 operator*(const T& s, const Mat2& x) {
    return {s * x.m[0], s * x.m[1], s * x.m[2], s * x.m[3]};
  }
  Mat2 operator-() const { return {-m[0], -m[1], -m[2], -m[3]}; }

  friend bool operator==(const Mat2& x, const Mat2& y) { return x.m == y.m; }
};

template <class T>
struct Vec2 {
  T x{};
  T y{};
  friend bool operator==(const Vec2& p, const Vec2& q) { return p.x == q.x && p.y == q.y; }
};

template <class T>
Vec2<T> operator*(const Mat2<T>& a, const Vec2<T>& v) {
  return {a(0, 0) * v.x + a(0, 1) * v.y, a(1, 0) * v.x + a(1, 1) * v.y};
}

}  // namespace bqf
