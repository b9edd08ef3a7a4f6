#pragma once

#include <array>

#include "pentalimit/geom.hpp"

namespace pentalimit {

template <class S>
struct Mat3 {
  // Row-major entries.
  std::array<std::array<S, 3>, 3> m{};

  static Mat3 identity() {
    Mat3 I;
    for (int i = 0; i < 3; ++i) I.m[i][i] = S(1);
    return I;
  }

  S& operator()(int i, int j) { return m[i][j]; }
  const S& operator()(int i, int j) const { return m[i][j]; }

  friend Mat3 operator+(const Mat3& a, const Mat3& b) {
    Mat3 r;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) r.m[i][j] = a.m[i][j] + b.m[i][j];
    return r;
  }

  friend Mat3 operator-(const Mat3& a, const Mat3& b) {
    Mat3 r;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) r.m[i][j] = a.m[i][j] - b.m[i][j];
    return r;
  }

  friend Mat3 operator*(const Mat3& a, const Mat3& b) {
    Mat3 r;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) {
        S acc = a.m[i][0] * b.m[0][j];
        acc += a.m[i][1] * b.m[1][j];
        acc += a.m[i][2] * b.m[2][j];
        r.m[i][j] = acc;
      }
    return r;
  }

  friend Mat3 operator*(const S& s, const Mat3& a) {
    Mat3 r;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) r.m[i][j] = s * a.m[i][j];
    return r;
  }

  friend bool operator==(const Mat3& a, const Mat3& b) { return a.m == b.m; }

  template <Coords Tag>
  friend HomoVec<S, Tag> operator*(const Mat3& a, const HomoVec<S, Tag>& v) {
    return {a.m[0][0] * v.a + a.m[0][1] * v.b + a.m[0][2] * v.c,
            a.m[1][0] * v.a + a.m[1][1] * v.b + a.m[1][2] * v.c,
            a.m[2][0] * v.a + a.m[2][1] * v.b + a.m[2][2] * v.c};
  }

  S trace() const { return m[0][0] + m[1][1] + m[2][2]; }

  S det() const {
    return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
           m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
           m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
  }

  Mat3 transpose() const {
    Mat3 r;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) r.m[i][j] = m[j][i];
    return r;
  }

  Mat3 inverse(double eps = kDefaultEpsilon) const {
    const S d = det();
    if (scalar_is_zero(d, eps))
      throw Error(ErrorCode::SingularTransform, "matrix is not invertible");
    Mat3 adj;
    adj.m[0][0] = m[1][1] * m[2][2] - m[1][2] * m[2][1];
    adj.m[0][1] = m[0][2] * m[2][1] - m[0][1] * m[2][2];
    adj.m[0][2] = m[0][1] * m[1][2] - m[0][2] * m[1][1];
    adj.m[1][0] = m[1][2] * m[2][0] - m[1][0] * m[2][2];
    adj.m[1][1] = m[0][0] * m[2][2] - m[0][2] * m[2][0];
    adj.m[1][2] = m[0][2] * m[1][0] - m[0][0] * m[1][2];
    adj.m[2][0] = m[1][0] * m[2][1] - m[1][1] * m[2][0];
    adj.m[2][1] = m[0][1] * m[2][0] - m[0][0] * m[2][1];
    adj.m[2][2] = m[0][0] * m[1][1] - m[0][1] * m[1][0];
    Mat3 r;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) r.m[i][j] = adj.m[i][j] / d;
    return r;
  }
};

template <class S>
Mat3<double> to_float_mat(const Mat3<S>& a) {
  Mat3<double> r;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) r.m[i][j] = scalar_to_double(a.m[i][j]);
  return r;
}

// Apply as a projective transformation of the plane.
template <class S>
Point2<S> apply_projective(const Mat3<S>& a, const Point2<S>& p,
                           double eps = kDefaultEpsilon) {
  return project(a * lift(p), eps);
}

template <class S>
Polygon<S> apply_projective(const Mat3<S>& a, const Polygon<S>& A,
                            double eps = kDefaultEpsilon) {
  std::vector<Point2<S>> pts;
  pts.reserve(A.size());
  for (const auto& p : A.vertices()) pts.push_back(apply_projective(a, p, eps));
  return Polygon<S>(std::move(pts));
}

template <class S>
Mat3<S> translation_matrix(const S& dx, const S& dy) {
  Mat3<S> t = Mat3<S>::identity();
  t.m[0][2] = dx;
  t.m[1][2] = dy;
  return t;
}

}  // namespace pentalimit
