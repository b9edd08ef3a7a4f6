#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <vector>

#include "pentalimit/mat3.hpp"
#include "pentalimit/pentagram.hpp"

namespace pentalimit {

// The conserved linear map of an n-gon, together with n (its trace is 2n).
template <class S>
struct Collineation {
  Mat3<S> matrix;
  long n = 0;
};

// Monic cubic x^3 + c2 x^2 + c1 x + c0.
template <class S>
struct CubicPoly {
  S c2{};
  S c1{};
  S c0{};

  S eval(const S& x) const { return ((x + c2) * x + c1) * x + c0; }

  friend bool operator==(const CubicPoly& a, const CubicPoly& b) {
    return a.c2 == b.c2 && a.c1 == b.c1 && a.c0 == b.c0;
  }
};

inline CubicPoly<double> to_float_poly(const CubicPoly<Rat>& p) {
  return {p.c2.to_double(), p.c1.to_double(), p.c0.to_double()};
}

inline CubicPoly<double> to_float_poly(const CubicPoly<double>& p) { return p; }

template <class S>
Collineation<double> to_float_collineation(const Collineation<S>& L) {
  return {to_float_mat(L.matrix), L.n};
}

namespace detail {

// Consecutive-triple determinant D_k = |u_{k-1}, u_k, u_{k+1}| for an
// arbitrary lift sequence; zero denominators are reported with their index.
template <class S, Coords Tag>
std::vector<S> triple_dets(const std::vector<HomoVec<S, Tag>>& u, double eps) {
  const long n = static_cast<long>(u.size());
  std::vector<S> d;
  d.reserve(u.size());
  for (long k = 0; k < n; ++k) {
    S dk = det3(u[(k + n - 1) % n], u[k], u[(k + 1) % n]);
    if (scalar_is_zero(dk, eps))
      throw Error(ErrorCode::DegenerateTriple,
                  "consecutive lift triple is dependent", k);
    d.push_back(std::move(dk));
  }
  return d;
}

}  // namespace detail

// The defining action L(v) = n v - sum_j |u_{j-1}, v, u_{j+1}| / D_j * u_j,
// evaluated directly from the lifts.
template <class S, Coords Tag>
HomoVec<S, Tag> la_apply_direct(const std::vector<HomoVec<S, Tag>>& u,
                                const HomoVec<S, Tag>& v,
                                double eps = kDefaultEpsilon) {
  const long n = static_cast<long>(u.size());
  const std::vector<S> d = detail::triple_dets(u, eps);
  const S nn = S(n);
  HomoVec<S, Tag> out{nn * v.a, nn * v.b, nn * v.c};
  for (long j = 0; j < n; ++j) {
    const S coeff = det3(u[(j + n - 1) % n], v, u[(j + 1) % n]) / d[j];
    out.a = out.a - coeff * u[j].a;
    out.b = out.b - coeff * u[j].b;
    out.c = out.c - coeff * u[j].c;
  }
  return out;
}

// The Cramer's-rule rearrangement of the same action:
// L(v) = sum_j ( |v, u_j, u_{j+1}| / D_j * u_{j-1}
//              + |u_{j-1}, u_j, v| / D_j * u_{j+1} ).
template <class S, Coords Tag>
HomoVec<S, Tag> la_apply_cramer(const std::vector<HomoVec<S, Tag>>& u,
                                const HomoVec<S, Tag>& v,
                                double eps = kDefaultEpsilon) {
  const long n = static_cast<long>(u.size());
  const std::vector<S> d = detail::triple_dets(u, eps);
  HomoVec<S, Tag> out{S(0), S(0), S(0)};
  for (long j = 0; j < n; ++j) {
    const auto& prev = u[(j + n - 1) % n];
    const auto& next = u[(j + 1) % n];
    const S cp = det3(v, u[j], next) / d[j];
    const S cn = det3(prev, u[j], v) / d[j];
    out.a = out.a + cp * prev.a + cn * next.a;
    out.b = out.b + cp * prev.b + cn * next.b;
    out.c = out.c + cp * prev.c + cn * next.c;
  }
  return out;
}

// Matrix of the map for an arbitrary lift sequence (column j is L(e_j)).
// Works for dual sequences too, where the lifts are line-coordinate triples.
template <class S, Coords Tag>
Mat3<S> build_la_from_lifts(const std::vector<HomoVec<S, Tag>>& u,
                            double eps = kDefaultEpsilon) {
  Mat3<S> out;
  const HomoVec<S, Tag> basis[3] = {{S(1), S(0), S(0)},
                                    {S(0), S(1), S(0)},
                                    {S(0), S(0), S(1)}};
  for (int j = 0; j < 3; ++j) {
    const HomoVec<S, Tag> col = la_apply_direct(u, basis[j], eps);
    out.m[0][j] = col.a;
    out.m[1][j] = col.b;
    out.m[2][j] = col.c;
  }
  return out;
}

// Entry formula over the affine lifts a_{0,k} = x_k, a_{1,k} = y_k,
// a_{2,k} = 1 (row indices cyclic mod 3):
//   phi_{i,j} = n d_{ij}
//     - sum_k (a_{j-1,k-1} a_{j+1,k+1} - a_{j-1,k+1} a_{j+1,k-1}) a_{i,k} / D_k
template <class S>
Collineation<S> build_la(const Polygon<S>& A, double eps = kDefaultEpsilon) {
  const long n = static_cast<long>(A.size());
  auto a = [&](int row, long k) -> S {
    const Point2<S>& p = A.at(k);
    switch (((row % 3) + 3) % 3) {
      case 0: return p.x;
      case 1: return p.y;
      default: return S(1);
    }
  };
  std::vector<S> d = detail::triple_dets(A.lifts(), eps);

  Collineation<S> L;
  L.n = n;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      S acc = (i == j) ? S(n) : S(0);
      for (long k = 0; k < n; ++k) {
        const S minor = a(j - 1, k - 1) * a(j + 1, k + 1) -
                        a(j - 1, k + 1) * a(j + 1, k - 1);
        acc = acc - minor * a(i, k) / d[k];
      }
      L.matrix.m[i][j] = acc;
    }
  return L;
}

template <class S, Coords Tag>
HomoVec<S, Tag> apply(const Collineation<S>& L, const HomoVec<S, Tag>& v) {
  return L.matrix * v;
}

template <class S>
S trace(const Collineation<S>& L) {
  return L.matrix.trace();
}

// det(x I - M) as a monic cubic; the x^2 coefficient is -trace.
template <class S>
CubicPoly<S> charpoly(const Collineation<S>& L) {
  const auto& m = L.matrix.m;
  CubicPoly<S> p;
  p.c2 = -L.matrix.trace();
  p.c1 = (m[0][0] * m[1][1] - m[0][1] * m[1][0]) +
         (m[0][0] * m[2][2] - m[0][2] * m[2][0]) +
         (m[1][1] * m[2][2] - m[1][2] * m[2][1]);
  p.c0 = -L.matrix.det();
  return p;
}

template <class S>
Collineation<S> conjugate(const Collineation<S>& L, const Mat3<S>& psi,
                          double eps = kDefaultEpsilon) {
  return {psi * L.matrix * psi.inverse(eps), L.n};
}

// Coefficients expressing L(lift Q) over the affine vertex lifts, grouped per
// vertex as in the hull-contraction argument; they are strictly positive for
// Q inside the hull of a convex polygon.
template <class S>
std::vector<S> hull_coefficients(const Polygon<S>& A, const Point2<S>& Q,
                                 double eps = kDefaultEpsilon) {
  const long n = static_cast<long>(A.size());
  const auto u = A.lifts();
  const HPoint<S> v = lift(Q);
  std::vector<S> coeffs;
  coeffs.reserve(A.size());
  for (long j = 0; j < n; ++j) {
    auto at = [&](long i) -> const HPoint<S>& {
      return u[static_cast<std::size_t>(((i % n) + n) % n)];
    };
    const S d1 = det3(at(j - 2), at(j - 1), at(j));
    const S d2 = det3(at(j), at(j + 1), at(j + 2));
    if (scalar_is_zero(d1, eps) || scalar_is_zero(d2, eps))
      throw Error(ErrorCode::DegenerateTriple,
                  "consecutive lift triple is dependent", j);
    coeffs.push_back(det3(at(j - 2), at(j - 1), v) / d1 +
                     det3(v, at(j + 1), at(j + 2)) / d2);
  }
  return coeffs;
}

template <class S>
struct ConservationReport {
  Mat3<S> la_a;
  Mat3<S> la_ta;
  bool exact_equal = false;
  double max_deviation = 0.0;

  bool pass(double eps = kDefaultEpsilon) const {
    return scalar_traits<S>::exact ? exact_equal : max_deviation < eps;
  }
};

// Builds the collineation of A and of T(A) independently and compares.
template <class S>
ConservationReport<S> verify_conservation(const Polygon<S>& A,
                                          double eps = kDefaultEpsilon) {
  ConservationReport<S> r;
  r.la_a = build_la(A, eps).matrix;
  r.la_ta = build_la(pentagram(A, eps), eps).matrix;
  r.exact_equal = true;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      if (!(r.la_a.m[i][j] == r.la_ta.m[i][j])) r.exact_equal = false;
      const double dev = std::abs(scalar_to_double(r.la_a.m[i][j]) -
                                  scalar_to_double(r.la_ta.m[i][j]));
      r.max_deviation = std::max(r.max_deviation, dev);
    }
  return r;
}

struct SmallNReport {
  long n = 0;
  long iterate_power = 0;        // 1 for pentagons, 2 for hexagons
  bool matched = false;          // image vertex set == iterate vertex set
  std::vector<long> matching;    // matching[i] = iterate vertex hit by vertex i
  bool is_cyclic_shift = false;
  long shift = 0;                // defined when is_cyclic_shift
};

// Checks (L_A - 3I)(A) = T(A) for pentagons and T^2(A) for hexagons, as
// projective point sets; no labeling is asserted, the found correspondence is
// reported instead.
template <class S>
SmallNReport verify_small_n(const Polygon<S>& A,
                            double eps = kDefaultEpsilon) {
  const long n = static_cast<long>(A.size());
  if (n != 5 && n != 6)
    throw Error(ErrorCode::InvalidInput,
                "small-n identity applies to pentagons and hexagons only");
  SmallNReport rep;
  rep.n = n;
  rep.iterate_power = (n == 5) ? 1 : 2;

  const Polygon<S> B = iterate(A, rep.iterate_power, eps);
  const Mat3<S> M = build_la(A, eps).matrix - (S(3) * Mat3<S>::identity());

  rep.matching.assign(static_cast<std::size_t>(n), -1);
  std::vector<bool> used(static_cast<std::size_t>(n), false);
  rep.matched = true;
  for (long i = 0; i < n; ++i) {
    const HPoint<S> w = M * A.lift_at(i);
    long found = -1;
    for (long j = 0; j < n; ++j) {
      if (used[static_cast<std::size_t>(j)]) continue;
      if (proportional(w, B.lift_at(j), eps)) {
        found = j;
        break;
      }
    }
    rep.matching[static_cast<std::size_t>(i)] = found;
    if (found < 0)
      rep.matched = false;
    else
      used[static_cast<std::size_t>(found)] = true;
  }

  if (rep.matched) {
    const long s = rep.matching[0];
    rep.is_cyclic_shift = true;
    for (long i = 0; i < n; ++i)
      if (rep.matching[static_cast<std::size_t>(i)] != (i + s) % n)
        rep.is_cyclic_shift = false;
    if (rep.is_cyclic_shift) rep.shift = s;
  }
  return rep;
}

struct DualityReport {
  bool alpha1_transpose = false;
  bool alpha2_transpose = false;
  double max_deviation = 0.0;
};

// The collineation of either dual sequence, built with the standard
// determinant form on line coordinates, is the transpose of the original.
template <class S>
DualityReport verify_duality(const Polygon<S>& A,
                             double eps = kDefaultEpsilon) {
  DualityReport rep;
  const Mat3<S> expected = build_la(A, eps).matrix.transpose();
  const Mat3<S> via_a1 = build_la_from_lifts(alpha1(A, eps), eps);
  const Mat3<S> via_a2 = build_la_from_lifts(alpha2(A, eps), eps);
  rep.alpha1_transpose = true;
  rep.alpha2_transpose = true;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      const double e = scalar_to_double(expected.m[i][j]);
      const double d1 = std::abs(scalar_to_double(via_a1.m[i][j]) - e);
      const double d2 = std::abs(scalar_to_double(via_a2.m[i][j]) - e);
      rep.max_deviation = std::max({rep.max_deviation, d1, d2});
      if constexpr (scalar_traits<S>::exact) {
        if (!(via_a1.m[i][j] == expected.m[i][j])) rep.alpha1_transpose = false;
        if (!(via_a2.m[i][j] == expected.m[i][j])) rep.alpha2_transpose = false;
      } else {
        if (d1 >= eps) rep.alpha1_transpose = false;
        if (d2 >= eps) rep.alpha2_transpose = false;
      }
    }
  return rep;
}

}  // namespace pentalimit
