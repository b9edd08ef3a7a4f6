#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "pentalimit/geom.hpp"

namespace pentalimit {

// T and its inverse are implemented through the two duality involutions:
//   alpha1(A)_i = A_i v A_{i+1}         (consecutive joins)
//   alpha2(A)_i = A_{i-1} v A_{i+1}     (second-neighbor joins)
// both defined on sequences in P as well as in P*. With 0-based indices,
// alpha1(alpha2(A))_i lands exactly on the classical vertex
//   B_i = (A_{i-1}A_{i+1}) ^ (A_iA_{i+2}),
// so the composition needs no reindexing. Applying the same involution twice
// gives back the input up to scale and a fixed shift:
//   alpha2(alpha2(A))_i ~ A_i,   alpha1(alpha1(A))_i ~ A_{i+1}.
inline constexpr long kAlpha1SquaredShift = 1;
inline constexpr long kAlpha2SquaredShift = 0;

// pentagram_inverse(pentagram(A))_i = A_{i + kPentagramRoundTripShift}.
inline constexpr long kPentagramRoundTripShift = 1;

namespace detail {

template <Coords Tag>
inline ErrorCode degenerate_cross_code() {
  return Tag == Coords::point ? ErrorCode::DegenerateJoin
                              : ErrorCode::DegenerateMeet;
}

template <class S, Coords Tag>
HomoVec<S, dual_of(Tag)> checked_cross(const HomoVec<S, Tag>& u,
                                       const HomoVec<S, Tag>& v, double eps,
                                       long index) {
  auto w = cross(u, v);
  if (w.all_zero(eps))
    throw Error(degenerate_cross_code<Tag>(), "proportional entries", index);
  return w;
}

}  // namespace detail

template <class S, Coords Tag>
std::vector<HomoVec<S, dual_of(Tag)>> alpha1(
    const std::vector<HomoVec<S, Tag>>& seq, double eps = kDefaultEpsilon) {
  const long n = static_cast<long>(seq.size());
  if (n < 3)
    throw Error(ErrorCode::InvalidInput, "alpha1 needs at least 3 entries");
  std::vector<HomoVec<S, dual_of(Tag)>> out;
  out.reserve(seq.size());
  for (long i = 0; i < n; ++i)
    out.push_back(detail::checked_cross(seq[i], seq[(i + 1) % n], eps, i));
  return out;
}

template <class S, Coords Tag>
std::vector<HomoVec<S, dual_of(Tag)>> alpha2(
    const std::vector<HomoVec<S, Tag>>& seq, double eps = kDefaultEpsilon) {
  const long n = static_cast<long>(seq.size());
  if (n < 4)
    throw Error(ErrorCode::InvalidInput,
                "alpha2 needs at least 4 entries; second neighbors coincide "
                "with first for n = 3");
  std::vector<HomoVec<S, dual_of(Tag)>> out;
  out.reserve(seq.size());
  for (long i = 0; i < n; ++i)
    out.push_back(
        detail::checked_cross(seq[(i + n - 1) % n], seq[(i + 1) % n], eps, i));
  return out;
}

template <class S>
std::vector<HLine<S>> alpha1(const Polygon<S>& A,
                             double eps = kDefaultEpsilon) {
  return alpha1(A.lifts(), eps);
}

template <class S>
std::vector<HLine<S>> alpha2(const Polygon<S>& A,
                             double eps = kDefaultEpsilon) {
  return alpha2(A.lifts(), eps);
}

namespace detail {

template <class S>
Polygon<S> project_sequence(const std::vector<HPoint<S>>& seq, double eps) {
  std::vector<Point2<S>> pts;
  pts.reserve(seq.size());
  for (const auto& v : seq) pts.push_back(project(v, eps));
  const long n = static_cast<long>(pts.size());
  for (long i = 0; i < n; ++i) {
    const Point2<S>& p = pts[i];
    const Point2<S>& q = pts[(i + 1) % n];
    const bool same = scalar_is_zero(p.x - q.x, eps) &&
                      scalar_is_zero(p.y - q.y, eps);
    if (same)
      throw Error(ErrorCode::DegenerateOutput,
                  "consecutive output vertices coincide", i);
  }
  return Polygon<S>(std::move(pts));
}

template <class S>
void require_consecutive_triples(const Polygon<S>& A, double eps) {
  long j = first_degenerate_triple(A, eps);
  if (j >= 0)
    throw Error(ErrorCode::DegenerateTriple,
                "three consecutive vertices collinear", j);
}

}  // namespace detail

// One step of the pentagram map. Vertex i of the output is
// (A_{i-1}A_{i+1}) ^ (A_iA_{i+2}).
template <class S>
Polygon<S> pentagram(const Polygon<S>& A, double eps = kDefaultEpsilon) {
  if (A.size() < 4)
    throw Error(ErrorCode::InvalidInput,
                "pentagram map needs at least 4 vertices");
  detail::require_consecutive_triples(A, eps);
  return detail::project_sequence(alpha1(alpha2(A.lifts(), eps), eps), eps);
}

template <class S>
Polygon<S> pentagram_inverse(const Polygon<S>& B,
                             double eps = kDefaultEpsilon) {
  if (B.size() < 4)
    throw Error(ErrorCode::InvalidInput,
                "inverse pentagram map needs at least 4 vertices");
  detail::require_consecutive_triples(B, eps);
  return detail::project_sequence(alpha2(alpha1(B.lifts(), eps), eps), eps);
}

// k-fold composition; failures carry the 1-based step at which T broke down.
template <class S>
Polygon<S> iterate(const Polygon<S>& A, long k, double eps = kDefaultEpsilon) {
  if (k < 0) throw Error(ErrorCode::InvalidInput, "negative iteration count");
  Polygon<S> cur = A;
  for (long s = 1; s <= k; ++s) {
    try {
      cur = pentagram(cur, eps);
    } catch (const Error& e) {
      throw Error(e.code(),
                  "pentagram step " + std::to_string(s) + ": " + e.what(), s);
    }
  }
  return cur;
}

inline double polygon_diameter(const Polygon<double>& A) {
  double best = 0;
  const auto& v = A.vertices();
  for (std::size_t i = 0; i < v.size(); ++i)
    for (std::size_t j = i + 1; j < v.size(); ++j) {
      const double dx = v[i].x - v[j].x;
      const double dy = v[i].y - v[j].y;
      const double d = std::sqrt(dx * dx + dy * dy);
      if (d > best) best = d;
    }
  return best;
}

inline Point2<double> polygon_centroid(const Polygon<double>& A) {
  double sx = 0, sy = 0;
  for (const auto& p : A.vertices()) {
    sx += p.x;
    sy += p.y;
  }
  const double n = static_cast<double>(A.size());
  return {sx / n, sy / n};
}

struct IterationOptions {
  long max_iterations = 10000;
  // Exact pentagram steps taken before dropping to floats; exact coordinate
  // bit size grows fast, so the default is to convert immediately.
  long exact_steps = 0;
  double eps = kDefaultEpsilon;
};

// Iterates T until the vertex-set diameter falls below tol and returns the
// vertex centroid of the final iterate. The limit lies in conv(T^k(A)) for
// every k, so the answer is within tol of the true limit.
//
// The iterates not only shrink, they flatten: affinely normalized, they
// approach a segment, which would eventually trip the epsilon predicates.
// Since T commutes with affine maps, each step is taken in a whitened frame
// (unit vertex covariance) and the accumulated frame maps results back.
template <class S>
Point2<double> limit_by_iteration(const Polygon<S>& A, double tol,
                                  const IterationOptions& opts = {}) {
  if (tol <= 0) throw Error(ErrorCode::InvalidInput, "tolerance must be > 0");
  if (A.size() < 5)
    throw Error(ErrorCode::InvalidInput,
                "iteration limit needs at least 5 vertices");
  if (!is_convex(A, opts.eps))
    throw Error(ErrorCode::NotConvex, "iteration limit needs a convex polygon");

  Polygon<S> exact = A;
  long steps = 0;
  for (; steps < opts.exact_steps; ++steps) exact = pentagram(exact, opts.eps);

  // actual point = F * p + off for points p in the working frame
  Polygon<double> cur = to_float_polygon(exact);
  double F[2][2] = {{1.0, 0.0}, {0.0, 1.0}};
  Point2<double> off{0.0, 0.0};
  auto to_actual = [&](const Point2<double>& p) -> Point2<double> {
    return {F[0][0] * p.x + F[0][1] * p.y + off.x,
            F[1][0] * p.x + F[1][1] * p.y + off.y};
  };

  std::vector<Point2<double>> actual;
  for (;; ++steps) {
    actual.clear();
    for (const auto& p : cur.vertices()) actual.push_back(to_actual(p));
    double diam = 0;
    Point2<double> centroid{0.0, 0.0};
    for (std::size_t i = 0; i < actual.size(); ++i) {
      centroid.x += actual[i].x;
      centroid.y += actual[i].y;
      for (std::size_t j = i + 1; j < actual.size(); ++j)
        diam = std::max(diam, std::hypot(actual[i].x - actual[j].x,
                                         actual[i].y - actual[j].y));
    }
    centroid.x /= static_cast<double>(actual.size());
    centroid.y /= static_cast<double>(actual.size());
    if (diam < tol) return centroid;
    if (steps >= opts.max_iterations)
      throw Error(ErrorCode::IterationLimitExceeded,
                  "diameter still " + std::to_string(diam) + " after " +
                      std::to_string(steps) + " steps");

    // Whiten the working frame: centroid to the origin, unit covariance.
    double cx = 0, cy = 0;
    for (const auto& p : cur.vertices()) {
      cx += p.x;
      cy += p.y;
    }
    const double n = static_cast<double>(cur.size());
    cx /= n;
    cy /= n;
    double sxx = 0, sxy = 0, syy = 0;
    for (const auto& p : cur.vertices()) {
      sxx += (p.x - cx) * (p.x - cx);
      sxy += (p.x - cx) * (p.y - cy);
      syy += (p.y - cy) * (p.y - cy);
    }
    sxx /= n;
    sxy /= n;
    syy /= n;
    const double half_tr = (sxx + syy) / 2;
    const double disc =
        std::sqrt(std::max(0.0, half_tr * half_tr - (sxx * syy - sxy * sxy)));
    const double l1 = half_tr + disc;
    const double l2 = half_tr - disc;
    if (!(l2 > l1 * 1e-24))
      throw Error(ErrorCode::DegenerateOutput,
                  "iterate flattened to a segment numerically");
    double e1x, e1y;
    if (std::abs(sxy) > 1e-300) {
      e1x = l1 - syy;
      e1y = sxy;
    } else {
      e1x = sxx >= syy ? 1.0 : 0.0;
      e1y = sxx >= syy ? 0.0 : 1.0;
    }
    const double nrm = std::hypot(e1x, e1y);
    e1x /= nrm;
    e1y /= nrm;
    const double e2x = -e1y, e2y = e1x;
    const double s1 = std::sqrt(l1), s2 = std::sqrt(l2);

    std::vector<Point2<double>> whitened;
    whitened.reserve(cur.size());
    for (const auto& p : cur.vertices())
      whitened.push_back({((p.x - cx) * e1x + (p.y - cy) * e1y) / s1,
                          ((p.x - cx) * e2x + (p.y - cy) * e2y) / s2});

    // fold the inverse whitening into the frame: F <- F * [e1 e2] * diag(s)
    off = {F[0][0] * cx + F[0][1] * cy + off.x,
           F[1][0] * cx + F[1][1] * cy + off.y};
    const double f00 = (F[0][0] * e1x + F[0][1] * e1y) * s1;
    const double f10 = (F[1][0] * e1x + F[1][1] * e1y) * s1;
    const double f01 = (F[0][0] * e2x + F[0][1] * e2y) * s2;
    const double f11 = (F[1][0] * e2x + F[1][1] * e2y) * s2;
    F[0][0] = f00;
    F[0][1] = f01;
    F[1][0] = f10;
    F[1][1] = f11;

    cur = pentagram(Polygon<double>(std::move(whitened)), opts.eps);
  }
}

}  // namespace pentalimit
