#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "pentalimit/collineation.hpp"
#include "pentalimit/pentagram.hpp"

namespace pentalimit {

// An axis-aligned 2m-gon in the reference labeling
//   v_{2i} = (x_{2i-1}, y_{2i}),  v_{2i+1} = (x_{2i+1}, y_{2i})   (1-based v),
// i.e. edges alternate vertical, horizontal, vertical, ... starting from v_1.
// detect() accepts any cyclic rotation (which also covers the swapped
// phase) and records how the input was normalized.
template <class S>
struct AxisAlignedShape {
  long m = 0;
  std::vector<S> odd_x;   // x_1, x_3, ..., x_{2m-1}
  std::vector<S> even_y;  // y_2, y_4, ..., y_{2m}
  bool vertical_first = true;  // phase of the input's own first edge
  long start_offset = 0;       // rotation applied to reach the reference frame

  // Inverse of detect(): reproduces the polygon in its original labeling.
  Polygon<S> reconstruct() const {
    const long n = 2 * m;
    std::vector<Point2<S>> w(static_cast<std::size_t>(n));
    for (long i = 1; i <= m; ++i) {
      // v_{2i-1} = (x_{2i-1}, y_{2i-2}), v_{2i} = (x_{2i-1}, y_{2i})
      const S& x = odd_x[static_cast<std::size_t>(i - 1)];
      const S& y_prev = even_y[static_cast<std::size_t>((i + m - 2) % m)];
      const S& y_cur = even_y[static_cast<std::size_t>(i - 1)];
      w[static_cast<std::size_t>(2 * i - 2)] = {x, y_prev};
      w[static_cast<std::size_t>(2 * i - 1)] = {x, y_cur};
    }
    // detect matched normalized_i = original_{i + start_offset}.
    std::vector<Point2<S>> orig(static_cast<std::size_t>(n));
    for (long j = 0; j < n; ++j)
      orig[static_cast<std::size_t>(j)] =
          w[static_cast<std::size_t>(((j - start_offset) % n + n) % n)];
    return Polygon<S>(std::move(orig));
  }
};

// Matches the alternating coordinate pattern up to cyclic relabeling.
// Returns nothing for odd n or when no rotation fits.
template <class S>
std::optional<AxisAlignedShape<S>> detect(const Polygon<S>& A,
                                          double eps = kDefaultEpsilon) {
  const long n = static_cast<long>(A.size());
  if (n % 2 != 0 || n < 4) return std::nullopt;
  const long m = n / 2;

  auto same = [&](const S& a, const S& b) { return scalar_is_zero(a - b, eps); };

  for (long r = 0; r < n; ++r) {
    auto w = [&](long i) -> const Point2<S>& { return A.at(r + i); };
    bool ok = true;
    for (long i = 0; ok && i < m; ++i) {
      if (!same(w(2 * i).x, w(2 * i + 1).x)) ok = false;          // vertical
      if (ok && !same(w(2 * i + 1).y, w(2 * i + 2).y)) ok = false;  // horizontal
    }
    if (!ok) continue;

    AxisAlignedShape<S> shape;
    shape.m = m;
    shape.start_offset = r;
    shape.vertical_first = same(A.at(0).x, A.at(1).x);
    for (long i = 0; i < m; ++i) {
      shape.odd_x.push_back(w(2 * i).x);
      shape.even_y.push_back(w(2 * i + 1).y);
    }
    return shape;
  }
  return std::nullopt;
}

// The closed-form collineation [[m, 0, sum x_odd], [0, m, sum y_even],
// [0, 0, 2m]]. Cyclic relabeling leaves the map itself unchanged, so no
// frame correction is needed.
template <class S>
Collineation<S> la_closed_form(const AxisAlignedShape<S>& s) {
  S sx(0), sy(0);
  for (const auto& x : s.odd_x) sx += x;
  for (const auto& y : s.even_y) sy += y;
  Collineation<S> L;
  L.n = 2 * s.m;
  L.matrix.m[0][0] = S(s.m);
  L.matrix.m[1][1] = S(s.m);
  L.matrix.m[2][2] = S(2 * s.m);
  L.matrix.m[0][2] = sx;
  L.matrix.m[1][2] = sy;
  return L;
}

// Vertex centroid; the 2m-eigenvector of the closed form, and the point the
// iterates collapse to.
template <class S>
Point2<S> collapse_point(const AxisAlignedShape<S>& s) {
  S sx(0), sy(0);
  for (const auto& x : s.odd_x) sx += x;
  for (const auto& y : s.even_y) sy += y;
  return {sx / S(s.m), sy / S(s.m)};
}

// The closed form acts on the plane as p -> midpoint(p, collapse point).
template <class S>
Point2<S> midpoint_map(const AxisAlignedShape<S>& s, const Point2<S>& p) {
  const Point2<S> q = collapse_point(s);
  return {(p.x + q.x) / S(2), (p.y + q.y) / S(2)};
}

template <class S>
struct IncidenceReport {
  long steps = 0;  // pentagram applications taken (m - 2)
  bool alternating_collinear = false;  // both alternating vertex classes
  double max_det_deviation = 0.0;      // worst lifted collinearity determinant
  Point2<S> meet_point{};
  bool meet_equals_collapse = false;

  bool pass() const { return alternating_collinear && meet_equals_collapse; }
};

// Applies T (m-2) times to the reconstructed polygon and verifies that the
// two alternating vertex classes land on two lines whose intersection is the
// collapse point. The alternating partition of an even cycle does not depend
// on where the labeling starts.
template <class S>
IncidenceReport<S> verify_incidence(const AxisAlignedShape<S>& s,
                                    long max_m = 6,
                                    double eps = kDefaultEpsilon) {
  if (s.m < 2) throw Error(ErrorCode::InvalidInput, "shape needs m >= 2");
  if (s.m > max_m)
    throw Error(ErrorCode::InvalidInput,
                "m exceeds the iteration cap", s.m);

  IncidenceReport<S> rep;
  rep.steps = s.m - 2;
  const Polygon<S> B = iterate(s.reconstruct(), rep.steps, eps);

  std::vector<HPoint<S>> cls[2];
  for (long i = 0; i < 2 * s.m; ++i)
    cls[static_cast<std::size_t>(i % 2)].push_back(B.lift_at(i));

  rep.alternating_collinear = true;
  for (const auto& g : cls)
    for (std::size_t i = 2; i < g.size(); ++i) {
      const S d = det3(g[0], g[1], g[i]);
      rep.max_det_deviation =
          std::max(rep.max_det_deviation, std::abs(scalar_to_double(d)));
      if (!scalar_is_zero(d, eps)) rep.alternating_collinear = false;
    }

  const HLine<S> l1 = join(cls[0][0], cls[0][1], eps);
  const HLine<S> l2 = join(cls[1][0], cls[1][1], eps);
  rep.meet_point = project(meet(l1, l2, eps), eps);

  const Point2<S> cp = collapse_point(s);
  if constexpr (scalar_traits<S>::exact) {
    rep.meet_equals_collapse = rep.meet_point == cp;
  } else {
    rep.meet_equals_collapse =
        scalar_is_zero(rep.meet_point.x - cp.x, eps) &&
        scalar_is_zero(rep.meet_point.y - cp.y, eps);
  }
  return rep;
}

}  // namespace pentalimit
