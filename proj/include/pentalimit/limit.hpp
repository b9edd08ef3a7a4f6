#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>
#include <vector>

#include "pentalimit/collineation.hpp"

namespace pentalimit {

struct CubicRoots {
  // Real roots in ascending order, repeated according to multiplicity.
  std::vector<double> roots;
  bool has_complex_pair = false;
};

namespace detail {

inline double newton_polish(const CubicPoly<double>& p, double x, int steps) {
  for (int s = 0; s < steps; ++s) {
    const double f = ((x + p.c2) * x + p.c1) * x + p.c0;
    const double df = (3 * x + 2 * p.c2) * x + p.c1;
    if (std::abs(df) < 1e-300) break;
    const double step = f / df;
    if (!std::isfinite(step)) break;
    x -= step;
  }
  return x;
}

}  // namespace detail

// All real roots of a monic cubic. Closed form on the depressed cubic
// (trigonometric branch for three real roots, Cardano for one), then two
// Newton steps on the original polynomial to clean up cancellation.
inline CubicRoots solve_cubic(const CubicPoly<double>& poly) {
  const double a = poly.c2, b = poly.c1, c = poly.c0;
  // x = t - a/3 gives t^3 + p t + q.
  const double shift = a / 3.0;
  const double p = b - a * a / 3.0;
  const double q = 2.0 * a * a * a / 27.0 - a * b / 3.0 + c;
  const double disc = -4.0 * p * p * p - 27.0 * q * q;
  const double scale =
      std::max({1.0, std::abs(p) * std::abs(p) * std::abs(p), q * q});

  CubicRoots out;
  std::vector<double> t;
  if (std::abs(disc) <= 1e-12 * scale) {
    if (std::abs(p) <= 1e-12 * std::max(1.0, std::abs(q))) {
      t = {0.0, 0.0, 0.0};  // triple root
    } else {
      const double td = -3.0 * q / (2.0 * p);  // double root
      const double ts = 3.0 * q / p;           // simple root
      t = {td, td, ts};
    }
  } else if (disc > 0) {
    // Three distinct real roots.
    const double r = 2.0 * std::sqrt(-p / 3.0);
    double arg = 3.0 * q / (p * r);
    arg = std::clamp(arg, -1.0, 1.0);
    const double phi = std::acos(arg);
    for (int k = 0; k < 3; ++k)
      t.push_back(r * std::cos((phi - 2.0 * M_PI * k) / 3.0));
  } else {
    // One real root, complex pair.
    out.has_complex_pair = true;
    const double s = std::sqrt(q * q / 4.0 + p * p * p / 27.0);
    const double u = std::cbrt(q >= 0 ? -q / 2.0 - s : -q / 2.0 + s);
    const double v = (u == 0.0) ? 0.0 : -p / (3.0 * u);
    t = {u + v};
  }

  for (double ti : t) out.roots.push_back(ti - shift);
  for (double& x : out.roots) {
    const double polished = detail::newton_polish(poly, x, 2);
    // A multiple root makes Newton ill-conditioned; keep the closed form then.
    if (std::abs(poly.eval(polished)) <= std::abs(poly.eval(x))) x = polished;
  }
  std::sort(out.roots.begin(), out.roots.end());
  return out;
}

// Kernel vector of L - lambda I via row reduction with partial pivoting.
// Pivots below 1e-8 * max|L| are treated as zero.
inline HPoint<double> eigenvector_for(const Collineation<double>& L,
                                      double lambda) {
  double mat[3][3];
  double norm = 0.0;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      mat[i][j] = L.matrix.m[i][j] - (i == j ? lambda : 0.0);
      norm = std::max(norm, std::abs(L.matrix.m[i][j]));
    }
  const double pivot_tol = 1e-8 * std::max(norm, 1.0);

  int row_of_col[3] = {-1, -1, -1};  // pivot row serving each column
  int next_row = 0;
  for (int col = 0; col < 3 && next_row < 3; ++col) {
    int best = -1;
    double best_abs = pivot_tol;
    for (int r = next_row; r < 3; ++r)
      if (std::abs(mat[r][col]) > best_abs) {
        best_abs = std::abs(mat[r][col]);
        best = r;
      }
    if (best < 0) continue;  // free column
    std::swap(mat[best], mat[next_row]);
    for (int r = next_row + 1; r < 3; ++r) {
      const double f = mat[r][col] / mat[next_row][col];
      for (int j = col; j < 3; ++j) mat[r][j] -= f * mat[next_row][j];
    }
    row_of_col[col] = next_row;
    ++next_row;
  }

  const int rank = next_row;
  if (rank == 3)
    throw Error(ErrorCode::InvalidInput,
                "lambda is not an eigenvalue of the matrix");
  if (rank < 2)
    throw Error(ErrorCode::NonSimpleEigenvalue,
                "kernel of L - lambda I has dimension >= 2");

  int free_col = 0;
  while (free_col < 3 && row_of_col[free_col] >= 0) ++free_col;

  double v[3] = {0.0, 0.0, 0.0};
  v[free_col] = 1.0;
  for (int col = 2; col >= 0; --col) {
    const int r = row_of_col[col];
    if (r < 0) continue;
    double s = 0.0;
    for (int j = col + 1; j < 3; ++j) s += mat[r][j] * v[j];
    v[col] = -s / mat[r][col];
  }

  const double vmax =
      std::max({std::abs(v[0]), std::abs(v[1]), std::abs(v[2])});
  if (std::abs(v[2]) <= 1e-8 * vmax)
    throw Error(ErrorCode::EigenvectorAtInfinity,
                "eigenvector has negligible third coordinate");
  return {v[0] / v[2], v[1] / v[2], 1.0};
}

template <class S>
HPoint<double> eigenvector_for(const Collineation<S>& L, double lambda) {
  return eigenvector_for(to_float_collineation(L), lambda);
}

struct EigenCandidate {
  double lambda = 0.0;
  std::optional<Point2<double>> point;  // empty if the solve failed
  bool in_hull = false;
  double residual = 0.0;
  const char* failure = nullptr;  // error name when the solve failed
};

struct LimitResult {
  Point2<double> limit{};
  double lambda = 0.0;
  std::vector<double> real_eigenvalues;  // ascending, with multiplicity
  bool has_complex_pair = false;
  double residual = 0.0;  // max |L v - lambda v| with v = (X, Y, 1)
  std::vector<EigenCandidate> candidates;
  bool selected_largest_root = false;  // diagnostic only
  std::optional<double> iteration_deviation;
};

struct LimitOptions {
  // Resolve an ambiguous hull selection (and report the deviation) against
  // the iteration oracle. Off by default for library use.
  bool iteration_cross_check = false;
  double iteration_tol = 1e-9;
  IterationOptions iteration;
  double eps = kDefaultEpsilon;
};

namespace detail {

inline double residual_of(const Collineation<double>& L, double lambda,
                          const HPoint<double>& v) {
  const HPoint<double> w = L.matrix * v;
  return std::max({std::abs(w.a - lambda * v.a), std::abs(w.b - lambda * v.b),
                   std::abs(w.c - lambda * v.c)});
}

}  // namespace detail

// Full eigenvector pipeline: exact collineation and characteristic
// polynomial, one conversion to float, cubic roots, candidate eigenvectors,
// and hull-membership selection. Magnitude of the eigenvalue plays no role
// in the selection; agreement with the largest root is recorded only as a
// diagnostic.
template <class S>
LimitResult limit_point(const Polygon<S>& A, const LimitOptions& opts = {}) {
  if (A.size() < 5)
    throw Error(ErrorCode::InvalidInput,
                "limit point needs at least 5 vertices");
  if (!is_convex(A, opts.eps))
    throw Error(ErrorCode::NotConvex, "limit point needs a convex polygon");

  const Collineation<S> L = build_la(A, opts.eps);
  const CubicPoly<double> cp = to_float_poly(charpoly(L));
  const Collineation<double> Lf = to_float_collineation(L);
  const Polygon<double> Af = to_float_polygon(A);

  LimitResult res;
  const CubicRoots roots = solve_cubic(cp);
  res.real_eigenvalues = roots.roots;
  res.has_complex_pair = roots.has_complex_pair;

  std::vector<double> distinct;
  for (double r : roots.roots)
    if (distinct.empty() || r != distinct.back()) distinct.push_back(r);

  for (double lambda : distinct) {
    EigenCandidate cand;
    cand.lambda = lambda;
    try {
      const HPoint<double> v = eigenvector_for(Lf, lambda);
      cand.point = project(v, opts.eps);
      cand.residual = detail::residual_of(Lf, lambda, v);
      cand.in_hull = in_hull(Af, *cand.point, opts.eps);
    } catch (const Error& e) {
      cand.failure = error_code_name(e.code());
    }
    res.candidates.push_back(cand);
  }

  std::vector<const EigenCandidate*> hits;
  for (const auto& c : res.candidates)
    if (c.point && c.in_hull) hits.push_back(&c);

  std::optional<Point2<double>> oracle;
  auto iteration_oracle = [&]() -> const Point2<double>& {
    if (!oracle)
      oracle = limit_by_iteration(A, opts.iteration_tol, opts.iteration);
    return *oracle;
  };

  const EigenCandidate* chosen = nullptr;
  if (hits.empty()) {
    throw Error(ErrorCode::NoCandidateInHull,
                "no eigenvector projects into the hull of the input");
  } else if (hits.size() == 1) {
    chosen = hits.front();
  } else {
    if (!opts.iteration_cross_check)
      throw Error(ErrorCode::AmbiguousSelection,
                  std::to_string(hits.size()) +
                      " eigenvectors lie in the hull; enable the iteration "
                      "cross-check to disambiguate");
    double best = std::numeric_limits<double>::infinity();
    for (const auto* c : hits) {
      const double dev = std::max(std::abs(c->point->x - iteration_oracle().x),
                                  std::abs(c->point->y - iteration_oracle().y));
      if (dev < best) {
        best = dev;
        chosen = c;
      }
    }
  }

  res.limit = *chosen->point;
  res.lambda = chosen->lambda;
  res.residual = chosen->residual;
  res.selected_largest_root =
      !res.real_eigenvalues.empty() &&
      chosen->lambda == res.real_eigenvalues.back();

  if (opts.iteration_cross_check) {
    res.iteration_deviation =
        std::max(std::abs(res.limit.x - iteration_oracle().x),
                 std::abs(res.limit.y - iteration_oracle().y));
  }
  return res;
}

}  // namespace pentalimit
