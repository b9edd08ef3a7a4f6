#pragma once

#include <cmath>
#include <random>
#include <vector>

#include "pentalimit/geom.hpp"
#include "pentalimit/mat3.hpp"

namespace pentalimit {

// Random convex n-gon with integer coordinates: sorted angles on a radially
// perturbed circle, scaled and rounded, retried until the rounded polygon is
// still convex and generic.
inline Polygon<Rat> random_convex_polygon(std::mt19937_64& rng, int n,
                                          long scale = 120) {
  std::uniform_real_distribution<double> gap(0.2, 1.2);
  std::uniform_real_distribution<double> radius(0.85, 1.15);
  for (int attempt = 0; attempt < 1000; ++attempt) {
    std::vector<double> gaps(static_cast<std::size_t>(n));
    double total = 0;
    for (auto& g : gaps) total += (g = gap(rng));
    std::vector<Point2<Rat>> pts;
    double angle = 0;
    for (int i = 0; i < n; ++i) {
      angle += gaps[static_cast<std::size_t>(i)] / total * 2.0 * M_PI;
      const double r = radius(rng) * static_cast<double>(scale);
      pts.push_back({Rat(std::lround(r * std::cos(angle))),
                     Rat(std::lround(r * std::sin(angle)))});
    }
    try {
      Polygon<Rat> A(std::move(pts));
      if (is_convex(A) && is_generic(A)) return A;
    } catch (const Error&) {
    }
  }
  throw Error(ErrorCode::InvalidInput,
              "failed to sample a convex generic polygon");
}

// Random axis-aligned 2m-gon in the reference labeling, integer coordinates.
// Coordinates are drawn without immediate repeats so no edge degenerates.
inline Polygon<Rat> random_axis_aligned_polygon(std::mt19937_64& rng, int m,
                                                long range = 50) {
  std::uniform_int_distribution<long> coord(-range, range);
  auto draw_distinct = [&](int count) {
    std::vector<long> vals;
    while (static_cast<int>(vals.size()) < count) {
      const long v = coord(rng);
      if (vals.empty() ||
          (v != vals.back() && !(static_cast<int>(vals.size()) == count - 1 &&
                                 v == vals.front())))
        vals.push_back(v);
    }
    return vals;
  };
  const std::vector<long> xs = draw_distinct(m);
  const std::vector<long> ys = draw_distinct(m);
  std::vector<Point2<Rat>> pts;
  for (int i = 0; i < m; ++i) {
    const long y_prev = ys[static_cast<std::size_t>((i + m - 1) % m)];
    pts.push_back({Rat(xs[static_cast<std::size_t>(i)]), Rat(y_prev)});
    pts.push_back({Rat(xs[static_cast<std::size_t>(i)]),
                   Rat(ys[static_cast<std::size_t>(i)])});
  }
  return Polygon<Rat>(std::move(pts));
}

// Random point of conv(A) as an exact convex combination of the vertices.
inline Point2<Rat> random_hull_point(std::mt19937_64& rng,
                                     const Polygon<Rat>& A) {
  std::uniform_int_distribution<long> weight(1, 12);
  Rat wx(0), wy(0), wsum(0);
  for (const auto& p : A.vertices()) {
    const Rat w(weight(rng));
    wx += w * p.x;
    wy += w * p.y;
    wsum += w;
  }
  return {wx / wsum, wy / wsum};
}

// Product of random integer shears: determinant exactly 1, small entries.
inline Mat3<Rat> random_unimodular(std::mt19937_64& rng, int shears = 8) {
  std::uniform_int_distribution<int> idx(0, 2);
  std::uniform_int_distribution<long> amount(-3, 3);
  Mat3<Rat> psi = Mat3<Rat>::identity();
  for (int s = 0; s < shears; ++s) {
    const int i = idx(rng);
    int j = idx(rng);
    while (j == i) j = idx(rng);
    const Rat k(amount(rng));
    Mat3<Rat> shear = Mat3<Rat>::identity();
    shear.m[i][j] = k;
    psi = psi * shear;
  }
  return psi;
}

}  // namespace pentalimit
