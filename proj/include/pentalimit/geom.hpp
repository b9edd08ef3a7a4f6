#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "pentalimit/error.hpp"
#include "pentalimit/scalar.hpp"

namespace pentalimit {

template <class S>
struct Point2 {
  S x{};
  S y{};

  friend bool operator==(const Point2& a, const Point2& b) {
    return a.x == b.x && a.y == b.y;
  }
};

// Homogeneous coordinate triple. The tag keeps point coordinates and line
// (dual) coordinates apart in the type system; crossing two triples of one
// kind lands in the other.
enum class Coords { point, line };

constexpr Coords dual_of(Coords t) {
  return t == Coords::point ? Coords::line : Coords::point;
}

template <class S, Coords Tag>
struct HomoVec {
  S a{};
  S b{};
  S c{};

  bool all_zero(double eps = kDefaultEpsilon) const {
    return scalar_is_zero(a, eps) && scalar_is_zero(b, eps) &&
           scalar_is_zero(c, eps);
  }
};

template <class S>
using HPoint = HomoVec<S, Coords::point>;
template <class S>
using HLine = HomoVec<S, Coords::line>;

template <class S, Coords Tag>
HomoVec<S, dual_of(Tag)> cross(const HomoVec<S, Tag>& u,
                               const HomoVec<S, Tag>& v) {
  return {u.b * v.c - u.c * v.b, u.c * v.a - u.a * v.c,
          u.a * v.b - u.b * v.a};
}

template <class S, Coords Tag>
S det3(const HomoVec<S, Tag>& u, const HomoVec<S, Tag>& v,
       const HomoVec<S, Tag>& w) {
  return u.a * (v.b * w.c - v.c * w.b) - v.a * (u.b * w.c - u.c * w.b) +
         w.a * (u.b * v.c - u.c * v.b);
}

template <class S, Coords Tag>
S dot(const HomoVec<S, Tag>& u, const HomoVec<S, dual_of(Tag)>& v) {
  return u.a * v.a + u.b * v.b + u.c * v.c;
}

// Projective equality: u ~ v iff cross(u, v) = 0 and neither is the zero
// triple. Homogeneous vectors are never normalized, so this is the equality
// test used everywhere.
template <class S, Coords Tag>
bool proportional(const HomoVec<S, Tag>& u, const HomoVec<S, Tag>& v,
                  double eps = kDefaultEpsilon) {
  if (u.all_zero(eps) || v.all_zero(eps)) return false;
  return cross(u, v).all_zero(eps);
}

template <class S>
HPoint<S> lift(const Point2<S>& p) {
  return {p.x, p.y, S(1)};
}

template <class S>
Point2<S> project(const HPoint<S>& v, double eps = kDefaultEpsilon) {
  if (scalar_is_zero(v.c, eps))
    throw Error(ErrorCode::PointAtInfinity, "third coordinate vanishes");
  return {v.a / v.c, v.b / v.c};
}

template <class S>
HLine<S> join(const HPoint<S>& p, const HPoint<S>& q,
              double eps = kDefaultEpsilon) {
  HLine<S> l = cross(p, q);
  if (l.all_zero(eps))
    throw Error(ErrorCode::DegenerateJoin, "points are proportional");
  return l;
}

template <class S>
HPoint<S> meet(const HLine<S>& l1, const HLine<S>& l2,
               double eps = kDefaultEpsilon) {
  HPoint<S> p = cross(l1, l2);
  if (p.all_zero(eps))
    throw Error(ErrorCode::DegenerateMeet, "lines are proportional");
  return p;
}

// Orientation of the ordered triple (p, q, r): sign of the lifted determinant.
template <class S>
int orient(const Point2<S>& p, const Point2<S>& q, const Point2<S>& r,
           double eps = kDefaultEpsilon) {
  return scalar_sign(det3(lift(p), lift(q), lift(r)), eps);
}

// Cyclic labeled vertex list, n >= 3, consecutive vertices distinct.
// All vertex indices are interpreted modulo n.
template <class S>
class Polygon {
 public:
  explicit Polygon(std::vector<Point2<S>> vertices)
      : v_(std::move(vertices)) {
    const std::size_t n = v_.size();
    if (n < 3)
      throw Error(ErrorCode::InvalidInput, "polygon needs at least 3 vertices");
    for (std::size_t i = 0; i < n; ++i)
      if (v_[i] == v_[(i + 1) % n])
        throw Error(ErrorCode::InvalidInput,
                    "consecutive vertices coincide", static_cast<long>(i));
  }

  std::size_t size() const { return v_.size(); }

  // Index taken modulo n; accepts negative offsets.
  const Point2<S>& at(long i) const {
    const long n = static_cast<long>(v_.size());
    long r = i % n;
    if (r < 0) r += n;
    return v_[static_cast<std::size_t>(r)];
  }

  const std::vector<Point2<S>>& vertices() const { return v_; }

  HPoint<S> lift_at(long i) const { return lift(at(i)); }

  std::vector<HPoint<S>> lifts() const {
    std::vector<HPoint<S>> out;
    out.reserve(v_.size());
    for (const auto& p : v_) out.push_back(lift(p));
    return out;
  }

 private:
  std::vector<Point2<S>> v_;
};

template <class S>
bool is_convex(const Polygon<S>& A, double eps = kDefaultEpsilon) {
  const long n = static_cast<long>(A.size());
  int expected = 0;
  for (long i = 0; i < n; ++i) {
    // Cross product of consecutive edge vectors, as the lifted determinant
    // of three consecutive vertices.
    int s = orient(A.at(i), A.at(i + 1), A.at(i + 2), eps);
    if (s == 0) return false;
    if (expected == 0) expected = s;
    if (s != expected) return false;
  }
  return true;
}

enum class GenericityMode { consecutive, strict };

// Consecutive mode checks exactly the determinants that appear as
// denominators in the collineation formula; strict mode checks every
// vertex triple.
template <class S>
bool is_generic(const Polygon<S>& A,
                GenericityMode mode = GenericityMode::consecutive,
                double eps = kDefaultEpsilon) {
  const long n = static_cast<long>(A.size());
  if (mode == GenericityMode::consecutive) {
    for (long j = 0; j < n; ++j)
      if (scalar_is_zero(det3(A.lift_at(j - 1), A.lift_at(j), A.lift_at(j + 1)),
                         eps))
        return false;
    return true;
  }
  for (long i = 0; i < n; ++i)
    for (long j = i + 1; j < n; ++j)
      for (long k = j + 1; k < n; ++k)
        if (scalar_is_zero(det3(A.lift_at(i), A.lift_at(j), A.lift_at(k)), eps))
          return false;
  return true;
}

// Index of the first consecutive triple (centered at the returned j) whose
// lifted determinant vanishes, or -1 when none does.
template <class S>
long first_degenerate_triple(const Polygon<S>& A,
                             double eps = kDefaultEpsilon) {
  const long n = static_cast<long>(A.size());
  for (long j = 0; j < n; ++j)
    if (scalar_is_zero(det3(A.lift_at(j - 1), A.lift_at(j), A.lift_at(j + 1)),
                       eps))
      return j;
  return -1;
}

// Weak containment in the convex hull of a convex polygon.
template <class S>
bool in_hull(const Polygon<S>& A, const Point2<S>& p,
             double eps = kDefaultEpsilon) {
  if (!is_convex(A, eps))
    throw Error(ErrorCode::NotConvex, "hull test needs a convex polygon");
  const long n = static_cast<long>(A.size());
  const int orientation = orient(A.at(0), A.at(1), A.at(2), eps);
  for (long i = 0; i < n; ++i) {
    const S d = det3(A.lift_at(i), A.lift_at(i + 1), lift(p));
    if constexpr (scalar_traits<S>::exact) {
      if (scalar_sign(d, eps) * orientation < 0) return false;
    } else {
      if (scalar_to_double(d) * orientation < -eps) return false;
    }
  }
  return true;
}

template <class S>
Polygon<double> to_float_polygon(const Polygon<S>& A) {
  std::vector<Point2<double>> pts;
  pts.reserve(A.size());
  for (const auto& p : A.vertices())
    pts.push_back({scalar_to_double(p.x), scalar_to_double(p.y)});
  return Polygon<double>(std::move(pts));
}

inline Polygon<Rat> to_exact_polygon(const Polygon<double>& A) {
  std::vector<Point2<Rat>> pts;
  pts.reserve(A.size());
  for (const auto& p : A.vertices())
    pts.push_back({Rat::from_double(p.x), Rat::from_double(p.y)});
  return Polygon<Rat>(std::move(pts));
}

}  // namespace pentalimit
