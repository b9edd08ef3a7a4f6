#pragma once

#include <cmath>
#include <string>

#include "pentalimit/rational.hpp"

namespace pentalimit {

// Degeneracy predicates are exact on Rat and epsilon-based on double.
// One absolute epsilon governs all float-mode zero tests.
inline constexpr double kDefaultEpsilon = 1e-9;

template <class S>
struct scalar_traits;

template <>
struct scalar_traits<Rat> {
  static constexpr bool exact = true;
  static bool is_zero(const Rat& x, double /*eps*/) { return x.sign() == 0; }
  static int sign(const Rat& x, double /*eps*/) { return x.sign(); }
  static double to_double(const Rat& x) { return x.to_double(); }
  static std::string str(const Rat& x) { return x.str(); }
  static const char* mode_name() { return "exact"; }
};

template <>
struct scalar_traits<double> {
  static constexpr bool exact = false;
  static bool is_zero(double x, double eps) { return std::abs(x) < eps; }
  static int sign(double x, double eps) {
    if (std::abs(x) < eps) return 0;
    return x > 0 ? 1 : -1;
  }
  static double to_double(double x) { return x; }
  static std::string str(double x) { return std::to_string(x); }
  static const char* mode_name() { return "float"; }
};

template <class S>
bool scalar_is_zero(const S& x, double eps = kDefaultEpsilon) {
  return scalar_traits<S>::is_zero(x, eps);
}

template <class S>
int scalar_sign(const S& x, double eps = kDefaultEpsilon) {
  return scalar_traits<S>::sign(x, eps);
}

template <class S>
double scalar_to_double(const S& x) {
  return scalar_traits<S>::to_double(x);
}

// Explicit mode conversions; there is no implicit mixing anywhere.
inline double to_float_scalar(const Rat& x) { return x.to_double(); }
inline double to_float_scalar(double x) { return x; }
inline Rat to_exact_scalar(const Rat& x) { return x; }
inline Rat to_exact_scalar(double x) { return Rat::from_double(x); }

}  // namespace pentalimit
