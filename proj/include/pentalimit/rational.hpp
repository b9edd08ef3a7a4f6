#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <iosfwd>
#include <string>

#include "pentalimit/error.hpp"

namespace pentalimit {

// Arbitrary-precision rational, always reduced with positive denominator.
// Thin value wrapper around GMP's mpq_class so arithmetic yields plain Rat
// instead of gmp expression templates.
class Rat {
 public:
  Rat() : v_(0) {}
  Rat(int n) : v_(n) {}             // NOLINT(runtime/explicit)
  Rat(long n) : v_(static_cast<signed long>(n)) {}  // NOLINT
  Rat(long n, long d) {
    if (d == 0) throw Error(ErrorCode::InvalidInput, "zero denominator");
    v_ = mpq_class(n, d);
    v_.canonicalize();
  }
  explicit Rat(const mpq_class& q) : v_(q) { v_.canonicalize(); }

  // Accepts "p", "p/q", and plain decimal strings like "-1.25" or "2e3".
  static Rat parse(const std::string& s);

  // Exact binary expansion of the double (every finite double is rational).
  static Rat from_double(double x);

  const mpq_class& raw() const { return v_; }
  mpz_class numerator() const { return v_.get_num(); }
  mpz_class denominator() const { return v_.get_den(); }

  double to_double() const { return v_.get_d(); }
  bool is_integer() const { return v_.get_den() == 1; }

  // "p" when the denominator is 1, else "p/q".
  std::string str() const {
    return is_integer() ? v_.get_num().get_str() : v_.get_str();
  }

  int sign() const { return sgn(v_); }

  friend Rat operator+(const Rat& a, const Rat& b) { return wrap(a.v_ + b.v_); }
  friend Rat operator-(const Rat& a, const Rat& b) { return wrap(a.v_ - b.v_); }
  friend Rat operator*(const Rat& a, const Rat& b) { return wrap(a.v_ * b.v_); }
  friend Rat operator/(const Rat& a, const Rat& b) {
    if (sgn(b.v_) == 0) throw Error(ErrorCode::InvalidInput, "division by zero");
    return wrap(a.v_ / b.v_);
  }
  Rat operator-() const { return wrap(-v_); }

  Rat& operator+=(const Rat& o) { v_ += o.v_; return *this; }
  Rat& operator-=(const Rat& o) { v_ -= o.v_; return *this; }
  Rat& operator*=(const Rat& o) { v_ *= o.v_; return *this; }
  Rat& operator/=(const Rat& o) { *this = *this / o; return *this; }

  friend bool operator==(const Rat& a, const Rat& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Rat& a, const Rat& b) { return a.v_ != b.v_; }
  friend bool operator<(const Rat& a, const Rat& b) { return a.v_ < b.v_; }
  friend bool operator<=(const Rat& a, const Rat& b) { return a.v_ <= b.v_; }
  friend bool operator>(const Rat& a, const Rat& b) { return a.v_ > b.v_; }
  friend bool operator>=(const Rat& a, const Rat& b) { return a.v_ >= b.v_; }

  friend Rat abs(const Rat& a) { return wrap(abs(a.v_)); }

  friend std::ostream& operator<<(std::ostream& os, const Rat& r);

 private:
  static Rat wrap(mpq_class q) {
    Rat r;
    r.v_ = std::move(q);
    return r;
  }
  mpq_class v_;
};

std::ostream& operator<<(std::ostream& os, const Rat& r);

}  // namespace pentalimit
