#pragma once
// A measure value that is either an exact rational or a plain double.
// Values built from counts or intension measures stay exact through sums,
// products and divisions; anything touched by a double collapses to real.
// Callers decide the comparison regime via eq/le helpers: exact when both
// sides are exact, absolute tolerance otherwise.

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>

#include "sigmax/rational.hpp"

namespace sigmax {

class Scalar {
 public:
  constexpr Scalar() : exact_(true), q_(), r_(0.0) {}
  Scalar(const Rational& q) : exact_(true), q_(q), r_(q.to_double()) {}  // NOLINT
  Scalar(std::int64_t n) : exact_(true), q_(n), r_(static_cast<double>(n)) {}  // NOLINT
  Scalar(int n) : Scalar(static_cast<std::int64_t>(n)) {}  // NOLINT

  static Scalar real(double r) {
    Scalar s;
    s.exact_ = false;
    s.r_ = r;
    return s;
  }

  bool exact() const { return exact_; }
  double value() const { return exact_ ? q_.to_double() : r_; }

  const Rational& rational() const {
    if (!exact_) throw std::logic_error("Scalar: not exact");
    return q_;
  }

  bool is_zero() const { return exact_ ? q_.is_zero() : r_ == 0.0; }

  std::string to_string() const {
    return exact_ ? q_.to_string() : std::to_string(r_);
  }

  friend Scalar operator+(const Scalar& a, const Scalar& b) {
    if (a.exact_ && b.exact_) return Scalar(a.q_ + b.q_);
    return real(a.value() + b.value());
  }
  friend Scalar operator-(const Scalar& a, const Scalar& b) {
    if (a.exact_ && b.exact_) return Scalar(a.q_ - b.q_);
    return real(a.value() - b.value());
  }
  friend Scalar operator*(const Scalar& a, const Scalar& b) {
    if (a.exact_ && b.exact_) return Scalar(a.q_ * b.q_);
    return real(a.value() * b.value());
  }
  friend Scalar operator/(const Scalar& a, const Scalar& b) {
    if (a.exact_ && b.exact_) return Scalar(a.q_ / b.q_);
    const double d = b.value();
    if (d == 0.0) throw std::domain_error("Scalar: division by zero");
    return real(a.value() / d);
  }

  // Order compares exactly when both sides are exact, by double value otherwise.
  friend bool operator<(const Scalar& a, const Scalar& b) {
    if (a.exact_ && b.exact_) return a.q_ < b.q_;
    return a.value() < b.value();
  }

 private:
  bool exact_;
  Rational q_;
  double r_;
};

inline Scalar scalar_max(const Scalar& a, const Scalar& b) { return a < b ? b : a; }
inline Scalar scalar_min(const Scalar& a, const Scalar& b) { return b < a ? b : a; }

// Equality at the regime the operands allow: exact when both exact, |a-b| <= tol otherwise.
inline bool scalar_eq(const Scalar& a, const Scalar& b, double tol) {
  if (a.exact() && b.exact()) return a.rational() == b.rational();
  return std::fabs(a.value() - b.value()) <= tol;
}

// a <= b, with slack tol when either side is inexact.
inline bool scalar_le(const Scalar& a, const Scalar& b, double tol) {
  if (a.exact() && b.exact()) return !(b.rational() < a.rational());
  return a.value() <= b.value() + tol;
}

}  // namespace sigmax
