#pragma once

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <limits>
#include <stdexcept>

namespace discpack {

// Raised when an operand, intersected with an operation's domain, is empty
// (e.g. acos of [1.5, 2]).
struct domain_empty_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Raised when dividing by an interval that contains zero.
struct division_by_zero_interval : std::runtime_error {
  using std::runtime_error::runtime_error;
};

namespace detail {

inline double next_up(double x) {
  if (std::isnan(x) || x == std::numeric_limits<double>::infinity()) return x;
  if (x == 0.0) return std::numeric_limits<double>::denorm_min();
  auto bits = std::bit_cast<std::uint64_t>(x);
  bits += (x > 0.0) ? 1 : std::uint64_t(-1);
  return std::bit_cast<double>(bits);
}

inline double next_down(double x) {
  if (std::isnan(x) || x == -std::numeric_limits<double>::infinity()) return x;
  if (x == 0.0) return -std::numeric_limits<double>::denorm_min();
  auto bits = std::bit_cast<std::uint64_t>(x);
  bits += (x > 0.0) ? std::uint64_t(-1) : 1;
  return std::bit_cast<double>(bits);
}

// Directed endpoint rounding via exact residuals: the error of a rounded
// +, *, /, sqrt is recovered exactly (TwoSum, resp. one FMA), so the result
// is nudged one ulp only when the rounding actually went the wrong way.
// No rounding-mode state is touched, so every operation is a pure function
// and safe under any concurrent scheduling.

inline double add_down(double a, double b) {
  double s = a + b;
  if (std::isinf(s)) return s > 0 ? std::numeric_limits<double>::max() : s;
  double bp = s - a;
  double err = (a - (s - bp)) + (b - bp);
  return err < 0 ? next_down(s) : s;
}

inline double add_up(double a, double b) {
  double s = a + b;
  if (std::isinf(s)) return s < 0 ? std::numeric_limits<double>::lowest() : s;
  double bp = s - a;
  double err = (a - (s - bp)) + (b - bp);
  return err > 0 ? next_up(s) : s;
}

inline double mul_down(double a, double b) {
  if (a == 0.0 || b == 0.0) return 0.0;
  double p = a * b;
  if (std::isinf(p)) return p > 0 ? std::numeric_limits<double>::max() : p;
  double err = std::fma(a, b, -p);
  return err < 0 ? next_down(p) : p;
}

inline double mul_up(double a, double b) {
  if (a == 0.0 || b == 0.0) return 0.0;
  double p = a * b;
  if (std::isinf(p)) return p < 0 ? std::numeric_limits<double>::lowest() : p;
  double err = std::fma(a, b, -p);
  return err > 0 ? next_up(p) : p;
}

// b must be nonzero; the interval-level guard rejects 0-straddling divisors.
inline double div_down(double a, double b) {
  if (a == 0.0) return 0.0;
  double q = a / b;
  if (std::isinf(q)) return q > 0 ? std::numeric_limits<double>::max() : q;
  double err = std::fma(q, b, -a);  // q*b - a, exact
  bool q_high = (b > 0) ? (err > 0) : (err < 0);
  return q_high ? next_down(q) : q;
}

inline double div_up(double a, double b) {
  if (a == 0.0) return 0.0;
  double q = a / b;
  if (std::isinf(q)) return q < 0 ? std::numeric_limits<double>::lowest() : q;
  double err = std::fma(q, b, -a);
  bool q_low = (b > 0) ? (err < 0) : (err > 0);
  return q_low ? next_up(q) : q;
}

inline double sqrt_down(double a) {
  if (a <= 0.0) return 0.0;
  double s = std::sqrt(a);
  double err = std::fma(s, s, -a);  // s*s - a, exact
  return err > 0 ? next_down(s) : s;
}

inline double sqrt_up(double a) {
  if (a <= 0.0) return 0.0;
  double s = std::sqrt(a);
  double err = std::fma(s, s, -a);
  return err < 0 ? next_up(s) : s;
}

}  // namespace detail

/// Closed real interval with machine-representable endpoints. The carrier of
/// all rigorous numerics: every operation returns an interval containing the
/// exact image of its operands.
struct Interval {
  double lo = 0.0;
  double hi = 0.0;

  Interval() = default;
  explicit constexpr Interval(double x) : lo(x), hi(x) {}
  constexpr Interval(double l, double h) : lo(l), hi(h) {}

  double width() const { return detail::add_up(hi, -lo); }
  double mid() const { return 0.5 * (lo + hi); }
};

inline Interval exact(double x) { return Interval(x); }

/// Encloses mantissa * 10^exp10: tabulated decimal constants are rounded
/// outward so the stored interval contains the printed decimal.

Interval from_decimal(long long mantissa, int exp10);

inline Interval operator+(Interval a, Interval b) {
  return {detail::add_down(a.lo, b.lo), detail::add_up(a.hi, b.hi)};
}

inline Interval operator-(Interval a) { return {-a.hi, -a.lo}; }

inline Interval operator-(Interval a, Interval b) { return a + (-b); }

inline Interval operator*(Interval a, Interval b) {
  using detail::mul_down;
  using detail::mul_up;
  if (a.lo >= 0) {
    if (b.lo >= 0) return {mul_down(a.lo, b.lo), mul_up(a.hi, b.hi)};
    if (b.hi <= 0) return {mul_down(a.hi, b.lo), mul_up(a.lo, b.hi)};
    return {mul_down(a.hi, b.lo), mul_up(a.hi, b.hi)};
  }
  if (a.hi <= 0) {
    if (b.lo >= 0) return {mul_down(a.lo, b.hi), mul_up(a.hi, b.lo)};
    if (b.hi <= 0) return {mul_down(a.hi, b.hi), mul_up(a.lo, b.lo)};
    return {mul_down(a.lo, b.hi), mul_up(a.lo, b.lo)};
  }
  if (b.lo >= 0) return {mul_down(a.lo, b.hi), mul_up(a.hi, b.hi)};
  if (b.hi <= 0) return {mul_down(a.hi, b.lo), mul_up(a.lo, b.lo)};
  return {std::min(mul_down(a.lo, b.hi), mul_down(a.hi, b.lo)),
          std::max(mul_up(a.lo, b.lo), mul_up(a.hi, b.hi))};
}

inline Interval operator/(Interval a, Interval b) {
  using detail::div_down;
  using detail::div_up;
  if (b.lo <= 0 && b.hi >= 0)
    throw division_by_zero_interval("interval divisor contains zero");
  if (b.lo > 0) {
    if (a.lo >= 0) return {div_down(a.lo, b.hi), div_up(a.hi, b.lo)};
    if (a.hi <= 0) return {div_down(a.lo, b.lo), div_up(a.hi, b.hi)};
    return {div_down(a.lo, b.lo), div_up(a.hi, b.lo)};
  }
  if (a.lo >= 0) return {div_down(a.hi, b.hi), div_up(a.lo, b.lo)};
  if (a.hi <= 0) return {div_down(a.hi, b.lo), div_up(a.lo, b.hi)};
  return {div_down(a.hi, b.hi), div_up(a.lo, b.hi)};
}

inline Interval operator+(Interval a, double b) { return a + Interval(b); }
inline Interval operator-(Interval a, double b) { return a - Interval(b); }
inline Interval operator*(Interval a, double b) { return a * Interval(b); }
inline Interval operator/(Interval a, double b) { return a / Interval(b); }
inline Interval operator+(double a, Interval b) { return Interval(a) + b; }
inline Interval operator-(double a, Interval b) { return Interval(a) - b; }
inline Interval operator*(double a, Interval b) { return Interval(a) * b; }
inline Interval operator/(double a, Interval b) { return Interval(a) / b; }

inline Interval square(Interval a) {
  using detail::mul_down;
  using detail::mul_up;
  if (a.lo >= 0) return {mul_down(a.lo, a.lo), mul_up(a.hi, a.hi)};
  if (a.hi <= 0) return {mul_down(a.hi, a.hi), mul_up(a.lo, a.lo)};
  return {0.0, std::max(mul_up(a.lo, a.lo), mul_up(a.hi, a.hi))};
}

/// Domain-clamped to [0, inf); empty intersection raises domain_empty_error.
inline Interval sqrt(Interval a) {
  if (a.hi < 0) throw domain_empty_error("sqrt of a negative interval");
  double lo = std::max(a.lo, 0.0);
  return {detail::sqrt_down(lo), detail::sqrt_up(a.hi)};
}

inline Interval abs(Interval a) {
  if (a.lo >= 0) return a;
  if (a.hi <= 0) return -a;
  return {0.0, std::max(-a.lo, a.hi)};
}

inline Interval min(Interval a, Interval b) {
  return {std::min(a.lo, b.lo), std::min(a.hi, b.hi)};
}

inline Interval max(Interval a, Interval b) {
  return {std::max(a.lo, b.lo), std::max(a.hi, b.hi)};
}

inline Interval hull(Interval a, Interval b) {
  return {std::min(a.lo, b.lo), std::max(a.hi, b.hi)};
}

/// True iff a.hi <= b.lo: a certified proof that x <= y for all x in a, y in b.
inline bool sure_le(Interval a, Interval b) { return a.hi <= b.lo; }

inline bool sure_lt(Interval a, Interval b) { return a.hi < b.lo; }

inline bool contains_zero(Interval a) { return a.lo <= 0.0 && a.hi >= 0.0; }

inline bool contains(Interval a, double x) { return a.lo <= x && x <= a.hi; }

inline bool subset(Interval a, Interval b) {
  return b.lo <= a.lo && a.hi <= b.hi;
}

/// Tightest enclosure of pi at 53-bit precision.
inline Interval pi() { return {0x1.921fb54442d18p+1, 0x1.921fb54442d19p+1}; }
inline Interval two_pi() { return pi() * Interval(2.0); }
inline Interval half_pi() { return pi() * Interval(0.5); }

/// Domain-clamped to [-1, 1]; empty intersection raises domain_empty_error.
Interval acos(Interval a);
Interval asin(Interval a);
Interval sin(Interval a);

}  // namespace discpack
