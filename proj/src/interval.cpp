#include "discpack/interval.hpp"

#include <array>
#include <cassert>

namespace discpack {

namespace {

constexpr int kAsinTerms = 34;
constexpr int kSinTerms = 26;

// asin(x) = sum c_k x^(2k+1), c_0 = 1, c_{k+1} = c_k (2k+1)^2 / ((2k+2)(2k+3)).
const std::array<Interval, kAsinTerms + 1>& asin_coeffs() {
  static const auto table = [] {
    std::array<Interval, kAsinTerms + 1> c{};
    c[0] = exact(1.0);
    for (int k = 0; k < kAsinTerms; ++k) {
      double n = double(2 * k + 1) * double(2 * k + 1);
      double d = double(2 * k + 2) * double(2 * k + 3);
      c[k + 1] = c[k] * exact(n) / exact(d);
    }
    return c;
  }();
  return table;
}

// 1/(2k+1)! for the sine series.
const std::array<Interval, kSinTerms + 1>& sin_coeffs() {
  static const auto table = [] {
    std::array<Interval, kSinTerms + 1> c{};
    c[0] = exact(1.0);
    for (int k = 0; k < kSinTerms; ++k)
      c[k + 1] = c[k] / exact(double(2 * k + 2) * double(2 * k + 3));
    return c;
  }();
  return table;
}

// Rigorous asin over an interval within [-0.51, 0.51]: the series has
// positive coefficients and odd powers, so one interval Horner pass gives
// endpoint-sharp bounds; the tail is majorized geometrically (term ratio is
// bounded by x^2 < 1). Truncates adaptively once the power underflows the
// target accuracy.
Interval asin_core(Interval x) {
  assert(x.lo >= -0.51 && x.hi <= 0.51);
  const auto& c = asin_coeffs();
  Interval x2 = square(x);
  Interval p = x;
  Interval sum = exact(0.0);
  int k = 0;
  for (; k < kAsinTerms; ++k) {
    sum = sum + c[k] * p;
    p = p * x2;
    if (std::max(std::fabs(p.lo), std::fabs(p.hi)) < 1e-19) {
      ++k;
      break;
    }
  }
  if (k > kAsinTerms) k = kAsinTerms;
  Interval tail = c[k] * abs(p) / (exact(1.0) - x2);
  return sum + Interval(-tail.hi, tail.hi);
}

// acos over one monotone piece of the domain, chosen by which reduction
// keeps the series argument at or below 0.5.
Interval acos_piece(Interval x) {
  if (x.lo >= 0.5) {
    Interval t = sqrt((exact(1.0) - x) * exact(0.5));
    return asin_core(t) * exact(2.0);
  }
  if (x.hi <= -0.5) {
    Interval t = sqrt((exact(1.0) + x) * exact(0.5));
    return pi() - asin_core(t) * exact(2.0);
  }
  return half_pi() - asin_core(x);
}

Interval acos_whole(Interval x) {
  // split at +-0.5 so each piece uses one series pass
  Interval out;
  bool have = false;
  auto add = [&](Interval piece) {
    Interval v = acos_piece(piece);
    out = have ? hull(out, v) : v;
    have = true;
  };
  if (x.hi > 0.5) add(Interval(std::max(x.lo, 0.5), x.hi));
  if (x.lo < -0.5) add(Interval(x.lo, std::min(x.hi, -0.5)));
  if (x.hi >= -0.5 && x.lo <= 0.5)
    add(Interval(std::max(x.lo, -0.5), std::min(x.hi, 0.5)));
  return out;
}

// Rigorous sin of a point with |t| <~ 5 (post reduction): alternating Taylor
// sum with a majorized tail.
Interval sin_point(double t) {
  assert(std::fabs(t) <= 8.0);  // reduced range plus reduction slop
  const auto& c = sin_coeffs();
  Interval X = exact(t);
  Interval x2 = square(X);
  Interval p = X;
  Interval sum = exact(0.0);
  for (int k = 0; k < kSinTerms; ++k) {
    Interval term = c[k] * p;
    sum = (k % 2 == 0) ? sum + term : sum - term;
    p = p * x2;
  }
  double ratio = (x2.hi) / (double(2 * kSinTerms + 2) * double(2 * kSinTerms + 3));
  assert(ratio < 0.5);
  Interval tail = c[kSinTerms] * abs(p) / (exact(1.0) - exact(ratio));
  return sum + Interval(-tail.hi, tail.hi);
}

bool possibly_contains(Interval y, Interval c) {
  return !(y.hi < c.lo || y.lo > c.hi);
}

}  // namespace

Interval acos(Interval a) {
  if (a.lo > 1.0 || a.hi < -1.0)
    throw domain_empty_error("acos operand outside [-1, 1]");
  return acos_whole({std::max(a.lo, -1.0), std::min(a.hi, 1.0)});
}

Interval asin(Interval a) {
  if (a.lo > 1.0 || a.hi < -1.0)
    throw domain_empty_error("asin operand outside [-1, 1]");
  Interval x{std::max(a.lo, -1.0), std::min(a.hi, 1.0)};
  if (x.lo >= -0.5 && x.hi <= 0.5) return asin_core(x);
  return half_pi() - acos_whole(x);
}

Interval sin(Interval a) {
  const Interval one(1.0);
  if (a.width() >= two_pi().lo) return {-1.0, 1.0};
  double k = std::nearbyint(a.mid() / 3.141592653589793);
  Interval y = a - exact(k) * pi();
  Interval s = hull(sin_point(y.lo), sin_point(y.hi));
  Interval hp = half_pi();
  if (possibly_contains(y, hp)) s = hull(s, one);
  if (possibly_contains(y, -hp)) s = hull(s, -one);
  if (possibly_contains(y, hp * exact(3.0))) s = hull(s, -one);
  if (possibly_contains(y, -(hp * exact(3.0)))) s = hull(s, one);
  if (std::fmod(std::fabs(k), 2.0) == 1.0) s = -s;
  return {std::max(s.lo, -1.0), std::min(s.hi, 1.0)};
}

Interval from_decimal(long long mantissa, int exp10) {
  assert(std::llabs(mantissa) < (1LL << 53));
  // 10^k is an exact double for k <= 22.
  static const auto pow10 = [] {
    std::array<double, 23> t{};
    t[0] = 1.0;
    for (int k = 1; k <= 22; ++k) t[k] = t[k - 1] * 10.0;
    return t;
  }();
  Interval v = exact(double(mantissa));
  int e = exp10;
  while (e > 0) {
    int step = std::min(e, 22);
    v = v * exact(pow10[step]);
    e -= step;
  }
  while (e < 0) {
    int step = std::min(-e, 22);
    v = v / exact(pow10[step]);
    e += step;
  }
  return v;
}

}  // namespace discpack
