#include "discpack/constants.hpp"

#include <array>
#include <cassert>
#include <string>

namespace discpack {

namespace {

// Minimal polynomials of the small radius r_i, low degree first.
const std::array<std::vector<long long>, 10> kRadiusPoly = {{
    {},
    {9, -8, -10, 0, 1},
    {9, -120, 388, -24, -482, -232, -44, -8, 1},
    {-1, -2, 3, 8},
    {-1, 2, 1},
    {9, -12, -26, -12, 9},
    {1, 4, -10, -28, 1},
    {-1, 3, 2},
    {-1, 6, 3},
    {1, -10, 1},
}};

// Minimal polynomials of the reduced density delta_i / pi.
const std::array<std::vector<long long>, 10> kDensityPoly = {{
    {},
    {-29, 72, 62, 112, 27},
    {243081, -1312200, 2158839, -1938708, 486999, -82440, -4590, 0, 1},
    {-97, 448, -692, 1024},
    {1, -4, 2},
    {757681, -1632960, -2191320, -3919104, 944784},
    {25633, -127104, 133224, 9216, 144},
    {-289, 0, 2924, 0, 4096},
    {-97, 288, 108},
    {390625, 0, -4162200, 0, 144},
}};

// Brackets isolating the physically meaningful root; each is validated by a
// certified sign change before use.
constexpr std::array<std::array<double, 2>, 10> kRadiusBracket = {{
    {0, 0},
    {0.6, 0.7},
    {0.5, 0.6},
    {0.5, 0.6},
    {0.4, 0.5},
    {0.35, 0.45},
    {0.3, 0.4},
    {0.25, 0.3},
    {0.1, 0.2},
    {0.05, 0.15},
}};

constexpr std::array<std::array<double, 2>, 10> kDensityBracket = {{
    {0, 0},
    {0.28, 0.30},
    {0.28, 0.30},
    {0.28, 0.30},
    {0.28, 0.30},
    {0.29, 0.295},
    {0.29, 0.30},
    {0.29, 0.30},
    {0.30, 0.31},
    {0.30, 0.31},
}};

struct Dec {
  long long mant;
  int exp;
};

// Deviation coefficients m_1, m_r (zeros are bumped to 1e-14 below).
constexpr std::array<std::array<Dec, 2>, 10> kMTable = {{
    {{{0, 0}, {0, 0}}},
    {{{0, 0}, {5, -4}}},
    {{{16, -2}, {87, -3}}},
    {{{0, 0}, {28, -5}}},
    {{{0, 0}, {21, -4}}},
    {{{0, 0}, {48, -3}}},
    {{{91, -4}, {21, -4}}},
    {{{0, 0}, {11, -4}}},
    {{{0, 0}, {2, -3}}},
    {{{0, 0}, {2058, -6}}},
}};

// Vertex potential caps Z_1, Z_r.
constexpr std::array<std::array<Dec, 2>, 10> kZTable = {{
    {{{0, 0}, {0, 0}}},
    {{{75, -16}, {23, -5}}},
    {{{11, -3}, {46, -4}}},
    {{{18, -15}, {25, -5}}},
    {{{5, -15}, {96, -5}}},
    {{{13, -15}, {76, -4}}},
    {{{13, -4}, {16, -4}}},
    {{{92, -16}, {11, -4}}},
    {{{81, -16}, {12, -4}}},
    {{{2333, -17}, {8033, -7}}},
}};

constexpr std::array<Dec, 10> kEpsTable = {{
    {0, 0},
    {79, -3},
    {20, -3},
    {61, -3},
    {39, -3},
    {12, -3},
    {27, -3},
    {18, -3},
    {49, -4},
    {1718, -6},
}};

// Edge potential thresholds and slopes: l11 q11 l1r q1r lrr qrr.
constexpr std::array<std::array<Dec, 6>, 10> kLQTable = {{
    {{{0, 0}, {0, 0}, {0, 0}, {0, 0}, {0, 0}, {0, 0}}},
    {{{27, -1}, {1, -1}, {23, -1}, {1, -1}, {19, -1}, {1, -1}}},
    {{{26, -1}, {2, -1}, {21, -1}, {2, -1}, {16, -1}, {2, -1}}},
    {{{26, -1}, {1, -1}, {22, -1}, {2, -1}, {165, -2}, {1, -1}}},
    {{{25, -1}, {15, -2}, {18, -1}, {2, -1}, {12, -1}, {2, -1}}},
    {{{24, -1}, {5, -2}, {18, -1}, {5, -2}, {11, -1}, {7, -2}}},
    {{{25, -1}, {2, -1}, {175, -2}, {2, -1}, {1, 0}, {2, -1}}},
    {{{24, -1}, {8, -2}, {16, -1}, {5, -2}, {8, -1}, {1, -1}}},
    {{{224, -2}, {2, -2}, {133, -2}, {15, -3}, {44, -2}, {2, -2}}},
    {{{217, -2}, {2, -2}, {121787, -5}, {15, -3}, {285729, -6}, {2, -2}}},
}};

Interval dec(Dec d) { return from_decimal(d.mant, d.exp); }

void check_case(int case_id) {
  if (case_id < 1 || case_id > 9)
    throw invalid_case_error("case id must be in 1..9, got " +
                             std::to_string(case_id));
}

// -1, 0 (indeterminate) or +1.
int certified_sign(Interval v) {
  if (v.lo > 0) return 1;
  if (v.hi < 0) return -1;
  return 0;
}

void require(bool ok, const char* what) {
  if (!ok) throw std::logic_error(std::string("CaseParams invariant: ") + what);
}

}  // namespace

const std::vector<long long>& radius_polynomial(int case_id) {
  check_case(case_id);
  return kRadiusPoly[case_id];
}

const std::vector<long long>& density_polynomial(int case_id) {
  check_case(case_id);
  return kDensityPoly[case_id];
}

Interval eval_polynomial(const std::vector<long long>& coeffs, Interval x) {
  Interval acc = exact(0.0);
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it)
    acc = acc * x + exact(double(*it));
  return acc;
}

Interval poly_root_refine(const std::vector<long long>& coeffs,
                          Interval bracket, double target_width) {
  double lo = bracket.lo, hi = bracket.hi;
  int slo = certified_sign(eval_polynomial(coeffs, exact(lo)));
  int shi = certified_sign(eval_polynomial(coeffs, exact(hi)));
  if (slo == 0 || shi == 0 || slo == shi)
    throw no_sign_change_error("no certified sign change on the bracket");

  for (int iter = 0; iter < 200; ++iter) {
    double w = hi - lo;
    if (w <= target_width) break;
    double mid = lo + 0.5 * w;
    if (!(mid > lo && mid < hi)) break;  // bracket at machine resolution
    int sm = 0;
    double m = mid;
    const double offsets[4] = {0.0, 0.25 * w, -0.25 * w, 0.125 * w};
    for (double off : offsets) {
      double cand = mid + off;
      if (!(cand > lo && cand < hi)) continue;
      sm = certified_sign(eval_polynomial(coeffs, exact(cand)));
      if (sm != 0) {
        m = cand;
        break;
      }
    }
    if (sm == 0) break;  // persistent indeterminacy: return current enclosure
    if (sm == slo)
      lo = m;
    else
      hi = m;
  }
  return {lo, hi};
}

CaseParams case_params(int case_id) {
  check_case(case_id);
  CaseParams p;
  p.case_id = case_id;
  p.r = poly_root_refine(kRadiusPoly[case_id],
                         Interval(kRadiusBracket[case_id][0],
                                  kRadiusBracket[case_id][1]),
                         1e-14);
  p.reduced_density = poly_root_refine(
      kDensityPoly[case_id],
      Interval(kDensityBracket[case_id][0], kDensityBracket[case_id][1]),
      1e-14);
  p.delta = pi() * p.reduced_density;

  const Interval bump = from_decimal(1, -14);
  auto m = kMTable[case_id];
  if (m[0].mant == 0) {
    p.m1 = bump;
    p.m1_bumped = true;
  } else {
    p.m1 = dec(m[0]);
  }
  if (m[1].mant == 0) {
    p.mr = bump;
    p.mr_bumped = true;
  } else {
    p.mr = dec(m[1]);
  }
  p.Z1 = dec(kZTable[case_id][0]);
  p.Zr = dec(kZTable[case_id][1]);
  p.epsilon = dec(kEpsTable[case_id]);
  auto lq = kLQTable[case_id];
  p.l11 = dec(lq[0]);
  p.q11 = dec(lq[1]);
  p.l1r = dec(lq[2]);
  p.q1r = dec(lq[3]);
  p.lrr = dec(lq[4]);
  p.qrr = dec(lq[5]);

  require(p.r.lo > 0 && p.r.hi < 1, "0 < r < 1");
  require(p.r.width() <= 1e-12 && p.delta.width() <= 1e-12,
          "enclosure width <= 1e-12");
  require(p.m1.lo >= 0 && p.mr.lo >= 0 && p.Z1.lo >= 0 && p.Zr.lo >= 0 &&
              p.epsilon.lo >= 0,
          "m, Z, epsilon nonnegative");
  require(p.l11.lo >= 0 && p.l1r.lo >= 0 && p.lrr.lo >= 0 && p.q11.lo >= 0 &&
              p.q1r.lo >= 0 && p.qrr.lo >= 0,
          "l, q nonnegative");
  // Precondition of the epsilon-tight derivation: x + y + eps < l_xy.
  require(sure_lt(exact(2.0) + p.epsilon, p.l11), "2 + eps < l11");
  require(sure_lt(exact(1.0) + p.r + p.epsilon, p.l1r), "1 + r + eps < l1r");
  require(sure_lt(p.r + p.r + p.epsilon, p.lrr), "2r + eps < lrr");
  return p;
}

}  // namespace discpack
