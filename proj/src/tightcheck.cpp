#include "discpack/tightcheck.hpp"

namespace discpack {

namespace {

constexpr RadiusClass L = RadiusClass::Large;
constexpr RadiusClass S = RadiusClass::Small;
constexpr int kMaxRefineDepth = 4;

struct DerivCtx {
  std::array<Interval, 3> r2;  // squared vertex radii
  std::array<Interval, 3> m;   // deviation coefficient per vertex
  Interval delta;
};

DerivCtx deriv_ctx(const std::array<RadiusClass, 3>& classes,
                   const CaseParams& p) {
  DerivCtx c;
  for (int k = 0; k < 3; ++k) {
    c.r2[k] = square(radius_of(classes[k], p));
    c.m[k] = classes[k] == L ? p.m1 : p.mr;
  }
  c.delta = p.delta;
  return c;
}

// dE/dx_i and the angle-derivative magnitudes share the area and cosine
// subexpressions; evaluate them together over an arbitrary sub-box.
struct DerivVals {
  Interval dE;
  Interval dU;  // sum_v m_v |dtheta_v / dx_i|
};

DerivVals derivatives(const DerivCtx& c, const std::array<Interval, 3>& x,
                      int i) {
  int j = (i + 1) % 3, k = (i + 2) % 3;
  Interval A = area(x[0], x[1], x[2]);
  Interval fourA = exact(4.0) * A;
  // cos of the angle at vertex v.
  auto cosv = [&](int v) {
    int a = (v + 1) % 3, b = (v + 2) % 3;
    return (square(x[a]) + square(x[b]) - square(x[v])) /
           (exact(2.0) * x[a] * x[b]);
  };
  Interval dA = x[i] * (square(x[j]) + square(x[k]) - square(x[i])) /
                (exact(8.0) * A);
  // dtheta_i/dx_i = x_i/(2A); dtheta_a/dx_i = -x_a cos(theta_c)/(2A).
  Interval dth_i = x[i] / (exact(2.0) * A);
  Interval dth_j = -(x[j] * cosv(k)) / (exact(2.0) * A);
  Interval dth_k = -(x[k] * cosv(j)) / (exact(2.0) * A);
  DerivVals out;
  out.dE = c.delta * dA -
           (c.r2[i] * dth_i + c.r2[j] * dth_j + c.r2[k] * dth_k) * exact(0.5);
  out.dU = c.m[i] * abs(dth_i) + c.m[j] * abs(dth_j) + c.m[k] * abs(dth_k);
  return out;
}

// Pointwise domination dU <= dE over the box, certified by interval
// evaluation with 2^3 subdivision where needed.
bool dominates(const DerivCtx& c, const std::array<Interval, 3>& x, int i,
               int depth) {
  DerivVals d = derivatives(c, x, i);
  if (sure_le(d.dU, d.dE)) return true;
  if (depth >= kMaxRefineDepth) return false;
  std::array<double, 3> mid{x[0].mid(), x[1].mid(), x[2].mid()};
  for (int mask = 0; mask < 8; ++mask) {
    std::array<Interval, 3> part;
    for (int a = 0; a < 3; ++a)
      part[a] = (mask >> a) & 1 ? Interval(mid[a], x[a].hi)
                                : Interval(x[a].lo, mid[a]);
    if (!dominates(c, part, i, depth + 1)) return false;
  }
  return true;
}

void require_below_thresholds(const EpsilonBox& b, const CaseParams& p) {
  for (int e = 0; e < 3; ++e) {
    RadiusClass c1 = b.classes[(e + 1) % 3], c2 = b.classes[(e + 2) % 3];
    if (!edge_surely_below_threshold(b.box[e], c1, c2, p))
      throw threshold_violation_error(
          "eps box reaches an edge potential threshold");
  }
}

}  // namespace

const std::array<std::array<RadiusClass, 3>, 4>& class_triples() {
  static const std::array<std::array<RadiusClass, 3>, 4> t = {{
      {L, L, L},
      {L, L, S},
      {L, S, S},
      {S, S, S},
  }};
  return t;
}

EpsilonBox epsilon_box(const std::array<RadiusClass, 3>& classes, Interval eps,
                       const CaseParams& p) {
  EpsilonBox b;
  b.classes = classes;
  b.eps = eps;
  auto t = tight_edges(classes, p.r);
  for (int k = 0; k < 3; ++k) b.box[k] = Interval(t[k].lo, (t[k] + eps).hi);
  return b;
}

Interval d_excess(const EpsilonBox& box, int i, const CaseParams& p) {
  DerivCtx c = deriv_ctx(box.classes, p);
  return derivatives(c, box.box, i - 1).dE;
}

Interval d_potential_bound(const EpsilonBox& box, int i, const VTable&,
                           const CaseParams& p) {
  require_below_thresholds(box, p);
  DerivCtx c = deriv_ctx(box.classes, p);
  return derivatives(c, box.box, i - 1).dU;
}

EpsilonCheckResult check_epsilon(const CaseParams& p, const VTable& vt,
                                 Interval eps) {
  EpsilonCheckResult res;
  res.all_ok = true;
  const auto& triples = class_triples();
  for (int t = 0; t < 4; ++t) {
    EpsilonBox b = epsilon_box(triples[t], eps, p);
    bool ok = true;
    try {
      require_below_thresholds(b, p);
    } catch (const threshold_violation_error&) {
      // the derivation's precondition breaks: this eps is not certifiable
      ok = false;
    }
    if (ok) {
      DerivCtx c = deriv_ctx(b.classes, p);
      for (int i = 0; i < 3 && ok; ++i) ok = dominates(c, b.box, i, 0);
    }
    res.triple_ok[t] = ok;
    res.all_ok = res.all_ok && ok;
  }
  (void)vt;
  return res;
}

EpsilonCheckResult check_epsilon(const CaseParams& p, const VTable& vt) {
  return check_epsilon(p, vt, p.epsilon);
}

}  // namespace discpack
