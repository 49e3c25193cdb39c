#include <cmath>
#include <random>

#include "discpack/geometry.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace discpack;

namespace {

constexpr RadiusClass L = RadiusClass::Large;
constexpr RadiusClass S = RadiusClass::Small;
constexpr long double kPiL = 3.14159265358979323846L;

bool holds(Interval v, long double ref) {
  long double pad = 1e-15L * std::max(1.0L, std::fabs(ref));
  return (long double)v.lo <= ref + pad && ref - pad <= (long double)v.hi;
}

TriangleBox thin_box(const std::array<RadiusClass, 3>& cls, double e1,
                     double e2, double e3) {
  return {cls, {exact(e1), exact(e2), exact(e3)}};
}

oracle::Tri to_tri(const TriangleBox& T, const CaseParams& p) {
  oracle::Tri t;
  for (int k = 0; k < 3; ++k) {
    t.e[k] = T.edges[k].mid();
    t.rad[k] = T.classes[k] == L ? 1.0L : (long double)p.r.mid();
  }
  return t;
}

// Edge sampling over the feasible ranges of one class triple.
struct FeasibleSampler {
  CaseParams p;
  std::array<RadiusClass, 3> cls;
  std::mt19937_64 rng;
  TriangleBox draw() {
    auto t = tight_edges(cls, p.r);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (;;) {
      TriangleBox T;
      T.classes = cls;
      double e[3];
      for (int k = 0; k < 3; ++k)
        e[k] = t[k].mid() + 2 * p.r.mid() * u(rng);
      if (e[0] >= e[1] + e[2] || e[1] >= e[0] + e[2] || e[2] >= e[0] + e[1])
        continue;
      for (int k = 0; k < 3; ++k) T.edges[k] = exact(e[k]);
      return T;
    }
  }
};

}  // namespace

TEST_CASE("angle enclosures") {
  Interval eq = angle(exact(2), exact(2), exact(2));
  CHECK(holds(eq, kPiL / 3));
  Interval right = angle(sqrt(exact(8.0)), exact(2), exact(2));
  CHECK(holds(right, kPiL / 2));

  // case 4 tight 11r: (1+r)^2 + (1+r)^2 = 4 at r = sqrt(2)-1, so the angle
  // at the small vertex is exactly pi/2
  CaseParams p4 = case_params(4);
  Interval side = exact(1.0) + p4.r;
  CHECK(holds(angle(exact(2), side, side), kPiL / 2));
}

TEST_CASE("area enclosures") {
  CHECK(holds(area(exact(2), exact(2), exact(2)), std::sqrt(3.0L)));
  CHECK(contains(area(exact(2), exact(1), exact(1)), 0.0));  // degenerate

  // membership of sampled point triangles in the box enclosure
  Interval A = area(Interval(3, 4), Interval(4, 5), Interval(5, 6));
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> u(0, 1);
  for (int i = 0; i < 100; ++i) {
    long double e1 = 3 + u(rng), e2 = 4 + u(rng), e3 = 5 + u(rng);
    long double a = oracle::heron(e1, e2, e3);
    CHECK((long double)A.lo <= a);
    CHECK(a <= (long double)A.hi);
  }
}

TEST_CASE("tight edges") {
  CaseParams p4 = case_params(4);
  auto t111 = tight_edges({L, L, L}, p4.r);
  for (int k = 0; k < 3; ++k) CHECK(holds(t111[k], 2.0L));
  auto t11r = tight_edges({L, L, S}, p4.r);
  CHECK(holds(t11r[2], 2.0L));                     // between the two larges
  CHECK(contains(t11r[0], 1 + p4.r.mid()));        // large-small edges
  CHECK(contains(t11r[1], 1 + p4.r.mid()));
  auto trrr = tight_edges({S, S, S}, p4.r);
  for (int k = 0; k < 3; ++k) CHECK(contains(trrr[k], 2 * p4.r.mid()));
}

TEST_CASE("excess of tight triangles") {
  for (int i = 1; i <= 9; ++i) {
    CaseParams p = case_params(i);
    TriangleBox t111{{L, L, L}, tight_edges({L, L, L}, p.r)};
    Interval E111 = excess(t111, p);
    // E_111 = delta sqrt(3) - pi/2 > 0 for every case
    Interval closed = p.delta * sqrt(exact(3.0)) - pi() * exact(0.5);
    CHECK(E111.lo > 0);
    CHECK(contains_zero(E111 - closed));
  }
  // the target packings of cases 4 and 8 are tiled by 11r triangles alone,
  // forcing E_11r = 0
  for (int i : {4, 8}) {
    CaseParams p = case_params(i);
    TriangleBox t{{L, L, S}, tight_edges({L, L, S}, p.r)};
    Interval E = excess(t, p);
    CHECK(contains_zero(E));
    CHECK(E.width() < 1e-12);
  }
}

TEST_CASE("support radius of tight triangles") {
  CaseParams p9 = case_params(9);
  TriangleBox t111{{L, L, L}, tight_edges({L, L, L}, p9.r)};
  CHECK(holds(support_radius(t111, p9), 0.15470053837925152902L));

  TriangleBox trrr{{S, S, S}, tight_edges({S, S, S}, p9.r)};
  // r * (2/sqrt(3) - 1) with r = 5 - 2 sqrt(6)
  CHECK(holds(support_radius(trrr, p9), 0.015627927970233646L));
}

TEST_CASE("support disc tangency residuals on 500 random triangles") {
  CaseParams p = case_params(5);
  std::mt19937_64 rng(31);
  const std::array<std::array<RadiusClass, 3>, 4> triples = {
      {{L, L, L}, {L, L, S}, {L, S, S}, {S, S, S}}};
  int checked = 0;
  for (int it = 0; checked < 500 && it < 5000; ++it) {
    FeasibleSampler fs{p, triples[it % 4], std::mt19937_64(rng())};
    TriangleBox T = fs.draw();
    SupportDisc sd = support_disc(T, p);
    if (sd.wide) continue;
    double R = sd.radius.mid(), x = sd.x.mid(), y = sd.y.mid();
    double u = sd.u.mid(), v = sd.v.mid(), c = T.edges[2].mid();
    double rr[3] = {radius_of(T.classes[0], p).mid(),
                    radius_of(T.classes[1], p).mid(),
                    radius_of(T.classes[2], p).mid()};
    double res0 = std::fabs(std::hypot(x, y) - (rr[0] + R));
    double res1 = std::fabs(std::hypot(x - c, y) - (rr[1] + R));
    double res2 = std::fabs(std::hypot(x - u, y - v) - (rr[2] + R));
    CHECK(res0 < 1e-9);
    CHECK(res1 < 1e-9);
    CHECK(res2 < 1e-9);
    ++checked;
  }
  CHECK(checked == 500);
}

TEST_CASE("signed distances: tight triangles have interior support centers") {
  for (int i = 1; i <= 9; ++i) {
    CaseParams p = case_params(i);
    const std::array<std::array<RadiusClass, 3>, 4> triples = {
        {{L, L, L}, {L, L, S}, {L, S, S}, {S, S, S}}};
    for (const auto& cls : triples) {
      TriangleBox t{cls, tight_edges(cls, p.r)};
      for (int e = 1; e <= 3; ++e)
        CHECK(signed_edge_distance(t, e, p).lo > 0);
    }
  }
}

TEST_CASE("signed distance: stretched 11r triangle is negative at the long edge") {
  // small disc tangent to both larges and to the line joining their centers:
  // large-large distance 2 sqrt(1+2r); the support disc is the reflected
  // small disc, so d = -r exactly
  for (int i : {1, 5, 9}) {
    CaseParams p = case_params(i);
    Interval long_edge = exact(2.0) * sqrt(exact(1.0) + exact(2.0) * p.r);
    Interval slanted = exact(1.0) + p.r;
    TriangleBox T{{L, L, S}, {slanted, slanted, long_edge}};
    Interval d = signed_edge_distance(T, 3, p);
    CHECK(d.hi < 0);
    CHECK(contains_zero(d + p.r));  // d = -r
    // and the support radius equals r: the infeasibility boundary
    CHECK(contains_zero(support_radius(T, p) - p.r));
  }
}

TEST_CASE("hyperbola monotonicity: adjacent pair distance sums (Prop 7.2)") {
  CaseParams p = case_params(2);
  std::mt19937_64 rng(47);
  std::uniform_real_distribution<double> u(0, 1);
  auto rad = [&](RadiusClass c) { return c == L ? 1.0L : (long double)p.r.mid(); };
  int done = 0;
  for (int it = 0; done < 500 && it < 100000; ++it) {
    RadiusClass ca = u(rng) < 0.5 ? L : S, cb = u(rng) < 0.5 ? L : S;
    RadiusClass cc = u(rng) < 0.5 ? L : S, cd = u(rng) < 0.5 ? L : S;
    long double ra = rad(ca), rb = rad(cb), rc = rad(cc), rd = rad(cd);
    long double rmax = (long double)p.r.mid() * 2;
    long double ab = ra + rb + rmax * (long double)u(rng);
    auto draw_third = [&](long double r3) {
      long double s1 = ra + r3 + rmax * (long double)u(rng);
      long double s2 = rb + r3 + rmax * (long double)u(rng);
      return std::pair<long double, long double>(s1, s2);
    };
    auto [ac, bc] = draw_third(rc);
    auto [ad, bd] = draw_third(rd);
    if (ac + bc <= ab || ad + bd <= ab) continue;
    // triangles ABC above and ABD below the shared edge AB
    oracle::Tri T1{{bc, ac, ab}, {ra, rb, rc}};
    oracle::Tri T2{{bd, ad, ab}, {ra, rb, rd}};
    auto s1 = oracle::support(T1);
    auto s2 = oracle::support(T2);
    if (!s1.ok || !s2.ok) continue;
    // FM adjacency: each support disc must avoid the opposite triangle's
    // third disc (D mirrored below the axis).
    long double dx = s1.x - s2.u, dy = s1.y + s2.v;
    if (std::hypot(dx, dy) < s1.R + rd) continue;
    long double ex = s2.x - s1.u, ey = s2.y + s1.v;
    if (std::hypot(ex, ey) < s2.R + rc) continue;
    long double sum = oracle::signed_dist(s1, T1, 2) +
                      oracle::signed_dist(s2, T2, 2);
    CHECK(sum >= -1e-9L);
    ++done;
  }
  CHECK(done == 500);
}

TEST_CASE("minimum-angle sine bound on 500 feasible triangles per case") {
  for (int i = 1; i <= 9; ++i) {
    CaseParams p = case_params(i);
    std::mt19937_64 rng(100 + i);
    const std::array<std::array<RadiusClass, 3>, 4> triples = {
        {{L, L, L}, {L, L, S}, {L, S, S}, {S, S, S}}};
    long double r = p.r.mid();
    int done = 0;
    for (int it = 0; done < 500 && it < 100000; ++it) {
      FeasibleSampler fs{p, triples[it % 4], std::mt19937_64(rng())};
      TriangleBox T = fs.draw();
      oracle::Tri t = to_tri(T, p);
      auto s = oracle::support(t);
      if (!s.ok || s.R >= r) continue;  // saturation filter
      bool fm = true;
      for (int k = 0; k < 3; ++k)
        if (2 * oracle::heron(t.e[0], t.e[1], t.e[2]) / t.e[k] < t.rad[k])
          fm = false;  // sector-crossing surrogate
      if (!fm) continue;
      for (int k = 0; k < 3; ++k) {
        long double x = t.rad[k], y = t.rad[(k + 1) % 3], z = t.rad[(k + 2) % 3];
        long double bound =
            std::min(y / (x + 2 * r + y), z / (x + 2 * r + z));
        CHECK(std::sin(oracle::angle_at(t, k)) + 1e-9L >= bound);
      }
      ++done;
    }
    CHECK(done == 500);
  }
}

TEST_CASE("min altitude") {
  CHECK(holds(min_altitude({{L, L, L}, {exact(2), exact(2), exact(2)}}),
              std::sqrt(3.0L)));
  TriangleBox nearly{{L, L, L},
                     {exact(2), exact(2), Interval(3.9, 3.99)}};
  CHECK(min_altitude(nearly).hi < 0.5);
  CaseParams p9 = case_params(9);
  TriangleBox trrr{{S, S, S}, tight_edges({S, S, S}, p9.r)};
  CHECK(contains_zero(min_altitude(trrr) - p9.r * sqrt(exact(3.0))));
}

TEST_CASE("degenerate-branch consistency of the support radius") {
  // Sweep shallow subdivisions of the initial boxes; wherever the fat box
  // produces a finite enclosure, the thin midpoint evaluation must land
  // inside it (the two quadratic branches must agree where both apply).
  CaseParams p = case_params(7);
  const std::array<std::array<RadiusClass, 3>, 4> triples = {
      {{L, L, L}, {L, L, S}, {L, S, S}, {S, S, S}}};
  int finite_boxes = 0;
  for (const auto& cls : triples) {
    auto t = tight_edges(cls, p.r);
    Interval tr = exact(2.0) * p.r;
    for (int mask = 0; mask < 27; ++mask) {
      TriangleBox T;
      T.classes = cls;
      int m = mask;
      for (int k = 0; k < 3; ++k, m /= 3) {
        double lo = t[k].lo, w = tr.hi / 3.0;
        T.edges[k] = Interval(lo + (m % 3) * w, lo + (m % 3 + 1) * w);
      }
      SupportDisc fat = support_disc(T, p);
      if (fat.wide) continue;
      ++finite_boxes;
      TriangleBox thin = T;
      for (int k = 0; k < 3; ++k) thin.edges[k] = exact(T.edges[k].mid());
      oracle::Tri tt = to_tri(thin, p);
      if (oracle::heron(tt.e[0], tt.e[1], tt.e[2]) <= 0) continue;
      SupportDisc pt = support_disc(thin, p);
      if (pt.wide) continue;
      CHECK(pt.radius.lo <= fat.radius.hi);
      CHECK(fat.radius.lo <= pt.radius.hi);
    }
  }
  CHECK(finite_boxes > 20);
}
