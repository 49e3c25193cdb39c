#include "discpack/geometry.hpp"

namespace discpack {

namespace {

constexpr double kWide = 1e30;

SupportDisc wide_disc(Interval u, Interval v) {
  SupportDisc s;
  s.radius = {-kWide, kWide};
  s.x = {-kWide, kWide};
  s.y = {-kWide, kWide};
  s.u = u;
  s.v = v;
  s.wide = true;
  return s;
}

}  // namespace

Interval angle(Interval opposite, Interval side1, Interval side2) {
  Interval num = square(side1) + square(side2) - square(opposite);
  Interval den = exact(2.0) * side1 * side2;
  return acos(num / den);
}

Interval area(Interval e1, Interval e2, Interval e3) {
  // s - e_k written as (e_i + e_j - e_k)/2 so each edge enters once;
  // the naive form loses badly on fat boxes.
  Interval s = (e1 + e2 + e3) * exact(0.5);
  Interval u1 = (e2 + e3 - e1) * exact(0.5);
  Interval u2 = (e1 + e3 - e2) * exact(0.5);
  Interval u3 = (e1 + e2 - e3) * exact(0.5);
  Interval rad = s * u1 * u2 * u3;
  if (rad.hi < 0) return exact(0.0);  // no valid triangle in the box
  return sqrt(rad);
}

std::array<Interval, 3> angles(const TriangleBox& T) {
  const auto& e = T.edges;
  return {angle_range(e, 0), angle_range(e, 1), angle_range(e, 2)};
}

Interval angle_range(const std::array<Interval, 3>& e, int k) {
  const Interval ek = e[k], ej = e[(k + 1) % 3], el = e[(k + 2) % 3];
  // cosine at a point box
  auto corner = [](double ok, double aj, double al) {
    Interval j2 = square(exact(aj)), l2 = square(exact(al));
    return (j2 + l2 - square(exact(ok))) /
           (exact(2.0) * exact(aj) * exact(al));
  };
  // maximum of the cosine: opposite edge at its minimum, adjacent corners
  double cmax = -std::numeric_limits<double>::infinity();
  double cmin = std::numeric_limits<double>::infinity();
  for (double aj : {ej.lo, ej.hi})
    for (double al : {el.lo, el.hi}) {
      cmax = std::max(cmax, corner(ek.lo, aj, al).hi);
      cmin = std::min(cmin, corner(ek.hi, aj, al).lo);
    }
  // interior minima along one adjacent edge: at ej^2 = el^2 - ek^2 the
  // cosine equals sqrt(1 - (ek/el)^2); same with the roles swapped
  auto critical = [&](Interval adj, Interval other) {
    Interval arg = square(other) - square(ek);
    if (arg.hi <= 0) return;
    Interval pos = sqrt(Interval(std::max(arg.lo, 0.0), arg.hi));
    if (pos.hi < adj.lo || pos.lo > adj.hi) return;  // surface misses the box
    Interval ratio = square(ek / other);
    Interval val = sqrt(Interval(std::max(0.0, (exact(1.0) - ratio).lo),
                                 std::max(0.0, (exact(1.0) - ratio).hi)));
    cmin = std::min(cmin, val.lo);
  };
  critical(ej, el);
  critical(el, ej);
  if (cmax < -1.0 || cmin > 1.0)
    throw domain_empty_error("no valid triangle in the box");
  return acos(Interval(std::max(cmin, -1.0), std::min(cmax, 1.0)));
}

Interval area_range(const std::array<Interval, 3>& e) {
  auto corner = [](double a, double b, double c) {
    return area(exact(a), exact(b), exact(c));
  };
  double lo = std::numeric_limits<double>::infinity();
  double hi = -std::numeric_limits<double>::infinity();
  for (double a : {e[0].lo, e[0].hi})
    for (double b : {e[1].lo, e[1].hi})
      for (double c : {e[2].lo, e[2].hi}) {
        Interval A = corner(a, b, c);
        lo = std::min(lo, A.lo);
        hi = std::max(hi, A.hi);
      }
  // the area peaks where one edge squared equals the sum of the other two
  // squares; the peak value is half the product of the other two edges
  for (int k = 0; k < 3; ++k) {
    const Interval ej = e[(k + 1) % 3], el = e[(k + 2) % 3];
    Interval crit = sqrt(square(ej) + square(el));
    if (crit.hi < e[k].lo || crit.lo > e[k].hi) continue;
    hi = std::max(hi, (ej * el * exact(0.5)).hi);
  }
  if (lo > hi) return exact(0.0);
  return {lo, hi};
}

Interval excess(const TriangleBox& T, const CaseParams& p) {
  Interval A = area_range(T.edges);
  auto th = angles(T);
  Interval cov = exact(0.0);
  for (int k = 0; k < 3; ++k)
    cov = cov + square(radius_of(T.classes[k], p)) * th[k];
  return p.delta * A - cov * exact(0.5);
}

std::array<Interval, 3> tight_edges(const std::array<RadiusClass, 3>& classes,
                                    Interval r) {
  auto rad = [&](int k) {
    return classes[k] == RadiusClass::Large ? exact(1.0) : r;
  };
  return {rad(1) + rad(2), rad(0) + rad(2), rad(0) + rad(1)};
}

Interval min_altitude(const TriangleBox& T) {
  Interval A2 = area_range(T.edges) * exact(2.0);
  Interval m = A2 / T.edges[0];
  m = min(m, A2 / T.edges[1]);
  m = min(m, A2 / T.edges[2]);
  return m;
}

SupportDisc support_disc(const TriangleBox& T, const CaseParams& p) {
  const Interval a = T.edges[0], b = T.edges[1], c = T.edges[2];
  const Interval ra = radius_of(T.classes[0], p);
  const Interval rb = radius_of(T.classes[1], p);
  const Interval rc = radius_of(T.classes[2], p);

  Interval u = (square(b) + square(c) - square(a)) / (exact(2.0) * c);
  Interval v2 = square(b) - square(u);
  if (v2.hi < 0) return wide_disc(u, exact(0.0));
  Interval v = sqrt(v2);
  if (contains_zero(v)) return wide_disc(u, v);

  // Tangency system (R + r_k)^2 = |center - vertex_k|^2 reduces to
  // x = P + Q R, y = S + T R and a quadratic A R^2 + B R + C = 0.
  Interval Q = (ra - rb) / c;
  Interval P = (square(ra) - square(rb) + square(c)) / (exact(2.0) * c);
  Interval Tc = ((ra - rc) - u * Q) / v;
  Interval S =
      (square(ra) - square(rc) + square(b) - exact(2.0) * u * P) /
      (exact(2.0) * v);
  Interval A = square(Q) + square(Tc) - exact(1.0);
  Interval B = exact(2.0) * (P * Q + S * Tc - ra);
  Interval C = square(P) + square(S) - square(ra);

  Interval AC = A * C;
  SupportDisc out;
  out.u = u;
  out.v = v;
  if (!contains_zero(AC)) {
    // A and C both surely nonzero: smallest positive root by the sign(C) form.
    Interval disc = square(B) - exact(4.0) * AC;
    if (disc.hi < 0) return wide_disc(u, v);
    Interval sq = sqrt(disc);
    Interval num = (C.lo > 0) ? (-B - sq) : (-B + sq);
    out.radius = num / (exact(2.0) * A);
  } else if (!contains_zero(B)) {
    // Near-linear branch: R in -(C/B) (1 + 4AC/B^2) while f'(x) < 1 holds,
    // which needs hi(4AC/B^2) <= 0.78.
    Interval x4 = exact(4.0) * AC / square(B);
    if (x4.hi > 0.78) return wide_disc(u, v);
    out.radius = (-C / B) * (exact(1.0) + x4);
  } else {
    return wide_disc(u, v);
  }
  out.x = P + Q * out.radius;
  out.y = S + Tc * out.radius;
  out.wide = false;
  return out;
}

Interval support_radius(const TriangleBox& T, const CaseParams& p) {
  return support_disc(T, p).radius;
}

std::array<Interval, 3> signed_edge_distances(const SupportDisc& s,
                                              const TriangleBox& T) {
  if (s.wide) {
    Interval w{-kWide, kWide};
    return {w, w, w};
  }
  const Interval a = T.edges[0], b = T.edges[1], c = T.edges[2];
  // Edge 3 is alpha-beta along the x axis; gamma lies at v > 0.
  Interval d3 = s.y;
  // Edge 2 is alpha-gamma; beta side is positive.
  Interval d2 = (s.v * s.x - s.u * s.y) / b;
  // Edge 1 is beta-gamma; alpha side is positive.
  Interval d1 = (s.v * (c - s.x) + (s.u - c) * s.y) / a;
  return {d1, d2, d3};
}

Interval signed_edge_distance(const TriangleBox& T, int edge_index,
                              const CaseParams& p) {
  auto d = signed_edge_distances(support_disc(T, p), T);
  return d[edge_index - 1];
}

}  // namespace discpack
