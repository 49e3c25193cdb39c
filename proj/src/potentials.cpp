#include "discpack/potentials.hpp"

#include <string>

namespace discpack {

namespace {

constexpr RadiusClass L = RadiusClass::Large;
constexpr RadiusClass S = RadiusClass::Small;

// Corona equations of the target packings (adjacent-pair counts around a
// small resp. large disc). Index by case id.
constexpr CoronaEquation kSmallCorona[10] = {
    {}, {3, 2, 0}, {2, 2, 1}, {1, 4, 0}, {4, 0, 0}, {1, 2, 2},
    {0, 4, 1}, {2, 2, 0}, {3, 0, 0}, {1, 2, 1},
};
constexpr CoronaEquation kLargeCorona[10] = {
    {}, {0, 6, 1}, {2, 4, 1}, {0, 4, 4}, {0, 8, 0}, {0, 6, 3},
    {0, 0, 12}, {0, 8, 2}, {0, 12, 0}, {0, 12, 6},
};

Interval tight_excess(const std::array<RadiusClass, 3>& classes,
                      const CaseParams& p) {
  TriangleBox T{classes, tight_edges(classes, p.r)};
  return excess(T, p);
}

Interval m_of(RadiusClass c, const CaseParams& p) {
  return c == L ? p.m1 : p.mr;
}

Interval Z_of(RadiusClass c, const CaseParams& p) {
  return c == L ? p.Z1 : p.Zr;
}

struct EdgeLQ {
  Interval l, q;
};

EdgeLQ lq_of(RadiusClass c1, RadiusClass c2, const CaseParams& p) {
  if (c1 == L && c2 == L) return {p.l11, p.q11};
  if (c1 == S && c2 == S) return {p.lrr, p.qrr};
  return {p.l1r, p.q1r};
}

}  // namespace

CoronaEquation target_corona_profile(int case_id, RadiusClass center) {
  if (case_id < 1 || case_id > 9)
    throw invalid_case_error("case id must be in 1..9");
  return center == S ? kSmallCorona[case_id] : kLargeCorona[case_id];
}

VTable solve_v_table(const CaseParams& p) {
  VTable vt;
  vt.case_id = p.case_id;
  vt.E111 = tight_excess({L, L, L}, p);
  vt.E11r = tight_excess({L, L, S}, p);
  vt.E1rr = tight_excess({L, S, S}, p);
  vt.Errr = tight_excess({S, S, S}, p);

  // Unknowns: V111, Vrrr* (V'_rrr for case 5), Vr1r, V1rr, V1r1, V11r.
  // The system is triangular once the rows are taken in the right order;
  // the ordered elimination keeps the exact zeros that the corona forces
  // (a generic pivoted solve would smear them into nonzero-width
  // intervals, breaking the sure comparisons downstream).
  CoronaEquation lc = kLargeCorona[p.case_id];
  Interval Vrrr_star = vt.Errr / exact(p.case_id == 5 ? 2.0 : 3.0);
  vt.V111 = vt.E111 / exact(3.0);
  if (p.case_id == 6) {
    vt.V1r1 = exact(0.0);                         // normalization
    vt.Vr1r = exact(0.0);                         // large corona: 12 Vr1r = 0
    vt.V1rr = (vt.E1rr - vt.Vr1r) * exact(0.5);   // tight 1rr
    vt.V11r = (vt.E11r - vt.V1r1) * exact(0.5);   // tight 11r
  } else {
    vt.Vr1r = exact(0.0);  // normalization
    // large corona: n11 V111 + nrr Vr1r + nmix V11r = 0
    vt.V11r = -(exact(double(lc.n_same_large)) * vt.V111 +
                exact(double(lc.n_small)) * vt.Vr1r) /
              exact(double(lc.n_mixed));
    vt.V1rr = (vt.E1rr - vt.Vr1r) * exact(0.5);
    vt.V1r1 = vt.E11r - exact(2.0) * vt.V11r;
  }
  if (p.case_id == 5) {
    vt.Vrrr_singular = Vrrr_star;
    vt.has_singular = true;
    vt.Vrrr = Interval(0.0, (vt.Errr / exact(3.0)).hi);
  } else {
    vt.Vrrr = Vrrr_star;
    vt.Vrrr_singular = vt.Vrrr;
  }

  // Residual certification of every equation of the system, including the
  // omitted small-disc corona equation (its consistency is the zero excess
  // sum over the fundamental domain).
  CoronaEquation sc = kSmallCorona[p.case_id];
  Interval residuals[6] = {
      exact(3.0) * vt.V111 - vt.E111,
      exact(p.case_id == 5 ? 2.0 : 3.0) * Vrrr_star - vt.Errr,
      vt.Vr1r + exact(2.0) * vt.V1rr - vt.E1rr,
      vt.V1r1 + exact(2.0) * vt.V11r - vt.E11r,
      exact(double(lc.n_same_large)) * vt.V111 +
          exact(double(lc.n_small)) * vt.Vr1r +
          exact(double(lc.n_mixed)) * vt.V11r,
      exact(double(sc.n_same_large)) * vt.V1r1 +
          exact(double(sc.n_mixed)) * vt.V1rr +
          exact(double(sc.n_small)) * Vrrr_star,
  };
  for (const Interval& res : residuals)
    if (!contains_zero(res))
      throw inconsistent_system_error(
          "potential system residual excludes 0 for case " +
          std::to_string(p.case_id));
  return vt;
}

Interval tight_potential(RadiusClass center, RadiusClass n1, RadiusClass n2,
                         VertexRole role, const VTable& vt) {
  int larges = (n1 == L) + (n2 == L);
  if (center == L) {
    if (larges == 2) return vt.V111;
    if (larges == 0) return vt.Vr1r;
    return vt.V11r;
  }
  if (larges == 2) return vt.V1r1;
  if (larges == 1) return vt.V1rr;
  if (vt.has_singular) {
    if (role == VertexRole::Singular) return vt.Vrrr_singular;
    return vt.Vrrr;  // regular share hull [0, E_rrr/3]
  }
  return vt.Vrrr;
}

Interval vertex_potential(const TriangleBox& T, int vertex, VertexRole role,
                          const VTable& vt, const CaseParams& p) {
  int k = vertex - 1;
  int j = (k + 1) % 3, l = (k + 2) % 3;
  Interval th = angle(T.edges[k], T.edges[j], T.edges[l]);
  auto te = tight_edges(T.classes, p.r);
  Interval ths = angle(te[k], te[j], te[l]);
  Interval V = tight_potential(T.classes[k], T.classes[j], T.classes[l], role, vt);
  Interval un = V + m_of(T.classes[k], p) * abs(th - ths);
  return min(un, Z_of(T.classes[k], p));
}

bool edge_surely_below_threshold(Interval edge, RadiusClass c1, RadiusClass c2,
                                 const CaseParams& p) {
  return sure_lt(edge, lq_of(c1, c2, p).l);
}

Interval edge_potential_value(Interval edge, Interval d_e, RadiusClass c1,
                              RadiusClass c2, const CaseParams& p) {
  EdgeLQ lq = lq_of(c1, c2, p);
  if (sure_lt(edge, lq.l)) return exact(0.0);
  Interval v = lq.q * d_e;
  if (edge.lo >= lq.l.hi) return v;
  return hull(exact(0.0), v);  // straddles the threshold
}

Interval edge_potential(const TriangleBox& T, int edge, const CaseParams& p) {
  int k = edge - 1;
  RadiusClass c1 = T.classes[(k + 1) % 3], c2 = T.classes[(k + 2) % 3];
  if (edge_surely_below_threshold(T.edges[k], c1, c2, p)) return exact(0.0);
  Interval d = signed_edge_distance(T, edge, p);
  return edge_potential_value(T.edges[k], d, c1, c2, p);
}

Interval vertex_sum_envelope(const std::array<RadiusClass, 3>& classes,
                             const std::array<Interval, 3>& th,
                             const std::array<Interval, 3>& th_tight,
                             const VTable& vt, const CaseParams& p) {
  bool all_small = classes[0] == S && classes[1] == S && classes[2] == S;
  if (vt.has_singular && all_small) {
    Interval dev_sum = exact(0.0);
    Interval capped_sum = exact(0.0);
    for (int k = 0; k < 3; ++k) {
      Interval dev = p.mr * abs(th[k] - th_tight[k]);
      dev_sum = dev_sum + dev;
      capped_sum = capped_sum + min(vt.Vrrr_singular + dev, p.Zr);
    }
    return min(vt.Errr + dev_sum, capped_sum);
  }
  Interval sum = exact(0.0);
  for (int k = 0; k < 3; ++k) {
    int j = (k + 1) % 3, l = (k + 2) % 3;
    Interval V =
        tight_potential(classes[k], classes[j], classes[l], VertexRole::Plain, vt);
    Interval un = V + m_of(classes[k], p) * abs(th[k] - th_tight[k]);
    sum = sum + min(un, Z_of(classes[k], p));
  }
  return sum;
}

Interval total_potential(const TriangleBox& T,
                         const std::array<VertexRole, 3>& roles,
                         const VTable& vt, const CaseParams& p) {
  // The design potential of the construction: uncapped vertex terms plus
  // edge terms, equal to the excess on every tight triangle. The verifier
  // works with the capped refinement (total_potential_envelope), which only
  // lowers U and is the one that must hold near stretched configurations.
  auto th = angles(T);
  TriangleBox tight{T.classes, tight_edges(T.classes, p.r)};
  auto ths = angles(tight);
  Interval sum = exact(0.0);
  bool all_small = T.classes[0] == S && T.classes[1] == S && T.classes[2] == S;
  if (vt.has_singular && all_small) {
    // The sharing rule fixes the V-part sum of an rrr triangle to E_rrr for
    // every admissible role assignment.
    sum = vt.Errr;
    for (int k = 0; k < 3; ++k)
      sum = sum + p.mr * abs(th[k] - ths[k]);
    (void)roles;
  } else {
    for (int k = 0; k < 3; ++k) {
      int j = (k + 1) % 3, l = (k + 2) % 3;
      Interval V = tight_potential(T.classes[k], T.classes[j], T.classes[l],
                                   roles[k], vt);
      sum = sum + V + m_of(T.classes[k], p) * abs(th[k] - ths[k]);
    }
  }
  bool need_support = false;
  for (int e = 0; e < 3; ++e)
    if (!edge_surely_below_threshold(T.edges[e], T.classes[(e + 1) % 3],
                                     T.classes[(e + 2) % 3], p))
      need_support = true;
  if (!need_support) return sum;
  auto d = signed_edge_distances(support_disc(T, p), T);
  for (int e = 0; e < 3; ++e)
    sum = sum + edge_potential_value(T.edges[e], d[e], T.classes[(e + 1) % 3],
                                     T.classes[(e + 2) % 3], p);
  return sum;
}

Interval total_potential_envelope(const TriangleBox& T, const VTable& vt,
                                  const CaseParams& p) {
  auto th = angles(T);
  TriangleBox tight{T.classes, tight_edges(T.classes, p.r)};
  auto ths = angles(tight);
  Interval sum = vertex_sum_envelope(T.classes, th, ths, vt, p);
  bool need_support = false;
  for (int e = 0; e < 3; ++e)
    if (!edge_surely_below_threshold(T.edges[e], T.classes[(e + 1) % 3],
                                     T.classes[(e + 2) % 3], p))
      need_support = true;
  if (!need_support) return sum;
  auto d = signed_edge_distances(support_disc(T, p), T);
  for (int e = 0; e < 3; ++e)
    sum = sum + edge_potential_value(T.edges[e], d[e], T.classes[(e + 1) % 3],
                                     T.classes[(e + 2) % 3], p);
  return sum;
}

}  // namespace discpack
