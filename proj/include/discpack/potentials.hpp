#pragma once

#include <array>

#include "discpack/geometry.hpp"

namespace discpack {

struct inconsistent_system_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Solved vertex potentials for the tight triangles of one case, plus the
/// tight excesses they were derived from. For case 5, Vrrr_singular holds
/// V'_rrr = E_rrr/2 and Vrrr holds the hull [0, E_rrr/3] of the possible
/// regular shares.
struct VTable {
  int case_id = 0;
  Interval V111, Vrrr, Vr1r, V1rr, V1r1, V11r;
  Interval Vrrr_singular;
  bool has_singular = false;
  Interval E111, E11r, E1rr, Errr;
};

enum class VertexRole : unsigned char { Plain, Regular, Singular };

/// Adjacent-pair counts of a corona equation: pairs of two large neighbors
/// around the center contribute n_same_large, mixed pairs n_mixed, two small
/// neighbors n_small (naming is relative to the neighbor classes).
struct CoronaEquation {
  int n_same_large = 0;
  int n_mixed = 0;
  int n_small = 0;
};

/// The corona of the target packing around a disc of the given class.
CoronaEquation target_corona_profile(int case_id, RadiusClass center);

/// Solves the 6x6 system (four tight-triangle equations, the large-disc
/// corona equation, the normalization) and certifies the omitted small-disc
/// corona equation by residual: its interval must contain 0.
VTable solve_v_table(const CaseParams& p);

/// V_xqy for a vertex of class `center` whose triangle's other discs are
/// n1, n2. Role differentiates only case-5 small vertices in rrr triangles.
Interval tight_potential(RadiusClass center, RadiusClass n1, RadiusClass n2,
                         VertexRole role, const VTable& vt);

/// min(V_xqy + m_q |angle(T) - angle(T*)|, Z_q).
Interval vertex_potential(const TriangleBox& T, int vertex, VertexRole role,
                          const VTable& vt, const CaseParams& p);

/// 0 below the l_xy threshold, q_xy * d_e above it, hull of both when the
/// edge straddles the threshold.
Interval edge_potential(const TriangleBox& T, int edge, const CaseParams& p);

Interval total_potential(const TriangleBox& T,
                         const std::array<VertexRole, 3>& roles,
                         const VTable& vt, const CaseParams& p);

/// Role-free upper treatment used by the verifier: for case-5 rrr triangles
/// the vertex part is min(E_rrr + sum m_r dev_v, sum min(E_rrr/2 + m_r dev_v,
/// Z_r)); both members bound U from above for every admissible role
/// assignment. Other triangles use the plain capped vertex potentials.
Interval total_potential_envelope(const TriangleBox& T, const VTable& vt,
                                  const CaseParams& p);

// Shared-computation building blocks (angles precomputed by the caller).

Interval vertex_sum_envelope(const std::array<RadiusClass, 3>& classes,
                             const std::array<Interval, 3>& th,
                             const std::array<Interval, 3>& th_tight,
                             const VTable& vt, const CaseParams& p);

bool edge_surely_below_threshold(Interval edge, RadiusClass c1, RadiusClass c2,
                                 const CaseParams& p);

Interval edge_potential_value(Interval edge, Interval d_e, RadiusClass c1,
                              RadiusClass c2, const CaseParams& p);

}  // namespace discpack
