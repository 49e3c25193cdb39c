#pragma once

#include <array>

#include "discpack/potentials.hpp"

namespace discpack {

/// Raised when an epsilon box reaches an edge-potential threshold, breaking
/// the pure-vertex-potential precondition of the derivative bound.
struct threshold_violation_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// The set of eps-tight triangles of one class triple: edge k ranges over
/// [tight_k, tight_k + eps].
struct EpsilonBox {
  std::array<RadiusClass, 3> classes;
  Interval eps;
  std::array<Interval, 3> box;
};

EpsilonBox epsilon_box(const std::array<RadiusClass, 3>& classes, Interval eps,
                       const CaseParams& p);

/// Enclosure of dE/dx_i over the box (i in 1..3), from the closed forms of
/// the Heron and law-of-cosines derivatives.
Interval d_excess(const EpsilonBox& box, int i, const CaseParams& p);

/// Enclosure of the potential variation rate sum_v m_q(v) |dtheta_v/dx_i|
/// over the box; the V terms are constant and the cap only lowers U.
Interval d_potential_bound(const EpsilonBox& box, int i, const VTable& vt,
                           const CaseParams& p);

struct EpsilonCheckResult {
  std::array<bool, 4> triple_ok{};  // order: 111, 11r, 1rr, rrr
  bool all_ok = false;
};

/// Certifies E >= U on the eps-tight boxes of all four class triples by
/// componentwise derivative domination (pointwise, refined by subdivision
/// where one-shot interval evaluation is too coarse).
EpsilonCheckResult check_epsilon(const CaseParams& p, const VTable& vt);
EpsilonCheckResult check_epsilon(const CaseParams& p, const VTable& vt,
                                 Interval eps);

/// The four class triples in canonical order.
const std::array<std::array<RadiusClass, 3>, 4>& class_triples();

}  // namespace discpack
