#pragma once

#include <vector>

#include "discpack/potentials.hpp"

namespace discpack {

/// Raised when a corona whose tight angles sum to 2*pi has a surely negative
/// potential sum, or an uncertified zero-straddling sum.
struct violated_corona_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Adjacent-pair counts of a corona: every quantity entering the m_q bound
/// (tight angle sum, potential sum, minimum-angle feasibility sum) depends on the
/// neighbor sequence only through these counts.
struct CoronaProfile {
  int n_same_large = 0;  // adjacent pairs of two large neighbors
  int n_mixed = 0;       // mixed adjacent pairs (always even)
  int n_small = 0;       // adjacent pairs of two small neighbors
  int k() const { return n_same_large + n_mixed + n_small; }
  bool operator==(const CoronaProfile&) const = default;
};

/// One enumerated corona with its certification data.
struct CoronaTerm {
  CoronaProfile profile;
  Interval angle_sum;     // sum of tight angles at the center
  Interval v_sum;         // sum of tight vertex potentials at the center
  bool straddles_two_pi = false;
  bool is_target = false;
  Interval contribution;  // (-v_sum)/|2pi - angle_sum| when not straddling
};

struct SmallestM {
  Interval bound;
  CoronaProfile argmax;
  long long profiles = 0;
};

/// A cyclic neighbor sequence realizing the profile (for reporting).
std::vector<RadiusClass> profile_sequence(const CoronaProfile& c);

/// Exhaustive enumeration of all coronas around a center disc of the given
/// class that are compatible with the minimum-angle bound; returns the
/// certified lower bound on m_q.
/// Coronas whose tight angle sum straddles 2*pi must have a surely
/// nonnegative potential sum or match the target-packing corona, else
/// violated_corona_error is thrown.
SmallestM smallest_m_detail(const CaseParams& p, const VTable& vt,
                            RadiusClass center);

Interval smallest_m(const CaseParams& p, const VTable& vt, RadiusClass center);

/// All enumerated coronas (for diagnostics and the completeness tests).
std::vector<CoronaTerm> enumerate_coronas(const CaseParams& p,
                                          const VTable& vt,
                                          RadiusClass center);

/// floor(2*pi / theta_min) where theta_min is the minimum-angle lower bound
/// at the center, minimized over neighbor pair types.
int k_max(const CaseParams& p, RadiusClass center);

}  // namespace discpack
