#pragma once

#include <map>
#include <string>

#include "discpack/corona.hpp"
#include "discpack/verifier.hpp"

namespace discpack {

/// Raised when a certification stage fails (a tabulated parameter is not
/// dominated by its computed bound, or a sure comparison cannot be made).
struct stage_failure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct CoronaCertification {
  SmallestM large;  // bound on m_1
  SmallestM small;  // bound on m_r
  Interval z1, zr;  // computed caps, must be dominated by Z_1, Z_r
};

/// smallest_m bounds dominated by the tabulated m values, condition
/// m_q >= -U_v(T*)/angle(T*) for all tight types, and z_q <= Z_q.
CoronaCertification certify_corona(const CaseParams& p, const VTable& vt);

struct PipelineResult {
  CaseParams params;
  VTable vtable;
  CoronaCertification corona;
  EpsilonCheckResult eps;
  VerifyReport report;
  double total_wall_seconds = 0;
  bool canonical = true;
  std::map<std::string, std::string> overrides;
};

/// Applies a key=value override (epsilon, m1, mr, Z1, Zr, l11, l1r, lrr,
/// q11, q1r, qrr) with an outward-rounded decimal value.
void apply_override(CaseParams& p, const std::string& key,
                    const std::string& value);

/// Full chain: constants -> vtable -> corona certification -> epsilon check
/// -> branch-and-bound verification.
PipelineResult run_case(int case_id, const VerifyConfig& cfg,
                        const std::map<std::string, std::string>& overrides =
                            {});

/// Certificate serialization. Endpoints are decimal strings that round-trip
/// to the exact doubles (hex-float strings when hex_floats is set).
std::string certificate_json(const PipelineResult& r, bool hex_floats);

/// Reads params back from a certificate; the returned CaseParams replays the
/// run bit-exactly.
CaseParams params_from_certificate(const std::string& json_text);

std::string case_params_json(const CaseParams& p, bool hex_floats);
std::string vtable_json(const VTable& vt, bool hex_floats);

}  // namespace discpack
