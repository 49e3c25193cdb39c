#pragma once

#include <string>
#include <vector>

#include "discpack/tightcheck.hpp"

namespace discpack {

enum class VerifyStatus { Verified, CounterexampleBox, Inconclusive };

enum class LeafTag { ProvedLE, PrunedInfeasible, CoveredByTight, Split, Failed };

struct VerifyConfig {
  int threads = 0;  // 0 = hardware concurrency
  long long max_nodes = 1'000'000'000;
  int max_depth = 60;
  // When > 0, retain every sample_stride-th ProvedLE / PrunedInfeasible leaf
  // (single-threaded runs give a reproducible sample).
  int sample_stride = 0;
  int max_samples_per_tag = 512;
};

struct TripleCounters {
  long long proved = 0;
  long long pruned = 0;
  long long tight = 0;
  long long failed = 0;
  long long split = 0;
  long long total() const { return proved + pruned + tight + failed + split; }
};

struct SampledLeaf {
  int triple = 0;
  LeafTag tag = LeafTag::Split;
  std::array<Interval, 3> edges;
  int depth = 0;
};

struct FailedBox {
  int triple = 0;
  std::array<Interval, 3> edges;
  int depth = 0;
};

struct VerifyReport {
  int case_id = 0;
  VerifyStatus status = VerifyStatus::Inconclusive;
  std::array<TripleCounters, 4> counters;  // 111, 11r, 1rr, rrr
  int max_depth_reached = 0;
  long long nodes = 0;
  double wall_time_seconds = 0;
  std::string params_digest;
  std::vector<FailedBox> failures;
  std::vector<SampledLeaf> samples;
};

/// The four initial boxes [x+y, x+y+2r] x [x+z, x+z+2r] x [y+z, y+z+2r].
std::array<TriangleBox, 4> initial_boxes(const CaseParams& p);

/// Classifies one box: infeasibility pruning (the saturation bounds plus the triangle
/// inequality), eps-tight coverage, then the certified comparison of excess
/// and potential. Case-5 rrr vertex roles are resolved by the role-free
/// envelope of total_potential_envelope.
LeafTag classify_box(const TriangleBox& T, const VTable& vt,
                     const CaseParams& p);

/// FNV-1a digest of all constants entering the verification.
std::string params_digest(const CaseParams& p, const VTable& vt);

VerifyReport verify_case(const CaseParams& p, const VTable& vt,
                         const VerifyConfig& cfg = {});

}  // namespace discpack
