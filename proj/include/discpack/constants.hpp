#pragma once

#include <vector>

#include "discpack/interval.hpp"

namespace discpack {

/// Raised when interval evaluation cannot certify opposite signs at the
/// endpoints of a root bracket.
struct no_sign_change_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct invalid_case_error : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Per-case bundle of rigorously enclosed verification parameters.
/// r is the small radius (large radius normalized to 1), delta the target
/// density. m, Z, epsilon, l, q are the tabulated potential parameters.
struct CaseParams {
  int case_id = 0;
  Interval r;
  Interval delta;
  Interval reduced_density;  // delta / pi, enclosed as a polynomial root
  Interval m1, mr;
  Interval Z1, Zr;
  Interval epsilon;
  Interval l11, l1r, lrr;
  Interval q11, q1r, qrr;
  bool m1_bumped = false;  // tabulated 0 raised to 1e-14
  bool mr_bumped = false;
};

/// Coefficients low degree -> high degree, exact integers.
const std::vector<long long>& radius_polynomial(int case_id);
const std::vector<long long>& density_polynomial(int case_id);

Interval eval_polynomial(const std::vector<long long>& coeffs, Interval x);

/// Encloses the unique simple root inside `bracket` by bisection with
/// certified sign changes. Sign-indeterminate midpoints are shifted by a
/// quarter width; after 3 failed shifts the current enclosure is returned
/// even if wider than target_width.
Interval poly_root_refine(const std::vector<long long>& coeffs,
                          Interval bracket, double target_width);

CaseParams case_params(int case_id);

}  // namespace discpack
