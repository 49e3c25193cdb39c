#include "discpack/corona.hpp"

#include <string>

namespace discpack {

namespace {

constexpr RadiusClass L = RadiusClass::Large;
constexpr RadiusClass S = RadiusClass::Small;

// Per-pair data around a fixed center class: index 0 = both neighbors large,
// 1 = mixed, 2 = both small.
struct PairData {
  Interval min_angle_lo[3];    // minimum-angle lower bound
  Interval tight_angle[3];
  Interval v[3];           // tight vertex potential at the center
};

Interval min_angle_bound(Interval x, Interval y, Interval z, Interval r) {
  Interval by = y / (x + exact(2.0) * r + y);
  Interval bz = z / (x + exact(2.0) * r + z);
  return asin(min(by, bz));
}

PairData pair_data(const CaseParams& p, const VTable& vt, RadiusClass center) {
  PairData d;
  Interval xc = radius_of(center, p);
  const RadiusClass nb[3][2] = {{L, L}, {L, S}, {S, S}};
  for (int t = 0; t < 3; ++t) {
    Interval y = radius_of(nb[t][0], p);
    Interval z = radius_of(nb[t][1], p);
    d.min_angle_lo[t] = min_angle_bound(xc, y, z, p.r);
    d.tight_angle[t] = angle(y + z, xc + y, xc + z);
    d.v[t] = tight_potential(center, nb[t][0], nb[t][1], VertexRole::Regular, vt);
  }
  return d;
}

std::string corona_str(const CoronaProfile& c, RadiusClass center) {
  std::string s = center == L ? "center 1, neighbors (" : "center r, neighbors (";
  for (RadiusClass cl : profile_sequence(c))
    s += (cl == L ? "1," : "r,");
  s.back() = ')';
  return s;
}

template <typename Fn>
void enumerate(const CaseParams& p, const VTable& vt, RadiusClass center,
               Fn&& visit) {
  PairData d = pair_data(p, vt, center);
  const Interval tp = two_pi();
  const CoronaEquation tc = target_corona_profile(p.case_id, center);
  const bool case5_small = vt.has_singular && center == S;

  for (int n11 = 0;; ++n11) {
    Interval s1 = exact(double(n11)) * d.min_angle_lo[0];
    if (s1.lo > tp.hi) break;
    for (int nmix = 0;; nmix += 2) {
      Interval s2 = s1 + exact(double(nmix)) * d.min_angle_lo[1];
      if (s2.lo > tp.hi) break;
      for (int nrr = 0;; ++nrr) {
        Interval s3 = s2 + exact(double(nrr)) * d.min_angle_lo[2];
        if (s3.lo > tp.hi) break;
        CoronaProfile c{n11, nmix, nrr};
        if (c.k() < 3) continue;
        if (nmix == 0 && n11 > 0 && nrr > 0) continue;  // not cyclic

        CoronaTerm term;
        term.profile = c;
        term.angle_sum = exact(double(n11)) * d.tight_angle[0] +
                         exact(double(nmix)) * d.tight_angle[1] +
                         exact(double(nrr)) * d.tight_angle[2];
        Interval v_rr = d.v[2];
        term.is_target = (n11 == tc.n_same_large && nmix == tc.n_mixed &&
                          nrr == tc.n_small);
        if (case5_small && term.is_target) v_rr = vt.Vrrr_singular;
        term.v_sum = exact(double(n11)) * d.v[0] +
                     exact(double(nmix)) * d.v[1] +
                     exact(double(nrr)) * v_rr;
        Interval gap = tp - term.angle_sum;
        term.straddles_two_pi = contains_zero(gap);
        if (!term.straddles_two_pi)
          term.contribution = (-term.v_sum) / abs(gap);
        else
          term.contribution = exact(0.0);
        visit(term);
      }
    }
  }
}

}  // namespace

std::vector<RadiusClass> profile_sequence(const CoronaProfile& c) {
  std::vector<RadiusClass> seq;
  if (c.n_mixed == 0) {
    // homogeneous ring
    for (int i = 0; i < c.n_same_large; ++i) seq.push_back(L);
    for (int i = 0; i < c.n_small; ++i) seq.push_back(S);
    return seq;
  }
  int runs = c.n_mixed / 2;
  for (int i = 0; i < runs; ++i) {
    int nl = (i == 0) ? 1 + c.n_same_large : 1;
    int ns = (i == 0) ? 1 + c.n_small : 1;
    seq.insert(seq.end(), nl, L);
    seq.insert(seq.end(), ns, S);
  }
  return seq;
}

SmallestM smallest_m_detail(const CaseParams& p, const VTable& vt,
                            RadiusClass center) {
  SmallestM out;
  out.bound = exact(0.0);
  enumerate(p, vt, center, [&](const CoronaTerm& t) {
    ++out.profiles;
    if (t.straddles_two_pi) {
      if (t.v_sum.lo >= 0) return;       // certified nonnegative
      if (t.is_target) return;           // zero by construction of the system
      throw violated_corona_error(
          "corona with angle sum 2pi has uncertified potential sum: " +
          corona_str(t.profile, center) + " in case " +
          std::to_string(p.case_id));
    }
    if (t.contribution.hi > out.bound.hi) {
      out.bound = max(out.bound, t.contribution);
      out.argmax = t.profile;
    }
  });
  return out;
}

Interval smallest_m(const CaseParams& p, const VTable& vt, RadiusClass center) {
  return smallest_m_detail(p, vt, center).bound;
}

std::vector<CoronaTerm> enumerate_coronas(const CaseParams& p,
                                          const VTable& vt,
                                          RadiusClass center) {
  std::vector<CoronaTerm> all;
  enumerate(p, vt, center, [&](const CoronaTerm& t) { all.push_back(t); });
  return all;
}

int k_max(const CaseParams& p, RadiusClass center) {
  Interval xc = radius_of(center, p);
  const RadiusClass nb[3][2] = {{L, L}, {L, S}, {S, S}};
  double theta_min = std::numeric_limits<double>::infinity();
  for (auto& t : nb) {
    Interval b = min_angle_bound(xc, radius_of(t[0], p), radius_of(t[1], p), p.r);
    theta_min = std::min(theta_min, b.lo);
  }
  return int(detail::div_up(two_pi().hi, theta_min));
}

}  // namespace discpack
