#include "discpack/pipeline.hpp"

#include <chrono>
#include <cstdio>
#include <cstdlib>

#include "json.hpp"

namespace discpack {

namespace {

using nlohmann::json;

constexpr RadiusClass L = RadiusClass::Large;
constexpr RadiusClass S = RadiusClass::Small;

struct TightType {
  RadiusClass center, n1, n2;
};

constexpr TightType kLargeTypes[3] = {{L, L, L}, {L, L, S}, {L, S, S}};
constexpr TightType kSmallTypes[3] = {{S, L, L}, {S, L, S}, {S, S, S}};

Interval tight_center_angle(const TightType& t, const CaseParams& p) {
  Interval xc = radius_of(t.center, p);
  Interval y = radius_of(t.n1, p);
  Interval z = radius_of(t.n2, p);
  return angle(y + z, xc + y, xc + z);
}

// The rrr potential at a small vertex is nonnegative in every role; 0 is the
// sound stand-in for the cap / condition-(8) scans in case 5.
Interval scan_potential(const TightType& t, const VTable& vt) {
  if (vt.has_singular && t.center == S && t.n1 == S && t.n2 == S)
    return exact(0.0);
  return tight_potential(t.center, t.n1, t.n2, VertexRole::Plain, vt);
}

void fail(const std::string& what) { throw stage_failure(what); }

std::string fmt(double x, bool hex) {
  char buf[48];
  std::snprintf(buf, sizeof buf, hex ? "%a" : "%.17g", x);
  return buf;
}

json iv(Interval v, bool hex) {
  return json{{"lo", fmt(v.lo, hex)}, {"hi", fmt(v.hi, hex)}};
}

Interval iv_parse(const json& j) {
  return Interval(std::strtod(j.at("lo").get<std::string>().c_str(), nullptr),
                  std::strtod(j.at("hi").get<std::string>().c_str(), nullptr));
}

json params_to_json(const CaseParams& p, bool hex) {
  json j;
  j["case"] = p.case_id;
  j["r"] = iv(p.r, hex);
  j["delta"] = iv(p.delta, hex);
  j["reduced_density"] = iv(p.reduced_density, hex);
  j["m1"] = iv(p.m1, hex);
  j["mr"] = iv(p.mr, hex);
  j["Z1"] = iv(p.Z1, hex);
  j["Zr"] = iv(p.Zr, hex);
  j["epsilon"] = iv(p.epsilon, hex);
  j["l11"] = iv(p.l11, hex);
  j["l1r"] = iv(p.l1r, hex);
  j["lrr"] = iv(p.lrr, hex);
  j["q11"] = iv(p.q11, hex);
  j["q1r"] = iv(p.q1r, hex);
  j["qrr"] = iv(p.qrr, hex);
  j["m1_provenance"] = p.m1_bumped ? "bumped_to_1e-14" : "table";
  j["mr_provenance"] = p.mr_bumped ? "bumped_to_1e-14" : "table";
  return j;
}

json vtable_to_json(const VTable& vt, bool hex) {
  json j;
  j["case"] = vt.case_id;
  j["V111"] = iv(vt.V111, hex);
  j["Vrrr"] = iv(vt.Vrrr, hex);
  j["Vr1r"] = iv(vt.Vr1r, hex);
  j["V1rr"] = iv(vt.V1rr, hex);
  j["V1r1"] = iv(vt.V1r1, hex);
  j["V11r"] = iv(vt.V11r, hex);
  if (vt.has_singular) j["Vrrr_singular"] = iv(vt.Vrrr_singular, hex);
  j["E111"] = iv(vt.E111, hex);
  j["E11r"] = iv(vt.E11r, hex);
  j["E1rr"] = iv(vt.E1rr, hex);
  j["Errr"] = iv(vt.Errr, hex);
  return j;
}

std::string sequence_str(const CoronaProfile& c) {
  std::string s;
  for (RadiusClass cl : profile_sequence(c)) {
    s += (cl == L ? '1' : 'r');
    s += ',';
  }
  if (!s.empty()) s.pop_back();
  return s;
}

const char* kTripleNames[4] = {"111", "11r", "1rr", "rrr"};

}  // namespace

CoronaCertification certify_corona(const CaseParams& p, const VTable& vt) {
  CoronaCertification c;
  c.large = smallest_m_detail(p, vt, L);
  c.small = smallest_m_detail(p, vt, S);
  if (!sure_le(c.large.bound, p.m1))
    fail("smallest_m bound for m_1 is not dominated by the tabulated value");
  if (!sure_le(c.small.bound, p.mr))
    fail("smallest_m bound for m_r is not dominated by the tabulated value");

  // Condition m_q >= -U_v(T*)/angle(T*) for every tight type (with the
  // 1e-14 bump this is a sure comparison even for the exact-zero potentials).
  for (const auto& t : kLargeTypes) {
    Interval need = -scan_potential(t, vt) / tight_center_angle(t, p);
    if (!sure_le(need, p.m1)) fail("capping condition fails for m_1");
  }
  for (const auto& t : kSmallTypes) {
    Interval need = -scan_potential(t, vt) / tight_center_angle(t, p);
    if (!sure_le(need, p.mr)) fail("capping condition fails for m_r");
  }

  // z_q = -2 pi min over tight types of V/angle, dominated by Table Z.
  auto zq = [&](const TightType types[3]) {
    Interval m = scan_potential(types[0], vt) / tight_center_angle(types[0], p);
    for (int i = 1; i < 3; ++i)
      m = min(m, scan_potential(types[i], vt) / tight_center_angle(types[i], p));
    return -two_pi() * m;
  };
  c.z1 = zq(kLargeTypes);
  c.zr = zq(kSmallTypes);
  if (!sure_le(c.z1, p.Z1)) fail("computed z_1 exceeds the tabulated Z_1");
  if (!sure_le(c.zr, p.Zr)) fail("computed z_r exceeds the tabulated Z_r");
  return c;
}

void apply_override(CaseParams& p, const std::string& key,
                    const std::string& value) {
  // Parse a plain decimal (optionally e-notation) outward.
  std::string digits;
  int exp10 = 0;
  bool neg = false, seen_dot = false;
  std::size_t i = 0;
  std::string v = value;
  auto epos = v.find_first_of("eE");
  if (epos != std::string::npos) {
    exp10 = std::atoi(v.c_str() + epos + 1);
    v = v.substr(0, epos);
  }
  if (i < v.size() && (v[i] == '-' || v[i] == '+')) neg = v[i++] == '-';
  for (; i < v.size(); ++i) {
    if (v[i] == '.') {
      seen_dot = true;
      continue;
    }
    if (!std::isdigit(static_cast<unsigned char>(v[i])))
      throw stage_failure("bad override value: " + value);
    digits += v[i];
    if (seen_dot) exp10--;
  }
  if (digits.empty() || digits.size() > 17)
    throw stage_failure("bad override value: " + value);
  long long mant = std::atoll(digits.c_str());
  if (neg) mant = -mant;
  Interval val = from_decimal(mant, exp10);

  if (key == "epsilon")
    p.epsilon = val;
  else if (key == "m1")
    p.m1 = val;
  else if (key == "mr")
    p.mr = val;
  else if (key == "Z1")
    p.Z1 = val;
  else if (key == "Zr")
    p.Zr = val;
  else if (key == "l11")
    p.l11 = val;
  else if (key == "l1r")
    p.l1r = val;
  else if (key == "lrr")
    p.lrr = val;
  else if (key == "q11")
    p.q11 = val;
  else if (key == "q1r")
    p.q1r = val;
  else if (key == "qrr")
    p.qrr = val;
  else
    throw stage_failure("unknown override key: " + key);
}

PipelineResult run_case(int case_id, const VerifyConfig& cfg,
                        const std::map<std::string, std::string>& overrides) {
  auto t0 = std::chrono::steady_clock::now();
  PipelineResult r;
  r.params = case_params(case_id);
  for (const auto& [k, v] : overrides) {
    apply_override(r.params, k, v);
    r.canonical = false;
  }
  r.overrides = overrides;
  r.vtable = solve_v_table(r.params);
  r.corona = certify_corona(r.params, r.vtable);
  r.eps = check_epsilon(r.params, r.vtable);
  if (!r.eps.all_ok) fail("epsilon-tight certification failed");
  r.report = verify_case(r.params, r.vtable, cfg);
  r.total_wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
          .count();
  return r;
}

std::string certificate_json(const PipelineResult& r, bool hex) {
  json j;
  j["tool"] = "discpack";
  j["version"] = "0.1.0";
  j["case"] = r.params.case_id;
  j["params"] = params_to_json(r.params, hex);
  j["vtable"] = vtable_to_json(r.vtable, hex);
  j["corona"] = {
      {"m1_bound", iv(r.corona.large.bound, hex)},
      {"mr_bound", iv(r.corona.small.bound, hex)},
      {"m1_argmax", sequence_str(r.corona.large.argmax)},
      {"mr_argmax", sequence_str(r.corona.small.argmax)},
      {"profiles_large", r.corona.large.profiles},
      {"profiles_small", r.corona.small.profiles},
      {"z1", iv(r.corona.z1, hex)},
      {"zr", iv(r.corona.zr, hex)},
  };
  json je;
  for (int t = 0; t < 4; ++t) je[kTripleNames[t]] = r.eps.triple_ok[t];
  j["epsilon_check"] = je;
  json jv;
  jv["status"] = r.report.status == VerifyStatus::Verified ? "verified"
                 : r.report.status == VerifyStatus::CounterexampleBox
                     ? "counterexample"
                     : "inconclusive";
  for (int t = 0; t < 4; ++t) {
    const auto& c = r.report.counters[t];
    jv["boxes"][kTripleNames[t]] = {{"proved", c.proved},
                                    {"pruned", c.pruned},
                                    {"tight", c.tight},
                                    {"failed", c.failed},
                                    {"split", c.split}};
  }
  jv["nodes"] = r.report.nodes;
  jv["max_depth"] = r.report.max_depth_reached;
  jv["wall_time_s"] = r.report.wall_time_seconds;
  jv["params_digest"] = r.report.params_digest;
  j["verify"] = jv;
  j["canonical"] = r.canonical;
  if (!r.overrides.empty()) {
    json jo;
    for (const auto& [k, v] : r.overrides) jo[k] = v;
    j["overrides"] = jo;
  }
  j["total_wall_time_s"] = r.total_wall_seconds;
  return j.dump(2);
}

CaseParams params_from_certificate(const std::string& text) {
  json j = json::parse(text);
  const json& jp = j.at("params");
  CaseParams p;
  p.case_id = jp.at("case").get<int>();
  p.r = iv_parse(jp.at("r"));
  p.delta = iv_parse(jp.at("delta"));
  p.reduced_density = iv_parse(jp.at("reduced_density"));
  p.m1 = iv_parse(jp.at("m1"));
  p.mr = iv_parse(jp.at("mr"));
  p.Z1 = iv_parse(jp.at("Z1"));
  p.Zr = iv_parse(jp.at("Zr"));
  p.epsilon = iv_parse(jp.at("epsilon"));
  p.l11 = iv_parse(jp.at("l11"));
  p.l1r = iv_parse(jp.at("l1r"));
  p.lrr = iv_parse(jp.at("lrr"));
  p.q11 = iv_parse(jp.at("q11"));
  p.q1r = iv_parse(jp.at("q1r"));
  p.qrr = iv_parse(jp.at("qrr"));
  return p;
}

std::string case_params_json(const CaseParams& p, bool hex) {
  return params_to_json(p, hex).dump(2);
}

std::string vtable_json(const VTable& vt, bool hex) {
  return vtable_to_json(vt, hex).dump(2);
}

}  // namespace discpack
