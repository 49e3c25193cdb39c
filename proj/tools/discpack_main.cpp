#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "discpack/pipeline.hpp"

namespace {

using namespace discpack;

constexpr int kOk = 0;
constexpr int kStageFailure = 2;
constexpr int kInconclusive = 3;
constexpr int kUsage = 64;

std::map<std::string, std::string> parse_overrides(
    const std::vector<std::string>& raw) {
  std::map<std::string, std::string> out;
  for (const auto& s : raw) {
    auto eq = s.find('=');
    if (eq == std::string::npos)
      throw stage_failure("override must be key=value: " + s);
    out[s.substr(0, eq)] = s.substr(eq + 1);
  }
  return out;
}

const char* status_str(VerifyStatus s) {
  switch (s) {
    case VerifyStatus::Verified:
      return "verified";
    case VerifyStatus::CounterexampleBox:
      return "counterexample";
    default:
      return "inconclusive";
  }
}

int status_code(VerifyStatus s) {
  switch (s) {
    case VerifyStatus::Verified:
      return kOk;
    case VerifyStatus::CounterexampleBox:
      return kStageFailure;
    default:
      return kInconclusive;
  }
}

void write_or_print(const std::string& text, const std::string& path) {
  if (path.empty()) {
    std::cout << text << "\n";
    return;
  }
  std::ofstream f(path);
  f << text << "\n";
  if (!f) throw stage_failure("cannot write " + path);
}

int run_verify_case(int case_id, const VerifyConfig& cfg,
                    const std::map<std::string, std::string>& overrides,
                    const std::string& report_path, bool hex) {
  PipelineResult r = run_case(case_id, cfg, overrides);
  const auto& c = r.report.counters;
  std::fprintf(stderr,
               "case %d: %s  boxes(111/11r/1rr/rrr proved)=%lld/%lld/%lld/%lld"
               "  nodes=%lld  %.2fs\n",
               case_id, status_str(r.report.status), c[0].proved, c[1].proved,
               c[2].proved, c[3].proved, r.report.nodes,
               r.report.wall_time_seconds);
  write_or_print(certificate_json(r, hex), report_path);
  return status_code(r.report.status);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"rigorous density verification for binary compact disc packings"};
  app.require_subcommand(1);

  int case_id = 0;
  int threads = 0;
  bool hex = false;
  std::string report_path, report_dir, replay_path;
  std::vector<std::string> override_raw;

  auto add_case = [&](CLI::App* sub, bool required = true) {
    auto* opt = sub->add_option("--case", case_id, "case index 1..9");
    if (required) opt->required();
  };

  auto* c_const = app.add_subcommand("constants", "dump CaseParams as JSON");
  add_case(c_const);
  c_const->add_flag("--hex-floats", hex, "hex-float endpoints");

  auto* c_vt = app.add_subcommand("vtable", "solve and dump the V table");
  add_case(c_vt);
  c_vt->add_flag("--hex-floats", hex, "hex-float endpoints");

  auto* c_sm = app.add_subcommand("smallest-m",
                                  "corona bounds on m_1 and m_r");
  add_case(c_sm);

  auto* c_eps = app.add_subcommand("epsilon-check",
                                   "eps-tight certification per class triple");
  add_case(c_eps);

  auto* c_ver = app.add_subcommand("verify", "full proof pipeline for a case");
  add_case(c_ver, /*required=*/false);
  c_ver->add_option("--threads", threads, "worker threads (0 = hardware)");
  c_ver->add_option("--report", report_path, "certificate output path");
  c_ver->add_option("--override", override_raw,
                    "key=value parameter override (marks the run non-canonical)");
  c_ver->add_option("--replay", replay_path,
                    "re-run with parameters read from a certificate");
  c_ver->add_flag("--hex-floats", hex, "hex-float endpoints");

  auto* c_all = app.add_subcommand("verify-all", "all 9 cases");
  c_all->add_option("--threads", threads, "worker threads (0 = hardware)");
  c_all->add_option("--report-dir", report_dir, "certificate directory");
  c_all->add_flag("--hex-floats", hex, "hex-float endpoints");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (c_const->parsed()) {
      std::cout << case_params_json(case_params(case_id), hex) << "\n";
      return kOk;
    }
    if (c_vt->parsed()) {
      CaseParams p = case_params(case_id);
      std::cout << vtable_json(solve_v_table(p), hex) << "\n";
      return kOk;
    }
    if (c_sm->parsed()) {
      CaseParams p = case_params(case_id);
      VTable vt = solve_v_table(p);
      CoronaCertification cc = certify_corona(p, vt);
      std::printf("m1 bound: [%.17g, %.17g]  (table m1 >= %.17g)\n",
                  cc.large.bound.lo, cc.large.bound.hi, p.m1.lo);
      std::printf("mr bound: [%.17g, %.17g]  (table mr >= %.17g)\n",
                  cc.small.bound.lo, cc.small.bound.hi, p.mr.lo);
      auto seq_str = [](const CoronaProfile& c) {
        std::string s;
        for (RadiusClass cl : profile_sequence(c))
          s += (cl == RadiusClass::Large ? "1," : "r,");
        if (!s.empty()) s.pop_back();
        return s;
      };
      std::printf("m1 argmax corona: (%s)\n", seq_str(cc.large.argmax).c_str());
      std::printf("mr argmax corona: (%s)\n", seq_str(cc.small.argmax).c_str());
      std::printf("z1: [%.17g, %.17g] <= Z1 = %.17g\n", cc.z1.lo, cc.z1.hi,
                  p.Z1.lo);
      std::printf("zr: [%.17g, %.17g] <= Zr = %.17g\n", cc.zr.lo, cc.zr.hi,
                  p.Zr.lo);
      return kOk;
    }
    if (c_eps->parsed()) {
      CaseParams p = case_params(case_id);
      VTable vt = solve_v_table(p);
      EpsilonCheckResult res = check_epsilon(p, vt);
      const char* names[4] = {"111", "11r", "1rr", "rrr"};
      for (int t = 0; t < 4; ++t)
        std::printf("%s: %s\n", names[t], res.triple_ok[t] ? "pass" : "FAIL");
      return res.all_ok ? kOk : kStageFailure;
    }
    if (c_ver->parsed()) {
      VerifyConfig cfg;
      cfg.threads = threads;
      if (replay_path.empty() && (case_id < 1 || case_id > 9)) {
        std::fprintf(stderr, "verify needs --case 1..9 or --replay CERT\n");
        return kUsage;
      }
      if (!replay_path.empty()) {
        std::ifstream f(replay_path);
        std::string text((std::istreambuf_iterator<char>(f)),
                         std::istreambuf_iterator<char>());
        if (text.empty()) throw stage_failure("cannot read " + replay_path);
        CaseParams p = params_from_certificate(text);
        VTable vt = solve_v_table(p);
        VerifyReport rep = verify_case(p, vt, cfg);
        std::printf("replay case %d: %s\n", p.case_id,
                    status_str(rep.status));
        return status_code(rep.status);
      }
      return run_verify_case(case_id, cfg, parse_overrides(override_raw),
                             report_path, hex);
    }
    if (c_all->parsed()) {
      VerifyConfig cfg;
      cfg.threads = threads;
      int worst = kOk;
      for (int i = 1; i <= 9; ++i) {
        std::string path;
        if (!report_dir.empty())
          path = report_dir + "/case" + std::to_string(i) + ".json";
        int rc = run_verify_case(i, cfg, {}, path, hex);
        worst = std::max(worst, rc);
      }
      return worst;
    }
  } catch (const stage_failure& e) {
    std::fprintf(stderr, "stage failure: %s\n", e.what());
    return kStageFailure;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kStageFailure;
  }
  return kUsage;
}
