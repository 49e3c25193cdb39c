#include "discpack/verifier.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cinttypes>
#include <cstdio>
#include <thread>

namespace discpack {

namespace {

constexpr RadiusClass L = RadiusClass::Large;
constexpr RadiusClass S = RadiusClass::Small;

// Everything classify needs for one class triple, precomputed once per case.
struct TripleCtx {
  std::array<RadiusClass, 3> classes;
  std::array<Interval, 3> r2;        // squared vertex radii
  std::array<Interval, 3> V;         // tight vertex potentials (plain)
  std::array<Interval, 3> m;         // deviation coefficients
  std::array<Interval, 3> Z;         // caps
  std::array<Interval, 3> th_tight;  // tight angles
  std::array<Interval, 3> edge_l;    // edge potential thresholds
  std::array<Interval, 3> edge_q;    // edge potential slopes
  std::array<double, 3> tight_cov;   // (tight_k + eps).lo
  double area_prune = 0;             // (pi r^2 / 2).lo
  double support_prune = 0;          // r.hi
  double alt_prune = 0;              // r.lo
  bool sharing_envelope = false;     // case-5 rrr
  Interval Errr, Vrrr_singular, Zr;
  Interval delta;
};

TripleCtx make_ctx(const std::array<RadiusClass, 3>& classes,
                   const VTable& vt, const CaseParams& p) {
  TripleCtx c;
  c.classes = classes;
  auto t = tight_edges(classes, p.r);
  TriangleBox tight{classes, t};
  c.th_tight = angles(tight);
  for (int k = 0; k < 3; ++k) {
    c.r2[k] = square(radius_of(classes[k], p));
    c.V[k] = tight_potential(classes[k], classes[(k + 1) % 3],
                             classes[(k + 2) % 3], VertexRole::Plain, vt);
    c.m[k] = classes[k] == L ? p.m1 : p.mr;
    c.Z[k] = classes[k] == L ? p.Z1 : p.Zr;
    c.tight_cov[k] = (t[k] + p.epsilon).lo;
    RadiusClass c1 = classes[(k + 1) % 3], c2 = classes[(k + 2) % 3];
    if (c1 == L && c2 == L) {
      c.edge_l[k] = p.l11;
      c.edge_q[k] = p.q11;
    } else if (c1 == S && c2 == S) {
      c.edge_l[k] = p.lrr;
      c.edge_q[k] = p.qrr;
    } else {
      c.edge_l[k] = p.l1r;
      c.edge_q[k] = p.q1r;
    }
  }
  c.area_prune = (pi() * square(p.r) * exact(0.5)).lo;
  c.support_prune = p.r.hi;
  c.alt_prune = p.r.lo;
  c.sharing_envelope = vt.has_singular && classes[0] == S && classes[1] == S &&
                       classes[2] == S;
  c.Errr = vt.Errr;
  c.Vrrr_singular = vt.Vrrr_singular;
  c.Zr = p.Zr;
  c.delta = p.delta;
  return c;
}

LeafTag classify(const TripleCtx& c, const std::array<Interval, 3>& e,
                 const CaseParams& p) {
  // (a) infeasibility pruning
  for (int k = 0; k < 3; ++k) {
    int j = (k + 1) % 3, l = (k + 2) % 3;
    if (e[k].lo > detail::add_up(e[j].hi, e[l].hi))
      return LeafTag::PrunedInfeasible;
  }
  Interval A = area_range(e);
  if (A.hi < c.area_prune) return LeafTag::PrunedInfeasible;
  Interval twoA = exact(2.0) * A;
  double alt_hi = std::min({detail::div_up(twoA.hi, e[0].lo),
                            detail::div_up(twoA.hi, e[1].lo),
                            detail::div_up(twoA.hi, e[2].lo)});
  if (alt_hi < c.alt_prune) return LeafTag::PrunedInfeasible;
  TriangleBox T{c.classes, e};
  SupportDisc sd = support_disc(T, p);
  if (!sd.wide && sd.radius.lo >= c.support_prune)
    return LeafTag::PrunedInfeasible;

  // (b) eps-tight coverage: feasible edges never go below the tight length,
  // so upper containment suffices.
  if (e[0].hi <= c.tight_cov[0] && e[1].hi <= c.tight_cov[1] &&
      e[2].hi <= c.tight_cov[2])
    return LeafTag::CoveredByTight;

  // (c)/(d) certified comparison of E and U
  std::array<Interval, 3> th;
  try {
    th = {angle_range(e, 0), angle_range(e, 1), angle_range(e, 2)};
  } catch (const domain_empty_error&) {
    // the whole box strictly violates the triangle inequality
    return LeafTag::PrunedInfeasible;
  }
  Interval cov =
      (c.r2[0] * th[0] + c.r2[1] * th[1] + c.r2[2] * th[2]) * exact(0.5);
  Interval E = c.delta * A - cov;

  Interval U;
  if (c.sharing_envelope) {
    Interval dev_sum = exact(0.0), capped = exact(0.0);
    for (int k = 0; k < 3; ++k) {
      Interval d = c.m[k] * abs(th[k] - c.th_tight[k]);
      dev_sum = dev_sum + d;
      capped = capped + min(c.Vrrr_singular + d, c.Zr);
    }
    U = min(c.Errr + dev_sum, capped);
  } else {
    U = exact(0.0);
    for (int k = 0; k < 3; ++k) {
      Interval un = c.V[k] + c.m[k] * abs(th[k] - c.th_tight[k]);
      U = U + min(un, c.Z[k]);
    }
  }
  bool have_d = false;
  std::array<Interval, 3> dists;
  for (int k = 0; k < 3; ++k) {
    if (sure_lt(e[k], c.edge_l[k])) continue;
    if (!have_d) {
      dists = signed_edge_distances(sd, T);
      have_d = true;
    }
    Interval v = c.edge_q[k] * dists[k];
    U = U + (e[k].lo >= c.edge_l[k].hi ? v : hull(exact(0.0), v));
  }

  if (sure_le(U, E)) return LeafTag::ProvedLE;
  if (E.hi < U.lo) return LeafTag::Failed;
  return LeafTag::Split;
}

struct Task {
  std::array<Interval, 3> e;
  int triple;
  int depth;
};

struct WorkerState {
  std::array<TripleCounters, 4> counters{};
  int max_depth = 0;
  bool depth_capped = false;
  std::vector<FailedBox> failures;
  std::vector<SampledLeaf> samples;
  long long nodes = 0;
};

class Engine {
 public:
  Engine(const CaseParams& p, const VTable& vt, const VerifyConfig& cfg)
      : p_(p), cfg_(cfg) {
    const auto& triples = class_triples();
    for (int t = 0; t < 4; ++t) ctx_[t] = make_ctx(triples[t], vt, p);
  }

  // Classifies one task; children (if any) are appended to `out`.
  void process(const Task& t, WorkerState& ws, std::vector<Task>& out) {
    ws.nodes++;
    LeafTag tag = classify(ctx_[t.triple], t.e, p_);
    ws.max_depth = std::max(ws.max_depth, t.depth);
    auto& ctr = ws.counters[t.triple];
    switch (tag) {
      case LeafTag::ProvedLE:
        ctr.proved++;
        maybe_sample(ws, t, tag, ctr.proved);
        break;
      case LeafTag::PrunedInfeasible:
        ctr.pruned++;
        maybe_sample(ws, t, tag, ctr.pruned);
        break;
      case LeafTag::CoveredByTight:
        ctr.tight++;
        break;
      case LeafTag::Failed:
        ctr.failed++;
        if (ws.failures.size() < 32)
          ws.failures.push_back({t.triple, t.e, t.depth});
        break;
      case LeafTag::Split: {
        ctr.split++;
        if (t.depth >= cfg_.max_depth) {
          ws.depth_capped = true;
          break;
        }
        double m0 = t.e[0].mid(), m1 = t.e[1].mid(), m2 = t.e[2].mid();
        if (!(m0 > t.e[0].lo && m0 < t.e[0].hi && m1 > t.e[1].lo &&
              m1 < t.e[1].hi && m2 > t.e[2].lo && m2 < t.e[2].hi)) {
          ws.depth_capped = true;  // box at machine resolution
          break;
        }
        for (int mask = 0; mask < 8; ++mask) {
          Task child;
          child.triple = t.triple;
          child.depth = t.depth + 1;
          child.e[0] =
              (mask & 1) ? Interval(m0, t.e[0].hi) : Interval(t.e[0].lo, m0);
          child.e[1] =
              (mask & 2) ? Interval(m1, t.e[1].hi) : Interval(t.e[1].lo, m1);
          child.e[2] =
              (mask & 4) ? Interval(m2, t.e[2].hi) : Interval(t.e[2].lo, m2);
          out.push_back(child);
        }
        break;
      }
    }
  }

  void run_subtree(const Task& root, WorkerState& ws) {
    std::vector<Task> stack;
    stack.push_back(root);
    while (!stack.empty()) {
      if (stopped_.load(std::memory_order_relaxed)) return;
      Task t = stack.back();
      stack.pop_back();
      process(t, ws, stack);
      if ((ws.nodes & 1023) == 0) {
        if (nodes_global_.fetch_add(1024, std::memory_order_relaxed) >
            cfg_.max_nodes) {
          budget_exceeded_.store(true, std::memory_order_relaxed);
          stopped_.store(true, std::memory_order_relaxed);
          return;
        }
      }
    }
  }

  void maybe_sample(WorkerState& ws, const Task& t, LeafTag tag,
                    long long count) {
    if (cfg_.sample_stride <= 0) return;
    if (count % cfg_.sample_stride != 0) return;
    int kept = 0;
    for (const auto& s : ws.samples)
      if (s.tag == tag) kept++;
    if (kept >= cfg_.max_samples_per_tag) return;
    ws.samples.push_back({t.triple, tag, t.e, t.depth});
  }

  const CaseParams& p_;
  VerifyConfig cfg_;
  std::array<TripleCtx, 4> ctx_;
  std::atomic<long long> nodes_global_{0};
  std::atomic<bool> stopped_{false};
  std::atomic<bool> budget_exceeded_{false};
};

}  // namespace

std::array<TriangleBox, 4> initial_boxes(const CaseParams& p) {
  std::array<TriangleBox, 4> out;
  const auto& triples = class_triples();
  Interval two_r = exact(2.0) * p.r;
  for (int t = 0; t < 4; ++t) {
    out[t].classes = triples[t];
    auto tight = tight_edges(triples[t], p.r);
    for (int k = 0; k < 3; ++k)
      out[t].edges[k] = Interval(tight[k].lo, (tight[k] + two_r).hi);
  }
  return out;
}

LeafTag classify_box(const TriangleBox& T, const VTable& vt,
                     const CaseParams& p) {
  TripleCtx c = make_ctx(T.classes, vt, p);
  return classify(c, T.edges, p);
}

std::string params_digest(const CaseParams& p, const VTable& vt) {
  char buf[64];
  std::string dump;
  auto put = [&](Interval v) {
    std::snprintf(buf, sizeof buf, "%a,%a;", v.lo, v.hi);
    dump += buf;
  };
  dump += "case" + std::to_string(p.case_id) + ";";
  put(p.r);
  put(p.delta);
  put(p.m1);
  put(p.mr);
  put(p.Z1);
  put(p.Zr);
  put(p.epsilon);
  put(p.l11);
  put(p.l1r);
  put(p.lrr);
  put(p.q11);
  put(p.q1r);
  put(p.qrr);
  put(vt.V111);
  put(vt.Vrrr);
  put(vt.Vr1r);
  put(vt.V1rr);
  put(vt.V1r1);
  put(vt.V11r);
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char ch : dump) {
    h ^= ch;
    h *= 1099511628211ull;
  }
  std::snprintf(buf, sizeof buf, "%016" PRIx64, h);
  return buf;
}

VerifyReport verify_case(const CaseParams& p, const VTable& vt,
                         const VerifyConfig& cfg) {
  auto t0 = std::chrono::steady_clock::now();
  Engine eng(p, vt, cfg);
  int threads = cfg.threads > 0
                    ? cfg.threads
                    : std::max(1u, std::thread::hardware_concurrency());

  // Seed a frontier breadth-first so workers get balanced subtrees.
  auto boxes = initial_boxes(p);
  std::vector<Task> frontier;
  for (int t = 0; t < 4; ++t) frontier.push_back({boxes[t].edges, t, 0});
  WorkerState seed_ws;
  const std::size_t want = std::size_t(threads) * 48;
  std::size_t cursor = 0;
  while (cursor < frontier.size() && frontier.size() - cursor < want) {
    Task t = frontier[cursor++];  // copy: process() grows the vector
    eng.process(t, seed_ws, frontier);
  }
  frontier.erase(frontier.begin(), frontier.begin() + cursor);

  std::vector<WorkerState> states(threads);
  std::atomic<std::size_t> next{0};
  auto worker = [&](int id) {
    WorkerState& ws = states[id];
    for (;;) {
      std::size_t i = next.fetch_add(1, std::memory_order_relaxed);
      if (i >= frontier.size()) return;
      eng.run_subtree(frontier[i], ws);
    }
  };
  if (threads == 1) {
    worker(0);
  } else {
    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (int i = 0; i < threads; ++i) pool.emplace_back(worker, i);
    for (auto& th : pool) th.join();
  }

  VerifyReport rep;
  rep.case_id = p.case_id;
  rep.params_digest = params_digest(p, vt);
  bool depth_capped = false;
  states.push_back(std::move(seed_ws));
  for (const auto& ws : states) {
    for (int t = 0; t < 4; ++t) {
      rep.counters[t].proved += ws.counters[t].proved;
      rep.counters[t].pruned += ws.counters[t].pruned;
      rep.counters[t].tight += ws.counters[t].tight;
      rep.counters[t].failed += ws.counters[t].failed;
      rep.counters[t].split += ws.counters[t].split;
    }
    rep.max_depth_reached = std::max(rep.max_depth_reached, ws.max_depth);
    rep.nodes += ws.nodes;
    depth_capped = depth_capped || ws.depth_capped;
    rep.failures.insert(rep.failures.end(), ws.failures.begin(),
                        ws.failures.end());
    rep.samples.insert(rep.samples.end(), ws.samples.begin(),
                       ws.samples.end());
  }
  std::sort(rep.failures.begin(), rep.failures.end(),
            [](const FailedBox& a, const FailedBox& b) {
              if (a.triple != b.triple) return a.triple < b.triple;
              if (a.depth != b.depth) return a.depth < b.depth;
              return a.edges[0].lo < b.edges[0].lo;
            });

  if (!rep.failures.empty())
    rep.status = VerifyStatus::CounterexampleBox;
  else if (eng.budget_exceeded_.load() || depth_capped)
    rep.status = VerifyStatus::Inconclusive;
  else
    rep.status = VerifyStatus::Verified;
  rep.wall_time_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
          .count();
  return rep;
}

}  // namespace discpack
