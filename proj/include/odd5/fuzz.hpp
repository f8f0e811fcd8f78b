#pragma once

#include <algorithm>
#include <atomic>
#include <chrono>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

#include "odd5/io.hpp"

namespace odd5 {

enum class failure_kind { invalid_coloring, detector_exhausted, validator_reject };

inline const char* to_string(failure_kind k) {
  switch (k) {
    case failure_kind::invalid_coloring: return "InvalidColoring";
    case failure_kind::detector_exhausted: return "DetectorExhausted";
    case failure_kind::validator_reject: return "ValidatorReject";
  }
  return "?";
}

struct fuzz_failure {
  std::uint64_t seed = 0;
  gen_params params;
  failure_kind kind = failure_kind::invalid_coloring;
  std::string detail;
};

struct fuzz_report {
  int trials = 0;
  std::vector<fuzz_failure> failures;  // sorted by seed
  double elapsed = 0;
};

struct fuzz_options {
  graph_class cls = graph_class::o1p;
  int trials = 1000;
  int n_min = 1;
  int n_max = 40;
  std::uint64_t seed = 0;
  int threads = 0;  // 0: hardware concurrency
  int oracle_check_n = 10;
  bool oracle_fallback = false;
};

inline std::uint64_t mix_seed(std::uint64_t base, std::uint64_t i) {
  std::uint64_t z = base + 0x9e3779b97f4a7c15ULL * (i + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

// Generator parameters drawn from the trial seed; sizes within [n_min, n_max].
inline gen_params fuzz_params(graph_class cls, int n_min, int n_max, std::uint64_t seed) {
  rng r(seed ^ 0x5bd1e995ULL);
  gen_params p;
  p.seed = seed;
  p.chord_density = r.unit();
  p.crossing_density = r.unit();
  p.inter_edge_density = 0.3 + 0.7 * r.unit();
  p.path_probability = 0.1;
  if (cls == graph_class::o1p) {
    p.n = r.between(std::max(1, n_min), std::max(1, n_max));
  } else {
    int total = r.between(std::max(3, n_min), std::max(3, n_max));
    p.n_out = r.between(3, total);
    p.n_in = total - p.n_out;
    p.stairs = r.chance(0.8) ? staircase::random : (r.chance(0.5) ? staircase::zigzag : staircase::ladder);
    p.shared_vertex_count = p.n_in >= 2 && r.chance(0.4) ? r.between(1, 2) : 0;
  }
  return p;
}

inline json to_json(const gen_params& p) {
  const char* st = p.stairs == staircase::ladder ? "ladder" : p.stairs == staircase::zigzag ? "zigzag" : "random";
  return {{"n", p.n},
          {"n_out", p.n_out},
          {"n_in", p.n_in},
          {"chord_density", p.chord_density},
          {"crossing_density", p.crossing_density},
          {"inter_edge_density", p.inter_edge_density},
          {"path_probability", p.path_probability},
          {"shared_vertex_count", p.shared_vertex_count},
          {"staircase", st},
          {"seed", p.seed}};
}

// One generate-solve-verify round. Returns the failure, if any.
inline std::optional<fuzz_failure> fuzz_trial(graph_class cls, gen_params p, const fuzz_options& opt) {
  auto fail = [&](failure_kind k, std::string d) { return fuzz_failure{p.seed, p, k, std::move(d)}; };
  embedded e;
  try {
    if (cls == graph_class::o1p) {
      e = gen_o1p(p);
    } else {
      try {
        e = gen_2bp(p);
      } catch (const precondition_error&) {
        p.shared_vertex_count = 0;  // not enough room for shared vertices
        e = gen_2bp(p);
      }
    }
  } catch (const std::exception& ex) {
    return fail(failure_kind::validator_reject, ex.what());
  }
  bool valid = std::visit(
      [](const auto& x) {
        if constexpr (std::is_same_v<std::decay_t<decltype(x)>, o1p_embedding>)
          return validate_o1p(x).valid;
        else
          return validate_2bp(x).valid;
      },
      e);
  if (!valid) return fail(failure_kind::validator_reject, "generated instance failed its validator");
  solve_options so;
  so.oracle_fallback = opt.oracle_fallback;
  const graph& g = graph_of(e);
  try {
    auto r = std::visit([&](const auto& x) { return odd_five_color(x, so); }, e);
    if (!is_odd_coloring(g, r.colors, 5)) return fail(failure_kind::invalid_coloring, "not an odd 5-coloring");
    if (g.order() <= opt.oracle_check_n && g.size() > 0) {
      int chi = chi_odd(g, opt.oracle_check_n).chi_odd;
      if (chi > 5 || chi > r.colors.colors_used())
        return fail(failure_kind::invalid_coloring, "oracle disagrees: chi_o = " + std::to_string(chi));
    }
  } catch (const detector_exhausted& ex) {
    return fail(failure_kind::detector_exhausted, ex.what());
  } catch (const std::exception& ex) {
    return fail(failure_kind::invalid_coloring, ex.what());
  }
  return std::nullopt;
}

inline fuzz_report run_fuzz(const fuzz_options& opt) {
  if (opt.trials < 1) throw precondition_error("fuzz: trials must be >= 1");
  if (opt.n_min > opt.n_max) throw precondition_error("fuzz: empty size range");
  auto t0 = std::chrono::steady_clock::now();
  fuzz_report rep;
  rep.trials = opt.trials;
  std::mutex mu;
  std::atomic<int> next{0};
  auto work = [&] {
    for (int i; (i = next.fetch_add(1)) < opt.trials;) {
      std::uint64_t s = mix_seed(opt.seed, static_cast<std::uint64_t>(i));
      auto f = fuzz_trial(opt.cls, fuzz_params(opt.cls, opt.n_min, opt.n_max, s), opt);
      if (f) {
        std::lock_guard lock(mu);
        rep.failures.push_back(std::move(*f));
      }
    }
  };
  int nt = opt.threads > 0 ? opt.threads : static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
  nt = std::min(nt, opt.trials);
  std::vector<std::thread> pool;
  for (int t = 1; t < nt; ++t) pool.emplace_back(work);
  work();
  for (auto& t : pool) t.join();
  std::sort(rep.failures.begin(), rep.failures.end(), [](const auto& a, const auto& b) { return a.seed < b.seed; });
  rep.elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return rep;
}

inline json to_json(const fuzz_report& r) {
  json fs = json::array();
  for (const auto& f : r.failures)
    fs.push_back({{"seed", f.seed}, {"params", to_json(f.params)}, {"kind", to_string(f.kind)}, {"detail", f.detail}});
  return {{"trials", r.trials}, {"failures", fs}, {"elapsed", r.elapsed}};
}

}  // namespace odd5
