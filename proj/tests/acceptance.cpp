// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include <chrono>
#include <cstdio>
#include <iostream>
#include <map>
#include <sstream>

#include "support/fixtures.hpp"

using namespace odd5;
using clk = std::chrono::steady_clock;

namespace {

int failed = 0;

void report(int id, const char* title, bool ok, const std::string& detail) {
  std::cout << (ok ? "PASS" : "FAIL") << " " << id << " " << title << ": " << detail << std::endl;
  if (!ok) ++failed;
}

double since(clk::time_point t) { return std::chrono::duration<double>(clk::now() - t).count(); }

struct sweep {
  int instances = 0;
  int solved = 0;
  int exhausted = 0;
  int invalid = 0;
  int oracle_bad = 0;
  int bad_decrement = 0;
  int detect_checked = 0;
  int detect_bad = 0;
  std::map<std::string, int> specials;
  double seconds = 0;
};

bool decrements_ok(const solve_result& r) {
  for (const auto& t : r.components) {
    for (std::size_t j = 0; j < t.steps.size(); ++j) {
      int d = t.measures[j] - t.measures[j + 1];
      if (d <= 0 || d != documented_decrement(t.steps[j].config.tag)) return false;
    }
  }
  return true;
}

sweep run_sweep(graph_class cls) {
  sweep s;
  auto t0 = clk::now();
  enumerate_small(cls, 8, [&](const embedded& e) {
    ++s.instances;
    const graph& g = graph_of(e);
    try {
      auto r = std::visit([](const auto& x) { return odd_five_color(x); }, e);
      if (is_odd_coloring(g, r.colors, 5) && r.colors.colors_used() <= 5) ++s.solved;
      else ++s.invalid;
      auto w = is_odd_k_colorable(g, 5);
      if (!w || !is_odd_coloring(g, *w, 5) || chi_odd(g).chi_odd > r.colors.colors_used()) ++s.oracle_bad;
      if (!decrements_ok(r)) ++s.bad_decrement;
    } catch (const detector_exhausted&) {
      ++s.exhausted;
    } catch (const std::exception&) {
      ++s.invalid;
    }
    if (auto* t = std::get_if<two_boundary_embedding>(&e)) {
      auto sp = recognize_special(g);
      if (sp) s.specials[(sp.type == special_graph::kind::m ? "M" : "P") + std::to_string(sp.n)]++;
      if (g.order() > 0 && g.min_degree() >= 1 && !sp) {
        ++s.detect_checked;
        try {
          auto d = find_config_2bp(*t);
          auto* c = std::get_if<configuration>(&d);
          if (!c || !holds(*t, *c)) ++s.detect_bad;
        } catch (const std::exception&) {
          ++s.detect_bad;
        }
      }
    }
  });
  s.seconds = since(t0);
  return s;
}

std::string describe(const sweep& s) {
  std::ostringstream os;
  os << s.instances << " instances, " << s.solved << " verified, " << s.exhausted << " exhausted, " << s.invalid
     << " invalid, " << s.oracle_bad << " oracle disagreements, " << s.seconds << " s";
  return os.str();
}

}  // namespace

int main() {
  // 1. Oracle exactness.
  {
    struct item {
      const char* name;
      graph g;
      int want;
    };
    std::vector<item> items{{"C5", cycle_graph(5), 5}, {"C4", cycle_graph(4), 4}, {"K4", complete_graph(4), 4}};
    bool ok = true;
    std::ostringstream os;
    for (auto& it : items) {
      auto t0 = clk::now();
      int chi = chi_odd(it.g).chi_odd;
      double dt = since(t0);
      ok = ok && chi == it.want && dt < 1.0;
      os << it.name << "=" << chi << " (" << dt * 1e3 << " ms) ";
    }
    report(1, "oracle exactness", ok, os.str());
  }

  // 2, 3, 7, 8 share the exhaustive sweeps.
  sweep o = run_sweep(graph_class::o1p);
  report(2, "outer-1-planar n<=8", o.instances > 0 && o.solved == o.instances && o.oracle_bad == 0, describe(o));

  sweep b = run_sweep(graph_class::two_boundary);
  bool specials = b.specials["M3"] && b.specials["M4"] && b.specials["P3"] && b.specials["P4"];
  std::ostringstream sp;
  for (auto& [k, v] : b.specials) sp << " " << k << "x" << v;
  report(3, "2-boundary planar n<=8",
         b.instances > 0 && b.solved == b.instances && b.oracle_bad == 0 && specials, describe(b) + ";" + sp.str());

  // 4. Fuzzing.
  {
    fuzz_options fo;
    fo.trials = 10000;
    fo.n_max = 60;
    fo.seed = 7;
    fo.cls = graph_class::o1p;
    auto r1 = run_fuzz(fo);
    fo.cls = graph_class::two_boundary;
    auto r2 = run_fuzz(fo);
    std::map<std::string, int> kinds;
    for (const auto* r : {&r1, &r2})
      for (const auto& f : r->failures) kinds[to_string(f.kind)]++;
    std::ostringstream os;
    os << "o1p " << r1.trials << " trials / " << r1.failures.size() << " failures (" << r1.elapsed << " s), 2bp "
       << r2.trials << " trials / " << r2.failures.size() << " failures (" << r2.elapsed << " s)";
    for (auto& [k, v] : kinds) os << "; " << k << " " << v;
    report(4, "fuzzing", r1.failures.empty() && r2.failures.empty(), os.str());
  }

  // 5. Special-graph formulas.
  {
    int bad = 0;
    for (int n = 3; n <= 200; ++n) {
      auto c = color_special_M(n);
      if (!is_odd_coloring(canonical_prism(n), c, 3) || c.colors_used() > 3) ++bad;
    }
    for (int n = 4; n <= 200; ++n) {
      auto c = color_special_P(n);
      int want = n % 2 ? 5 : 4;
      if (!is_odd_coloring(canonical_antiprism(n), c, want) || c.colors_used() != want) ++bad;
    }
    report(5, "special-graph formulas", bad == 0, std::to_string(bad) + " failures over M(3..200), P(4..200)");
  }

  // 6. Reducer soundness and frame property.
  {
    bool ok = true;
    std::ostringstream os;
    auto t0 = clk::now();
    for (std::size_t i = 0; i < testing::lemmas().size(); ++i) {
      const auto& lm = testing::lemmas()[i];
      auto fs = testing::make_fixtures(lm, 1000, 1000 + i);
      auto s = testing::check_fixtures(fs);
      bool good = s.trials >= 1000 && s.verified == s.trials && s.frame_ok == s.trials;
      ok = ok && good;
      os << lm.name << " " << s.verified << "/" << s.trials;
      if (s.repaired) os << " (" << s.repaired << " repaired)";
      os << "; ";
    }
    os << since(t0) << " s";
    report(6, "reducer soundness", ok, os.str());
  }

  // 7. Detector on every enumerated 2-boundary instance.
  report(7, "detector re-check", b.detect_checked > 0 && b.detect_bad == 0,
         std::to_string(b.detect_checked) + " instances, " + std::to_string(b.detect_bad) + " failures");

  // 8. Termination accounting over the sweeps plus random instances.
  {
    int bad = o.bad_decrement + b.bad_decrement, traces = o.solved + b.solved;
    for (std::uint64_t s = 0; s < 2000; ++s) {
      rng r(mix_seed(8, s));
      gen_params p;
      p.seed = s;
      p.n = r.between(1, 60);
      p.n_out = r.between(3, 30);
      p.n_in = r.between(0, 30);
      p.chord_density = r.unit();
      p.crossing_density = r.unit();
      embedded e = s % 2 ? embedded(gen_o1p(p)) : embedded(gen_2bp(p));
      auto res = std::visit([](const auto& x) { return odd_five_color(x); }, e);
      ++traces;
      if (!decrements_ok(res)) ++bad;
    }
    report(8, "termination accounting", bad == 0,
           std::to_string(traces) + " solve traces, " + std::to_string(bad) + " with a wrong decrement");
  }

  return failed ? 1 : 0;
}
