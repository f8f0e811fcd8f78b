// odd5: color, verify, chi, detect, gen, fuzz.
//
// Exit codes: 0 success, 1 input or usage error, 2 detector exhausted,
// 3 fuzz failures, 4 coloring rejected by verify, 5 internal verification
// failure.

#include <CLI11.hpp>

#include <cstring>
#include <iostream>
#include <sstream>

#include "odd5/odd5.hpp"

namespace {

using namespace odd5;

enum exit_code { ok = 0, input = 1, exhausted = 2, fuzz_failed = 3, rejected = 4, internal = 5 };

// JSON config: {"sub": {"option": value}} or flat keys for the command being run.
class json_config : public CLI::Config {
 public:
  explicit json_config(std::string active) : active_(std::move(active)) {}

  std::string to_config(const CLI::App*, bool, bool, std::string) const override { return "{}"; }

  std::vector<CLI::ConfigItem> from_config(std::istream& in) const override {
    json j;
    try {
      j = json::parse(in);
    } catch (const json::parse_error& e) {
      throw CLI::ConversionError(std::string("config: ") + e.what());
    }
    if (!j.is_object()) throw CLI::ConversionError("config: expected a JSON object");
    std::vector<CLI::ConfigItem> items;
    for (auto it = j.begin(); it != j.end(); ++it) {
      if (it.value().is_object()) {
        for (auto jt = it.value().begin(); jt != it.value().end(); ++jt)
          items.push_back({{it.key()}, jt.key(), inputs(jt.value())});
      } else {
        std::vector<std::string> parents;
        if (!active_.empty()) parents.push_back(active_);
        items.push_back({parents, it.key(), inputs(it.value())});
      }
    }
    return items;
  }

 private:
  static std::vector<std::string> inputs(const json& v) {
    if (v.is_string()) return {v.get<std::string>()};
    if (v.is_array()) {
      std::vector<std::string> out;
      for (const auto& x : v) out.push_back(x.is_string() ? x.get<std::string>() : x.dump());
      return out;
    }
    return {v.dump()};
  }

  std::string active_;
};

embedded load_graph(const std::string& path) { return graph_from_json(read_json_file(path)); }

void emit(const json& j, const std::string& out) {
  if (out.empty())
    std::cout << j.dump(2) << "\n";
  else
    write_json_file(out, j);
}

int cmd_color(const std::string& file, int k, const std::string& trace, bool dot, bool fallback, const std::string& out) {
  auto e = load_graph(file);
  solve_options so;
  so.k = k;
  so.oracle_fallback = fallback;
  const graph& g = graph_of(e);
  auto r = std::visit([&](const auto& x) { return odd_five_color(x, so); }, e);
  if (!trace.empty()) write_json_file(trace, to_json(r, g));
  if (dot) {
    std::cout << to_dot(g, r.colors);
    if (!out.empty()) write_json_file(out, to_json(r.colors, g));
  } else {
    emit(to_json(r.colors, g), out);
  }
  return ok;
}

int cmd_verify(const std::string& gfile, const std::string& cfile, std::optional<int> k) {
  auto e = load_graph(gfile);
  const graph& g = graph_of(e);
  json cj = read_json_file(cfile);
  coloring c = coloring_from_json(cj, g.capacity());
  int palette = k.value_or(cj.at("k").get<int>());
  auto v = check_odd_coloring(g, c, palette);
  if (v) {
    std::cout << "ok: odd " << palette << "-coloring\n";
    return ok;
  }
  std::cout << "rejected: " << v.describe() << "\n";
  return rejected;
}

int cmd_chi(const std::string& file, int max_n, const std::string& out) {
  auto e = load_graph(file);
  const graph& g = graph_of(e);
  auto r = chi_odd(g, max_n);
  std::cout << "chi_odd " << r.chi_odd << "\n";
  json w = to_json(r.witness, g);
  if (out.empty())
    std::cout << w.dump(2) << "\n";
  else
    write_json_file(out, w);
  return ok;
}

int cmd_detect(const std::string& file) {
  auto e = load_graph(file);
  if (auto* o = std::get_if<o1p_embedding>(&e)) {
    if (!validate_o1p(*o)) throw precondition_error("not an outer-1-planar embedding");
    std::cout << to_json(find_config_o1p(*o)).dump(2) << "\n";
    return ok;
  }
  const auto& t = std::get<two_boundary_embedding>(e);
  if (auto rep = validate_2bp(t); !rep) throw precondition_error(rep.reason);
  auto d = find_config_2bp(t);
  std::visit([](const auto& x) { std::cout << to_json(x).dump(2) << "\n"; }, d);
  return ok;
}

}  // namespace

int main(int argc, char** argv) {
  std::string active;
  for (int i = 1; i < argc; ++i)
    for (const char* s : {"color", "verify", "chi", "detect", "gen", "fuzz"})
      if (std::strcmp(argv[i], s) == 0 && active.empty()) active = s;

  CLI::App app{"Odd 5-colorings of outer-1-planar and 2-boundary planar graphs"};
  app.require_subcommand(1);
  app.fallthrough();
  app.config_formatter(std::make_shared<json_config>(active));
  app.set_config("--config", "", "JSON file mirroring the flags; flags win");

  std::string graph_file, coloring_file, out, trace;
  int k = 5, max_n = oracle_limit();
  std::optional<int> verify_k;
  bool dot = false, fallback = false;

  auto* color = app.add_subcommand("color", "Odd 5-color an embedded graph");
  color->add_option("graph", graph_file, "graph JSON")->required();
  color->add_option("--k", k, "palette size (>= 5)")->check(CLI::Range(5, 64));
  color->add_option("--trace", trace, "write the solve trace here");
  color->add_flag("--dot", dot, "print Graphviz with color labels");
  color->add_flag("--oracle-fallback", fallback, "use the oracle when the detector finds nothing");
  color->add_option("-o,--output", out, "write the coloring here instead of stdout");

  auto* verify = app.add_subcommand("verify", "Check a coloring");
  verify->add_option("graph", graph_file, "graph JSON")->required();
  verify->add_option("coloring", coloring_file, "coloring JSON")->required();
  verify->add_option("--k", verify_k, "palette size (default: the file's k)");

  auto* chi = app.add_subcommand("chi", "Exact odd chromatic number");
  chi->add_option("graph", graph_file, "graph JSON")->required();
  chi->add_option("--max-n", max_n, "size guard")->check(CLI::PositiveNumber);
  chi->add_option("-o,--output", out, "write the witness coloring here");

  auto* detect = app.add_subcommand("detect", "Find a reducible configuration");
  detect->add_option("graph", graph_file, "graph JSON")->required();

  gen_params gp;
  std::string cls_name = "o1p", stairs = "random";
  std::optional<int> total_n;
  bool keep_labels = false;
  auto* gen = app.add_subcommand("gen", "Generate a random instance");
  gen->add_option("--class", cls_name, "o1p or 2bp")->check(CLI::IsMember({"o1p", "2bp"}));
  gen->add_option("--n", total_n, "vertex count (2bp: split between the cycles)")->check(CLI::PositiveNumber);
  gen->add_option("--n-out", gp.n_out, "2bp outer cycle length");
  gen->add_option("--n-in", gp.n_in, "2bp inner cycle length");
  gen->add_option("--seed", gp.seed, "seed");
  gen->add_option("--chord-density", gp.chord_density)->check(CLI::Range(0.0, 1.0));
  gen->add_option("--crossing-density", gp.crossing_density)->check(CLI::Range(0.0, 1.0));
  gen->add_option("--inter-density", gp.inter_edge_density)->check(CLI::Range(0.0, 1.0));
  gen->add_option("--path-probability", gp.path_probability)->check(CLI::Range(0.0, 1.0));
  gen->add_option("--shared", gp.shared_vertex_count, "2bp shared vertices")->check(CLI::NonNegativeNumber);
  gen->add_option("--stairs", stairs, "2bp rung pattern")->check(CLI::IsMember({"random", "ladder", "zigzag"}));
  gen->add_flag("--keep-labels", keep_labels, "do not shuffle vertex ids");
  gen->add_option("-o,--output", out, "output file (default stdout)");

  fuzz_options fo;
  std::string report;
  std::string fuzz_cls = "o1p";
  auto* fuzz = app.add_subcommand("fuzz", "Generate, solve and verify many instances");
  fuzz->add_option("--class", fuzz_cls, "o1p or 2bp")->check(CLI::IsMember({"o1p", "2bp"}));
  fuzz->add_option("--trials", fo.trials, "number of instances");
  fuzz->add_option("--n-min", fo.n_min, "smallest size")->check(CLI::PositiveNumber);
  fuzz->add_option("--n-max", fo.n_max, "largest size")->check(CLI::PositiveNumber);
  fuzz->add_option("--seed", fo.seed, "base seed");
  fuzz->add_option("--threads", fo.threads, "worker threads (0: all cores)")->check(CLI::NonNegativeNumber);
  fuzz->add_flag("--oracle-fallback", fo.oracle_fallback, "use the oracle when the detector finds nothing");
  fuzz->add_option("--report", report, "write the report here (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return input;
  }

  try {
    if (*color) return cmd_color(graph_file, k, trace, dot, fallback, out);
    if (*verify) return cmd_verify(graph_file, coloring_file, verify_k);
    if (*chi) return cmd_chi(graph_file, max_n, out);
    if (*detect) return cmd_detect(graph_file);
    if (*gen) {
      gp.shuffle_labels = !keep_labels;
      gp.stairs = stairs == "ladder" ? staircase::ladder : stairs == "zigzag" ? staircase::zigzag : staircase::random;
      embedded e;
      if (cls_name == "o1p") {
        if (total_n) gp.n = *total_n;
        e = gen_o1p(gp);
      } else {
        if (total_n) {
          gp.n_out = std::max(3, (*total_n + 1) / 2);
          gp.n_in = std::max(0, *total_n - gp.n_out);
        }
        e = gen_2bp(gp);
      }
      emit(to_json(e), out);
      return ok;
    }
    if (*fuzz) {
      if (fo.trials < 1) {
        std::cerr << "fuzz: --trials must be >= 1\n";
        return input;
      }
      fo.cls = fuzz_cls == "o1p" ? graph_class::o1p : graph_class::two_boundary;
      auto rep = run_fuzz(fo);
      emit(to_json(rep), report);
      std::cerr << rep.trials << " trials, " << rep.failures.size() << " failures, " << rep.elapsed << " s\n";
      return rep.failures.empty() ? ok : fuzz_failed;
    }
  } catch (const detector_exhausted& e) {
    std::cerr << "detector exhausted: " << e.what() << "\n";
    return exhausted;
  } catch (const reduction_failure& e) {
    std::cerr << "internal verification failure: " << e.what() << "\n";
    return internal;
  } catch (const json::exception& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return input;
  } catch (const std::exception& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return input;
  }
  return input;
}
