// Command-line front end: constructions, cycle reports, exact Turan
// numbers, theorem sweeps, lemma witnesses, and bound tables.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "bct/bigraph.hpp"
#include "bct/constructions.hpp"
#include "bct/cycles.hpp"
#include "bct/enumeration.hpp"
#include "bct/graph_io.hpp"
#include "bct/witnesses.hpp"

namespace {

using json = nlohmann::ordered_json;

constexpr const char* kVersion = "1.0.0";
constexpr int kExitViolation = 1;
constexpr int kExitUsage = 2;
constexpr int kExitGuard = 3;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

bct::BipartiteGraph read_graph(const std::string& path) {
  if (path == "-") return bct::parse_graph(std::cin);
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open " + path);
  return bct::parse_graph(in);
}

void write_graph(const std::string& path, const bct::BipartiteGraph& g) {
  if (path == "-") {
    bct::serialize_graph(std::cout, g);
    return;
  }
  std::ofstream out(path);
  if (!out) throw UsageError("cannot write " + path);
  bct::serialize_graph(out, g);
}

json edges_json(const bct::BipartiteGraph& g) {
  json a = json::array();
  for (auto [i, j] : g.edge_list()) a.push_back({i + 1, j + 1});
  return a;
}

std::string vertex_name(bct::VertexRef v) {
  return (v.side == bct::Side::X ? "x" : "y") + std::to_string(v.index + 1);
}

json path_json(const bct::PathWitness& p) {
  json a = json::array();
  for (bct::VertexRef v : p.vertices) a.push_back(vertex_name(v));
  return a;
}

bct::VertexRef parse_anchor(const std::string& s,
                            const bct::BipartiteGraph& g) {
  if (s.size() < 2 || (s[0] != 'x' && s[0] != 'y'))
    throw UsageError("anchor must look like x1 or y2: " + s);
  int idx;
  try {
    idx = std::stoi(s.substr(1));
  } catch (const std::exception&) {
    throw UsageError("bad anchor index: " + s);
  }
  int limit = s[0] == 'x' ? g.m() : g.n();
  if (idx < 1 || idx > limit) throw UsageError("anchor out of range: " + s);
  return s[0] == 'x' ? bct::vx(idx - 1) : bct::vy(idx - 1);
}

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

json stats_json(const bct::SearchStats& s) {
  return {{"nodes", s.nodes}, {"seconds", s.seconds}};
}

// ---- construct ----

int run_construct(const std::string& kind, const std::vector<int>& params,
                  const std::string& out) {
  bct::BipartiteGraph g(1, 1);
  if (kind == "L") {
    if (params.size() != 3) throw UsageError("construct L needs a b c");
    g = bct::build_L({params[0], params[1], params[2]});
  } else if (kind == "gyori") {
    if (params.size() != 3) throw UsageError("construct gyori needs m n k");
    g = bct::build_gyori_extremal({params[0], params[1], params[2]});
  } else if (kind == "complete") {
    if (params.size() != 2) throw UsageError("construct complete needs a b");
    int a = params[0], b = params[1];
    if (a < 1 || b < 1 || a > 64 || b > 64)
      throw bct::InvalidParams("complete graph sides must be in [1, 64]");
    std::vector<bct::Bits> rows(a, bct::low_mask(b));
    g = bct::BipartiteGraph::from_rows(a, b, std::move(rows));
  } else {
    throw UsageError("unknown construction: " + kind);
  }
  write_graph(out, g);
  return 0;
}

// ---- cycles ----

int run_cycles(const std::string& file, std::optional<int> length,
               bool spectrum, bool longest) {
  auto g = read_graph(file);
  json out{{"command", "cycles"},
           {"parameters",
            {{"file", file}, {"m", g.m()}, {"n", g.n()},
             {"edges", g.edge_count()}}}};
  if (length) {
    auto w = bct::find_cycle_of_length(g, *length);
    out["length"] = *length;
    out["found"] = w.has_value();
    if (w) out["witness"] = path_json(bct::PathWitness{w->vertices});
  } else if (spectrum) {
    auto r = bct::even_spectrum(g);
    out["girth"] = r.girth;
    out["circumference"] = r.circumference;
    out["present_lengths"] = r.present_lengths;
  } else {
    (void)longest;  // the default report
    auto w = bct::longest_cycle(g);
    out["circumference"] = w ? w->length() : 0;
    if (w) out["witness"] = path_json(bct::PathWitness{w->vertices});
  }
  out["version"] = kVersion;
  emit(out);
  return 0;
}

// ---- turan ----

int run_turan(int m, int n, int two_t, bool probe, bool override_guard) {
  json out{{"command", "turan"},
           {"parameters",
            {{"m", m}, {"n", n}, {"cycle_length", two_t},
             {"probe_outside_range", probe},
             {"override_guard", override_guard}}}};
  if (probe) {
    auto p = bct::probe_outside_range(m, n, two_t, override_guard);
    out["value"] = p.result.value;
    out["formula_value"] = p.formula_value;
    out["lower_bound"] = p.lower_bound;
    out["strict_excess"] = p.strict_excess;
    out["in_proven_range"] = p.result.in_proven_range;
    out["witness"] = edges_json(p.result.witness);
    out["stats"] = stats_json(p.result.stats);
  } else {
    auto r = bct::turan_exact(m, n, two_t, override_guard);
    out["value"] = r.value;
    out["formula_value"] = r.formula_value;
    out["in_proven_range"] = r.in_proven_range;
    out["witness"] = edges_json(r.witness);
    out["stats"] = stats_json(r.stats);
  }
  out["version"] = kVersion;
  emit(out);
  return 0;
}

// ---- verify ----

int run_verify(const std::string& id, const bct::VerifyParams& params,
               bool random_mode, int samples, std::uint64_t seed, int jobs,
               bool override_guard, const std::string& out_dir) {
  bct::VerifyMode mode;
  mode.exhaustive = !random_mode;
  mode.seed = seed;
  mode.samples = samples;
  auto violations =
      bct::verify_theorem(id, params, mode, jobs, override_guard);
  json out{{"command", "verify"},
           {"parameters",
            {{"theorem", id}, {"m", params.m}, {"n", params.n},
             {"t", params.t}, {"k", params.k},
             {"mode", mode.exhaustive ? "exhaustive" : "random"},
             {"seed", seed}, {"samples", samples}, {"jobs", jobs}}}};
  json vlist = json::array();
  int idx = 0;
  for (const auto& v : violations) {
    vlist.push_back({{"theorem", v.theorem_id},
                     {"clause", v.clause},
                     {"details", v.details},
                     {"graph",
                      {{"m", v.graph.m()}, {"n", v.graph.n()},
                       {"edges", edges_json(v.graph)}}}});
    if (!out_dir.empty()) {
      std::string path =
          out_dir + "/violation_" + std::to_string(idx) + ".graph";
      std::ofstream f(path);
      if (!f) throw UsageError("cannot write " + path);
      bct::serialize_graph(f, v.graph);
    }
    ++idx;
  }
  out["violations"] = vlist;
  out["violation_count"] = violations.size();
  out["version"] = kVersion;
  emit(out);
  return violations.empty() ? 0 : kExitViolation;
}

// ---- witness ----

int run_witness(const std::string& lemma, const std::string& file,
                const std::vector<std::string>& anchor_args,
                std::optional<int> d_opt, std::optional<int> rho_opt) {
  auto g = read_graph(file);
  std::vector<bct::VertexRef> anchors;
  for (const auto& s : anchor_args) anchors.push_back(parse_anchor(s, g));
  auto need = [&](std::size_t n) {
    if (anchors.size() != n)
      throw UsageError("lemma " + lemma + " needs " + std::to_string(n) +
                       " anchor(s)");
  };
  int rho = rho_opt.value_or(-1);
  json out{{"command", "witness"},
           {"parameters",
            {{"lemma", lemma}, {"file", file}, {"anchors", anchor_args}}}};
  if (d_opt) out["parameters"]["d"] = *d_opt;
  if (rho_opt) out["parameters"]["rho"] = *rho_opt;

  if (lemma == "2.1") {
    need(1);
    int d = d_opt.value_or([&] {
      int mn = 64;
      for (int i = 0; i < g.m(); ++i) mn = std::min(mn, g.deg_x(i));
      return mn;
    }());
    auto p = bct::maximal_path_with_terminus(g, anchors[0], d);
    out["witness"] = path_json(p);
    out["order"] = p.order();
    out["order_bound"] = anchors[0].side == bct::Side::Y ? 2 * d : 2 * d + 1;
    out["valid"] = p.validate(g);
  } else if (lemma == "2.2" || lemma == "2.3") {
    need(2);
    bct::DppWitness dpp =
        lemma == "2.2"
            ? bct::detached_maximal_dpp(g, anchors[0], anchors[1], rho)
            : bct::dpp_good_pair(g, anchors[0], anchors[1], rho);
    out["witness"] = {{"path1", path_json(dpp.path1)},
                      {"path2", path_json(dpp.path2)},
                      {"detached", dpp.detached}};
    out["order"] = dpp.order();
    out["order_bound"] = (rho >= 0 ? rho : bct::min_pair_rho(g)) + 1;
    out["valid"] = dpp.validate(g);
  } else if (lemma == "2.6") {
    need(1);
    auto cyc = bct::longest_cycle(g);
    if (!cyc) throw bct::PreconditionViolated("graph is acyclic");
    int d = d_opt.value_or(g.degree(anchors[0]));
    auto fan = bct::find_fan(g, anchors[0], *cyc, d);
    json paths = json::array();
    for (const auto& p : fan.paths) paths.push_back(path_json(p));
    out["witness"] = {{"center", vertex_name(fan.center)}, {"paths", paths}};
    out["cycle"] = path_json(bct::PathWitness{cyc->vertices});
    out["edge_count"] = fan.edge_count();
    out["edge_bound"] = d;
    out["valid"] = fan.validate(g, *cyc);
  } else if (lemma == "2.9") {
    need(2);
    auto p = bct::long_path_between(g, anchors[0], anchors[1], rho);
    out["witness"] = path_json(p);
    out["order"] = p.order();
    out["order_bound"] = rho >= 0 ? rho : bct::min_pair_rho(g);
    out["valid"] = p.validate(g);
  } else {
    throw UsageError("unknown lemma id: " + lemma +
                     " (expected 2.1, 2.2, 2.3, 2.6 or 2.9)");
  }
  out["version"] = kVersion;
  emit(out);
  return 0;
}

// ---- bounds ----

int run_bounds(int m, int n, int t) {
  json out{{"command", "bounds"},
           {"parameters", {{"m", m}, {"n", n}, {"t", t}}}};
  json table = json::array();
  for (const auto& b : bct::known_bounds(m, n, t)) {
    json e{{"name", b.name}, {"applicable", b.applicable}, {"note", b.note}};
    if (b.integral)
      e["value"] = static_cast<long long>(b.value);
    else
      e["value"] = b.value;
    table.push_back(e);
  }
  out["bounds"] = table;
  out["version"] = kVersion;
  emit(out);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact bipartite even-cycle Turan toolkit"};
  app.require_subcommand(1);

  // construct
  auto* c_construct = app.add_subcommand("construct", "emit a named graph");
  std::string c_kind;
  std::vector<int> c_params;
  std::string c_out = "-";
  c_construct->add_option("kind", c_kind, "L | gyori | complete")->required();
  c_construct->add_option("params", c_params, "construction parameters")
      ->required();
  c_construct->add_option("--out,-o", c_out, "output file, - for stdout");

  // cycles
  auto* c_cycles = app.add_subcommand("cycles", "cycle reports for a graph");
  std::string y_file;
  int y_length = 0;
  bool y_spectrum = false, y_longest = false;
  c_cycles->add_option("file", y_file, "graph file, - for stdin")->required();
  auto* y_len_opt =
      c_cycles->add_option("--length", y_length, "test one even length");
  c_cycles->add_flag("--spectrum", y_spectrum, "full even-cycle spectrum");
  c_cycles->add_flag("--longest", y_longest, "longest cycle (default)");

  // turan
  auto* c_turan = app.add_subcommand("turan", "exact ex(m, n, C_2t)");
  int t_m = 0, t_n = 0, t_len = 0;
  bool t_probe = false, t_override = false;
  c_turan->add_option("m", t_m)->required();
  c_turan->add_option("n", t_n)->required();
  c_turan->add_option("cycle_length", t_len)->required();
  c_turan->add_flag("--probe-outside-range", t_probe,
                    "report value vs formula outside the proven range");
  c_turan->add_flag("--override-guard", t_override,
                    "allow m*n beyond the exhaustive guard");

  // verify
  auto* c_verify = app.add_subcommand("verify", "falsification sweep");
  std::string v_id, v_out_dir;
  bct::VerifyParams v_params;
  bool v_exhaustive = false;
  int v_samples = 0, v_jobs = 1;
  std::uint64_t v_seed = 0;
  bool v_override = false;
  c_verify->add_option("theorem", v_id, "T1.2 T1.4 T1.5i T1.5ii T1.7 ES L2.4 L2.5 L2.7 L2.8")
      ->required();
  c_verify->add_option("--m", v_params.m)->required();
  c_verify->add_option("--n", v_params.n)->required();
  c_verify->add_option("--t", v_params.t);
  c_verify->add_option("--k", v_params.k);
  c_verify->add_flag("--exhaustive", v_exhaustive, "exhaustive mode (default)");
  auto* v_samples_opt =
      c_verify->add_option("--samples", v_samples, "random mode sample count");
  c_verify->add_option("--seed", v_seed, "random mode seed (default 0)");
  c_verify->add_option("--jobs", v_jobs, "worker threads (default 1)");
  c_verify->add_flag("--override-guard", v_override);
  c_verify->add_option("--out-dir", v_out_dir,
                       "write violation graphs into this directory");

  // witness
  auto* c_witness = app.add_subcommand("witness", "lemma witness search");
  std::string w_lemma, w_file;
  std::vector<std::string> w_anchors;
  int w_d = 0, w_rho = 0;
  c_witness->add_option("lemma", w_lemma, "2.1 | 2.2 | 2.3 | 2.6 | 2.9")
      ->required();
  c_witness->add_option("file", w_file, "graph file, - for stdin")->required();
  c_witness->add_option("anchors", w_anchors, "anchor vertices, e.g. x1 y2");
  auto* w_d_opt = c_witness->add_option("--d", w_d, "degree promise");
  auto* w_rho_opt = c_witness->add_option("--rho", w_rho, "order target");

  // bounds
  auto* c_bounds = app.add_subcommand("bounds", "known bound table at (m,n,t)");
  int b_m = 0, b_n = 0, b_t = 0;
  c_bounds->add_option("m", b_m)->required();
  c_bounds->add_option("n", b_n)->required();
  c_bounds->add_option("t", b_t)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (*c_construct) return run_construct(c_kind, c_params, c_out);
    if (*c_cycles)
      return run_cycles(y_file,
                        y_len_opt->count() ? std::optional<int>(y_length)
                                           : std::nullopt,
                        y_spectrum, y_longest);
    if (*c_turan) return run_turan(t_m, t_n, t_len, t_probe, t_override);
    if (*c_verify)
      return run_verify(v_id, v_params, v_samples_opt->count() > 0, v_samples,
                        v_seed, v_jobs, v_override, v_out_dir);
    if (*c_witness)
      return run_witness(
          w_lemma, w_file, w_anchors,
          w_d_opt->count() ? std::optional<int>(w_d) : std::nullopt,
          w_rho_opt->count() ? std::optional<int>(w_rho) : std::nullopt);
    if (*c_bounds) return run_bounds(b_m, b_n, b_t);
    (void)v_exhaustive;
    return kExitUsage;
  } catch (const bct::LemmaFalsified& e) {
    std::cerr << "LemmaFalsified: " << e.what() << "\n";
    return kExitViolation;
  } catch (const bct::TooLarge& e) {
    std::cerr << "guard: " << e.what() << "\n";
    return kExitGuard;
  } catch (const bct::PreconditionViolated& e) {
    std::cerr << "guard: " << e.what() << "\n";
    return kExitGuard;
  } catch (const bct::InvalidParams& e) {
    std::cerr << "guard: " << e.what() << "\n";
    return kExitGuard;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}
