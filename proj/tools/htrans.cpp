// htrans: build, verify and solve hardness-reduction instances.
//
// Exit codes: 0 success / verdict pass, 1 verdict fail, 2 capacity exceeded,
// 3 bad input or usage.

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <mutex>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "htrans/htrans.hpp"
#include "htrans/serialize.hpp"

namespace fs = std::filesystem;
using namespace htrans;

namespace {

enum Exit { kPass = 0, kFail = 1, kCapacity = 2, kInput = 3 };

struct Common {
  std::uint64_t seed = 0;
  std::string out;
  std::uint64_t budget_nodes = OracleOptions{}.node_budget;
  std::size_t trials = 0;
  double measure = 0.9;
};

OracleOptions oracle_options(const Common& c) { return OracleOptions{c.budget_nodes}; }

void emit(const Json& j, const std::string& path) {
  if (path.empty()) {
    std::cout << j.dump(2) << '\n';
  } else {
    if (fs::path(path).has_parent_path()) fs::create_directories(fs::path(path).parent_path());
    write_file(path, j.dump(2) + "\n");
  }
}

Json oracle_json(const OracleResult& r) {
  return {{"optimum", r.optimum},
          {"vertices", r.vertices},
          {"sets", r.sets},
          {"nodes_explored", r.nodes_explored},
          {"exact", r.exact}};
}

Json certificate_json(const StarResult& r) {
  const auto& c = r.certificate;
  return {{"k", c.k},
          {"transversal", r.transversal},
          {"S", r.S},
          {"F", r.F},
          {"frac0", c.frac0},
          {"frac_last", c.frac_last},
          {"iterations", c.iterations},
          {"s_size", c.s_size},
          {"f_size", c.f_size},
          {"total", c.total},
          {"ratio_bound", c.ratio_bound},
          {"phase1_max_degree", c.phase1_max_degree},
          {"residual_max_degree", c.residual_max_degree},
          {"doubled_x_violation", c.doubled_x_violation},
          {"checks",
           {{"valid", c.valid()},
            {"s_bound", c.s_bound_ok()},
            {"phase1_degree", c.phase1_degree_ok()},
            {"doubled_x", c.doubled_x_ok()},
            {"f_bound", c.f_bound_ok()},
            {"total_bound", c.total_bound_ok()}}}};
}

VertexSet parse_ids(const std::string& text) {
  std::string s = text;
  std::replace(s.begin(), s.end(), ',', ' ');
  return normalized(detail::split_ids(s));
}

std::vector<std::size_t> parse_sizes(const std::string& text) {
  std::vector<std::size_t> out;
  for (Vertex v : detail::split_ids([&] {
         std::string s = text;
         std::replace(s.begin(), s.end(), ',', ' ');
         return s;
       }()))
    out.push_back(v);
  return out;
}

// ------------------------------------------------------------------ reduce

struct ReduceArgs {
  std::string input, outdir, pattern = "cycle:3";
  std::size_t B = 2, a = 1, g = 3, k = 3, kprime = 0;
  std::optional<std::size_t> sparsify_k;
  bool directed = false, allow_non_2c = false, unchecked = false;
};

std::string out_dir(const ReduceArgs& r, const Common& c) {
  std::string d = !r.outdir.empty() ? r.outdir : c.out;
  if (d.empty()) throw std::invalid_argument("output directory required (positional or --out)");
  return d;
}

int reduce_transversal(const ReduceArgs& r, const Common& c) {
  ReductionParams p;
  p.B = r.B;
  p.a = r.a;
  p.seed = c.seed;
  p.pattern = load_pattern(r.pattern);
  p.directed = r.directed;
  p.allow_non_two_connected = r.allow_non_2c;
  if (r.kprime) p.kprime = r.kprime;
  auto out = build_random_matching_instance(load_hypergraph(r.input), p);
  for (const auto& w : out.warnings) std::cerr << "warning: " << w << '\n';
  save_reduction(out, out_dir(r, c));
  std::cerr << "transversal: N=" << out.graph.size() << " edges=" << out.graph.edge_count()
            << " canonical=" << out.canonical.size() << '\n';
  return kPass;
}

int reduce_packing_line(const ReduceArgs& r, const Common& c) {
  Graph m = load_graph(r.input);
  PatternGraph h = load_pattern(r.pattern);
  auto inst = build_line_graph_packing_instance(m, h, !r.unchecked);
  save_line_packing(inst, m, h, out_dir(r, c));
  std::cerr << "packing-line: N=" << inst.graph.size() << " stars=" << inst.stars.size() << '\n';
  return kPass;
}

int reduce_packing_mis(const ReduceArgs& r, const Common& c) {
  Graph m0 = load_graph(r.input);
  auto out = build_mis_girth_instance(m0, r.B, r.a, r.g, c.seed);
  if (r.sparsify_k) out = sparsify_and_truncate(std::move(out), *r.sparsify_k, derive_seed(c.seed, {1}));
  save_mis(out, out_dir(r, c));
  std::cerr << "packing-mis: stage=" << to_string(out.stage) << " N=" << out.graph.size()
            << " deleted=" << out.deleted.size() << " truncated=" << out.truncated.size() << '\n';
  return kPass;
}

int reduce_pipeline(const ReduceArgs& r, const Common& c) {
  PatternGraph h = load_pattern(r.pattern);
  auto res = pipeline_mis_to_packing(load_graph(r.input), h, r.B, r.a, c.seed);
  save_mis(res.mis, out_dir(r, c), &res.packing, &h);
  std::cerr << "pipeline: stage=" << to_string(res.mis.stage) << " packing N=" << res.packing.graph.size() << '\n';
  return kPass;
}

int reduce_labeling(const ReduceArgs& r, const Common& c) {
  auto inst = build_labeling_instance(load_hypergraph(r.input), r.k, r.kprime ? r.kprime : r.k, r.B);
  save_labeling(inst, out_dir(r, c));
  std::cerr << "labeling: N=" << inst.graph.size() << " d_used=" << inst.outer.used << " D=" << inst.D << '\n';
  return kPass;
}

int reduce_gadget(const ReduceArgs& r, const Common& c) {
  auto l = build_labeling_gadget(r.k, r.B);
  save_gadget(l, out_dir(r, c));
  std::cerr << "gadget: N=" << l.size() << " edges=" << l.graph.edge_count() << '\n';
  return kPass;
}

// ------------------------------------------------------------------ verify

struct VerifyArgs {
  std::string dir, cover;
  std::size_t max_len = 6;
  std::size_t copy_cap = 1'000'000;
  double min_rate = 0.0;
};

VertexSet cover_for(const Hypergraph& p, const VerifyArgs& v, const Common& c, Json& j) {
  if (!v.cover.empty()) {
    j["cover_source"] = "given";
    return parse_ids(v.cover);
  }
  auto r = min_hypergraph_vertex_cover(p, oracle_options(c));
  j["cover_source"] = "exact";
  return r.vertices;
}

int verify_transversal(const fs::path& dir, const VerifyArgs& v, const Common& c, Json& j) {
  auto out = load_reduction(dir);
  VertexSet cover = cover_for(out.source, v, c, j);
  j["cover"] = cover;
  bool pass = true;
  try {
    auto r = completeness_transversal(out, cover);
    j["completeness"] = {{"pass", true}, {"F_size", r.F.size()}, {"base_size", r.base_size}, {"extras", r.extras}};
  } catch (const std::logic_error& e) {
    if (dynamic_cast<const std::invalid_argument*>(&e)) throw;
    j["completeness"] = {{"pass", false}, {"error", e.what()}};
    pass = false;
  }
  auto nc = count_noncanonical(out, v.copy_cap);
  j["noncanonical"] = {{"count", nc.count}, {"total_copies", nc.total_copies}, {"samples", nc.samples}};
  if (out.params.kprime) {
    auto sc = count_short_cycles(out, *out.params.kprime, v.copy_cap);
    Json counts = Json::object();
    for (auto [len, n] : sc.noncanonical) counts[std::to_string(len)] = n;
    j["short_cycles"] = {{"kprime", *out.params.kprime}, {"noncanonical", counts}};
    try {
      auto r = completeness_short_cycles(out, cover, *out.params.kprime, v.copy_cap);
      j["short_cycles"]["completeness"] = {{"pass", true}, {"F_size", r.F.size()}, {"extras", r.extras}};
    } catch (const std::logic_error& e) {
      if (dynamic_cast<const std::invalid_argument*>(&e)) throw;
      j["short_cycles"]["completeness"] = {{"pass", false}, {"error", e.what()}};
      pass = false;
    }
  }
  if (c.trials > 0) {
    auto s = soundness_probe(out, c.measure, c.trials, c.seed);
    bool ok = s.rate() >= v.min_rate;
    j["soundness"] = {{"measure", c.measure}, {"trials", s.trials}, {"hits", s.hits}, {"rate", s.rate()},
                      {"subset_size", s.subset_size}, {"min_rate", v.min_rate}, {"pass", ok}};
    pass = pass && ok;
  }
  return pass ? kPass : kFail;
}

int verify_gadget(const fs::path& dir, Json& j) {
  auto l = load_gadget(dir);
  auto r = verify_gadget_properties(l);
  j["gadget"] = {{"k", l.k}, {"B", l.B}, {"girth", r.girth == kInfinity ? Json(nullptr) : Json(r.girth)},
                 {"girth_ok", r.girth_ok}, {"colorful_ok", r.colorful_ok}, {"cycles_checked", r.cycles_checked}};
  if (r.counterexample) j["gadget"]["counterexample"] = *r.counterexample;
  return r.pass() ? kPass : kFail;
}

Json stars_verdict(const Graph& g, const PatternGraph& h, const StarMap& stars, std::size_t cap, bool& pass) {
  auto r = verify_copies_within_stars(g, h, stars, cap);
  pass = r.ok;
  Json j = {{"pass", r.ok}, {"copies_checked", r.copies_checked}};
  if (r.violation) j["witness"] = *r.violation;
  return j;
}

int verify_packing_line(const fs::path& dir, const VerifyArgs& v, const Json& meta, Json& j) {
  Graph g = load_graph((dir / "graph.g").string());
  auto h = detail::pattern_from_json(meta.at("params").at("pattern"));
  bool pass = false;
  j["stars"] = stars_verdict(g, h, read_stars(dir / "stars.tsv"), v.copy_cap, pass);
  return pass ? kPass : kFail;
}

int verify_packing_mis(const fs::path& dir, const VerifyArgs& v, const Json& meta, Json& j) {
  auto out = load_mis(dir);
  bool pass = true;
  const std::size_t gi = girth(out.graph);
  j["stage"] = to_string(out.stage);
  Json gj = {{"girth", gi == kInfinity ? Json(nullptr) : Json(gi)}, {"g", out.g}};
  if (out.stage != MisStage::raw) {
    gj["pass"] = gi > out.g;
    pass = pass && gi > out.g;
  }
  j["girth"] = gj;
  if (out.stage == MisStage::truncated) {
    bool ok = out.graph.max_degree() <= 10 * out.k;
    j["degree"] = {{"max_degree", out.graph.max_degree()}, {"limit", 10 * out.k}, {"pass", ok}};
    pass = pass && ok;
  }
  if (fs::exists(dir / "packing.g") && meta.at("params").contains("pattern")) {
    auto h = detail::pattern_from_json(meta.at("params").at("pattern"));
    bool ok = false;
    j["stars"] = stars_verdict(load_graph((dir / "packing.g").string()), h, read_stars(dir / "stars.tsv"),
                               v.copy_cap, ok);
    pass = pass && ok;
  }
  return pass ? kPass : kFail;
}

int verify_labeling(const fs::path& dir, const VerifyArgs& v, const Common& c, Json& j) {
  auto inst = load_labeling(dir);
  VertexSet cover = cover_for(inst.source, v, c, j);
  j["cover"] = cover;
  LabelingSoundnessOptions so{c.measure, c.trials, c.seed};
  auto r = verify_labeling_lemmas(inst, cover, v.max_len, so);
  auto opt = [](const std::optional<Cycle>& w) { return w ? Json(*w) : Json(nullptr); };
  j["labeling"] = {{"girth", r.girth == kInfinity ? Json(nullptr) : Json(r.girth)},
                   {"girth_ok", r.girth_ok},
                   {"cycles_checked", r.cycles_checked},
                   {"max_len", v.max_len},
                   {"projection_ok", r.projection_ok},
                   {"projection_witness", opt(r.projection_witness)},
                   {"cover_ok", r.cover_ok},
                   {"cover_length_limit", r.cover_length_limit},
                   {"cover_witness", opt(r.cover_witness)},
                   {"full_set_found", r.full_set_found},
                   {"soundness_trials", r.soundness_trials},
                   {"soundness_hits", r.soundness_hits}};
  bool pass = r.girth_ok && r.projection_ok && r.cover_ok && (inst.source.edge_count() == 0 || r.full_set_found) &&
              r.soundness_rate() >= v.min_rate;
  return pass ? kPass : kFail;
}

int cmd_verify(const VerifyArgs& v, const Common& c) {
  fs::path dir = v.dir;
  Json meta = detail::read_json(dir / "meta.json");
  const std::string kind = meta.at("kind");
  Json j = {{"dir", v.dir}, {"kind", kind}};
  int rc = kInput;
  if (kind == "transversal") rc = verify_transversal(dir, v, c, j);
  else if (kind == "gadget") rc = verify_gadget(dir, j);
  else if (kind == "packing-line") rc = verify_packing_line(dir, v, meta, j);
  else if (kind == "packing-mis") rc = verify_packing_mis(dir, v, meta, j);
  else if (kind == "labeling") rc = verify_labeling(dir, v, c, j);
  else throw ParseError("unknown artifact kind " + kind);
  j["verdict"] = rc == kPass ? "pass" : "fail";
  emit(j, c.out);
  std::cerr << kind << ": " << (rc == kPass ? "PASS" : "FAIL") << '\n';
  return rc;
}

// ------------------------------------------------------------------ scaling

struct ScalingArgs {
  std::string input, pattern = "cycle:3", Bs = "8,16,32";
  std::size_t a = 2, repeats = 30, threads = 0;
  bool timing = true;
};

int cmd_scaling(const ScalingArgs& s, const Common& c) {
  if (s.repeats < 1) throw std::invalid_argument("repeats must be >= 1");
  const Hypergraph p = load_hypergraph(s.input);
  const PatternGraph h = load_pattern(s.pattern);
  const auto Bs = parse_sizes(s.Bs);
  if (Bs.empty()) throw std::invalid_argument("no B values");
  struct Row {
    std::size_t B, rep;
    std::uint64_t seed;
    std::size_t N = 0, noncanonical = 0, total = 0;
    double ms = 0;
  };
  std::vector<Row> rows;
  for (std::size_t B : Bs)
    for (std::size_t r = 0; r < s.repeats; ++r) rows.push_back({B, r, derive_seed(c.seed, {r})});

  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex fail_mu;
  auto work = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < rows.size();) {
      try {
        auto t0 = std::chrono::steady_clock::now();
        ReductionParams prm;
        prm.B = rows[i].B;
        prm.a = s.a;
        prm.seed = rows[i].seed;
        prm.pattern = h;
        auto out = build_random_matching_instance(p, prm);
        auto rep = count_noncanonical(out, 5'000'000, 0);
        rows[i].N = out.graph.size();
        rows[i].noncanonical = rep.count;
        rows[i].total = rep.total_copies;
        rows[i].ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
      } catch (...) {
        std::lock_guard lock(fail_mu);
        if (!failure) failure = std::current_exception();
      }
    }
  };
  std::size_t nt = s.threads ? s.threads : std::max(1u, std::thread::hardware_concurrency());
  std::vector<std::thread> pool;
  for (std::size_t t = 0; t < std::min(nt, rows.size()); ++t) pool.emplace_back(work);
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);

  std::ostringstream csv;
  csv << "kind,B,repeat,seed,N,noncanonical,total_copies,elapsed_ms\n";
  char buf[64];
  auto ms = [&](double v) {
    std::snprintf(buf, sizeof buf, "%.3f", s.timing ? v : 0.0);
    return std::string(buf);
  };
  auto mean = [&](double v) {
    std::snprintf(buf, sizeof buf, "%.4f", v);
    return std::string(buf);
  };
  for (const auto& r : rows)
    csv << "run," << r.B << ',' << r.rep << ',' << r.seed << ',' << r.N << ',' << r.noncanonical << ','
        << r.total << ',' << ms(r.ms) << '\n';
  for (std::size_t B : Bs) {
    double nc = 0, tot = 0, t = 0;
    std::size_t N = 0;
    for (const auto& r : rows)
      if (r.B == B) {
        nc += static_cast<double>(r.noncanonical);
        tot += static_cast<double>(r.total);
        t += r.ms;
        N = r.N;
      }
    const double n = static_cast<double>(s.repeats);
    csv << "summary," << B << ",," << c.seed << ',' << N << ',' << mean(nc / n) << ',' << mean(tot / n) << ','
        << ms(t / n) << '\n';
  }
  if (c.out.empty()) std::cout << csv.str();
  else write_file(c.out, csv.str());
  return kPass;
}

// ------------------------------------------------------------------ solve

struct SolveArgs {
  std::string input, pattern = "cycle:3";
  std::size_t k = 3;
};

int solve_star(const SolveArgs& s, const Common& c) {
  auto r = star_transversal(load_graph(s.input), s.k);
  emit(certificate_json(r), c.out);
  return kPass;
}

int solve_exact(const SolveArgs& s, const Common& c, const std::string& what) {
  OracleResult r;
  if (what == "exact-transversal") r = min_h_transversal(load_graph(s.input), load_pattern(s.pattern), oracle_options(c));
  else if (what == "exact-packing") r = max_h_packing(load_graph(s.input), load_pattern(s.pattern), oracle_options(c));
  else if (what == "exact-mis") r = max_independent_set(load_graph(s.input), oracle_options(c));
  else r = min_hypergraph_vertex_cover(load_hypergraph(s.input), oracle_options(c));
  Json j = oracle_json(r);
  j["problem"] = what;
  emit(j, c.out);
  return kPass;
}

int solve_greedy(const SolveArgs& s, const Common& c) {
  auto r = greedy_disjoint_baseline(load_graph(s.input), load_pattern(s.pattern));
  emit({{"problem", "greedy"}, {"packing", r.packing}, {"transversal", r.transversal}}, c.out);
  return kPass;
}

void add_common(CLI::App* app, Common& c) {
  app->add_option("--seed", c.seed, "PRNG seed (u64)");
  app->add_option("--out", c.out, "output path");
  app->add_option("--budget-nodes", c.budget_nodes, "branch-and-bound node budget for exact oracles");
  app->add_option("--trials", c.trials, "Monte Carlo trials");
  app->add_option("--measure", c.measure, "subset measure for soundness probes")->check(CLI::Range(0.0, 1.0));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hardness-reduction instance builder and verifier for H-Transversal / H-Packing"};
  app.require_subcommand(1);
  Common common;
  ReduceArgs ra;
  VerifyArgs va;
  ScalingArgs sa;
  SolveArgs so;
  std::function<int()> action;

  auto* reduce = app.add_subcommand("reduce", "build a reduction instance");
  reduce->require_subcommand(1);
  auto reduce_cmd = [&](const char* name, const char* help, int (*fn)(const ReduceArgs&, const Common&),
                        bool hyper_input) {
    auto* s = reduce->add_subcommand(name, help);
    add_common(s, common);
    s->add_option("input", ra.input, hyper_input ? "source hypergraph file" : "source graph file")->required();
    s->add_option("outdir", ra.outdir, "output directory");
    s->callback([&, fn] { action = [&, fn] { return fn(ra, common); }; });
    return s;
  };
  auto* rt = reduce_cmd("transversal", "random-matching reduction from hypergraph vertex cover", reduce_transversal, true);
  rt->add_option("--pattern", ra.pattern, "pattern spec (cycle:k, clique:k, star:k, path:k or a graph file)");
  rt->add_option("--B", ra.B, "cloud size")->check(CLI::PositiveNumber);
  rt->add_option("--a", ra.a, "copies per hyperedge per label")->check(CLI::PositiveNumber);
  rt->add_option("--kprime", ra.kprime, "hit all cycles up to this length (cycle patterns)");
  rt->add_flag("--directed", ra.directed, "directed host graph");
  rt->add_flag("--allow-non-2c", ra.allow_non_2c, "accept patterns that are not 2-connected");

  auto* rl = reduce_cmd("packing-line", "line graph plus star cliques from a bounded-degree graph", reduce_packing_line, false);
  rl->add_option("--pattern", ra.pattern, "pattern spec");
  rl->add_flag("--unchecked", ra.unchecked, "skip girth and 2-connectivity preconditions");

  auto* rm = reduce_cmd("packing-mis", "cloud matchings with girth repair", reduce_packing_mis, false);
  rm->add_option("--B", ra.B, "cloud size")->check(CLI::PositiveNumber);
  rm->add_option("--a", ra.a, "matchings per edge");
  rm->add_option("--g", ra.g, "girth threshold");
  rm->add_option("--sparsify", ra.sparsify_k, "sparsify to about k n edges and truncate degree > 10k");

  auto* rp = reduce_cmd("pipeline", "cloud matchings, then line-graph packing instance", reduce_pipeline, false);
  rp->add_option("--pattern", ra.pattern, "pattern spec");
  rp->add_option("--B", ra.B, "cloud size")->check(CLI::PositiveNumber);
  rp->add_option("--a", ra.a, "matchings per edge");

  auto* rb = reduce_cmd("labeling", "labeling-gadget product instance", reduce_labeling, true);
  rb->add_option("--k", ra.k, "cycle length / uniformity");
  rb->add_option("--B", ra.B, "gadget side");
  rb->add_option("--kprime", ra.kprime, "separation radius (default k)");

  auto* rg = reduce->add_subcommand("gadget", "standalone labeling gadget");
  add_common(rg, common);
  rg->add_option("outdir", ra.outdir, "output directory");
  rg->add_option("--k", ra.k, "number of colors");
  rg->add_option("--B", ra.B, "side length");
  rg->callback([&] { action = [&] { return reduce_gadget(ra, common); }; });

  auto* verify = app.add_subcommand("verify", "check an artifact directory");
  add_common(verify, common);
  verify->add_option("dir", va.dir, "artifact directory")->required();
  verify->add_option("--cover", va.cover, "source vertex cover, e.g. 0,3 (default: exact)");
  verify->add_option("--max-len", va.max_len, "cycle length bound for labeling checks");
  verify->add_option("--copy-cap", va.copy_cap, "capacity for copy/cycle enumeration");
  verify->add_option("--min-rate", va.min_rate, "required soundness hit rate");
  verify->callback([&] { action = [&] { return cmd_verify(va, common); }; });

  auto* scaling = app.add_subcommand("scaling", "non-canonical copy counts across cloud sizes");
  add_common(scaling, common);
  scaling->add_option("input", sa.input, "source hypergraph")->required();
  scaling->add_option("--pattern", sa.pattern, "pattern spec");
  scaling->add_option("--B", sa.Bs, "comma-separated cloud sizes");
  scaling->add_option("--a", sa.a, "copies per hyperedge per label");
  scaling->add_option("--repeats", sa.repeats, "seeds per B");
  scaling->add_option("--threads", sa.threads, "worker threads (default: hardware)");
  scaling->add_flag("--timing,!--no-timing", sa.timing, "record elapsed time (--no-timing zeroes it for byte-stable output)");
  scaling->callback([&] { action = [&] { return cmd_scaling(sa, common); }; });

  auto* solve = app.add_subcommand("solve", "run an algorithm or exact oracle");
  solve->require_subcommand(1);
  auto solve_cmd = [&](const char* name, const char* help) {
    auto* s = solve->add_subcommand(name, help);
    add_common(s, common);
    s->add_option("input", so.input, "input file")->required();
    return s;
  };
  auto* ss = solve_cmd("star", "LP-rounding k-Star transversal with certificate");
  ss->add_option("--k", so.k, "star size");
  ss->callback([&] { action = [&] { return solve_star(so, common); }; });
  for (const char* name : {"exact-transversal", "exact-packing", "exact-mis", "exact-hvc"}) {
    auto* s = solve_cmd(name, "exact branch-and-bound oracle");
    s->add_option("--pattern", so.pattern, "pattern spec");
    std::string what = name;
    s->callback([&, what] { action = [&, what] { return solve_exact(so, common, what); }; });
  }
  auto* sg = solve_cmd("greedy", "greedy disjoint-copies baseline");
  sg->add_option("--pattern", so.pattern, "pattern spec");
  sg->callback([&] { action = [&] { return solve_greedy(so, common); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : kInput;
  }
  try {
    return action ? action() : kInput;
  } catch (const CapacityError& e) {
    std::cerr << "capacity: " << e.what() << '\n';
    return kCapacity;
  } catch (const LemmaViolation& e) {
    std::cerr << "lemma violation: " << e.what() << '\n';
    return kFail;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInput;
  }
}
