#pragma once

// Directory layout for reduction outputs.
//
//   graph.g            produced graph (text graph format)
//   source.hg|g        the source instance
//   meta.json          kind, parameters, seed, fnv1a hash of the source text
//   canonical.tsv      hyperedge, repetition, k vertex ids      (transversal)
//   clouds.tsv         vertex, base vertex, label               (transversal, mis)
//   deletions.tsv      victim, cycle                            (mis)
//   matchings.tsv      source edge, draw, permutation           (mis)
//   stars.tsv          source vertex, k member ids              (line-graph packing)
//   packing.g          line-graph instance                      (mis pipeline)
//   gadget.tsv         from id, to id, color                    (labeling, gadget)
//   outer_colors.tsv   hyperedge, outer color                   (labeling)
//
// TSV files start with one header row. Every writer is deterministic.

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"

#include "htrans/graph.hpp"
#include "htrans/io.hpp"
#include "htrans/labeling.hpp"
#include "htrans/reduce_packing.hpp"
#include "htrans/reduce_transversal.hpp"

namespace htrans {

using Json = nlohmann::json;

inline std::string hex64(std::uint64_t v) {
  std::ostringstream os;
  os << std::hex << std::setw(16) << std::setfill('0') << v;
  return os.str();
}

namespace detail {

namespace fs = std::filesystem;

inline void ensure_dir(const fs::path& dir) {
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) throw std::runtime_error("cannot create " + dir.string() + ": " + ec.message());
}

inline void write_json(const fs::path& path, const Json& j) { write_file(path.string(), j.dump(2) + "\n"); }

inline Json read_json(const fs::path& path) {
  try {
    return Json::parse(read_file(path.string()));
  } catch (const Json::exception& e) {
    throw ParseError(path.string() + ": " + e.what());
  }
}

inline std::string join(const std::vector<Vertex>& v, char sep = ' ') {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += sep;
    s += std::to_string(v[i]);
  }
  return s;
}

// Rows of a TSV file after its header, split on tabs.
inline std::vector<std::vector<std::string>> read_tsv(const fs::path& path) {
  std::istringstream in(read_file(path.string()));
  std::vector<std::vector<std::string>> rows;
  std::string line;
  bool header = true;
  while (std::getline(in, line)) {
    if (header) {
      header = false;
      continue;
    }
    if (line.empty()) continue;
    std::vector<std::string> cells;
    std::size_t start = 0;
    for (;;) {
      auto tab = line.find('\t', start);
      cells.push_back(line.substr(start, tab - start));
      if (tab == std::string::npos) break;
      start = tab + 1;
    }
    rows.push_back(std::move(cells));
  }
  return rows;
}

inline std::vector<Vertex> split_ids(const std::string& s) {
  std::istringstream in(s);
  std::vector<Vertex> out;
  for (unsigned long long v; in >> v;) out.push_back(static_cast<Vertex>(v));
  return out;
}

inline std::size_t to_size(const std::string& s) { return static_cast<std::size_t>(std::stoull(s)); }

inline Json pattern_json(const PatternGraph& h) {
  Json j = {{"spec", h.spec()}, {"k", h.k()}, {"two_connected", h.two_connected()}};
  if (h.kind() == PatternKind::custom) j["edges"] = h.edges();
  return j;
}

inline PatternGraph pattern_from_json(const Json& j) {
  std::string spec = j.at("spec");
  if (spec.rfind("custom:", 0) == 0)
    return PatternGraph::custom(Graph::from_edges(j.at("k"), false, j.at("edges").get<std::vector<Graph::Edge>>()));
  return parse_pattern(spec);
}

}  // namespace detail

// ---------------------------------------------------------------- transversal

inline void save_reduction(const ReductionOutput& out, const std::filesystem::path& dir) {
  detail::ensure_dir(dir);
  const std::string src = to_text(out.source);
  write_file((dir / "source.hg").string(), src);
  write_file((dir / "graph.g").string(), to_text(out.graph));
  std::ostringstream canon;
  canon << "hyperedge\trepetition\tvertices\n";
  for (const auto& c : out.canonical)
    canon << c.hyperedge << '\t' << c.repetition << '\t' << detail::join(c.vertices) << '\n';
  write_file((dir / "canonical.tsv").string(), canon.str());
  std::ostringstream clouds;
  clouds << "vertex\tbase\tlabel\n";
  for (Vertex v = 0; v < out.graph.size(); ++v)
    clouds << v << '\t' << out.cloud_of(v).first << '\t' << out.cloud_of(v).second << '\n';
  write_file((dir / "clouds.tsv").string(), clouds.str());
  Json meta = {{"kind", "transversal"},
               {"seed", out.params.seed},
               {"source_hash", "fnv1a:" + hex64(fnv1a(src))},
               {"params",
                {{"B", out.params.B},
                 {"a", out.params.a},
                 {"pattern", detail::pattern_json(out.params.pattern)},
                 {"directed", out.params.directed},
                 {"allow_non_two_connected", out.params.allow_non_two_connected}}},
               {"N", out.graph.size()},
               {"edges", out.graph.edge_count()},
               {"canonical_copies", out.canonical.size()},
               {"warnings", out.warnings}};
  if (out.params.kprime) meta["params"]["kprime"] = *out.params.kprime;
  detail::write_json(dir / "meta.json", meta);
}

inline ReductionOutput load_reduction(const std::filesystem::path& dir) {
  Json meta = detail::read_json(dir / "meta.json");
  if (meta.at("kind") != "transversal") throw ParseError("not a transversal reduction directory");
  ReductionOutput out;
  const Json& p = meta.at("params");
  out.params.B = p.at("B");
  out.params.a = p.at("a");
  out.params.seed = meta.at("seed");
  out.params.pattern = detail::pattern_from_json(p.at("pattern"));
  out.params.directed = p.at("directed");
  out.params.allow_non_two_connected = p.at("allow_non_two_connected");
  if (p.contains("kprime")) out.params.kprime = p.at("kprime").get<std::size_t>();
  out.warnings = meta.at("warnings").get<std::vector<std::string>>();
  out.source = load_hypergraph((dir / "source.hg").string());
  out.graph = load_graph((dir / "graph.g").string());
  for (const auto& row : detail::read_tsv(dir / "canonical.tsv")) {
    if (row.size() != 3) throw ParseError("canonical.tsv: expected 3 columns");
    out.canonical.push_back({detail::to_size(row[0]), detail::to_size(row[1]), detail::split_ids(row[2])});
  }
  return out;
}

// ---------------------------------------------------------------- packing

inline std::string stars_tsv(const StarMap& stars) {
  std::ostringstream os;
  os << "source_vertex\tmembers\n";
  for (Vertex v = 0; v < stars.size(); ++v) os << v << '\t' << detail::join(stars[v]) << '\n';
  return os.str();
}

inline StarMap read_stars(const std::filesystem::path& path) {
  StarMap s;
  for (const auto& row : detail::read_tsv(path)) {
    if (row.size() != 2 || detail::to_size(row[0]) != s.stars.size()) throw ParseError("stars.tsv: bad row");
    s.stars.push_back(detail::split_ids(row[1]));
  }
  return s;
}

inline void save_line_packing(const PackingInstance& inst, const Graph& source, const PatternGraph& h,
                              const std::filesystem::path& dir) {
  detail::ensure_dir(dir);
  const std::string src = to_text(source);
  write_file((dir / "source.g").string(), src);
  write_file((dir / "graph.g").string(), to_text(inst.graph));
  write_file((dir / "stars.tsv").string(), stars_tsv(inst.stars));
  detail::write_json(dir / "meta.json", {{"kind", "packing-line"},
                                         {"source_hash", "fnv1a:" + hex64(fnv1a(src))},
                                         {"params", {{"pattern", detail::pattern_json(h)}}},
                                         {"line_vertices", inst.line_vertices},
                                         {"N", inst.graph.size()},
                                         {"edges", inst.graph.edge_count()}});
}

inline void save_mis(const MisReductionOutput& out, const std::filesystem::path& dir,
                     const PackingInstance* packing = nullptr, const PatternGraph* h = nullptr) {
  detail::ensure_dir(dir);
  const std::string src = to_text(out.source);
  write_file((dir / "source.g").string(), src);
  write_file((dir / "graph.g").string(), to_text(out.graph));
  std::ostringstream clouds;
  clouds << "vertex\traw\tbase\tlabel\n";
  for (Vertex v = 0; v < out.graph.size(); ++v)
    clouds << v << '\t' << out.original_ids[v] << '\t' << out.cloud_of(v).first << '\t' << out.cloud_of(v).second
           << '\n';
  write_file((dir / "clouds.tsv").string(), clouds.str());
  std::ostringstream del;
  del << "victim\tcycle\n";
  for (const auto& d : out.deleted) del << d.victim << '\t' << detail::join(d.cycle) << '\n';
  write_file((dir / "deletions.tsv").string(), del.str());
  std::ostringstream mt;
  mt << "edge\tdraw\tpermutation\n";
  for (std::size_t e = 0; e < out.matchings.size(); ++e)
    for (std::size_t t = 0; t < out.matchings[e].size(); ++t)
      mt << e << '\t' << t << '\t' << detail::join(out.matchings[e][t]) << '\n';
  write_file((dir / "matchings.tsv").string(), mt.str());
  Json meta = {{"kind", "packing-mis"},
               {"seed", out.seed},
               {"source_hash", "fnv1a:" + hex64(fnv1a(src))},
               {"params", {{"B", out.B}, {"a", out.a}, {"g", out.g}, {"k", out.k}}},
               {"stage", to_string(out.stage)},
               {"keep_probability", out.keep_probability},
               {"truncated", out.truncated},
               {"N", out.graph.size()},
               {"edges", out.graph.edge_count()},
               // Denominators: measure_raw is relative to |V0| * B, measure_final to survivors.
               {"raw_vertices", out.source.size() * out.B},
               {"surviving_vertices", out.graph.size()}};
  if (packing) {
    write_file((dir / "packing.g").string(), to_text(packing->graph));
    write_file((dir / "stars.tsv").string(), stars_tsv(packing->stars));
    meta["packing"] = {{"N", packing->graph.size()}, {"edges", packing->graph.edge_count()},
                       {"line_vertices", packing->line_vertices}};
    if (h) meta["params"]["pattern"] = detail::pattern_json(*h);
  }
  detail::write_json(dir / "meta.json", meta);
}

inline MisStage parse_stage(const std::string& s) {
  for (MisStage st : {MisStage::raw, MisStage::girth_repaired, MisStage::sparsified, MisStage::truncated})
    if (s == to_string(st)) return st;
  throw ParseError("unknown stage " + s);
}

inline MisReductionOutput load_mis(const std::filesystem::path& dir) {
  Json meta = detail::read_json(dir / "meta.json");
  if (meta.at("kind") != "packing-mis") throw ParseError("not a packing-mis directory");
  MisReductionOutput out;
  out.seed = meta.at("seed");
  const Json& p = meta.at("params");
  out.B = p.at("B");
  out.a = p.at("a");
  out.g = p.at("g");
  out.k = p.at("k");
  out.stage = parse_stage(meta.at("stage"));
  out.keep_probability = meta.at("keep_probability");
  out.truncated = meta.at("truncated").get<std::vector<Vertex>>();
  out.source = load_graph((dir / "source.g").string());
  out.graph = load_graph((dir / "graph.g").string());
  for (const auto& row : detail::read_tsv(dir / "clouds.tsv")) out.original_ids.push_back(detail::to_size(row.at(1)));
  for (const auto& row : detail::read_tsv(dir / "deletions.tsv"))
    out.deleted.push_back({detail::split_ids(row.at(1)), detail::to_size(row.at(0))});
  for (const auto& row : detail::read_tsv(dir / "matchings.tsv")) {
    std::size_t e = detail::to_size(row.at(0));
    if (out.matchings.size() <= e) out.matchings.resize(e + 1);
    out.matchings[e].push_back(detail::split_ids(row.at(2)));
  }
  return out;
}

// ---------------------------------------------------------------- labeling

inline std::string gadget_tsv(const LabelingGadget& l) {
  std::ostringstream os;
  os << "from\tto\tcolor\n";
  for (const auto& [u, v] : l.graph.edges()) os << u << '\t' << v << '\t' << l.color(u, v) << '\n';
  return os.str();
}

inline void save_gadget(const LabelingGadget& l, const std::filesystem::path& dir) {
  detail::ensure_dir(dir);
  write_file((dir / "gadget.tsv").string(), gadget_tsv(l));
  detail::write_json(dir / "meta.json", {{"kind", "gadget"},
                                         {"params", {{"k", l.k}, {"B", l.B}}},
                                         {"coordinate_offset", 1},
                                         {"N", l.size()},
                                         {"edges", l.graph.edge_count()}});
}

inline LabelingGadget load_gadget_tsv(std::size_t k, std::size_t B, const std::filesystem::path& path) {
  std::size_t n = detail::checked_pow(B, k, std::size_t{1} << 30);
  LabelingGadget l{k, B, Graph(n, true)};
  for (const auto& row : detail::read_tsv(path)) {
    Vertex u = detail::to_size(row.at(0)), v = detail::to_size(row.at(1));
    l.graph.add_edge(u, v);
    if (l.color(u, v) != detail::to_size(row.at(2))) throw ParseError("gadget.tsv: color mismatch");
  }
  return l;
}

inline LabelingGadget load_gadget(const std::filesystem::path& dir) {
  Json meta = detail::read_json(dir / "meta.json");
  const Json& p = meta.at("params");
  return load_gadget_tsv(p.at("k"), p.at("B"), dir / "gadget.tsv");
}

inline void save_labeling(const LabelingInstance& inst, const std::filesystem::path& dir) {
  detail::ensure_dir(dir);
  const std::string src = to_text(inst.source);
  write_file((dir / "source.hg").string(), src);
  write_file((dir / "graph.g").string(), to_text(inst.graph));
  write_file((dir / "gadget.tsv").string(), gadget_tsv(inst.gadget));
  std::ostringstream oc;
  oc << "hyperedge\tcolor\n";
  for (std::size_t h = 0; h < inst.outer.colors.size(); ++h) oc << h << '\t' << inst.outer.colors[h] << '\n';
  write_file((dir / "outer_colors.tsv").string(), oc.str());
  detail::write_json(dir / "meta.json",
                     {{"kind", "labeling"},
                      {"source_hash", "fnv1a:" + hex64(fnv1a(src))},
                      {"params", {{"k", inst.gadget.k}, {"B", inst.gadget.B}, {"kprime", inst.kprime}}},
                      {"d_used", inst.outer.used},
                      {"d_bound", static_cast<double>(inst.outer.bound)},
                      {"D", inst.D},
                      {"L", inst.L},
                      {"coordinate_offset", 1},
                      {"N", inst.graph.size()},
                      {"edges", inst.graph.edge_count()}});
}

inline LabelingInstance load_labeling(const std::filesystem::path& dir) {
  Json meta = detail::read_json(dir / "meta.json");
  if (meta.at("kind") != "labeling") throw ParseError("not a labeling directory");
  const Json& p = meta.at("params");
  LabelingInstance inst;
  inst.source = load_hypergraph((dir / "source.hg").string());
  inst.graph = load_graph((dir / "graph.g").string());
  inst.gadget = load_gadget_tsv(p.at("k"), p.at("B"), dir / "gadget.tsv");
  inst.kprime = p.at("kprime");
  inst.outer.used = meta.at("d_used");
  inst.outer.bound = meta.at("d_bound").get<double>();
  for (const auto& row : detail::read_tsv(dir / "outer_colors.tsv")) inst.outer.colors.push_back(detail::to_size(row.at(1)));
  inst.D = meta.at("D");
  inst.L = meta.at("L");
  inst.backgrounds = detail::checked_pow(inst.L, inst.D, kInfinity - 1);
  return inst;
}

}  // namespace htrans
