#pragma once

// Text formats. One record per line; '#' starts a comment.
//
//   graph <n> <m> <directed 0|1>        hypergraph <n> <m> <k>
//   u v                                 v1 v2 ... vk
//   ...                                 ...

#include <cstdint>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "htrans/graph.hpp"

namespace htrans {

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline std::uint64_t fnv1a(const std::string& data) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : data) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

namespace detail {

// Yields the whitespace tokens of each non-empty, non-comment line.
class RecordReader {
 public:
  explicit RecordReader(std::istream& in) : in_(in) {}

  bool next(std::vector<std::string>& tokens) {
    std::string line;
    while (std::getline(in_, line)) {
      ++line_no_;
      if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
      std::istringstream ss(line);
      tokens.clear();
      for (std::string t; ss >> t;) tokens.push_back(t);
      if (!tokens.empty()) return true;
    }
    return false;
  }

  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("line " + std::to_string(line_no_) + ": " + what);
  }

  std::size_t number(const std::string& t) const {
    std::size_t pos = 0;
    unsigned long long v = 0;
    try {
      v = std::stoull(t, &pos);
    } catch (const std::exception&) {
      fail("expected a number, got '" + t + "'");
    }
    if (pos != t.size() || t[0] == '-') fail("expected a number, got '" + t + "'");
    return static_cast<std::size_t>(v);
  }

 private:
  std::istream& in_;
  std::size_t line_no_ = 0;
};

}  // namespace detail

inline void write_graph(std::ostream& out, const Graph& g) {
  out << "graph " << g.size() << ' ' << g.edge_count() << ' ' << (g.directed() ? 1 : 0) << '\n';
  for (const auto& [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

inline Graph read_graph(std::istream& in) {
  detail::RecordReader r(in);
  std::vector<std::string> t;
  if (!r.next(t) || t.size() != 4 || t[0] != "graph") r.fail("expected 'graph <n> <m> <directed>'");
  const std::size_t n = r.number(t[1]), m = r.number(t[2]), d = r.number(t[3]);
  if (d > 1) r.fail("directed flag must be 0 or 1");
  Graph g(n, d == 1);
  for (std::size_t i = 0; i < m; ++i) {
    if (!r.next(t) || t.size() != 2) r.fail("expected an edge 'u v'");
    const std::size_t u = r.number(t[0]), v = r.number(t[1]);
    if (u >= n || v >= n) r.fail("edge endpoint out of range");
    if (u == v) r.fail("self-loop");
    if (!g.add_edge(u, v)) r.fail("duplicate edge");
  }
  if (r.next(t)) r.fail("trailing records after " + std::to_string(m) + " edges");
  return g;
}

inline void write_hypergraph(std::ostream& out, const Hypergraph& p) {
  out << "hypergraph " << p.vertex_count() << ' ' << p.edge_count() << ' ' << p.uniformity() << '\n';
  for (const auto& e : p.edges()) {
    for (std::size_t i = 0; i < e.size(); ++i) out << (i ? " " : "") << e[i];
    out << '\n';
  }
}

inline Hypergraph read_hypergraph(std::istream& in) {
  detail::RecordReader r(in);
  std::vector<std::string> t;
  if (!r.next(t) || t.size() != 4 || t[0] != "hypergraph") r.fail("expected 'hypergraph <n> <m> <k>'");
  const std::size_t n = r.number(t[1]), m = r.number(t[2]), k = r.number(t[3]);
  Hypergraph p(n, k);
  for (std::size_t i = 0; i < m; ++i) {
    if (!r.next(t) || t.size() != k) r.fail("expected " + std::to_string(k) + " vertex ids");
    std::vector<Vertex> e;
    for (const auto& s : t) e.push_back(r.number(s));
    try {
      p.add_edge(std::move(e));
    } catch (const std::exception& ex) {
      r.fail(ex.what());
    }
  }
  if (r.next(t)) r.fail("trailing records after " + std::to_string(m) + " hyperedges");
  return p;
}

inline std::string to_text(const Graph& g) {
  std::ostringstream os;
  write_graph(os, g);
  return os.str();
}

inline std::string to_text(const Hypergraph& p) {
  std::ostringstream os;
  write_hypergraph(os, p);
  return os.str();
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline void write_file(const std::string& path, const std::string& data) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << data;
}

inline Graph load_graph(const std::string& path) {
  std::istringstream in(read_file(path));
  return read_graph(in);
}

inline Hypergraph load_hypergraph(const std::string& path) {
  std::istringstream in(read_file(path));
  return read_hypergraph(in);
}

/// `cycle:<k>` style spec, or the path of an undirected graph file.
inline PatternGraph load_pattern(const std::string& spec) {
  for (const char* kind : {"cycle:", "clique:", "star:", "path:"})
    if (spec.rfind(kind, 0) == 0) return parse_pattern(spec);
  return PatternGraph::custom(load_graph(spec));
}

}  // namespace htrans
