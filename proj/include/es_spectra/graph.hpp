#pragma once

#include <algorithm>
#include <charconv>
#include <compare>
#include <cstddef>
#include <istream>
#include <limits>
#include <optional>
#include <queue>
#include <span>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "es_spectra/error.hpp"

namespace es_spectra {

using Vertex = std::size_t;
using VertexPair = std::pair<Vertex, Vertex>;

/// Undirected edge stored with u < v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  auto operator<=>(const Edge&) const = default;
};

/// Rejected input edge; `pair()` is the offending pair as given by the caller.
class GraphError : public Error {
 public:
  GraphError(ErrorCode code, VertexPair pair, const std::string& what)
      : Error(code, what + " (" + std::to_string(pair.first) + ", " +
                        std::to_string(pair.second) + ")"),
        pair_(pair) {}

  VertexPair pair() const noexcept { return pair_; }

 private:
  VertexPair pair_;
};

/// Simple undirected graph on vertices 0..n-1. Immutable once built.
class Graph {
 public:
  static Graph from_edge_list(std::size_t n, std::span<const VertexPair> pairs) {
    if (n == 0) throw Error(ErrorCode::InvalidParameter, "vertex count must be positive");
    std::vector<Edge> edges;
    edges.reserve(pairs.size());
    for (const auto& [a, b] : pairs) {
      if (a >= n || b >= n)
        throw GraphError(ErrorCode::VertexOutOfRange, {a, b},
                         "vertex out of range for n = " + std::to_string(n));
      if (a == b) throw GraphError(ErrorCode::SelfLoop, {a, b}, "self-loop");
      edges.push_back(Edge{std::min(a, b), std::max(a, b)});
    }
    std::vector<Edge> sorted = edges;
    std::sort(sorted.begin(), sorted.end());
    if (auto dup = std::adjacent_find(sorted.begin(), sorted.end()); dup != sorted.end()) {
      // report the pair in the orientation the caller wrote it
      auto first = std::find(edges.begin(), edges.end(), *dup);
      auto second = std::find(std::next(first), edges.end(), *dup);
      throw GraphError(ErrorCode::DuplicateEdge,
                       pairs[static_cast<std::size_t>(second - edges.begin())], "duplicate edge");
    }
    return Graph(n, std::move(sorted));
  }

  static Graph from_edge_list(std::size_t n, std::initializer_list<VertexPair> pairs) {
    return from_edge_list(n, std::span<const VertexPair>(pairs.begin(), pairs.size()));
  }

  std::size_t order() const noexcept { return n_; }
  std::size_t size() const noexcept { return edges_.size(); }
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  const std::vector<std::size_t>& degrees() const noexcept { return degrees_; }
  std::size_t degree(Vertex v) const { return degrees_.at(v); }
  const std::vector<Vertex>& neighbors(Vertex v) const { return adjacency_.at(v); }

  bool has_edge(Vertex a, Vertex b) const {
    if (a == b || a >= n_ || b >= n_) return false;
    return std::binary_search(edges_.begin(), edges_.end(), Edge{std::min(a, b), std::max(a, b)});
  }

  std::vector<VertexPair> edge_pairs() const {
    std::vector<VertexPair> out;
    out.reserve(edges_.size());
    for (const auto& e : edges_) out.emplace_back(e.u, e.v);
    return out;
  }

 private:
  Graph(std::size_t n, std::vector<Edge> edges)
      : n_(n), edges_(std::move(edges)), degrees_(n, 0), adjacency_(n) {
    for (const auto& e : edges_) {
      ++degrees_[e.u];
      ++degrees_[e.v];
      adjacency_[e.u].push_back(e.v);
      adjacency_[e.v].push_back(e.u);
    }
  }

  std::size_t n_;
  std::vector<Edge> edges_;
  std::vector<std::size_t> degrees_;
  std::vector<std::vector<Vertex>> adjacency_;
};

/// Relabels vertex v as perm[v]. `perm` must be a permutation of 0..n-1.
inline Graph relabel(const Graph& g, std::span<const Vertex> perm) {
  if (perm.size() != g.order())
    throw Error(ErrorCode::InvalidParameter, "permutation length does not match vertex count");
  std::vector<VertexPair> pairs;
  pairs.reserve(g.size());
  for (const auto& e : g.edges()) pairs.emplace_back(perm[e.u], perm[e.v]);
  return Graph::from_edge_list(g.order(), pairs);
}

// ---------------------------------------------------------------------------
// Families

struct GraphFamily {
  enum class Kind { Complete, Cycle, Path, Star, CompleteBipartite };

  Kind kind = Kind::Complete;
  std::size_t first = 1;
  std::size_t second = 0;  // only used by CompleteBipartite

  static GraphFamily complete(std::size_t n) { return {Kind::Complete, n, 0}; }
  static GraphFamily cycle(std::size_t n) { return {Kind::Cycle, n, 0}; }
  static GraphFamily path(std::size_t n) { return {Kind::Path, n, 0}; }
  static GraphFamily star(std::size_t n) { return {Kind::Star, n, 0}; }
  static GraphFamily complete_bipartite(std::size_t m, std::size_t n) {
    return {Kind::CompleteBipartite, m, n};
  }

  std::size_t order() const {
    return kind == Kind::CompleteBipartite ? first + second : first;
  }

  bool operator==(const GraphFamily&) const = default;
};

inline void validate(const GraphFamily& f) {
  using K = GraphFamily::Kind;
  if (f.first < 1 || (f.kind == K::CompleteBipartite && f.second < 1))
    throw Error(ErrorCode::InvalidParameter, "family parameters must be >= 1");
  if (f.kind == K::Cycle && f.first < 3)
    throw Error(ErrorCode::InvalidParameter, "cycle requires n >= 3");
  if (f.kind == K::Path && f.first < 2)
    throw Error(ErrorCode::InvalidParameter, "path requires n >= 2");
}

inline std::string to_string(const GraphFamily& f) {
  using K = GraphFamily::Kind;
  switch (f.kind) {
    case K::Complete: return "complete:" + std::to_string(f.first);
    case K::Cycle: return "cycle:" + std::to_string(f.first);
    case K::Path: return "path:" + std::to_string(f.first);
    case K::Star: return "star:" + std::to_string(f.first);
    case K::CompleteBipartite:
      return "bipartite:" + std::to_string(f.first) + ":" + std::to_string(f.second);
  }
  return {};
}

namespace detail {

inline std::optional<std::size_t> parse_size(std::string_view s) {
  std::size_t value = 0;
  const auto* end = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(s.data(), end, value);
  if (ec != std::errc{} || ptr != end || s.empty()) return std::nullopt;
  return value;
}

inline std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    auto pos = s.find(sep, start);
    parts.push_back(s.substr(start, pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return parts;
}

}  // namespace detail

/// Parses `complete:7`, `cycle:6`, `path:8`, `star:5`, `bipartite:2:3`.
inline GraphFamily parse_family(std::string_view spec) {
  auto parts = detail::split(spec, ':');
  auto bad = [&](const std::string& why) {
    return Error(ErrorCode::InvalidParameter, "family '" + std::string(spec) + "': " + why);
  };
  const std::string_view kind = parts.front();
  const bool bipartite = kind == "bipartite";
  if (parts.size() != (bipartite ? 3u : 2u)) throw bad("wrong number of parameters");
  std::vector<std::size_t> params;
  for (std::size_t i = 1; i < parts.size(); ++i) {
    auto v = detail::parse_size(parts[i]);
    if (!v) throw bad("parameter is not a non-negative integer");
    params.push_back(*v);
  }
  GraphFamily f;
  if (kind == "complete") f = GraphFamily::complete(params[0]);
  else if (kind == "cycle") f = GraphFamily::cycle(params[0]);
  else if (kind == "path") f = GraphFamily::path(params[0]);
  else if (kind == "star") f = GraphFamily::star(params[0]);
  else if (bipartite) f = GraphFamily::complete_bipartite(params[0], params[1]);
  else throw bad("unknown family kind");
  validate(f);
  return f;
}

/// Canonical labelling: star center 0; bipartite parts {0..m-1}, {m..m+n-1};
/// path 0-1-...-(n-1); cycle closes with {n-1, 0}.
inline Graph generate(const GraphFamily& f) {
  using K = GraphFamily::Kind;
  validate(f);
  std::vector<VertexPair> pairs;
  const std::size_t n = f.first;
  switch (f.kind) {
    case K::Complete:
      for (Vertex i = 0; i < n; ++i)
        for (Vertex j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
      break;
    case K::Cycle:
      for (Vertex i = 0; i < n; ++i) pairs.emplace_back(i, (i + 1) % n);
      break;
    case K::Path:
      for (Vertex i = 0; i + 1 < n; ++i) pairs.emplace_back(i, i + 1);
      break;
    case K::Star:
      for (Vertex i = 1; i < n; ++i) pairs.emplace_back(0, i);
      break;
    case K::CompleteBipartite:
      for (Vertex i = 0; i < f.first; ++i)
        for (Vertex j = 0; j < f.second; ++j) pairs.emplace_back(i, f.first + j);
      break;
  }
  return Graph::from_edge_list(f.order(), pairs);
}

// ---------------------------------------------------------------------------
// Structure queries

/// BFS distances from `source`; unreachable vertices get SIZE_MAX.
inline std::vector<std::size_t> bfs_distances(const Graph& g, Vertex source) {
  constexpr auto unreached = std::numeric_limits<std::size_t>::max();
  std::vector<std::size_t> dist(g.order(), unreached);
  std::queue<Vertex> frontier;
  dist[source] = 0;
  frontier.push(source);
  while (!frontier.empty()) {
    Vertex v = frontier.front();
    frontier.pop();
    for (Vertex w : g.neighbors(v)) {
      if (dist[w] == unreached) {
        dist[w] = dist[v] + 1;
        frontier.push(w);
      }
    }
  }
  return dist;
}

inline bool is_connected(const Graph& g) {
  auto dist = bfs_distances(g, 0);
  return std::none_of(dist.begin(), dist.end(), [](std::size_t d) {
    return d == std::numeric_limits<std::size_t>::max();
  });
}

inline std::size_t diameter(const Graph& g) {
  std::size_t best = 0;
  for (Vertex s = 0; s < g.order(); ++s) {
    auto dist = bfs_distances(g, s);
    for (auto d : dist) {
      if (d == std::numeric_limits<std::size_t>::max())
        throw Error(ErrorCode::Disconnected, "diameter of a disconnected graph is undefined");
      best = std::max(best, d);
    }
  }
  return best;
}

/// Two-coloring of every component, or nullopt when an odd cycle exists.
inline std::optional<std::vector<int>> two_coloring(const Graph& g) {
  std::vector<int> color(g.order(), -1);
  for (Vertex s = 0; s < g.order(); ++s) {
    if (color[s] != -1) continue;
    color[s] = 0;
    std::queue<Vertex> frontier;
    frontier.push(s);
    while (!frontier.empty()) {
      Vertex v = frontier.front();
      frontier.pop();
      for (Vertex w : g.neighbors(v)) {
        if (color[w] == -1) {
          color[w] = 1 - color[v];
          frontier.push(w);
        } else if (color[w] == color[v]) {
          return std::nullopt;
        }
      }
    }
  }
  return color;
}

struct StructureReport {
  std::optional<std::size_t> regular;
  bool bipartite = false;
  bool complete = false;
  std::optional<std::pair<std::size_t, std::size_t>> complete_bipartite;  // (smaller, larger)

  bool operator==(const StructureReport&) const = default;
};

inline StructureReport classify(const Graph& g) {
  StructureReport r;
  const auto& deg = g.degrees();
  if (std::adjacent_find(deg.begin(), deg.end(), std::not_equal_to<>()) == deg.end())
    r.regular = deg.front();
  const std::size_t n = g.order();
  r.complete = g.size() == n * (n - 1) / 2;

  auto coloring = two_coloring(g);
  r.bipartite = coloring.has_value();
  // K_{a,b} with a, b >= 1 is connected, so its bipartition is the unique one.
  if (coloring && n >= 2 && is_connected(g)) {
    const auto a = static_cast<std::size_t>(std::count(coloring->begin(), coloring->end(), 0));
    const std::size_t b = n - a;
    if (a * b == g.size()) r.complete_bipartite = std::pair{std::min(a, b), std::max(a, b)};
  }
  return r;
}

// ---------------------------------------------------------------------------
// Edge-list text format
//
//   n m
//   u v      (m lines, 0-indexed)
//
// Blank lines and lines whose first non-blank character is '#' are skipped.

inline Graph parse_edge_list(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  auto next_content = [&]() -> std::optional<std::string> {
    while (std::getline(in, line)) {
      ++line_no;
      auto first = line.find_first_not_of(" \t\r");
      if (first == std::string::npos || line[first] == '#') continue;
      return line;
    }
    return std::nullopt;
  };
  auto read_two = [&](const std::string& text, const char* what) {
    std::istringstream fields(text);
    std::string a, b, extra;
    if (!(fields >> a >> b) || (fields >> extra))
      throw ParseError(line_no, std::string("expected two integers (") + what + ")");
    auto x = detail::parse_size(a);
    auto y = detail::parse_size(b);
    if (!x || !y)
      throw ParseError(line_no, std::string("expected non-negative integers (") + what + ")");
    return VertexPair{*x, *y};
  };

  auto header = next_content();
  if (!header) throw ParseError(line_no == 0 ? 1 : line_no, "missing 'n m' header");
  const auto [n, m] = read_two(*header, "n m");
  if (n == 0) throw ParseError(line_no, "vertex count must be positive");

  std::vector<VertexPair> pairs;
  std::vector<std::size_t> lines;
  pairs.reserve(m);
  for (std::size_t k = 0; k < m; ++k) {
    auto text = next_content();
    if (!text)
      throw ParseError(line_no + 1, "expected " + std::to_string(m) + " edges, found " +
                                        std::to_string(k));
    pairs.push_back(read_two(*text, "u v"));
    lines.push_back(line_no);
  }
  if (next_content())
    throw ParseError(line_no, "more edge lines than the header's m = " + std::to_string(m));

  try {
    return Graph::from_edge_list(n, pairs);
  } catch (const GraphError& e) {
    auto it = std::find(pairs.begin(), pairs.end(), e.pair());
    // duplicates are reported at their second occurrence
    if (e.code() == ErrorCode::DuplicateEdge) {
      auto key = Edge{std::min(e.pair().first, e.pair().second),
                      std::max(e.pair().first, e.pair().second)};
      int seen = 0;
      for (auto p = pairs.begin(); p != pairs.end(); ++p) {
        if (Edge{std::min(p->first, p->second), std::max(p->first, p->second)} == key &&
            ++seen == 2) {
          it = p;
          break;
        }
      }
    }
    throw ParseError(lines[static_cast<std::size_t>(it - pairs.begin())], e.what());
  }
}

inline Graph parse_edge_list(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_edge_list(in);
}

inline std::string to_edge_list(const Graph& g) {
  std::ostringstream out;
  out << g.order() << ' ' << g.size() << '\n';
  for (const auto& e : g.edges()) out << e.u << ' ' << e.v << '\n';
  return out.str();
}

}  // namespace es_spectra
