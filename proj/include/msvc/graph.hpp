#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <numeric>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace msvc {

using Vertex = std::uint32_t;
using Position = std::uint32_t;  // 1-based
using Cost = std::int64_t;

struct Edge {
  Vertex u;
  Vertex v;
  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Malformed or out-of-contract input supplied by a caller.
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A broken internal invariant; indicates a soundness bug, never bad input.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

inline Cost checked_add(Cost a, Cost b) {
  Cost out;
  if (__builtin_add_overflow(a, b, &out)) throw InternalError("cost overflow");
  return out;
}

inline Cost checked_mul(Cost a, Cost b) {
  Cost out;
  if (__builtin_mul_overflow(a, b, &out)) throw InternalError("cost overflow");
  return out;
}

/// Simple undirected graph on vertices 0..n-1, stored as sorted CSR adjacency.
class Graph {
 public:
  Graph() : offsets_(1, 0) {}

  /// Builds a graph; rejects self-loops, duplicate edges and out-of-range endpoints.
  static Graph from_edges(std::size_t n, std::span<const Edge> edge_list) {
    if (n > std::numeric_limits<Vertex>::max()) throw InvalidInput("too many vertices");
    Graph g;
    g.n_ = n;
    g.edges_.reserve(edge_list.size());
    for (const Edge& e : edge_list) {
      if (e.u >= n || e.v >= n) {
        throw InvalidInput("edge endpoint out of range: (" + std::to_string(e.u) + ", " +
                           std::to_string(e.v) + ") with n = " + std::to_string(n));
      }
      if (e.u == e.v) throw InvalidInput("self-loop at vertex " + std::to_string(e.u));
      g.edges_.push_back({std::min(e.u, e.v), std::max(e.u, e.v)});
    }
    std::sort(g.edges_.begin(), g.edges_.end());
    auto dup = std::adjacent_find(g.edges_.begin(), g.edges_.end());
    if (dup != g.edges_.end()) {
      throw InvalidInput("duplicate edge (" + std::to_string(dup->u) + ", " +
                         std::to_string(dup->v) + ")");
    }

    g.offsets_.assign(n + 1, 0);
    for (const Edge& e : g.edges_) {
      ++g.offsets_[e.u + 1];
      ++g.offsets_[e.v + 1];
    }
    std::partial_sum(g.offsets_.begin(), g.offsets_.end(), g.offsets_.begin());
    g.adj_.resize(2 * g.edges_.size());
    std::vector<std::size_t> fill(g.offsets_.begin(), g.offsets_.end() - 1);
    // Edges are sorted by (u, v); inserting in that order keeps every list sorted
    // for the v side, and the u side receives its neighbors in increasing v.
    for (const Edge& e : g.edges_) g.adj_[fill[e.v]++] = e.u;
    for (const Edge& e : g.edges_) g.adj_[fill[e.u]++] = e.v;
    return g;
  }

  static Graph from_edges(std::size_t n, std::initializer_list<Edge> edge_list) {
    return from_edges(n, std::span<const Edge>(edge_list.begin(), edge_list.size()));
  }

  std::size_t n() const { return n_; }
  std::size_t m() const { return edges_.size(); }

  std::size_t degree(Vertex v) const { return offsets_[v + 1] - offsets_[v]; }

  std::span<const Vertex> neighbors(Vertex v) const {
    return {adj_.data() + offsets_[v], degree(v)};
  }

  /// Edges as (u < v), sorted lexicographically.
  std::span<const Edge> edges() const { return edges_; }

  bool has_edge(Vertex u, Vertex v) const {
    if (u >= n_ || v >= n_) return false;
    auto nb = neighbors(u);
    return std::binary_search(nb.begin(), nb.end(), v);
  }

  std::size_t max_degree() const {
    std::size_t best = 0;
    for (Vertex v = 0; v < n_; ++v) best = std::max(best, degree(v));
    return best;
  }

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

 private:
  std::size_t n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::size_t> offsets_;
  std::vector<Vertex> adj_;
};

inline Graph build_graph(std::size_t n, std::span<const Edge> edge_list) {
  return Graph::from_edges(n, edge_list);
}

/// Decision triple (G, w, k). k is clamped to n, since positions past n do not exist.
class Instance {
 public:
  Instance() = default;
  Instance(Graph graph, std::size_t k, Cost w) : graph_(std::move(graph)), w_(w) {
    if (w < 0) throw InvalidInput("budget w must be nonnegative");
    k_ = std::min(k, graph_.n());
  }

  const Graph& graph() const { return graph_; }
  std::size_t k() const { return k_; }
  Cost w() const { return w_; }

  friend bool operator==(const Instance&, const Instance&) = default;

 private:
  Graph graph_;
  std::size_t k_ = 0;
  Cost w_ = 0;
};

/// Bijection between vertices and positions 1..n.
class Ordering {
 public:
  Ordering() = default;

  /// `sequence[i]` is the vertex placed at position i + 1.
  static Ordering from_sequence(std::vector<Vertex> sequence) {
    Ordering o;
    const std::size_t n = sequence.size();
    o.position_.assign(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
      const Vertex v = sequence[i];
      if (v >= n) throw InvalidInput("ordering names vertex " + std::to_string(v) + " outside 0.." + std::to_string(n ? n - 1 : 0));
      if (o.position_[v] != 0) throw InvalidInput("ordering repeats vertex " + std::to_string(v));
      o.position_[v] = static_cast<Position>(i + 1);
    }
    o.sequence_ = std::move(sequence);
    return o;
  }

  static Ordering identity(std::size_t n) {
    std::vector<Vertex> seq(n);
    std::iota(seq.begin(), seq.end(), Vertex{0});
    return from_sequence(std::move(seq));
  }

  std::size_t size() const { return sequence_.size(); }
  Position position(Vertex v) const { return position_[v]; }
  Vertex at(Position p) const { return sequence_[p - 1]; }
  std::span<const Vertex> sequence() const { return sequence_; }

  friend bool operator==(const Ordering& a, const Ordering& b) { return a.sequence_ == b.sequence_; }
  friend auto operator<=>(const Ordering& a, const Ordering& b) { return a.sequence_ <=> b.sequence_; }

 private:
  std::vector<Vertex> sequence_;
  std::vector<Position> position_;
};

struct CostReport {
  /// r[i - 1] is the number of edges whose cost is i.
  std::vector<std::size_t> r;
  Cost total = 0;
  Position max_cost = 0;

  std::size_t count_at(Position i) const { return (i >= 1 && i <= r.size()) ? r[i - 1] : 0; }
};

/// Vertices by non-increasing degree, ties by ascending id.
inline std::vector<Vertex> sorted_by_degree(const Graph& g) {
  std::vector<Vertex> order(g.n());
  std::iota(order.begin(), order.end(), Vertex{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](Vertex a, Vertex b) { return g.degree(a) > g.degree(b); });
  return order;
}

inline CostReport evaluate(const Graph& g, const Ordering& ord) {
  if (ord.size() != g.n()) {
    throw InvalidInput("ordering has " + std::to_string(ord.size()) + " vertices, graph has " +
                       std::to_string(g.n()));
  }
  CostReport rep;
  rep.r.assign(g.n(), 0);
  for (const Edge& e : g.edges()) {
    const Position c = std::min(ord.position(e.u), ord.position(e.v));
    ++rep.r[c - 1];
    rep.total = checked_add(rep.total, c);
    rep.max_cost = std::max(rep.max_cost, c);
  }
  return rep;
}

inline bool is_feasible(const Instance& inst, const Ordering& ord) {
  const CostReport rep = evaluate(inst.graph(), ord);
  return rep.max_cost <= inst.k() && rep.total <= inst.w();
}

inline bool is_vertex_cover(const Graph& g, std::span<const Vertex> s) {
  std::vector<char> in(g.n(), 0);
  for (Vertex v : s) {
    if (v >= g.n()) throw InvalidInput("vertex " + std::to_string(v) + " out of range");
    in[v] = 1;
  }
  return std::all_of(g.edges().begin(), g.edges().end(),
                     [&](const Edge& e) { return in[e.u] || in[e.v]; });
}

inline bool is_regular(const Graph& g) {
  for (Vertex v = 1; v < g.n(); ++v)
    if (g.degree(v) != g.degree(0)) return false;
  return true;
}

}  // namespace msvc
