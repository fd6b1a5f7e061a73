#pragma once

// Linear-time kernelization to at most k^2 + 2k vertices.
//
// Pipeline: Rule 1 (too many high-degree vertices), Rule 2 repeated while
// d(v_1) > k(k0 + 1) (trim edges across a degree gap larger than k),
// Rule 3 (too many non-isolated low-degree vertices), Rule 4 (replace the
// vertices hanging off V_{>k} by p synthetic vertices).

#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "msvc/graph.hpp"

namespace msvc {

struct Rule2Record {
  std::size_t t = 0;       // cut index, 1-based into the degree-sorted order
  std::size_t delta = 0;   // d(v_t) - d(v_{t+1}) before the cut
  std::vector<Edge> removed_edges;  // (top vertex, tail vertex), original ids
  Cost w_delta = 0;
};

struct Rule4Record {
  std::size_t p = 0;
  std::vector<Vertex> deleted_I;  // original ids
  std::vector<Vertex> added_X;    // kernel ids of the synthetic vertices
  std::vector<std::pair<Vertex, std::size_t>> moved_edge_counts;  // original id -> |N(v) ∩ I|
};

using KernelStep = std::variant<Rule2Record, Rule4Record>;

struct KernelTrace {
  std::vector<KernelStep> steps;
  /// kernel vertex -> original vertex; nullopt for synthetic vertices.
  std::vector<std::optional<Vertex>> vertex_map;

  Cost w_offset() const {
    Cost total = 0;
    for (const auto& s : steps)
      if (auto* r2 = std::get_if<Rule2Record>(&s)) total = checked_add(total, r2->w_delta);
    return total;
  }
};

enum class NoRule { rule1, rule2_budget, rule3 };

inline const char* to_string(NoRule r) {
  switch (r) {
    case NoRule::rule1: return "rule1";
    case NoRule::rule2_budget: return "rule2_budget";
    case NoRule::rule3: return "rule3";
  }
  return "?";
}

struct TrivialNo {
  NoRule rule;
};

struct Kernel {
  Instance instance;
  KernelTrace trace;
  std::size_t input_k = 0;
};

using KernelOutcome = std::variant<TrivialNo, Kernel>;

class LiftError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

namespace detail {

/// Mutable adjacency used while the rules run. Vertex ids are stable: originals
/// keep their ids, synthetic vertices are appended.
struct WorkGraph {
  std::vector<std::vector<Vertex>> adj;
  std::vector<char> alive;
  std::size_t original_n = 0;
  std::size_t m = 0;

  explicit WorkGraph(const Graph& g) : adj(g.n()), alive(g.n(), 1), original_n(g.n()), m(g.m()) {
    for (Vertex v = 0; v < g.n(); ++v) {
      auto nb = g.neighbors(v);
      adj[v].assign(nb.begin(), nb.end());
    }
  }

  std::size_t deg(Vertex v) const { return adj[v].size(); }
  std::size_t size() const { return adj.size(); }

  std::vector<Vertex> sorted_alive() const {
    std::vector<Vertex> order;
    order.reserve(adj.size());
    for (Vertex v = 0; v < adj.size(); ++v)
      if (alive[v]) order.push_back(v);
    std::stable_sort(order.begin(), order.end(),
                     [&](Vertex a, Vertex b) { return adj[a].size() > adj[b].size(); });
    return order;
  }

  std::size_t count_high(std::size_t k) const {
    std::size_t c = 0;
    for (Vertex v = 0; v < adj.size(); ++v)
      if (alive[v] && adj[v].size() > k) ++c;
    return c;
  }

  /// Alive vertices relabelled ascending; `map[new] = old`.
  Graph compact(std::vector<Vertex>& map) const {
    std::vector<Vertex> relabel(adj.size(), 0);
    map.clear();
    for (Vertex v = 0; v < adj.size(); ++v) {
      if (!alive[v]) continue;
      relabel[v] = static_cast<Vertex>(map.size());
      map.push_back(v);
    }
    std::vector<Edge> edges;
    edges.reserve(m);
    for (Vertex v : map)
      for (Vertex x : adj[v])
        if (v < x) edges.push_back({relabel[v], relabel[x]});
    return Graph::from_edges(map.size(), edges);
  }
};

inline bool rule1_fires(const WorkGraph& wg, std::size_t k) { return wg.count_high(k) > k; }

inline std::optional<std::size_t> big_gap(const WorkGraph& wg, const std::vector<Vertex>& order,
                                          std::size_t k) {
  for (std::size_t t = 1; t < order.size(); ++t)
    if (wg.deg(order[t - 1]) - wg.deg(order[t]) > k) return t;
  return std::nullopt;
}

inline Rule2Record apply_rule2(WorkGraph& wg, const std::vector<Vertex>& order, std::size_t t,
                               std::size_t k) {
  if (t == 0 || t >= order.size()) throw InternalError("rule 2: cut index out of range");
  const std::size_t d_top = wg.deg(order[t - 1]);
  const std::size_t d_tail = wg.deg(order[t]);
  if (d_top < d_tail || d_top - d_tail <= k) throw InternalError("rule 2: gap at cut is not larger than k");

  Rule2Record rec;
  rec.t = t;
  rec.delta = d_top - d_tail;
  const std::size_t cut = rec.delta - k;

  std::vector<char> in_tail(wg.size(), 0);
  for (std::size_t i = t; i < order.size(); ++i) in_tail[order[i]] = 1;

  // Live degrees: removals by v_1 are visible when v_2 picks its edges.
  std::vector<std::size_t> deg(wg.size());
  for (Vertex v = 0; v < wg.size(); ++v) deg[v] = wg.deg(v);

  std::vector<Vertex> tail_nb;
  for (std::size_t i = 0; i < t; ++i) {
    const Vertex vi = order[i];
    tail_nb.clear();
    for (Vertex x : wg.adj[vi])
      if (in_tail[x]) tail_nb.push_back(x);
    if (tail_nb.size() < cut) {
      throw InternalError("rule 2: vertex " + std::to_string(vi) + " has only " +
                          std::to_string(tail_nb.size()) + " tail neighbors, needs " + std::to_string(cut));
    }
    std::partial_sort(tail_nb.begin(), tail_nb.begin() + static_cast<std::ptrdiff_t>(cut), tail_nb.end(),
                      [&](Vertex a, Vertex b) { return deg[a] != deg[b] ? deg[a] < deg[b] : a < b; });
    for (std::size_t j = 0; j < cut; ++j) {
      rec.removed_edges.push_back({vi, tail_nb[j]});
      --deg[tail_nb[j]];
    }
    deg[vi] -= cut;
  }

  // Drop the edges from both adjacency lists, touching each list once.
  std::vector<std::size_t> stamp(wg.size(), 0);
  std::size_t clock = 0;
  auto filter = [&](Vertex owner) {
    auto& list = wg.adj[owner];
    std::erase_if(list, [&](Vertex x) { return stamp[x] == clock; });
  };
  std::vector<Edge> by_tail = rec.removed_edges;
  std::sort(by_tail.begin(), by_tail.end(), [](const Edge& a, const Edge& b) { return a.u < b.u; });
  for (std::size_t i = 0; i < by_tail.size();) {
    ++clock;
    const Vertex owner = by_tail[i].u;
    for (; i < by_tail.size() && by_tail[i].u == owner; ++i) stamp[by_tail[i].v] = clock;
    filter(owner);
  }
  std::sort(by_tail.begin(), by_tail.end(), [](const Edge& a, const Edge& b) { return a.v < b.v; });
  for (std::size_t i = 0; i < by_tail.size();) {
    ++clock;
    const Vertex owner = by_tail[i].v;
    for (; i < by_tail.size() && by_tail[i].v == owner; ++i) stamp[by_tail[i].u] = clock;
    filter(owner);
  }
  wg.m -= rec.removed_edges.size();

  const Cost tt = static_cast<Cost>(t);
  rec.w_delta = checked_mul(checked_mul(tt, tt + 1) / 2, static_cast<Cost>(cut));
  return rec;
}

/// I: alive vertices outside V_{>k} whose neighbors all lie in V_{>k}.
inline std::vector<char> isolated_after_high(const WorkGraph& wg, std::size_t k) {
  std::vector<char> in_I(wg.size(), 0);
  for (Vertex v = 0; v < wg.size(); ++v) {
    if (!wg.alive[v] || wg.deg(v) > k) continue;
    bool all_high = true;
    for (Vertex x : wg.adj[v])
      if (wg.deg(x) <= k) { all_high = false; break; }
    in_I[v] = all_high;
  }
  return in_I;
}

inline bool rule3_fires(const WorkGraph& wg, std::size_t k) {
  const std::size_t k0 = wg.count_high(k);
  if (k0 > k) return true;
  auto in_I = isolated_after_high(wg, k);
  std::size_t rest = 0;
  for (Vertex v = 0; v < wg.size(); ++v)
    if (wg.alive[v] && wg.deg(v) <= k && !in_I[v]) ++rest;
  return rest > (k - k0) * (k + 1);
}

/// Applies Rule 4 in place when p < |I|. Synthetic vertex ids are appended and
/// returned through the record in work-graph id space.
inline std::optional<Rule4Record> apply_rule4(WorkGraph& wg, std::size_t k) {
  auto in_I = isolated_after_high(wg, k);
  std::size_t size_I = 0;
  for (char c : in_I) size_I += c != 0;

  Rule4Record rec;
  std::vector<Vertex> high;
  for (Vertex v = 0; v < wg.size(); ++v) {
    if (!wg.alive[v] || wg.deg(v) <= k) continue;
    std::size_t c = 0;
    for (Vertex x : wg.adj[v]) c += in_I[x] != 0;
    high.push_back(v);
    rec.moved_edge_counts.emplace_back(v, c);
    rec.p = std::max(rec.p, c);
  }
  if (rec.p >= size_I) return std::nullopt;

  for (Vertex v = 0; v < wg.size(); ++v) {
    if (!in_I[v]) continue;
    rec.deleted_I.push_back(v);
  }
  for (Vertex v : high) {
    std::erase_if(wg.adj[v], [&](Vertex x) { return in_I[x] != 0; });
  }
  for (Vertex v : rec.deleted_I) {
    wg.m -= wg.adj[v].size();
    wg.adj[v].clear();
    wg.alive[v] = 0;
  }
  const Vertex first_x = static_cast<Vertex>(wg.size());
  wg.adj.resize(wg.size() + rec.p);
  wg.alive.resize(wg.adj.size(), 1);
  for (std::size_t i = 0; i < rec.p; ++i) rec.added_X.push_back(first_x + static_cast<Vertex>(i));
  for (const auto& [v, c] : rec.moved_edge_counts) {
    for (std::size_t i = 0; i < c; ++i) {
      const Vertex x = first_x + static_cast<Vertex>(i);
      wg.adj[v].push_back(x);
      wg.adj[x].push_back(v);
    }
    wg.m += c;
  }
  return rec;
}

}  // namespace detail

/// Rule 1: true when more than k vertices have degree above k (equivalently d(v_{k+1}) > k).
inline bool rule1_check(const Instance& inst) {
  return detail::rule1_fires(detail::WorkGraph(inst.graph()), inst.k());
}

/// Smallest 1-based t with d(v_t) - d(v_{t+1}) > k in the degree-sorted order.
inline std::optional<std::size_t> find_big_gap(const Instance& inst) {
  detail::WorkGraph wg(inst.graph());
  return detail::big_gap(wg, wg.sorted_alive(), inst.k());
}

/// Rule 2 at cut index t. Requires w >= the budget decrease; throws InternalError
/// when the gap at t is not larger than k.
inline std::pair<Instance, Rule2Record> rule2_apply(const Instance& inst, std::size_t t) {
  detail::WorkGraph wg(inst.graph());
  auto rec = detail::apply_rule2(wg, wg.sorted_alive(), t, inst.k());
  if (rec.w_delta > inst.w()) throw InvalidInput("rule 2 would drive the budget below zero");
  std::vector<Vertex> map;
  Graph g = wg.compact(map);
  return {Instance(std::move(g), inst.k(), inst.w() - rec.w_delta), std::move(rec)};
}

inline bool rule3_check(const Instance& inst) {
  return detail::rule3_fires(detail::WorkGraph(inst.graph()), inst.k());
}

struct Rule4Result {
  Instance instance;
  Rule4Record record;
  std::vector<std::optional<Vertex>> vertex_map;  // new id -> old id, nullopt if synthetic
};

/// Rule 4; nullopt when p = |I| (rule not applicable).
inline std::optional<Rule4Result> rule4_apply(const Instance& inst) {
  detail::WorkGraph wg(inst.graph());
  auto rec = detail::apply_rule4(wg, inst.k());
  if (!rec) return std::nullopt;
  std::vector<Vertex> map;
  Graph g = wg.compact(map);
  Rule4Result out;
  for (Vertex old : map) {
    out.vertex_map.push_back(old < wg.original_n ? std::optional<Vertex>(old) : std::nullopt);
  }
  const std::size_t survivors = g.n() - rec->p;
  for (std::size_t i = 0; i < rec->p; ++i) rec->added_X[i] = static_cast<Vertex>(survivors + i);
  out.instance = Instance(std::move(g), inst.k(), inst.w());
  out.record = std::move(*rec);
  return out;
}

inline KernelOutcome kernelize(const Instance& inst) {
  const std::size_t k = inst.k();
  detail::WorkGraph wg(inst.graph());
  KernelTrace trace;
  Cost w = inst.w();

  if (detail::rule1_fires(wg, k)) return TrivialNo{NoRule::rule1};

  for (;;) {
    auto order = wg.sorted_alive();
    if (order.empty()) break;
    const std::size_t k0 = wg.count_high(k);
    if (wg.deg(order[0]) <= k * (k0 + 1)) break;
    auto t = detail::big_gap(wg, order, k);
    if (!t) throw InternalError("rule 2: d(v_1) exceeds k(k0+1) but no gap exceeds k");
    const std::size_t m_before = wg.m;
    auto rec = detail::apply_rule2(wg, order, *t, k);
    if (wg.m >= m_before) throw InternalError("rule 2 made no progress");
    w -= rec.w_delta;
    trace.steps.emplace_back(std::move(rec));
    if (w < 0) return TrivialNo{NoRule::rule2_budget};
  }

  if (detail::rule3_fires(wg, k)) return TrivialNo{NoRule::rule3};

  auto r4 = detail::apply_rule4(wg, k);

  std::vector<Vertex> map;
  Graph g = wg.compact(map);
  trace.vertex_map.reserve(map.size());
  for (Vertex old : map) {
    trace.vertex_map.push_back(old < wg.original_n ? std::optional<Vertex>(old) : std::nullopt);
  }
  if (r4) {
    const std::size_t survivors = g.n() - r4->p;
    for (std::size_t i = 0; i < r4->p; ++i) r4->added_X[i] = static_cast<Vertex>(survivors + i);
    trace.steps.emplace_back(std::move(*r4));
  }
  if (g.n() > k * k + 2 * k) {
    throw InternalError("kernel has " + std::to_string(g.n()) + " vertices, bound is " +
                        std::to_string(k * k + 2 * k));
  }
  return Kernel{Instance(std::move(g), k, w), std::move(trace), k};
}

/// Maps an optimal kernel ordering back to the original graph: synthetic
/// vertices are dropped, survivors keep their relative order, and every other
/// original vertex is appended in ascending id. The result is re-evaluated and
/// must cost exactly the kernel cost plus the accumulated budget offset.
inline Ordering lift(const Kernel& kernel, const Ordering& kernel_ord, const Instance& original) {
  const Graph& kg = kernel.instance.graph();
  if (kernel_ord.size() != kg.n()) throw InvalidInput("kernel ordering size does not match kernel");
  const auto& map = kernel.trace.vertex_map;
  std::vector<char> used(original.graph().n(), 0);
  std::vector<Vertex> seq;
  seq.reserve(original.graph().n());
  for (Vertex v : kernel_ord.sequence()) {
    if (v >= map.size()) throw LiftError("vertex map does not cover kernel vertex " + std::to_string(v));
    if (!map[v]) continue;
    seq.push_back(*map[v]);
    used[*map[v]] = 1;
  }
  for (Vertex v = 0; v < original.graph().n(); ++v)
    if (!used[v]) seq.push_back(v);
  Ordering lifted = Ordering::from_sequence(std::move(seq));

  const Cost kernel_cost = evaluate(kg, kernel_ord).total;
  const Cost expected = checked_add(kernel_cost, kernel.trace.w_offset());
  const Cost got = evaluate(original.graph(), lifted).total;
  if (got != expected) {
    throw LiftError("lifted ordering costs " + std::to_string(got) + ", expected " + std::to_string(expected) +
                    " (kernel ordering not optimal or trace corrupt)");
  }
  return lifted;
}

}  // namespace msvc
