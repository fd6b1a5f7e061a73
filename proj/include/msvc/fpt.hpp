#pragma once

// Branching FPT solver. For every minimal vertex cover S with |S| <= k and
// every injective placement of S into positions 1..k, the free positions are
// filled left to right; at each one the solver branches over the unplaced
// vertices whose move to that position saves the most cost.

#include <chrono>
#include <optional>
#include <thread>
#include <vector>

#include "msvc/graph.hpp"
#include "msvc/kernel.hpp"
#include "msvc/mvc_enum.hpp"

namespace msvc {

/// Injective partial map from positions 1..k to vertices.
class PartialPlacement {
 public:
  PartialPlacement(std::size_t n, std::size_t k) : slot_(k + 1), pos_(n, 0) {}

  std::size_t k() const { return slot_.size() - 1; }

  void place(Vertex v, Position p) {
    if (p < 1 || p > k()) throw InvalidInput("position " + std::to_string(p) + " outside 1..k");
    if (slot_[p]) throw InvalidInput("position " + std::to_string(p) + " already occupied");
    if (pos_[v]) throw InvalidInput("vertex " + std::to_string(v) + " already placed");
    slot_[p] = v;
    pos_[v] = p;
  }

  void unplace(Vertex v) {
    if (!pos_[v]) return;
    slot_[pos_[v]].reset();
    pos_[v] = 0;
  }

  std::optional<Vertex> at(Position p) const { return slot_[p]; }
  bool is_placed(Vertex v) const { return pos_[v] != 0; }
  Position position(Vertex v) const { return pos_[v]; }

 private:
  std::vector<std::optional<Vertex>> slot_;
  std::vector<Position> pos_;
};

/// Saving from putting u at p: sum of (j - p) over placed neighbors at positions j > p.
inline Cost score(const Graph& g, const PartialPlacement& placement, Position p, Vertex u) {
  Cost s = 0;
  for (Vertex a : g.neighbors(u)) {
    const Position j = placement.position(a);
    if (j > p) s += j - p;
  }
  return s;
}

/// The `budget` unplaced vertices with the highest score at p, ties by ascending id.
inline std::vector<Vertex> candidate_set(const Graph& g, const PartialPlacement& placement, Position p,
                                         std::size_t budget) {
  std::vector<std::pair<Cost, Vertex>> ranked;
  for (Vertex u = 0; u < g.n(); ++u)
    if (!placement.is_placed(u)) ranked.emplace_back(-score(g, placement, p, u), u);
  const std::size_t take = std::min(budget, ranked.size());
  std::partial_sort(ranked.begin(), ranked.begin() + static_cast<std::ptrdiff_t>(take), ranked.end());
  std::vector<Vertex> out;
  for (std::size_t i = 0; i < take; ++i) out.push_back(ranked[i].second);
  return out;
}

struct SolverOptions {
  bool use_kernel = true;
  /// Skip placements of the cover that violate d(u) - k >= d(v) > 0 => u before v.
  bool prune = false;
  unsigned threads = 1;
  /// Keep the candidate budget at k - |S| for every gap instead of shrinking it
  /// to the number of gaps still open. Same optimum, more branches.
  bool fixed_candidate_budget = false;
};

struct SolveStats {
  std::uint64_t covers_enumerated = 0;
  std::uint64_t mappings_tried = 0;
  std::uint64_t branches = 0;
  double elapsed_ms = 0;
};

struct KernelSummary {
  std::size_t n = 0;
  std::size_t m = 0;
  std::size_t k = 0;
  Cost w = 0;
};

struct SolveResult {
  bool decision = false;
  std::optional<Cost> best_cost;
  std::optional<Ordering> best_ordering;
  SolveStats stats;
  std::optional<KernelSummary> kernel;
  std::optional<NoRule> trivial_no;
};

namespace detail {

class CoverBrancher {
 public:
  CoverBrancher(const Graph& g, std::size_t k, const SolverOptions& opt)
      : g_(g), k_(k), opt_(opt), in_cover_(g.n(), 0), pos_(g.n(), 0), slot_(k + 1, kNone) {}

  void run(const VertexSet& cover) {
    cover_ = &cover;
    for (Vertex v : cover) in_cover_[v] = 1;
    others_.clear();
    for (Vertex v = 0; v < g_.n(); ++v)
      if (!in_cover_[v]) others_.push_back(v);
    assign(0, 0);
    for (Vertex v : cover) in_cover_[v] = 0;
  }

  std::optional<Cost> best_cost;
  std::vector<Vertex> best_seq;
  std::uint64_t mappings = 0;
  std::uint64_t branches = 0;

 private:
  static constexpr Vertex kNone = std::numeric_limits<Vertex>::max();

  bool violates_order(Vertex a, Position q) const {
    const auto ka = static_cast<std::int64_t>(k_);
    const auto da = static_cast<std::int64_t>(g_.degree(a));
    for (Vertex b : *cover_) {
      if (!pos_[b] || b == a) continue;
      const auto db = static_cast<std::int64_t>(g_.degree(b));
      if (da - ka >= db && db > 0 && q > pos_[b]) return true;
      if (db - ka >= da && da > 0 && pos_[b] > q) return true;
    }
    return false;
  }

  void assign(std::size_t idx, Cost base) {
    if (idx == cover_->size()) {
      fill_gaps(base);
      return;
    }
    const Vertex a = (*cover_)[idx];
    for (Position q = 1; q <= k_; ++q) {
      if (slot_[q] != kNone) continue;
      if (opt_.prune && violates_order(a, q)) continue;
      Cost add = 0;
      for (Vertex x : g_.neighbors(a)) {
        if (!in_cover_[x]) add += q;
        else if (pos_[x]) add += std::min(q, pos_[x]);
      }
      slot_[q] = a;
      pos_[a] = q;
      assign(idx + 1, base + add);
      pos_[a] = 0;
      slot_[q] = kNone;
    }
  }

  void fill_gaps(Cost base) {
    ++mappings;
    gaps_.clear();
    for (Position q = 1; q <= k_; ++q)
      if (slot_[q] == kNone) gaps_.push_back(q);
    // Scores depend only on where the cover sits: vertices outside a cover
    // are pairwise non-adjacent, so earlier fills never change them.
    ranked_.assign(gaps_.size(), {});
    scores_.assign(gaps_.size(), std::vector<Cost>(g_.n(), 0));
    for (std::size_t gi = 0; gi < gaps_.size(); ++gi) {
      const Position p = gaps_[gi];
      auto& sc = scores_[gi];
      for (Vertex u : others_) {
        Cost s = 0;
        for (Vertex a : g_.neighbors(u))
          if (pos_[a] > p) s += pos_[a] - p;
        sc[u] = s;
      }
      ranked_[gi] = others_;
      std::stable_sort(ranked_[gi].begin(), ranked_[gi].end(), [&](Vertex x, Vertex y) { return sc[x] > sc[y]; });
    }
    fill(0, base);
  }

  void fill(std::size_t gi, Cost cost) {
    if (gi == gaps_.size()) {
      leaf(cost);
      return;
    }
    const std::size_t budget =
        opt_.fixed_candidate_budget ? k_ - cover_->size() : gaps_.size() - gi;
    const Position p = gaps_[gi];
    std::size_t taken = 0;
    for (Vertex u : ranked_[gi]) {
      if (taken == budget) break;
      if (pos_[u]) continue;
      ++taken;
      ++branches;
      pos_[u] = p;
      slot_[p] = u;
      fill(gi + 1, cost - scores_[gi][u]);
      slot_[p] = kNone;
      pos_[u] = 0;
    }
  }

  void leaf(Cost cost) {
    if (best_cost && cost > *best_cost) return;
    seq_.clear();
    for (Position q = 1; q <= k_; ++q) seq_.push_back(slot_[q]);
    for (Vertex v = 0; v < g_.n(); ++v)
      if (!pos_[v]) seq_.push_back(v);
    if (!best_cost || cost < *best_cost || seq_ < best_seq) {
      best_cost = cost;
      best_seq = seq_;
    }
  }

  const Graph& g_;
  std::size_t k_;
  const SolverOptions& opt_;
  const VertexSet* cover_ = nullptr;
  std::vector<char> in_cover_;
  std::vector<Position> pos_;
  std::vector<Vertex> slot_;
  std::vector<Vertex> others_;
  std::vector<Position> gaps_;
  std::vector<std::vector<Vertex>> ranked_;
  std::vector<std::vector<Cost>> scores_;
  std::vector<Vertex> seq_;
};

}  // namespace detail

/// Minimum total cost over all orderings with maximum cost <= k, searched
/// directly on the input graph.
inline SolveResult branch_solve(const Instance& inst, const SolverOptions& opt = {}) {
  const auto start = std::chrono::steady_clock::now();
  const Graph& g = inst.graph();
  const std::size_t k = inst.k();
  const auto covers = enumerate_minimal_covers(g, k);

  SolveResult res;
  res.stats.covers_enumerated = covers.size();

  const std::size_t workers = std::max<std::size_t>(1, std::min<std::size_t>(opt.threads, covers.size()));
  std::vector<detail::CoverBrancher> branchers;
  branchers.reserve(workers);
  for (std::size_t i = 0; i < workers; ++i) branchers.emplace_back(g, k, opt);

  auto work = [&](std::size_t id) {
    for (std::size_t c = id; c < covers.size(); c += workers) branchers[id].run(covers[c]);
  };
  if (workers == 1) {
    work(0);
  } else {
    std::vector<std::jthread> pool;
    for (std::size_t i = 0; i < workers; ++i) pool.emplace_back(work, i);
  }

  std::optional<Cost> best;
  const std::vector<Vertex>* best_seq = nullptr;
  for (const auto& b : branchers) {
    res.stats.mappings_tried += b.mappings;
    res.stats.branches += b.branches;
    if (!b.best_cost) continue;
    if (!best || *b.best_cost < *best || (*b.best_cost == *best && b.best_seq < *best_seq)) {
      best = b.best_cost;
      best_seq = &b.best_seq;
    }
  }
  if (best) {
    res.best_cost = best;
    res.best_ordering = Ordering::from_sequence(*best_seq);
    res.decision = *best <= inst.w();
  }
  res.stats.elapsed_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return res;
}

/// Kernelize, branch on the kernel, lift the witness back and re-verify it.
inline SolveResult solve(const Instance& inst, const SolverOptions& opt = {}) {
  if (!opt.use_kernel) return branch_solve(inst, opt);
  const auto start = std::chrono::steady_clock::now();
  auto outcome = kernelize(inst);
  if (auto* no = std::get_if<TrivialNo>(&outcome)) {
    SolveResult res;
    res.trivial_no = no->rule;
    res.stats.elapsed_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return res;
  }
  const auto& kernel = std::get<Kernel>(outcome);
  const Instance& ki = kernel.instance;
  SolveResult res = branch_solve(ki, opt);
  res.kernel = KernelSummary{ki.graph().n(), ki.graph().m(), ki.k(), ki.w()};
  if (res.best_ordering) {
    Ordering lifted = lift(kernel, *res.best_ordering, inst);
    const CostReport rep = evaluate(inst.graph(), lifted);
    const Cost expected = *res.best_cost + kernel.trace.w_offset();
    if (rep.total != expected || rep.max_cost > inst.k()) {
      throw InternalError("lifted witness failed verification on the original instance");
    }
    res.best_cost = rep.total;
    res.best_ordering = std::move(lifted);
    res.decision = rep.total <= inst.w();
  }
  res.stats.elapsed_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return res;
}

}  // namespace msvc
