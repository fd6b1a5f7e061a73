#pragma once

// Exact ground-truth solvers: full permutation enumeration, and the
// Held-Karp style subset dynamic program over vertex prefixes.

#include <array>
#include <bit>
#include <functional>
#include <optional>
#include <vector>

#include "msvc/graph.hpp"

namespace msvc {

struct OracleResult {
  Cost cost = 0;
  Ordering ordering;
};

inline constexpr std::size_t kBruteForceGuard = 10;
inline constexpr std::size_t kSubsetDpGuard = 24;

namespace detail {

/// Calls fn(sequence, total, max_cost) for every ordering, in lexicographic order of sequences.
template <typename Fn>
void for_each_permutation_cost(const Graph& g, std::size_t guard, Fn&& fn) {
  const std::size_t n = g.n();
  if (n > guard) {
    throw InvalidInput("brute force limited to n <= " + std::to_string(guard) + ", got n = " + std::to_string(n));
  }
  std::vector<Vertex> seq(n);
  std::iota(seq.begin(), seq.end(), Vertex{0});
  std::vector<Position> pos(n);
  const auto edges = g.edges();
  do {
    for (std::size_t i = 0; i < n; ++i) pos[seq[i]] = static_cast<Position>(i + 1);
    Cost total = 0;
    Position maxc = 0;
    for (const Edge& e : edges) {
      const Position c = std::min(pos[e.u], pos[e.v]);
      total += c;
      maxc = std::max(maxc, c);
    }
    fn(std::span<const Vertex>(seq), total, maxc);
  } while (std::next_permutation(seq.begin(), seq.end()));
}

}  // namespace detail

/// Minimum total cost over all n! orderings with maximum cost <= k, with the
/// lexicographically smallest optimal ordering as witness.
inline std::optional<OracleResult> brute_force_optimal(const Graph& g, std::size_t k,
                                                       std::size_t guard = kBruteForceGuard) {
  std::optional<Cost> best;
  std::vector<Vertex> witness;
  detail::for_each_permutation_cost(g, guard, [&](std::span<const Vertex> seq, Cost total, Position maxc) {
    if (maxc > k) return;
    if (!best || total < *best) {
      best = total;
      witness.assign(seq.begin(), seq.end());
    }
  });
  if (!best) return std::nullopt;
  return OracleResult{*best, Ordering::from_sequence(std::move(witness))};
}

/// Optimal cost for every k in 0..n from one pass over all orderings.
inline std::vector<std::optional<Cost>> brute_force_all_k(const Graph& g, std::size_t guard = kBruteForceGuard) {
  std::vector<std::optional<Cost>> by_max(g.n() + 1);
  detail::for_each_permutation_cost(g, guard, [&](std::span<const Vertex>, Cost total, Position maxc) {
    if (!by_max[maxc] || total < *by_max[maxc]) by_max[maxc] = total;
  });
  std::vector<std::optional<Cost>> out(g.n() + 1);
  std::optional<Cost> run;
  for (std::size_t k = 0; k <= g.n(); ++k) {
    if (by_max[k] && (!run || *by_max[k] < *run)) run = by_max[k];
    out[k] = run;
  }
  return out;
}

/// Calls fn(ordering) for every optimal ordering of (g, k).
template <typename Fn>
void for_each_optimal_ordering(const Graph& g, std::size_t k, Fn&& fn, std::size_t guard = kBruteForceGuard) {
  auto best = brute_force_optimal(g, k, guard);
  if (!best) return;
  detail::for_each_permutation_cost(g, guard, [&](std::span<const Vertex> seq, Cost total, Position maxc) {
    if (maxc <= k && total == best->cost) fn(Ordering::from_sequence({seq.begin(), seq.end()}));
  });
}

/// value[T] = cheapest cost of placing exactly the vertices of T at positions
/// 1..|T|, counting each edge at its earlier endpoint. Only |T| <= max_size is stored.
class DpTable {
 public:
  static constexpr Cost kInf = std::numeric_limits<Cost>::max();

  DpTable(const Graph& g, std::size_t max_size, std::size_t guard = kSubsetDpGuard)
      : n_(g.n()), max_size_(std::min(max_size, g.n())) {
    if (n_ > guard || n_ > 30) {
      throw InvalidInput("subset DP limited to n <= " + std::to_string(std::min<std::size_t>(guard, 30)) +
                         ", got n = " + std::to_string(n_));
    }
    for (std::size_t a = 0; a < binom_.size(); ++a) {
      binom_[a][0] = 1;
      for (std::size_t b = 1; b <= a; ++b) binom_[a][b] = binom_[a - 1][b - 1] + (b < a ? binom_[a - 1][b] : 0);
    }
    adj_.assign(n_, 0);
    for (const Edge& e : g.edges()) {
      adj_[e.u] |= 1u << e.v;
      adj_[e.v] |= 1u << e.u;
    }
    layers_.resize(max_size_ + 1);
    layers_[0] = {0};
    std::array<std::size_t, 32> bits{};
    std::array<std::uint64_t, 33> pre{}, suf{};
    for (std::size_t i = 1; i <= max_size_; ++i) {
      auto& layer = layers_[i];
      const auto& prev = layers_[i - 1];
      layer.assign(binom(n_, i), kInf);
      std::size_t idx = 0;
      for_each_mask(i, [&](std::uint32_t mask) {
        std::size_t c = 0;
        for (std::uint32_t rest = mask; rest; rest &= rest - 1) bits[c++] = std::countr_zero(rest);
        // Colex rank of mask minus its t-th bit: bits below t keep their
        // index, bits above move down by one.
        pre[0] = 0;
        for (std::size_t j = 0; j < i; ++j) pre[j + 1] = pre[j] + binom(bits[j], j + 1);
        suf[i] = 0;
        for (std::size_t j = i; j-- > 0;) suf[j] = suf[j + 1] + binom(bits[j], j);
        Cost best = kInf;
        for (std::size_t t = 0; t < i; ++t) {
          const std::size_t r = pre[t] + suf[t + 1];
          const Cost before = prev[r];
          if (before == kInf) continue;
          const Cost here = before + static_cast<Cost>(i) * std::popcount(adj_[bits[t]] & ~mask);
          best = std::min(best, here);
        }
        layer[idx++] = best;
      });
    }
  }

  std::size_t n() const { return n_; }
  std::size_t max_size() const { return max_size_; }

  Cost value(std::uint32_t mask) const {
    const std::size_t i = std::popcount(mask);
    if (i > max_size_) throw InvalidInput("subset larger than the table");
    return layers_[i][rank(mask)];
  }

  bool is_cover(std::uint32_t mask) const {
    for (std::size_t v = 0; v < n_; ++v)
      if (!(mask >> v & 1u) && (adj_[v] & ~mask)) return false;
    return true;
  }

  std::uint32_t adjacency(Vertex v) const { return adj_[v]; }

  std::size_t rank(std::uint32_t mask) const {
    std::size_t r = 0, j = 0;
    for (std::uint32_t rest = mask; rest; rest &= rest - 1, ++j) r += binom(std::countr_zero(rest), j + 1);
    return r;
  }

  /// Visits every mask of popcount i in increasing (= colex) order.
  template <typename Fn>
  void for_each_mask(std::size_t i, Fn&& fn) const {
    if (i == 0) {
      fn(0u);
      return;
    }
    if (i > n_) return;
    const std::uint64_t limit = std::uint64_t{1} << n_;
    std::uint64_t mask = (std::uint64_t{1} << i) - 1;
    while (mask < limit) {
      fn(static_cast<std::uint32_t>(mask));
      const std::uint64_t c = mask & (~mask + 1);
      const std::uint64_t r = mask + c;
      mask = (((r ^ mask) >> 2) / c) | r;
    }
  }

  std::uint64_t binom(std::size_t a, std::size_t b) const { return b > a ? 0 : binom_[a][b]; }

 private:
  std::size_t n_;
  std::size_t max_size_;
  std::vector<std::uint32_t> adj_;
  std::vector<std::vector<Cost>> layers_;
  std::array<std::array<std::uint64_t, 33>, 33> binom_{};
};

/// Minimum of value[T] over vertex covers T with |T| <= k. The witness is the
/// lexicographically smallest optimal ordering; it is rebuilt forward with a
/// cost-to-go table so that ties resolve toward smaller vertex ids.
inline std::optional<OracleResult> subset_dp_optimal(const Graph& g, std::size_t k,
                                                     std::size_t guard = kSubsetDpGuard) {
  DpTable table(g, k, guard);
  const std::size_t K = table.max_size();
  const std::size_t n = g.n();
  constexpr Cost kInf = DpTable::kInf;

  Cost opt = kInf;
  for (std::size_t i = 0; i <= K; ++i) {
    table.for_each_mask(i, [&](std::uint32_t mask) {
      if (table.is_cover(mask)) opt = std::min(opt, table.value(mask));
    });
  }
  if (opt == kInf) return std::nullopt;

  // to_go[T]: cheapest cost of the edges not yet covered by prefix T.
  std::vector<std::vector<Cost>> to_go(K + 1);
  for (std::size_t i = K + 1; i-- > 0;) {
    to_go[i].assign(table.binom(n, i), kInf);
    std::size_t idx = 0;
    table.for_each_mask(i, [&](std::uint32_t mask) {
      Cost best = kInf;
      if (table.is_cover(mask)) {
        best = 0;
      } else if (i < K) {
        for (Vertex v = 0; v < n; ++v) {
          if (mask >> v & 1u) continue;
          const Cost rest = to_go[i + 1][table.rank(mask | (1u << v))];
          if (rest == kInf) continue;
          best = std::min(best, static_cast<Cost>(i + 1) * std::popcount(table.adjacency(v) & ~mask) + rest);
        }
      }
      to_go[i][idx++] = best;
    });
  }
  if (to_go[0][0] != opt) throw InternalError("subset DP: forward and backward optima disagree");

  std::vector<Vertex> seq;
  std::uint32_t mask = 0;
  Cost acc = 0;
  while (!table.is_cover(mask)) {
    const std::size_t i = seq.size();
    bool placed = false;
    for (Vertex v = 0; v < n && !placed; ++v) {
      if (mask >> v & 1u) continue;
      const std::uint32_t next = mask | (1u << v);
      const Cost rest = to_go[i + 1][table.rank(next)];
      if (rest == kInf) continue;
      const Cost step = static_cast<Cost>(i + 1) * std::popcount(table.adjacency(v) & ~mask);
      if (acc + step + rest == opt) {
        acc += step;
        mask = next;
        seq.push_back(v);
        placed = true;
      }
    }
    if (!placed) throw InternalError("subset DP: witness reconstruction stuck");
  }
  for (Vertex v = 0; v < n; ++v)
    if (!(mask >> v & 1u)) seq.push_back(v);
  return OracleResult{opt, Ordering::from_sequence(std::move(seq))};
}

/// Regular graphs: degree 0 and 1 are solved directly; for degree >= 3 a
/// feasible k must satisfy k >= tau >= n/2, so n > 2k is infeasible without
/// search; everything else goes to the subset DP.
inline std::optional<OracleResult> regular_solve(const Graph& g, std::size_t k,
                                                 std::size_t guard = kSubsetDpGuard) {
  if (!is_regular(g)) throw InvalidInput("regular_solve requires a regular graph");
  const std::size_t n = g.n();
  const std::size_t d = n ? g.degree(0) : 0;
  if (d == 0) return OracleResult{0, Ordering::identity(n)};
  if (d == 1) {
    // A perfect matching: each edge needs its own covering vertex.
    const std::size_t m = g.m();
    if (k < m) return std::nullopt;
    std::vector<char> used(n, 0), covered(n, 0);
    std::vector<Vertex> seq;
    for (Vertex v = 0; v < n; ++v) {
      if (covered[v]) continue;
      seq.push_back(v);
      used[v] = 1;
      covered[v] = 1;
      covered[g.neighbors(v)[0]] = 1;
    }
    for (Vertex v = 0; v < n; ++v)
      if (!used[v]) seq.push_back(v);
    const Cost mm = static_cast<Cost>(m);
    return OracleResult{mm * (mm + 1) / 2, Ordering::from_sequence(std::move(seq))};
  }
  if (d >= 3 && n > 2 * k) return std::nullopt;
  return subset_dp_optimal(g, k, guard);
}

}  // namespace msvc
