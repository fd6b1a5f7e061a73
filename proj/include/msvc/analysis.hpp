#pragma once

// Structural audits of optimal orderings, the vertex cover number, and the
// closed-form upper bound on the maximum edge cost of an optimum in terms of
// m and tau.

#include <cmath>
#include <optional>
#include <string>
#include <vector>

#include "msvc/graph.hpp"
#include "msvc/oracles.hpp"

namespace msvc {

namespace detail {

class VertexCoverSearch {
 public:
  explicit VertexCoverSearch(const Graph& g) : g_(g), alive_(g.n(), 1), deg_(g.n()) {
    for (Vertex v = 0; v < g.n(); ++v) deg_[v] = g.degree(v);
  }

  /// True iff a vertex cover with at most `budget` vertices exists.
  bool exists(std::size_t budget) {
    Vertex best = 0;
    std::size_t best_deg = 0;
    for (Vertex v = 0; v < g_.n(); ++v) {
      if (alive_[v] && deg_[v] > best_deg) {
        best = v;
        best_deg = deg_[v];
      }
    }
    if (best_deg == 0) return true;
    if (budget == 0) return false;
    // With max degree D, more than budget * D edges cannot be covered.
    if (remaining_edges() > budget * best_deg) return false;

    remove(best);
    bool ok = exists(budget - 1);
    restore(best);
    if (ok) return true;
    if (best_deg > budget) return false;

    std::vector<Vertex> nb;
    for (Vertex x : g_.neighbors(best))
      if (alive_[x]) nb.push_back(x);
    for (Vertex x : nb) remove(x);
    ok = exists(budget - nb.size());
    for (auto it = nb.rbegin(); it != nb.rend(); ++it) restore(*it);
    return ok;
  }

 private:
  std::size_t remaining_edges() const {
    std::size_t s = 0;
    for (Vertex v = 0; v < g_.n(); ++v)
      if (alive_[v]) s += deg_[v];
    return s / 2;
  }
  void remove(Vertex v) {
    alive_[v] = 0;
    for (Vertex x : g_.neighbors(v))
      if (alive_[x]) --deg_[x];
  }
  void restore(Vertex v) {
    for (Vertex x : g_.neighbors(v))
      if (alive_[x]) ++deg_[x];
    alive_[v] = 1;
  }

  const Graph& g_;
  std::vector<char> alive_;
  std::vector<std::size_t> deg_;
};

}  // namespace detail

inline constexpr std::size_t kVcNumberGuardN = 24;
inline constexpr std::size_t kVcNumberGuardTau = 20;

/// Size of a minimum vertex cover. Exact; for n > 24 the search gives up once tau would exceed 20.
inline std::size_t vc_number(const Graph& g) {
  detail::VertexCoverSearch search(g);
  const std::size_t limit = g.n() <= kVcNumberGuardN ? g.n() : kVcNumberGuardTau;
  for (std::size_t b = 0; b <= limit; ++b)
    if (search.exists(b)) return b;
  throw InvalidInput("vertex cover number exceeds " + std::to_string(kVcNumberGuardTau) + " on a graph with n = " +
                     std::to_string(g.n()));
}

/// sqrt(m(tau-1) - m^2/tau + m^2/tau^2) + m/tau. The radicand equals
/// m(tau-1)(tau^2-m)/tau^2 and is negative once m > tau^2; it is clamped to 0
/// there, which leaves m/tau.
inline double lemma1_bound(std::size_t m, std::size_t tau) {
  if (tau == 0) {
    if (m > 0) throw InvalidInput("tau = 0 with edges present: no vertex cover of size 0");
    return 0.0;
  }
  if (m < tau) throw InvalidInput("lemma1_bound requires m >= tau");
  const double dm = static_cast<double>(m), dt = static_cast<double>(tau);
  const double radicand = dm * (dt - 1) - dm * dm / dt + dm * dm / (dt * dt);
  return std::sqrt(std::max(0.0, radicand)) + dm / dt;
}

/// Exact integer test of observed <= lemma1_bound(m, tau).
inline bool lemma1_holds(std::size_t observed, std::size_t m, std::size_t tau) {
  if (tau == 0) return observed == 0 && m == 0;
  using i128 = __int128;
  const i128 x = observed, mm = m, t = tau;
  const i128 lhs = x * t - mm;  // observed*tau - m  <=  tau * sqrt(radicand)
  if (lhs <= 0) return true;
  i128 rhs = mm * (t - 1) * (t * t - mm);
  if (rhs < 0) rhs = 0;
  return lhs * lhs <= rhs;
}

struct OptimaProfile {
  Cost opt_cost = 0;
  std::size_t min_max_cost = 0;
};

/// Unconstrained optimum (k = n) and the smallest maximum edge cost among the
/// orderings attaining it: the least |T| over covers T whose prefix value is optimal.
inline OptimaProfile min_max_cost_over_optima(const Graph& g, std::size_t guard = kSubsetDpGuard) {
  DpTable table(g, g.n(), guard);
  Cost opt = DpTable::kInf;
  std::size_t best_size = g.n();
  for (std::size_t i = 0; i <= g.n(); ++i) {
    table.for_each_mask(i, [&](std::uint32_t mask) {
      if (!table.is_cover(mask)) return;
      const Cost v = table.value(mask);
      if (v < opt) {
        opt = v;
        best_size = i;
      }
    });
  }
  return {opt, best_size};
}

struct BoundReport {
  std::size_t tau = 0;
  std::size_t m = 0;
  double bound = 0;
  std::size_t observed_min_max_cost = 0;
  bool holds = false;
};

inline BoundReport bound_report(const Graph& g) {
  BoundReport rep;
  rep.tau = vc_number(g);
  rep.m = g.m();
  rep.bound = lemma1_bound(rep.m, rep.tau);
  rep.observed_min_max_cost = min_max_cost_over_optima(g).min_max_cost;
  rep.holds = lemma1_holds(rep.observed_min_max_cost, rep.m, rep.tau);
  return rep;
}

enum class CheckStatus { pass, fail, warn, skipped };

inline const char* to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::pass: return "pass";
    case CheckStatus::fail: return "fail";
    case CheckStatus::warn: return "warn";
    case CheckStatus::skipped: return "skipped";
  }
  return "?";
}

struct CheckResult {
  CheckStatus status = CheckStatus::skipped;
  std::string detail;
};

struct AuditReport {
  std::size_t k = 0;
  std::vector<Vertex> ordering;  // witness, position order
  CheckResult prop1;
  CheckResult lemma2i;
  CheckResult lemma2ii;
  CheckResult lemma4;
  CheckResult replacement_window;

  /// Warnings do not count as failures.
  bool passed() const {
    for (const auto* c : {&prop1, &lemma2i, &lemma2ii, &lemma4, &replacement_window})
      if (c->status == CheckStatus::fail) return false;
    return true;
  }
};

/// Audits a feasible ordering against the structural properties every
/// feasible (prop1) or optimal (everything else) ordering must have. `tau`
/// is computed on demand when not supplied.
inline AuditReport structural_audit(const Graph& g, std::size_t k, const Ordering& ord, bool is_optimal,
                                    std::optional<std::size_t> tau = std::nullopt) {
  const CostReport cost = evaluate(g, ord);
  if (cost.max_cost > k) {
    throw InvalidInput("audit needs a feasible ordering: max cost " + std::to_string(cost.max_cost) + " > k = " +
                       std::to_string(k));
  }
  AuditReport rep;
  rep.k = k;
  rep.ordering.assign(ord.sequence().begin(), ord.sequence().end());
  const std::size_t n = g.n();
  auto vid = [](Vertex v) { return std::to_string(v + 1); };

  rep.prop1.status = CheckStatus::pass;
  for (Vertex v = 0; v < n; ++v) {
    if (g.degree(v) > k && ord.position(v) > k) {
      rep.prop1 = {CheckStatus::fail, "vertex " + vid(v) + " has degree " + std::to_string(g.degree(v)) +
                                          " > k but sits at position " + std::to_string(ord.position(v))};
      break;
    }
  }
  if (!is_optimal) return rep;

  rep.lemma2i.status = CheckStatus::pass;
  for (Position i = 1; i < k; ++i) {
    if (cost.count_at(i) < cost.count_at(i + 1)) {
      rep.lemma2i = {CheckStatus::fail, "r(" + std::to_string(i) + ") = " + std::to_string(cost.count_at(i)) +
                                            " < r(" + std::to_string(i + 1) + ") = " +
                                            std::to_string(cost.count_at(i + 1))};
      break;
    }
  }

  rep.lemma2ii.status = CheckStatus::pass;
  for (Vertex u = 0; u < n && rep.lemma2ii.status == CheckStatus::pass; ++u) {
    if (g.degree(u) <= k) continue;
    for (Vertex v = 0; v < n; ++v) {
      const std::size_t dv = g.degree(v);
      if (dv == 0 || g.degree(u) - k < dv) continue;
      if (ord.position(u) > ord.position(v)) {
        rep.lemma2ii = {CheckStatus::fail, "d(" + vid(u) + ") - k >= d(" + vid(v) + ") > 0 but " + vid(u) +
                                               " is placed after " + vid(v)};
        break;
      }
    }
  }

  rep.lemma4.status = CheckStatus::pass;
  for (Vertex v = 0; v < n && rep.lemma4.status == CheckStatus::pass; ++v) {
    auto nb = g.neighbors(v);
    if (nb.empty()) continue;
    if (!std::all_of(nb.begin(), nb.end(), [&](Vertex x) { return g.degree(x) > k; })) continue;
    for (Vertex x : nb) {
      if (ord.position(v) < ord.position(x)) {
        rep.lemma4 = {CheckStatus::fail, "all neighbors of " + vid(v) + " have degree > k but neighbor " + vid(x) +
                                             " comes after it"};
        break;
      }
    }
  }

  // Sketch-level claim: reported as a warning, never as a failure.
  const std::size_t t = tau ? *tau : vc_number(g);
  const std::size_t kmax = cost.max_cost;
  rep.replacement_window.status = CheckStatus::pass;
  if (kmax > t && cost.count_at(static_cast<Position>(kmax)) > 0 &&
      cost.count_at(static_cast<Position>(kmax - t)) < 2) {
    rep.replacement_window = {CheckStatus::warn, "max cost " + std::to_string(kmax) + ", tau " + std::to_string(t) +
                                                     ", r(" + std::to_string(kmax - t) + ") = " +
                                                     std::to_string(cost.count_at(static_cast<Position>(kmax - t)))};
  }
  return rep;
}

}  // namespace msvc
