#pragma once

// JSON views of solver, kernel and audit results, plus the bench and analyze
// row producers used by the command-line tool. Vertex ids are 1-indexed here,
// matching the file formats.

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "msvc/analysis.hpp"
#include "msvc/fpt.hpp"
#include "msvc/generators.hpp"
#include "msvc/kernel.hpp"
#include "msvc/oracles.hpp"

namespace msvc {

using nlohmann::json;

inline json ids_json(std::span<const Vertex> vs) {
  json a = json::array();
  for (Vertex v : vs) a.push_back(v + 1);
  return a;
}

inline json to_json(const KernelTrace& trace) {
  json steps = json::array();
  for (const auto& step : trace.steps) {
    if (auto* r2 = std::get_if<Rule2Record>(&step)) {
      json edges = json::array();
      for (const Edge& e : r2->removed_edges) edges.push_back({e.u + 1, e.v + 1});
      steps.push_back({{"rule", "rule2"},
                       {"t", r2->t},
                       {"delta", r2->delta},
                       {"removed_edges", edges},
                       {"w_delta", r2->w_delta}});
    } else {
      const auto& r4 = std::get<Rule4Record>(step);
      json moved = json::object();
      for (const auto& [v, c] : r4.moved_edge_counts) moved[std::to_string(v + 1)] = c;
      steps.push_back({{"rule", "rule4"},
                       {"p", r4.p},
                       {"deleted_I", ids_json(r4.deleted_I)},
                       {"added_X", ids_json(r4.added_X)},
                       {"moved_edge_counts", moved}});
    }
  }
  json map = json::array();
  for (const auto& v : trace.vertex_map) map.push_back(v ? json(*v + 1) : json(nullptr));
  return {{"steps", steps}, {"w_offset", trace.w_offset()}, {"vertex_map", map}};
}

inline json to_json(const SolveStats& s) {
  return {{"covers_enumerated", s.covers_enumerated},
          {"mappings_tried", s.mappings_tried},
          {"branches", s.branches},
          {"elapsed_ms", s.elapsed_ms}};
}

inline json to_json(const SolveResult& r, const Instance& inst) {
  json out;
  out["decision"] = r.decision ? "yes" : "no";
  out["total_cost"] = r.best_cost ? json(*r.best_cost) : json(nullptr);
  if (r.best_ordering) {
    out["max_cost"] = evaluate(inst.graph(), *r.best_ordering).max_cost;
    out["ordering"] = ids_json(r.best_ordering->sequence());
  } else {
    out["max_cost"] = nullptr;
    out["ordering"] = nullptr;
  }
  out["kernel"] = r.kernel ? json{{"n", r.kernel->n}, {"m", r.kernel->m}, {"k", r.kernel->k}, {"w", r.kernel->w}}
                           : json(nullptr);
  if (r.trivial_no) out["trivial_no"] = to_string(*r.trivial_no);
  out["stats"] = to_json(r.stats);
  return out;
}

inline json to_json(const CheckResult& c) {
  json j = {{"status", to_string(c.status)}};
  if (!c.detail.empty()) j["detail"] = c.detail;
  return j;
}

inline json to_json(const AuditReport& a) {
  return {{"k", a.k},
          {"ordering", ids_json(a.ordering)},
          {"prop1", to_json(a.prop1)},
          {"lemma2i", to_json(a.lemma2i)},
          {"lemma2ii", to_json(a.lemma2ii)},
          {"lemma4", to_json(a.lemma4)},
          {"replacement_window", to_json(a.replacement_window)},
          {"passed", a.passed()}};
}

enum class SolverChoice { fpt, fpt_no_kernel };

struct BenchRow {
  std::size_t instance_id = 0;
  std::string family;
  std::size_t n = 0, m = 0, k = 0;
  std::optional<std::size_t> kernel_n, kernel_m;
  std::uint64_t covers_enumerated = 0;
  std::uint64_t branches = 0;
  double time_ms = 0;
  std::optional<Cost> cost;
  bool oracle_run = false;
  std::optional<Cost> oracle_cost;
};

inline json to_json(const BenchRow& r) {
  auto opt = [](const auto& o) { return o ? json(*o) : json(nullptr); };
  return {{"instance_id", r.instance_id},
          {"family", r.family},
          {"n", r.n},
          {"m", r.m},
          {"k", r.k},
          {"kernel_n", opt(r.kernel_n)},
          {"kernel_m", opt(r.kernel_m)},
          {"covers_enumerated", r.covers_enumerated},
          {"branches", r.branches},
          {"time_ms", r.time_ms},
          {"cost", opt(r.cost)},
          {"oracle_cost", r.oracle_run ? opt(r.oracle_cost) : json("n/a")}};
}

struct BenchCase {
  std::string family;
  Graph graph;
  std::optional<std::size_t> k;  // nullopt: every k in 0..n
};

/// One row per (graph, k), ordered by instance id. The subset DP fills the
/// oracle column for graphs with at most `oracle_limit` vertices.
inline std::vector<BenchRow> bench(const std::vector<BenchCase>& corpus, SolverChoice choice,
                                  std::size_t oracle_limit = 16, unsigned threads = 1) {
  struct Job {
    const BenchCase* c;
    std::size_t k;
  };
  std::vector<Job> jobs;
  for (const auto& c : corpus) {
    if (c.k) {
      jobs.push_back({&c, *c.k});
    } else {
      for (std::size_t k = 0; k <= c.graph.n(); ++k) jobs.push_back({&c, k});
    }
  }
  std::vector<BenchRow> rows(jobs.size());
  auto run = [&](std::size_t i) {
    const auto& job = jobs[i];
    const Graph& g = job.c->graph;
    Instance inst(g, job.k, std::numeric_limits<Cost>::max());
    SolverOptions opt;
    opt.use_kernel = choice == SolverChoice::fpt;
    SolveResult res = solve(inst, opt);
    BenchRow& row = rows[i];
    row.instance_id = i;
    row.family = job.c->family;
    row.n = g.n();
    row.m = g.m();
    row.k = inst.k();
    if (res.kernel) {
      row.kernel_n = res.kernel->n;
      row.kernel_m = res.kernel->m;
    }
    row.covers_enumerated = res.stats.covers_enumerated;
    row.branches = res.stats.branches;
    row.time_ms = res.stats.elapsed_ms;
    row.cost = res.best_cost;
    if (g.n() <= oracle_limit) {
      row.oracle_run = true;
      if (auto o = subset_dp_optimal(g, inst.k())) row.oracle_cost = o->cost;
    }
  };
  const std::size_t workers = std::max<std::size_t>(1, std::min<std::size_t>(threads, jobs.size()));
  if (workers == 1) {
    for (std::size_t i = 0; i < jobs.size(); ++i) run(i);
  } else {
    std::vector<std::jthread> pool;
    for (std::size_t w = 0; w < workers; ++w)
      pool.emplace_back([&, w] {
        for (std::size_t i = w; i < jobs.size(); i += workers) run(i);
      });
  }
  return rows;
}

/// One analysis row: tau, unconstrained optimum, the smallest max cost among
/// optima, the closed-form bound, and an audit of the oracle optimum at that max cost.
inline json analyze_row(const std::string& graph_id, const Graph& g) {
  const std::size_t tau = vc_number(g);
  const OptimaProfile prof = min_max_cost_over_optima(g);
  json row = {{"graph_id", graph_id},
              {"n", g.n()},
              {"m", g.m()},
              {"tau", tau},
              {"opt_cost", prof.opt_cost},
              {"min_max_cost", prof.min_max_cost}};
  if (g.m() == 0) {
    row["bound"] = 0.0;
    row["bound_holds"] = true;
  } else {
    row["bound"] = lemma1_bound(g.m(), tau);
    row["bound_holds"] = lemma1_holds(prof.min_max_cost, g.m(), tau);
  }
  row["gap_to_tau"] = static_cast<long long>(prof.min_max_cost) - static_cast<long long>(tau);
  auto witness = subset_dp_optimal(g, prof.min_max_cost);
  if (!witness) throw InternalError("analysis: no optimum at its own max cost");
  row["audit"] = to_json(structural_audit(g, prof.min_max_cost, witness->ordering, true, tau));
  return row;
}

}  // namespace msvc
