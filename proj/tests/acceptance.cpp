// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "msvc/msvc.hpp"
#include "test_support.hpp"

namespace {

using namespace msvc;
using namespace msvc::testing;
using Clock = std::chrono::steady_clock;

constexpr Cost kLoose = std::numeric_limits<Cost>::max() / 4;

struct Verdict {
  bool pass = true;
  std::string detail;
  void fail(const std::string& why) {
    if (pass) detail = why;
    pass = false;
  }
};

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

Graph hubbed(std::size_t n, std::size_t hubs, double p, double hub_p, std::uint64_t seed) {
  Pcg32 rng(seed, 3);
  std::vector<Edge> e;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (rng.uniform() < (u < hubs ? hub_p : p)) e.push_back({u, v});
  return Graph::from_edges(n, e);
}

std::vector<Graph> hubbed_corpus(std::size_t count, std::size_t min_n, std::size_t max_n, std::uint64_t seed,
                                 double min_p = 0.05, double max_p = 0.3, std::size_t max_hubs = 3) {
  Pcg32 rng(seed, 5);
  std::vector<Graph> out;
  for (std::size_t i = 0; i < count; ++i) {
    const std::size_t n = min_n + rng.below(static_cast<std::uint32_t>(max_n - min_n + 1));
    const std::size_t hubs = 1 + rng.below(static_cast<std::uint32_t>(max_hubs));
    const double p = min_p + (max_p - min_p) * rng.uniform();
    out.push_back(hubbed(n, hubs, p, 0.4 + 0.6 * rng.uniform(), seed * 7919 + i));
  }
  return out;
}

// 200 density-varied random graphs plus 60 hub-heavy ones that exercise the
// reduction rules, all with n <= 8.
std::vector<Graph> small_corpus() {
  auto out = random_corpus(200, 8, 2024);
  for (Graph& g : hubbed_corpus(60, 4, 8, 2025)) out.push_back(std::move(g));
  out.push_back(p3());
  out.push_back(triangle());
  out.push_back(c4());
  out.push_back(star(5));
  out.push_back(complete(4));
  return out;
}

std::optional<Cost> cost_of(const std::optional<OracleResult>& r) {
  return r ? std::optional<Cost>(r->cost) : std::nullopt;
}

Verdict oracle_triad(const std::vector<Graph>& corpus) {
  Verdict v;
  std::size_t cases = 0;
  for (std::size_t gi = 0; gi < corpus.size(); ++gi) {
    const Graph& g = corpus[gi];
    for (std::size_t k = 0; k <= g.n(); ++k) {
      const auto bf = cost_of(brute_force_optimal(g, k));
      const auto dp = cost_of(subset_dp_optimal(g, k));
      SolverOptions with, without;
      without.use_kernel = false;
      const auto a = solve(Instance(g, k, kLoose), with).best_cost;
      const auto b = branch_solve(Instance(g, k, kLoose), without).best_cost;
      if (bf != dp || bf != a || bf != b)
        v.fail("graph " + std::to_string(gi) + " k=" + std::to_string(k) + " disagrees");
      ++cases;
    }
  }
  if (v.pass) v.detail = std::to_string(corpus.size()) + " graphs, " + std::to_string(cases) + " (graph, k) cases";
  return v;
}

Verdict kernel_size_bound() {
  Verdict v;
  // Sparse backgrounds keep low-degree vertices below k so most (graph, k) pairs reach a kernel.
  auto corpus = hubbed_corpus(150, 10, 60, 3031, 0.0, 0.03, 8);
  for (Graph& g : hubbed_corpus(50, 10, 60, 3033)) corpus.push_back(std::move(g));
  for (Graph& g : random_corpus(20, 60, 3032)) corpus.push_back(std::move(g));
  std::size_t kernels = 0, reduced = 0;
  for (const Graph& g : corpus)
    for (std::size_t k = 0; k <= 8; ++k) {
      auto out = kernelize(Instance(g, k, kLoose));
      if (auto* kern = std::get_if<Kernel>(&out)) {
        ++kernels;
        if (!kern->trace.steps.empty()) ++reduced;
        if (kern->instance.graph().n() > k * k + 2 * k)
          v.fail("kernel with " + std::to_string(kern->instance.graph().n()) + " vertices at k=" + std::to_string(k));
      }
    }
  if (v.pass) v.detail = std::to_string(corpus.size()) + " graphs, " + std::to_string(kernels) + " kernels, " + std::to_string(reduced) +
                        " changed by Rule 2 or 4";
  return v;
}

Verdict kernel_equivalence(const std::vector<Graph>& corpus) {
  Verdict v;
  std::size_t checks = 0, reduced = 0;
  for (std::size_t gi = 0; gi < corpus.size(); ++gi) {
    const Graph& g = corpus[gi];
    for (std::size_t k = 0; k <= g.n(); ++k) {
      const auto opt = cost_of(brute_force_optimal(g, k));
      // Kernel optimum is independent of w; compute it once from the loosest budget.
      std::optional<Cost> kernel_opt;
      const auto loose = kernelize(Instance(g, k, kLoose));
      if (auto* kern = std::get_if<Kernel>(&loose)) kernel_opt = cost_of(brute_force_optimal(kern->instance.graph(), k));
      const Cost w_max = static_cast<Cost>(k * g.m());
      for (Cost w = 0; w <= w_max; ++w) {
        auto out = kernelize(Instance(g, k, w));
        bool kernel_yes = false;
        if (auto* kern = std::get_if<Kernel>(&out)) {
          if (!kern->trace.steps.empty()) ++reduced;
          kernel_yes = kernel_opt && *kernel_opt <= w - kern->trace.w_offset();
        }
        if ((opt && *opt <= w) != kernel_yes)
          v.fail("graph " + std::to_string(gi) + " k=" + std::to_string(k) + " w=" + std::to_string(w));
        ++checks;
      }
    }
  }
  if (v.pass) v.detail = std::to_string(checks) + " (graph, k, w) decisions, " + std::to_string(reduced) + " with rules applied";
  return v;
}

Verdict lift_correctness(const std::vector<Graph>& corpus) {
  Verdict v;
  std::size_t lifted = 0;
  for (std::size_t gi = 0; gi < corpus.size(); ++gi) {
    const Graph& g = corpus[gi];
    for (std::size_t k = 0; k <= g.n(); ++k) {
      Instance inst(g, k, kLoose);
      auto out = kernelize(inst);
      auto* kern = std::get_if<Kernel>(&out);
      if (!kern) continue;
      auto kres = branch_solve(kern->instance);
      if (!kres.best_ordering) continue;
      try {
        Ordering ord = lift(*kern, *kres.best_ordering, inst);
        const auto rep = evaluate(g, ord);
        if (rep.total != *kres.best_cost + kern->trace.w_offset() || rep.max_cost > k)
          v.fail("graph " + std::to_string(gi) + " k=" + std::to_string(k));
        ++lifted;
      } catch (const LiftError& e) {
        v.fail("graph " + std::to_string(gi) + " k=" + std::to_string(k) + ": " + e.what());
      }
    }
  }
  if (v.pass) v.detail = std::to_string(lifted) + " yes-instances lifted";
  return v;
}

Verdict cover_enumeration() {
  Verdict v;
  auto corpus = random_corpus(200, 10, 5051);
  std::size_t cases = 0;
  for (std::size_t gi = 0; gi < corpus.size(); ++gi) {
    const Graph& g = corpus[gi];
    for (std::size_t k = 0; k <= g.n(); ++k) {
      auto got = enumerate_minimal_covers(g, k);
      std::set<std::vector<Vertex>> as_set(got.begin(), got.end());
      if (as_set.size() != got.size() || as_set != minimal_covers_by_subsets(g, k))
        v.fail("graph " + std::to_string(gi) + " k=" + std::to_string(k) + " differs from subset scan");
      if (got.size() > (std::size_t{1} << k)) v.fail("more than 2^k covers at k=" + std::to_string(k));
      ++cases;
    }
  }
  if (v.pass) v.detail = std::to_string(cases) + " (graph, k) cases with n <= 10";
  return v;
}

Verdict claw_chain_goldens() {
  Verdict v;
  const Graph g = claw_chain();
  const auto tau = vc_number(g);
  const auto dp7 = cost_of(subset_dp_optimal(g, 7));
  const auto dp6 = cost_of(subset_dp_optimal(g, 6));
  const auto bs7 = branch_solve(Instance(g, 7, kLoose)).best_cost;
  const auto bs6 = branch_solve(Instance(g, 6, kLoose)).best_cost;
  const auto fp7 = solve(Instance(g, 7, kLoose)).best_cost;
  const auto fp6 = solve(Instance(g, 6, kLoose)).best_cost;
  if (tau != 6) v.fail("tau = " + std::to_string(tau));
  for (const auto& c : {dp7, bs7, fp7})
    if (c != std::optional<Cost>(60)) v.fail("k=7 optimum is not 60");
  for (const auto& c : {dp6, bs6, fp6})
    if (c != std::optional<Cost>(63)) v.fail("k=6 optimum is not 63");
  if (v.pass) v.detail = "tau 6, optimum 60 at k=7, 63 at k=6";
  return v;
}

Verdict lemma1(const std::vector<Graph>& small) {
  Verdict v;
  std::vector<Graph> corpus = small;
  for (Graph& g : random_corpus(120, 16, 7071)) corpus.push_back(std::move(g));
  for (std::size_t s = 1; s <= 7; ++s) corpus.push_back(generate({Family::claw_chain, s}));
  for (std::size_t b = 2; b <= 10; ++b) {
    std::vector<Edge> e;
    for (Vertex a = 0; a < 2; ++a)
      for (Vertex x = 0; x < b; ++x) e.push_back({a, static_cast<Vertex>(2 + x)});
    corpus.push_back(Graph::from_edges(2 + b, e));
  }
  corpus.push_back(petersen());
  std::size_t checked = 0, radicand_clamped = 0;
  for (std::size_t gi = 0; gi < corpus.size(); ++gi) {
    const Graph& g = corpus[gi];
    if (g.m() == 0) continue;
    const auto r = bound_report(g);
    if (r.m > r.tau * r.tau) ++radicand_clamped;
    if (!r.holds)
      v.fail("graph " + std::to_string(gi) + ": min max cost " + std::to_string(r.observed_min_max_cost) +
             " > bound " + std::to_string(r.bound) + " (m=" + std::to_string(r.m) + ", tau=" + std::to_string(r.tau) +
             ")");
    ++checked;
  }
  if (v.pass)
    v.detail = std::to_string(checked) + " graphs (" + std::to_string(radicand_clamped) + " with m > tau^2)";
  return v;
}

Verdict audits(const std::vector<Graph>& corpus) {
  Verdict v;
  std::size_t audited = 0, warnings = 0;
  for (std::size_t gi = 0; gi < corpus.size(); ++gi) {
    const Graph& g = corpus[gi];
    const std::size_t tau = tau_by_subsets(g);
    for (std::size_t k = 0; k <= g.n(); ++k) {
      for_each_optimal_ordering(g, k, [&](const Ordering& o) {
        const auto rep = structural_audit(g, k, o, true, tau);
        for (const auto* c : {&rep.prop1, &rep.lemma2i, &rep.lemma2ii, &rep.lemma4})
          if (c->status != CheckStatus::pass) v.fail("graph " + std::to_string(gi) + ": " + c->detail);
        if (rep.replacement_window.status == CheckStatus::warn) ++warnings;
        ++audited;
      });
    }
  }
  if (v.pass)
    v.detail = std::to_string(audited) + " optimal orderings audited, " + std::to_string(warnings) +
               " replacement-window warnings";
  return v;
}

Verdict regular_fast_path() {
  Verdict v;
  const auto t0 = Clock::now();
  const auto pet = regular_solve(petersen(), 4);
  const double pet_s = seconds_since(t0);
  if (pet) v.fail("Petersen accepted at k=4");
  if (pet_s > 0.01) v.fail("Petersen rejection took " + std::to_string(pet_s) + " s");
  const auto k4 = regular_solve(complete(4), 3);
  if (cost_of(k4) != std::optional<Cost>(10) || cost_of(subset_dp_optimal(complete(4), 3)) != std::optional<Cost>(10))
    v.fail("K4 at k=3 is not 10");
  if (v.pass) v.detail = "Petersen k=4 rejected, K4 k=3 costs 10";
  return v;
}

Verdict performance() {
  Verdict v;
  double worst_kernel = 0;
  for (auto spec : {GeneratorSpec{Family::star, 1000000}, GeneratorSpec{Family::double_star, 500000}}) {
    const Graph g = generate(spec);
    const auto t0 = Clock::now();
    auto out = kernelize(Instance(g, 2, kLoose));
    const double s = seconds_since(t0);
    worst_kernel = std::max(worst_kernel, s);
    if (!std::holds_alternative<Kernel>(out)) v.fail("m=" + std::to_string(g.m()) + " graph not kernelized");
    if (s > 10.0) v.fail("kernelizing m=" + std::to_string(g.m()) + " took " + std::to_string(s) + " s");
  }
  // Instances whose kernels stay non-trivial for k up to 8.
  std::vector<std::pair<Graph, std::size_t>> cases;
  for (std::size_t k = 1; k <= 8; ++k) {
    cases.push_back({generate({Family::star, 3 * k}), k});
    cases.push_back({generate({Family::double_star, 2 * k}), k});
    cases.push_back({generate({Family::claw_chain, std::min<std::size_t>(k, 7)}), k});
    cases.push_back({generate({Family::path, 2 * k + 1}), k});
    cases.push_back({hubbed(60, k, 0.0, 0.5, 9000 + k), k});
  }
  // Many minimal covers or many free positions: the expensive end at k = 8.
  for (std::size_t s = 4; s <= 8; ++s) cases.push_back({generate({Family::disjoint_edges, s}), 8});
  cases.push_back({petersen(), 8});
  cases.push_back({generate({Family::cycle, 16}), 8});
  cases.push_back({generate({Family::random_regular, 12, 0.5, 3, 1}), 8});
  double worst_solve = 0;
  std::size_t solved = 0;
  for (const auto& [g, k] : cases) {
    auto out = kernelize(Instance(g, k, kLoose));
    auto* kern = std::get_if<Kernel>(&out);
    if (!kern) continue;
    const auto t0 = Clock::now();
    branch_solve(kern->instance);
    const double s = seconds_since(t0);
    worst_solve = std::max(worst_solve, s);
    ++solved;
    if (s > 60.0) v.fail("branch_solve on a k=" + std::to_string(k) + " kernel took " + std::to_string(s) + " s");
  }
  char buf[160];
  std::snprintf(buf, sizeof buf, "kernelize m=1e6 worst %.2f s; %zu kernels with k <= 8 solved, worst %.2f s",
                worst_kernel, solved, worst_solve);
  if (v.pass) v.detail = buf;
  return v;
}

}  // namespace

int main() {
  const auto small = small_corpus();
  std::vector<std::pair<std::string, std::function<Verdict()>>> criteria = {
      {"oracle triad agreement", [&] { return oracle_triad(small); }},
      {"kernel size bound", kernel_size_bound},
      {"kernel equivalence", [&] { return kernel_equivalence(small); }},
      {"lift correctness", [&] { return lift_correctness(small); }},
      {"minimal cover enumeration", cover_enumeration},
      {"claw chain goldens", claw_chain_goldens},
      {"max edge cost bound", [&] { return lemma1(small); }},
      {"structural audits", [&] { return audits(small); }},
      {"regular fast path", regular_fast_path},
      {"performance smoke", performance},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto t0 = Clock::now();
    Verdict v;
    try {
      v = criteria[i].second();
    } catch (const std::exception& e) {
      v.fail(std::string("exception: ") + e.what());
    }
    std::printf("criterion %zu %s: %s (%s) [%.1f s]\n", i + 1, criteria[i].first.c_str(), v.pass ? "PASS" : "FAIL",
                v.detail.c_str(), seconds_since(t0));
    std::fflush(stdout);
    if (!v.pass) ++failures;
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures ? 1 : 0;
}
