// msvc: command-line front end for the minimum sum vertex cover toolkit.
//
// Exit codes: 0 = yes / success, 1 = no, 2 = error.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "msvc/msvc.hpp"
#include "msvc/report.hpp"

namespace {

using namespace msvc;

constexpr int kYes = 0;
constexpr int kNo = 1;
constexpr int kError = 2;

unsigned default_threads() {
  if (const char* env = std::getenv("MSVC_THREADS")) {
    try {
      const int t = std::stoi(env);
      if (t > 0) return static_cast<unsigned>(t);
    } catch (const std::exception&) {
    }
  }
  return 1;
}

struct GenArgs {
  std::string family;
  std::size_t size = 0;
  double p = 0.5;
  std::size_t degree = 3;
  std::uint64_t seed = 0;
};

void add_gen_options(CLI::App* cmd, GenArgs& g, bool family_required) {
  auto* fam = cmd->add_option("--family", g.family,
                              "path|cycle|star|double_star|claw_chain|gnp|random_regular|disjoint_edges");
  if (family_required) fam->required();
  cmd->add_option("--size", g.size, "family size parameter (vertices, leaves, claws or edges)");
  cmd->add_option("--p", g.p, "edge probability for gnp");
  cmd->add_option("--degree", g.degree, "degree for random_regular");
  cmd->add_option("--seed", g.seed, "generator seed");
}

GeneratorSpec to_spec(const GenArgs& g, std::uint64_t seed_offset = 0) {
  GeneratorSpec s;
  s.family = parse_family(g.family);
  s.size = g.size;
  s.p = g.p;
  s.degree = g.degree;
  s.seed = g.seed + seed_offset;
  return s;
}

std::string csv_cell(const json& v) {
  if (v.is_null()) return "";
  if (v.is_string()) return v.get<std::string>();
  return v.dump();
}

void print_csv(const std::vector<json>& rows, std::ostream& os) {
  if (rows.empty()) return;
  std::vector<std::string> keys;
  for (auto it = rows.front().begin(); it != rows.front().end(); ++it)
    if (!it->is_object()) keys.push_back(it.key());
  for (std::size_t i = 0; i < keys.size(); ++i) os << (i ? "," : "") << keys[i];
  os << '\n';
  for (const auto& r : rows) {
    for (std::size_t i = 0; i < keys.size(); ++i) os << (i ? "," : "") << csv_cell(r.value(keys[i], json()));
    os << '\n';
  }
}

int cmd_solve(const std::string& path, const SolverOptions& opt) {
  const auto parsed = read_instance_file(path);
  const SolveResult res = solve(parsed.instance, opt);
  std::cout << to_json(res, parsed.instance).dump(2) << '\n';
  return res.decision ? kYes : kNo;
}

int cmd_kernelize(const std::string& path, const std::string& out_path, const std::string& trace_path) {
  const auto parsed = read_instance_file(path);
  auto outcome = kernelize(parsed.instance);
  if (auto* no = std::get_if<TrivialNo>(&outcome)) {
    std::cout << json{{"trivial_no", to_string(no->rule)}}.dump() << '\n';
    return kNo;
  }
  const auto& kernel = std::get<Kernel>(outcome);
  const std::vector<std::string> comments = {"kernel of " + path};
  if (out_path.empty()) {
    write_instance(std::cout, kernel.instance, comments);
  } else {
    std::ofstream os(out_path);
    if (!os) throw InvalidInput("cannot write '" + out_path + "'");
    write_instance(os, kernel.instance, comments);
  }
  const std::string trace = to_json(kernel.trace).dump(2);
  if (trace_path.empty()) {
    std::cerr << trace << '\n';
  } else {
    std::ofstream os(trace_path);
    if (!os) throw InvalidInput("cannot write '" + trace_path + "'");
    os << trace << '\n';
  }
  return kYes;
}

int cmd_oracle(const std::string& path, const std::string& method) {
  const auto parsed = read_instance_file(path);
  const Instance& inst = parsed.instance;
  std::optional<OracleResult> res;
  if (method == "brute") res = brute_force_optimal(inst.graph(), inst.k());
  else if (method == "dp") res = subset_dp_optimal(inst.graph(), inst.k());
  else if (method == "regular") res = regular_solve(inst.graph(), inst.k());
  else throw InvalidInput("unknown oracle method '" + method + "'");
  json out = {{"method", method}, {"feasible", res.has_value()}};
  const bool yes = res && res->cost <= inst.w();
  out["decision"] = yes ? "yes" : "no";
  if (res) {
    out["total_cost"] = res->cost;
    out["max_cost"] = evaluate(inst.graph(), res->ordering).max_cost;
    out["ordering"] = ids_json(res->ordering.sequence());
  }
  std::cout << out.dump(2) << '\n';
  return yes ? kYes : kNo;
}

int cmd_enum(const std::string& path, std::optional<std::size_t> k) {
  const auto parsed = read_instance_file(path);
  const auto covers = enumerate_minimal_covers(parsed.instance.graph(), k ? *k : parsed.instance.k());
  for (const auto& c : covers) {
    for (std::size_t i = 0; i < c.size(); ++i) std::cout << (i ? " " : "") << c[i] + 1;
    std::cout << '\n';
  }
  return kYes;
}

int cmd_gen(const GenArgs& g, std::optional<std::size_t> k, std::optional<Cost> w, const std::string& out_path) {
  const Graph graph = generate(to_spec(g));
  const std::size_t kk = k ? *k : graph.n();
  const Cost ww = w ? *w : static_cast<Cost>(std::min(kk, graph.n()) * graph.m());
  const Instance inst(graph, kk, ww);
  std::ostringstream desc;
  desc << "family " << g.family << " size " << g.size;
  if (g.family == "gnp") desc << " p " << g.p;
  if (g.family == "random_regular") desc << " degree " << g.degree;
  if (g.family == "gnp" || g.family == "random_regular") desc << " seed " << g.seed;
  const std::vector<std::string> comments = {desc.str()};
  if (out_path.empty()) {
    write_instance(std::cout, inst, comments);
  } else {
    std::ofstream os(out_path);
    if (!os) throw InvalidInput("cannot write '" + out_path + "'");
    write_instance(os, inst, comments);
  }
  return kYes;
}

int cmd_bench(const GenArgs& g, std::size_t count, std::optional<std::size_t> k, bool no_kernel,
              std::size_t oracle_limit, bool csv, unsigned threads) {
  std::vector<BenchCase> corpus;
  for (std::size_t i = 0; i < count; ++i) corpus.push_back({g.family, generate(to_spec(g, i)), k});
  const auto rows = bench(corpus, no_kernel ? SolverChoice::fpt_no_kernel : SolverChoice::fpt, oracle_limit, threads);
  std::vector<json> js;
  for (const auto& r : rows) js.push_back(to_json(r));
  if (csv) {
    print_csv(js, std::cout);
  } else {
    for (const auto& j : js) std::cout << j.dump() << '\n';
  }
  bool agree = true;
  for (const auto& r : rows)
    if (r.oracle_run && r.oracle_cost != r.cost) agree = false;
  return agree ? kYes : kNo;
}

int cmd_verify(const std::string& inst_path, const std::string& ord_path, bool optimal) {
  const auto parsed = read_instance_file(inst_path);
  const Instance& inst = parsed.instance;
  const Ordering ord = read_ordering_file(ord_path, inst.graph().n());
  const CostReport rep = evaluate(inst.graph(), ord);
  const bool feasible = rep.max_cost <= inst.k() && rep.total <= inst.w();
  json out = {{"total_cost", rep.total},
              {"max_cost", rep.max_cost},
              {"k", inst.k()},
              {"w", inst.w()},
              {"feasible", feasible}};
  if (rep.max_cost <= inst.k()) {
    out["audit"] = to_json(structural_audit(inst.graph(), inst.k(), ord, optimal));
  } else {
    out["audit"] = nullptr;
  }
  std::cout << out.dump(2) << '\n';
  return feasible ? kYes : kNo;
}

int cmd_analyze(const std::vector<std::string>& files, const GenArgs& g, std::size_t count, bool csv) {
  std::vector<json> rows;
  for (const auto& f : files) rows.push_back(analyze_row(f, read_instance_file(f).instance.graph()));
  if (!g.family.empty()) {
    for (std::size_t i = 0; i < count; ++i) {
      const GeneratorSpec spec = to_spec(g, i);
      rows.push_back(analyze_row(g.family + "#" + std::to_string(i), generate(spec)));
    }
  }
  if (csv) {
    print_csv(rows, std::cout);
  } else {
    for (const auto& r : rows) std::cout << r.dump() << '\n';
  }
  return kYes;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Minimum sum vertex cover: kernelization, FPT branching, exact oracles and analysis"};
  app.require_subcommand(1);

  std::string inst_path, ord_path, out_path, trace_path, method = "dp";
  SolverOptions opt;
  opt.threads = default_threads();
  std::uint64_t seed = 0;

  auto* solve_cmd = app.add_subcommand("solve", "decide and optimize an instance");
  solve_cmd->add_option("instance", inst_path)->required();
  bool no_kernel = false;
  solve_cmd->add_flag("--no-kernel", no_kernel, "branch on the input graph directly");
  solve_cmd->add_flag("--prune", opt.prune, "skip cover placements that contradict the degree-gap order");
  solve_cmd->add_option("--threads", opt.threads, "worker threads (env MSVC_THREADS)");
  solve_cmd->add_option("--seed", seed, "accepted for symmetry with generators; has no effect");

  auto* kern_cmd = app.add_subcommand("kernelize", "reduce an instance to at most k^2+2k vertices");
  kern_cmd->add_option("instance", inst_path)->required();
  kern_cmd->add_option("-o,--output", out_path, "kernel instance file (default: stdout)");
  kern_cmd->add_option("--trace", trace_path, "JSON trace file (default: stderr)");

  auto* oracle_cmd = app.add_subcommand("oracle", "exact solve by brute force or subset DP");
  oracle_cmd->add_option("instance", inst_path)->required();
  oracle_cmd->add_option("--method", method)->check(CLI::IsMember({"brute", "dp", "regular"}));

  auto* enum_cmd = app.add_subcommand("enum-mvc", "list minimal vertex covers of size <= k");
  enum_cmd->add_option("instance", inst_path)->required();
  std::optional<std::size_t> enum_k;
  enum_cmd->add_option("--k", enum_k, "size bound (default: the instance's k)");

  GenArgs gen_args;
  auto* gen_cmd = app.add_subcommand("gen", "write a generated instance");
  add_gen_options(gen_cmd, gen_args, true);
  std::optional<std::size_t> gen_k;
  std::optional<Cost> gen_w;
  gen_cmd->add_option("--k", gen_k, "parameter k (default: n)");
  gen_cmd->add_option("--w", gen_w, "budget w (default: k*m)");
  gen_cmd->add_option("-o,--output", out_path, "instance file (default: stdout)");

  GenArgs bench_args;
  auto* bench_cmd = app.add_subcommand("bench", "solve a generated corpus, one JSON row per instance");
  add_gen_options(bench_cmd, bench_args, true);
  std::size_t bench_count = 1, oracle_limit = 16;
  std::optional<std::size_t> bench_k;
  bool bench_csv = false, bench_no_kernel = false;
  bench_cmd->add_option("--count", bench_count, "graphs; seeds run seed, seed+1, ...");
  bench_cmd->add_option("--k", bench_k, "parameter k (default: every k in 0..n)");
  bench_cmd->add_flag("--no-kernel", bench_no_kernel);
  bench_cmd->add_option("--oracle-limit", oracle_limit, "largest n checked against the subset DP");
  bench_cmd->add_flag("--csv", bench_csv, "CSV instead of newline-delimited JSON");
  bench_cmd->add_option("--threads", opt.threads, "worker threads (env MSVC_THREADS)");

  auto* verify_cmd = app.add_subcommand("verify", "evaluate and audit an ordering");
  verify_cmd->add_option("instance", inst_path)->required();
  verify_cmd->add_option("ordering", ord_path)->required();
  bool verify_optimal = false;
  verify_cmd->add_flag("--optimal", verify_optimal, "also run the checks that hold only for optimal orderings");

  GenArgs an_args;
  auto* analyze_cmd = app.add_subcommand("analyze", "tau, optimum, max-cost bound and audits per graph");
  std::vector<std::string> an_files;
  analyze_cmd->add_option("instances", an_files);
  add_gen_options(analyze_cmd, an_args, false);
  std::size_t an_count = 1;
  bool an_csv = false;
  analyze_cmd->add_option("--count", an_count);
  analyze_cmd->add_flag("--csv", an_csv);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kYes : kError;
  }

  try {
    if (*solve_cmd) {
      opt.use_kernel = !no_kernel;
      return cmd_solve(inst_path, opt);
    }
    if (*kern_cmd) return cmd_kernelize(inst_path, out_path, trace_path);
    if (*oracle_cmd) return cmd_oracle(inst_path, method);
    if (*enum_cmd) return cmd_enum(inst_path, enum_k);
    if (*gen_cmd) return cmd_gen(gen_args, gen_k, gen_w, out_path);
    if (*bench_cmd) return cmd_bench(bench_args, bench_count, bench_k, bench_no_kernel, oracle_limit, bench_csv, opt.threads);
    if (*verify_cmd) return cmd_verify(inst_path, ord_path, verify_optimal);
    if (*analyze_cmd) return cmd_analyze(an_files, an_args, an_count, an_csv);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kError;
  }
  return kError;
}
