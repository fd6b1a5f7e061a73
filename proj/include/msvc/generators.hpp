#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "msvc/graph.hpp"

namespace msvc {

/// PCG32 (XSH-RR, 64-bit state). Output is fixed by the algorithm, so seeded
/// corpora are identical on every platform.
class Pcg32 {
 public:
  explicit Pcg32(std::uint64_t seed, std::uint64_t stream = 54) {
    inc_ = (stream << 1u) | 1u;
    next();
    state_ += seed;
    next();
  }

  std::uint32_t next() {
    const std::uint64_t old = state_;
    state_ = old * 6364136223846793005ULL + inc_;
    const auto xorshifted = static_cast<std::uint32_t>(((old >> 18u) ^ old) >> 27u);
    const auto rot = static_cast<std::uint32_t>(old >> 59u);
    return (xorshifted >> rot) | (xorshifted << ((-rot) & 31u));
  }

  /// Uniform in [0, bound), unbiased.
  std::uint32_t below(std::uint32_t bound) {
    const std::uint32_t threshold = (-bound) % bound;
    for (;;) {
      const std::uint32_t r = next();
      if (r >= threshold) return r % bound;
    }
  }

  /// Uniform in [0, 1) with 32 bits of resolution.
  double uniform() { return next() * (1.0 / 4294967296.0); }

 private:
  std::uint64_t state_ = 0;
  std::uint64_t inc_ = 0;
};

enum class Family { path, cycle, star, double_star, claw_chain, gnp, random_regular, disjoint_edges };

inline constexpr std::pair<Family, std::string_view> kFamilyNames[] = {
    {Family::path, "path"},
    {Family::cycle, "cycle"},
    {Family::star, "star"},
    {Family::double_star, "double_star"},
    {Family::claw_chain, "claw_chain"},
    {Family::gnp, "gnp"},
    {Family::random_regular, "random_regular"},
    {Family::disjoint_edges, "disjoint_edges"},
};

inline std::string_view to_string(Family f) {
  for (const auto& [fam, name] : kFamilyNames)
    if (fam == f) return name;
  return "?";
}

inline Family parse_family(std::string_view name) {
  for (const auto& [fam, n] : kFamilyNames)
    if (n == name) return fam;
  throw InvalidInput("unknown graph family '" + std::string(name) + "'");
}

/// `size` means: vertices (path, cycle, gnp, random_regular), leaves (star),
/// leaves per center (double_star), claws (claw_chain), edges (disjoint_edges).
struct GeneratorSpec {
  Family family = Family::path;
  std::size_t size = 0;
  double p = 0.5;         // gnp
  std::size_t degree = 3;  // random_regular
  std::uint64_t seed = 0;
};

namespace detail {

inline Graph random_regular(std::size_t n, std::size_t d, std::uint64_t seed) {
  if (d >= n && !(n == 0 && d == 0)) throw InvalidInput("random_regular needs d < n");
  if ((n * d) % 2) throw InvalidInput("random_regular needs n*d even");
  Pcg32 rng(seed);
  std::vector<Vertex> stubs;
  for (Vertex v = 0; v < n; ++v)
    for (std::size_t i = 0; i < d; ++i) stubs.push_back(v);
  // Pairing model, restarting on loops or parallel edges.
  for (int attempt = 0; attempt < 10000; ++attempt) {
    for (std::size_t i = stubs.size(); i > 1; --i) std::swap(stubs[i - 1], stubs[rng.below(static_cast<std::uint32_t>(i))]);
    std::vector<Edge> edges;
    bool ok = true;
    for (std::size_t i = 0; i + 1 < stubs.size(); i += 2) {
      Vertex a = stubs[i], b = stubs[i + 1];
      if (a == b) { ok = false; break; }
      edges.push_back({std::min(a, b), std::max(a, b)});
    }
    if (!ok) continue;
    std::sort(edges.begin(), edges.end());
    if (std::adjacent_find(edges.begin(), edges.end()) != edges.end()) continue;
    return Graph::from_edges(n, edges);
  }
  throw InvalidInput("random_regular: no simple pairing found");
}

}  // namespace detail

inline Graph generate(const GeneratorSpec& spec) {
  const std::size_t s = spec.size;
  std::vector<Edge> e;
  auto V = [](std::size_t x) { return static_cast<Vertex>(x); };
  switch (spec.family) {
    case Family::path:
      for (std::size_t i = 0; i + 1 < s; ++i) e.push_back({V(i), V(i + 1)});
      return Graph::from_edges(s, e);
    case Family::cycle:
      if (s < 3) throw InvalidInput("cycle needs at least 3 vertices");
      for (std::size_t i = 0; i < s; ++i) e.push_back({V(i), V((i + 1) % s)});
      return Graph::from_edges(s, e);
    case Family::star:
      for (std::size_t i = 1; i <= s; ++i) e.push_back({0, V(i)});
      return Graph::from_edges(s + 1, e);
    case Family::double_star:
      // Centers 0 and 1, adjacent; each with `s` private leaves.
      e.push_back({0, 1});
      for (std::size_t i = 0; i < s; ++i) {
        e.push_back({0, V(2 + i)});
        e.push_back({1, V(2 + s + i)});
      }
      return Graph::from_edges(2 * s + 2, e);
    case Family::claw_chain:
      // Vertex 0 is the shared leaf, 1..s the claw centers, then two private leaves per center.
      if (s == 0) throw InvalidInput("claw_chain needs at least one claw");
      for (std::size_t c = 1; c <= s; ++c) {
        e.push_back({0, V(c)});
        e.push_back({V(c), V(s + 1 + 2 * (c - 1))});
        e.push_back({V(c), V(s + 2 + 2 * (c - 1))});
      }
      return Graph::from_edges(3 * s + 1, e);
    case Family::gnp: {
      if (!(spec.p >= 0.0 && spec.p <= 1.0)) throw InvalidInput("gnp needs 0 <= p <= 1");
      Pcg32 rng(spec.seed);
      for (std::size_t u = 0; u < s; ++u)
        for (std::size_t v = u + 1; v < s; ++v)
          if (rng.uniform() < spec.p) e.push_back({V(u), V(v)});
      return Graph::from_edges(s, e);
    }
    case Family::random_regular:
      return detail::random_regular(s, spec.degree, spec.seed);
    case Family::disjoint_edges:
      for (std::size_t i = 0; i < s; ++i) e.push_back({V(2 * i), V(2 * i + 1)});
      return Graph::from_edges(2 * s, e);
  }
  throw InvalidInput("unknown family");
}

}  // namespace msvc
