#pragma once

// Enumeration of all minimal vertex covers of size at most k (there are at
// most 2^k of them).

#include <algorithm>
#include <functional>
#include <unordered_set>
#include <vector>

#include "msvc/graph.hpp"

namespace msvc {

using VertexSet = std::vector<Vertex>;  // sorted ascending

inline bool is_minimal_cover(const Graph& g, std::span<const Vertex> s) {
  if (!is_vertex_cover(g, s)) return false;
  std::vector<char> in(g.n(), 0);
  for (Vertex v : s) in[v] = 1;
  // A cover stays a cover after dropping v iff every neighbor of v is in it.
  for (Vertex v : s) {
    auto nb = g.neighbors(v);
    if (std::all_of(nb.begin(), nb.end(), [&](Vertex x) { return in[x] != 0; })) return false;
  }
  return true;
}

namespace detail {

struct VertexSetHash {
  std::size_t operator()(const VertexSet& s) const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (Vertex v : s) h = (h ^ v) * 1099511628211ull;
    return h;
  }
};

class CoverEnumerator {
 public:
  CoverEnumerator(const Graph& g, std::size_t k) : g_(g), k_(k), state_(g.n(), kFree) {}

  std::vector<VertexSet> run() {
    recurse();
    std::vector<VertexSet> out(found_.begin(), found_.end());
    std::sort(out.begin(), out.end());
    return out;
  }

 private:
  static constexpr char kFree = 0, kIn = 1, kOut = 2;

  const Edge* first_uncovered() const {
    for (const Edge& e : g_.edges())
      if (state_[e.u] != kIn && state_[e.v] != kIn) return &e;
    return nullptr;
  }

  void recurse() {
    const Edge* e = first_uncovered();
    if (!e) {
      VertexSet s = cover_;
      std::sort(s.begin(), s.end());
      if (is_minimal_cover(g_, s)) found_.insert(std::move(s));
      return;
    }
    if (cover_.size() >= k_) return;
    const Vertex u = e->u;

    // Branch A: u joins the cover.
    if (state_[u] == kFree) {
      state_[u] = kIn;
      cover_.push_back(u);
      recurse();
      cover_.pop_back();
      state_[u] = kFree;
    }

    // Branch B: u is excluded for good, so all of N(u) joins.
    if (state_[u] != kFree) return;
    std::vector<Vertex> added;
    bool ok = true;
    for (Vertex x : g_.neighbors(u)) {
      if (state_[x] == kOut) { ok = false; break; }
      if (state_[x] == kFree) added.push_back(x);
    }
    if (ok && cover_.size() + added.size() <= k_) {
      state_[u] = kOut;
      for (Vertex x : added) {
        state_[x] = kIn;
        cover_.push_back(x);
      }
      recurse();
      for (Vertex x : added) {
        state_[x] = kFree;
        cover_.pop_back();
      }
      state_[u] = kFree;
    }
  }

  const Graph& g_;
  std::size_t k_;
  std::vector<char> state_;
  std::vector<Vertex> cover_;
  std::unordered_set<VertexSet, VertexSetHash> found_;
};

}  // namespace detail

/// All minimal vertex covers with at most k vertices, each sorted, in lexicographic order.
inline std::vector<VertexSet> enumerate_minimal_covers(const Graph& g, std::size_t k) {
  return detail::CoverEnumerator(g, k).run();
}

}  // namespace msvc
