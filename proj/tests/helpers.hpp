#pragma once

// Shared builders and brute-force oracles for the test suite. Everything here
// is intentionally naive: the point is to check the library against code too
// simple to be wrong, not to be fast.

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <queue>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "artin/graph.hpp"

namespace testutil {

using artin::PresentationGraph;
using artin::VertexSet;

// Builds a graph from vertex names and (u, v, m) triples.
inline PresentationGraph make_graph(std::vector<std::string> names,
                                    std::vector<std::tuple<std::string, std::string, int>> edges) {
  std::vector<PresentationGraph::EdgeIn> in;
  for (auto& [u, v, m] : edges) in.push_back({u, v, m});
  return PresentationGraph::create(std::move(names), in);
}

inline std::vector<std::string> vnames(int n) {
  std::vector<std::string> out;
  for (int i = 1; i <= n; ++i) out.push_back("v" + std::to_string(i));
  return out;
}

// Path v1-...-vn with labels[i] on edge (v_{i+1}, v_{i+2}).
inline PresentationGraph path_graph(const std::vector<int>& labels) {
  int n = static_cast<int>(labels.size()) + 1;
  std::vector<PresentationGraph::EdgeIn> in;
  auto names = vnames(n);
  for (int i = 0; i + 1 < n; ++i) in.push_back({names[i], names[i + 1], labels[i]});
  return PresentationGraph::create(names, in);
}

// Cycle v1-...-vn-v1, uniform label.
inline PresentationGraph cycle_graph(int n, int m) {
  std::vector<PresentationGraph::EdgeIn> in;
  auto names = vnames(n);
  for (int i = 0; i < n; ++i) in.push_back({names[i], names[(i + 1) % n], m});
  return PresentationGraph::create(names, in);
}

// Complete graph, uniform label.
inline PresentationGraph complete_graph(int n, int m) {
  std::vector<PresentationGraph::EdgeIn> in;
  auto names = vnames(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) in.push_back({names[i], names[j], m});
  return PresentationGraph::create(names, in);
}

// Wheel: hub "h" adjacent to rim v1..vn (spoke label), rim cycle (rim label).
inline PresentationGraph wheel_graph(int n, int rim, int spoke) {
  std::vector<std::string> names = {"h"};
  auto rimnames = vnames(n);
  names.insert(names.end(), rimnames.begin(), rimnames.end());
  std::vector<PresentationGraph::EdgeIn> in;
  for (int i = 0; i < n; ++i) {
    in.push_back({"h", rimnames[i], spoke});
    in.push_back({rimnames[i], rimnames[(i + 1) % n], rim});
  }
  return PresentationGraph::create(names, in);
}

// Deterministic cross-platform RNG helpers (avoid std::uniform_int_distribution,
// whose output is implementation defined).
inline int pick(std::mt19937_64& rng, int lo, int hi) {  // inclusive range
  return lo + static_cast<int>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

template <class T>
inline const T& pick_one(std::mt19937_64& rng, const std::vector<T>& xs) {
  return xs[rng() % xs.size()];
}

// Random graph on n vertices; each pair independently gets a label from
// `labels`, where 0 means "no edge" (infinite).
inline PresentationGraph random_graph(int n, const std::vector<int>& labels, std::mt19937_64& rng) {
  auto names = vnames(n);
  std::vector<PresentationGraph::EdgeIn> in;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      int m = pick_one(rng, labels);
      if (m != 0) in.push_back({names[i], names[j], m});
    }
  return PresentationGraph::create(names, in);
}

// ---- brute-force oracles ------------------------------------------------

// BFS distances in the presentation graph (-1 when unreachable).
inline std::vector<int> bfs_distances(const PresentationGraph& g, int src) {
  std::vector<int> d(g.size(), -1);
  std::queue<int> q;
  d[src] = 0;
  q.push(src);
  while (!q.empty()) {
    int u = q.front();
    q.pop();
    for (int v = 0; v < g.size(); ++v)
      if (v != u && g.adjacent(u, v) && d[v] < 0) {
        d[v] = d[u] + 1;
        q.push(v);
      }
  }
  return d;
}

// All subsets of {0..n-1} as sorted index vectors (n <= ~20).
inline std::vector<std::vector<int>> all_subsets(int n) {
  std::vector<std::vector<int>> out;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    std::vector<int> s;
    for (int i = 0; i < n; ++i)
      if (mask & (1u << i)) s.push_back(i);
    out.push_back(std::move(s));
  }
  return out;
}

// Is the graph a join: can V be split into two nonempty parts with every
// cross pair adjacent? Brute force over bipartitions.
inline bool brute_is_join(const PresentationGraph& g) {
  int n = g.size();
  if (n < 2) return false;
  for (std::uint32_t mask = 1; mask < (1u << (n - 1)); ++mask) {  // v0 stays in part 0
    bool ok = true;
    for (int i = 0; i < n && ok; ++i)
      for (int j = 0; j < n && ok; ++j) {
        bool left = (i == 0) || !(mask & (1u << (i - 1)));
        bool right = (j != 0) && (mask & (1u << (j - 1)));
        if (left && right && !g.adjacent(i, j)) ok = false;
      }
    if (ok) return true;
  }
  return false;
}

// Brute-force flagness over all vertex subsets. `contains` is the cover's
// membership test on sorted index vectors. The skeleton edge (i, j) exists
// when the pair {i, j} is itself a member; every subset of size >= 3 whose
// pairs are all skeleton edges must then be a member.
template <class ContainsFn>
inline bool brute_is_flag(int n, ContainsFn contains) {
  std::vector<std::vector<char>> skel(n, std::vector<char>(n, 0));
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (contains(std::vector<int>{i, j})) skel[i][j] = skel[j][i] = 1;
  for (const auto& s : all_subsets(n)) {
    if (s.size() < 3) continue;
    bool clique = true;
    for (size_t a = 0; a < s.size() && clique; ++a)
      for (size_t b = a + 1; b < s.size() && clique; ++b)
        if (!skel[s[a]][s[b]]) clique = false;
    if (clique && !contains(s)) return false;
  }
  return true;
}

// 2-convex closure: repeatedly add every common neighbor of a distance-2 pair
// inside the set. The result is 2-convex by construction.
inline VertexSet two_convex_closure(const PresentationGraph& g, VertexSet s) {
  bool changed = true;
  while (changed) {
    changed = false;
    auto idx = s.indices();
    std::set<int> cur(idx.begin(), idx.end());
    for (size_t a = 0; a < idx.size(); ++a)
      for (size_t b = a + 1; b < idx.size(); ++b) {
        int u = idx[a], v = idx[b];
        if (g.adjacent(u, v)) continue;
        for (int w = 0; w < g.size(); ++w) {
          if (w == u || w == v) continue;
          if (g.adjacent(u, w) && g.adjacent(v, w) && !cur.count(w)) {
            cur.insert(w);
            changed = true;
          }
        }
      }
    if (changed)
      s = VertexSet::from_sorted_unique(std::vector<int>(cur.begin(), cur.end()));
  }
  return s;
}

}  // namespace testutil
