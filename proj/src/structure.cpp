#include "artin/structure.hpp"

#include <algorithm>
#include <set>

namespace artin {

namespace {

// components of an adjacency predicate over {0..n-1}, each sorted;
// component order follows the smallest contained index
template <class Adj>
std::vector<std::vector<int>> components_of(int n, Adj adj) {
  std::vector<int> comp(n, -1);
  std::vector<std::vector<int>> out;
  for (int s = 0; s < n; ++s) {
    if (comp[s] >= 0) continue;
    int id = static_cast<int>(out.size());
    comp[s] = id;
    std::vector<int> stack{s}, verts{s};
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int w = 0; w < n; ++w)
        if (comp[w] < 0 && adj(v, w)) {
          comp[w] = id;
          stack.push_back(w);
          verts.push_back(w);
        }
    }
    std::sort(verts.begin(), verts.end());
    out.push_back(std::move(verts));
  }
  return out;
}

}  // namespace

std::vector<VertexSet> irreducible_factors(const PresentationGraph& g) {
  if (g.size() == 0) throw Error("irreducible factors of the empty graph");
  auto comps = components_of(
      g.size(), [&](int i, int j) { return g.dynkin_adjacent(i, j); });
  std::vector<VertexSet> out;
  for (auto& c : comps) out.push_back(VertexSet(g, std::move(c)));
  return out;
}

std::vector<VertexSet> normal_standard_parabolics(const PresentationGraph& g) {
  auto factors = irreducible_factors(g);
  size_t k = factors.size();
  if (k > 20) throw Error("too many factors to enumerate unions");
  std::vector<VertexSet> out;
  for (size_t mask = 0; mask < (size_t{1} << k); ++mask) {
    VertexSet u;
    for (size_t i = 0; i < k; ++i)
      if (mask & (size_t{1} << i)) u = vs_union(u, factors[i]);
    out.push_back(std::move(u));
  }
  std::sort(out.begin(), out.end(), [](const VertexSet& a, const VertexSet& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a.indices() < b.indices();
  });
  return out;
}

bool contains_direct_factor(const PresentationGraph& g, const VertexSet& s) {
  for (const auto& f : irreducible_factors(g))
    if (vs_subset(f, s)) return true;
  return false;
}

std::optional<std::pair<VertexSet, VertexSet>> is_join(
    const PresentationGraph& g) {
  if (g.size() < 2) throw Error("join decomposition needs at least 2 vertices");
  // complement graph: infinite pairs
  auto comps = components_of(g.size(), [&](int i, int j) {
    return i != j && !g.label(i, j).has_value();
  });
  if (comps.size() < 2) return std::nullopt;
  std::sort(comps.begin(), comps.end(),
            [](const std::vector<int>& a, const std::vector<int>& b) {
              if (a.size() != b.size()) return a.size() < b.size();
              return a < b;
            });
  VertexSet first(g, comps[0]);
  VertexSet rest;
  for (size_t i = 1; i < comps.size(); ++i)
    rest = vs_union(rest, VertexSet(g, comps[i]));
  return std::make_pair(std::move(first), std::move(rest));
}

Splitting Splitting::create(const PresentationGraph& g, const VertexSet& a,
                            const VertexSet& b) {
  const VertexSet& g1 = a.indices() <= b.indices() ? a : b;
  const VertexSet& g2 = a.indices() <= b.indices() ? b : a;
  if (vs_union(g1, g2).size() != g.size())
    throw Error("splitting does not cover the vertex set");
  VertexSet omega = vs_intersect(g1, g2);
  if (g1.size() == omega.size() || g2.size() == omega.size())
    throw Error("trivial splitting: one side equals the intersection");
  VertexSet side1 = vs_minus(g1, omega), side2 = vs_minus(g2, omega);
  for (int u : side1.indices())
    for (int v : side2.indices())
      if (g.label(u, v))
        throw Error("edge " + g.name(u) + " " + g.name(v) +
                    " crosses the splitting outside the intersection");
  return Splitting{g1, g2, std::move(omega)};
}

std::vector<VertexSet> minimal_separators(const PresentationGraph& g) {
  int n = g.size();
  // close-separator generation: seed with N(C) for components C of G - N[v],
  // then expand each candidate S by the components of G - (S u N(x)), x in S.
  // A candidate is a minimal separator iff at least two components of G - S
  // see all of S.
  std::set<std::vector<int>> seen;
  std::vector<std::vector<int>> queue;
  auto neighborhood_of_component = [&](const std::vector<char>& removed,
                                       std::vector<std::vector<int>>& out) {
    std::vector<int> sub;
    for (int i = 0; i < n; ++i)
      if (!removed[i]) sub.push_back(i);
    std::vector<char> vis(n, 0);
    for (int s : sub) {
      if (vis[s]) continue;
      std::vector<int> stack{s}, comp;
      vis[s] = 1;
      while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        comp.push_back(v);
        for (int w = 0; w < n; ++w)
          if (!removed[w] && !vis[w] && g.adjacent(v, w)) {
            vis[w] = 1;
            stack.push_back(w);
          }
      }
      std::set<int> nb;
      for (int v : comp)
        for (int w = 0; w < n; ++w)
          if (removed[w] && g.adjacent(v, w)) nb.insert(w);
      out.emplace_back(nb.begin(), nb.end());
    }
  };
  auto push = [&](std::vector<int> cand) {
    if (seen.insert(cand).second) queue.push_back(std::move(cand));
  };
  for (int v = 0; v < n; ++v) {
    std::vector<char> removed(n, 0);
    removed[v] = 1;
    for (int w = 0; w < n; ++w)
      if (g.adjacent(v, w)) removed[w] = 1;
    std::vector<std::vector<int>> cands;
    neighborhood_of_component(removed, cands);
    for (auto& c : cands) push(std::move(c));
  }
  for (size_t qi = 0; qi < queue.size(); ++qi) {
    std::vector<int> s = queue[qi];  // copy: queue may reallocate
    for (int x : s) {
      std::vector<char> removed(n, 0);
      for (int y : s) removed[y] = 1;
      removed[x] = 1;
      for (int w = 0; w < n; ++w)
        if (g.adjacent(x, w)) removed[w] = 1;
      std::vector<std::vector<int>> cands;
      neighborhood_of_component(removed, cands);
      for (auto& c : cands) push(std::move(c));
    }
  }
  // minimality filter: S is a minimal separator iff two components are full
  std::vector<VertexSet> out;
  for (const auto& cand : seen) {
    std::vector<char> removed(n, 0);
    for (int y : cand) removed[y] = 1;
    auto comps = components_of(n, [&](int i, int j) {
      return !removed[i] && !removed[j] && g.adjacent(i, j);
    });
    // drop the removed vertices (components_of hands them back as singletons)
    std::vector<std::vector<int>> real;
    for (auto& c : comps)
      if (!(c.size() == 1 && removed[c[0]])) real.push_back(std::move(c));
    int full = 0;
    for (const auto& c : real) {
      std::set<int> nb;
      for (int v : c)
        for (int w : cand)
          if (g.adjacent(v, w)) nb.insert(w);
      if (nb.size() == cand.size()) ++full;
    }
    if (real.size() >= 2 && full >= 2) out.push_back(VertexSet(g, cand));
  }
  std::sort(out.begin(), out.end(), [](const VertexSet& a, const VertexSet& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a.indices() < b.indices();
  });
  return out;
}

namespace {

// splittings over a fixed separator: distribute the components of G - omega
// to the two sides, every bipartition up to the cap, then one-vs-rest only
void splittings_over(const PresentationGraph& g, const VertexSet& omega,
                     const SplitOptions& opt, std::set<Splitting>& out,
                     bool& truncated) {
  int n = g.size();
  std::vector<char> removed(n, 0);
  for (int y : omega.indices()) removed[y] = 1;
  auto comps_raw = components_of(n, [&](int i, int j) {
    return !removed[i] && !removed[j] && g.adjacent(i, j);
  });
  std::vector<VertexSet> comps;
  for (auto& c : comps_raw)
    if (!(c.size() == 1 && removed[c[0]])) comps.push_back(VertexSet(g, c));
  size_t k = comps.size();
  if (k < 2) return;
  auto emit = [&](size_t mask) {  // mask selects gamma1's components
    VertexSet s1 = omega, s2 = omega;
    for (size_t i = 0; i < k; ++i) {
      if (mask & (size_t{1} << i)) s1 = vs_union(s1, comps[i]);
      else s2 = vs_union(s2, comps[i]);
    }
    out.insert(Splitting::create(g, s1, s2));
  };
  // masks with bit k-1 clear pick the side not holding component k-1, so
  // each unordered bipartition is hit exactly once (mask 0 = empty side)
  size_t nmask = k >= 63 ? 0 : (size_t{1} << (k - 1));
  if (k < 63 && nmask - 1 <= static_cast<size_t>(opt.bipartition_cap)) {
    for (size_t mask = 1; mask < nmask; ++mask) emit(mask);
  } else {
    truncated = true;
    for (size_t i = 0; i < k; ++i) emit(size_t{1} << i);  // one vs rest
  }
}

}  // namespace

SplittingList enumerate_visual_splittings(const PresentationGraph& g,
                                          SplitMode mode,
                                          const SplitOptions& opt) {
  SplittingList res;
  std::set<Splitting> acc;
  int n = g.size();
  switch (mode) {
    case SplitMode::NonadjacentPairs: {
      VertexSet full = VertexSet::full(g);
      for (int s = 0; s < n; ++s)
        for (int t = s + 1; t < n; ++t) {
          if (g.label(s, t)) continue;
          VertexSet g1 = vs_minus(full, VertexSet(g, {s}));
          VertexSet g2 = vs_minus(full, VertexSet(g, {t}));
          acc.insert(Splitting::create(g, g1, g2));
        }
      break;
    }
    case SplitMode::MinimalSeparators: {
      for (const auto& omega : minimal_separators(g))
        splittings_over(g, omega, opt, acc, res.truncated);
      break;
    }
    case SplitMode::All: {
      if (n > opt.all_mode_max_vertices)
        throw Error("graph too large for exhaustive splitting enumeration (" +
                    std::to_string(n) + " > " +
                    std::to_string(opt.all_mode_max_vertices) + " vertices)");
      for (size_t mask = 0; mask < (size_t{1} << n); ++mask) {
        std::vector<int> omega_idx;
        for (int i = 0; i < n; ++i)
          if (mask & (size_t{1} << i)) omega_idx.push_back(i);
        if (static_cast<int>(omega_idx.size()) >= n) continue;
        splittings_over(g, VertexSet(g, omega_idx), opt, acc, res.truncated);
      }
      break;
    }
  }
  res.items.assign(acc.begin(), acc.end());
  std::sort(res.items.begin(), res.items.end(),
            [](const Splitting& a, const Splitting& b) {
              if (a.omega.size() != b.omega.size())
                return a.omega.size() < b.omega.size();
              if (a.omega != b.omega) return a.omega < b.omega;
              if (a.gamma1 != b.gamma1) return a.gamma1 < b.gamma1;
              return a.gamma2 < b.gamma2;
            });
  return res;
}

bool is_2convex(const PresentationGraph& g, const VertexSet& s) {
  for (const auto& p : distance2_pairs(g, s))
    for (int c : p.common)
      if (!s.contains(c)) return false;
  return true;
}

}  // namespace artin
