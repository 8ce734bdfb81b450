#include <algorithm>
#include <random>
#include <set>
#include <vector>

#include "artin/structure.hpp"
#include "doctest.h"
#include "helpers.hpp"

using namespace artin;
using namespace testutil;

namespace {

// minimal separators by definition: G - S has at least two components whose
// neighborhood is exactly S
std::vector<std::vector<int>> brute_minimal_separators(const PresentationGraph& g) {
  int n = g.size();
  std::vector<std::vector<int>> out;
  for (const auto& s : all_subsets(n)) {
    if (static_cast<int>(s.size()) > n - 2) continue;
    std::vector<char> in_s(n, 0);
    for (int v : s) in_s[v] = 1;
    std::vector<int> comp(n, -1);
    int nc = 0;
    for (int v = 0; v < n; ++v) {
      if (in_s[v] || comp[v] >= 0) continue;
      std::vector<int> stack{v};
      comp[v] = nc;
      while (!stack.empty()) {
        int u = stack.back();
        stack.pop_back();
        for (int w = 0; w < n; ++w)
          if (!in_s[w] && comp[w] < 0 && g.adjacent(u, w)) {
            comp[w] = nc;
            stack.push_back(w);
          }
      }
      ++nc;
    }
    if (nc < 2) continue;
    int full = 0;
    for (int c = 0; c < nc; ++c) {
      std::set<int> nb;
      for (int v = 0; v < n; ++v) {
        if (comp[v] != c) continue;
        for (int w : s)
          if (g.adjacent(v, w)) nb.insert(w);
      }
      if (static_cast<int>(nb.size()) == static_cast<int>(s.size())) ++full;
    }
    if (full >= 2) out.push_back(s);
  }
  return out;
}

bool valid_splitting_raw(const PresentationGraph& g, const std::vector<int>& g1,
                         const std::vector<int>& g2) {
  std::vector<char> in1(g.size(), 0), in2(g.size(), 0);
  for (int v : g1) in1[v] = 1;
  for (int v : g2) in2[v] = 1;
  for (int v = 0; v < g.size(); ++v)
    if (!in1[v] && !in2[v]) return false;  // must cover V
  bool s1 = false, s2 = false;             // sides beyond the intersection
  for (int v = 0; v < g.size(); ++v) {
    if (in1[v] && !in2[v]) s1 = true;
    if (in2[v] && !in1[v]) s2 = true;
  }
  if (!s1 || !s2) return false;
  for (int u = 0; u < g.size(); ++u)
    for (int v = 0; v < g.size(); ++v)
      if (in1[u] && !in2[u] && in2[v] && !in1[v] && g.adjacent(u, v))
        return false;
  return true;
}

// every valid splitting, canonicalized, by brute force over subset pairs
std::set<std::pair<std::vector<int>, std::vector<int>>> brute_all_splittings(
    const PresentationGraph& g) {
  std::set<std::pair<std::vector<int>, std::vector<int>>> out;
  auto subs = all_subsets(g.size());
  for (const auto& a : subs)
    for (const auto& b : subs)
      if (valid_splitting_raw(g, a, b))
        out.insert({std::min(a, b), std::max(a, b)});
  return out;
}

int nonadjacent_pairs(const PresentationGraph& g) {
  int c = 0;
  for (int i = 0; i < g.size(); ++i)
    for (int j = i + 1; j < g.size(); ++j)
      if (!g.adjacent(i, j)) ++c;
  return c;
}

}  // namespace

TEST_CASE("irreducible factors are the components of the m!=2 view") {
  auto c4 = cycle_graph(4, 2);
  auto f = irreducible_factors(c4);
  REQUIRE(f.size() == 2);
  CHECK(f[0].names(c4) == std::vector<std::string>{"v1", "v3"});
  CHECK(f[1].names(c4) == std::vector<std::string>{"v2", "v4"});

  CHECK(irreducible_factors(wheel_graph(6, 3, 3)).size() == 1);
  CHECK(irreducible_factors(make_graph({"a"}, {})).size() == 1);
  CHECK_THROWS_AS(irreducible_factors(PresentationGraph()), Error);

  std::mt19937_64 rng(111);
  for (int it = 0; it < 200; ++it) {
    auto g = random_graph(pick(rng, 1, 7), {0, 2, 3}, rng);
    auto fs = irreducible_factors(g);
    VertexSet all;
    for (const auto& fac : fs) {
      CHECK(!fac.empty());
      CHECK(vs_intersect(all, fac).empty());  // pairwise disjoint
      all = vs_union(all, fac);
      // a factor is itself irreducible
      CHECK(irreducible_factors(induced_subgraph(g, fac)).size() == 1);
    }
    CHECK(all == VertexSet::full(g));
    // distinct factors commute pairwise
    for (size_t a = 0; a + 1 < fs.size(); ++a)
      for (size_t b = a + 1; b < fs.size(); ++b)
        for (int u : fs[a].indices())
          for (int v : fs[b].indices()) CHECK(g.label(u, v) == 2);
  }
}

TEST_CASE("normal standard parabolics are the factor unions") {
  auto c4 = cycle_graph(4, 2);
  auto ns = normal_standard_parabolics(c4);
  REQUIRE(ns.size() == 4);
  CHECK(ns[0].empty());
  CHECK(ns[1].names(c4) == std::vector<std::string>{"v1", "v3"});
  CHECK(ns[2].names(c4) == std::vector<std::string>{"v2", "v4"});
  CHECK(ns[3] == VertexSet::full(c4));

  std::mt19937_64 rng(222);
  for (int it = 0; it < 100; ++it) {
    auto g = random_graph(pick(rng, 1, 6), {0, 2, 3}, rng);
    auto fs = irreducible_factors(g);
    auto n = normal_standard_parabolics(g);
    CHECK(n.size() == (size_t{1} << fs.size()));
    for (const auto& s : n)  // each member is a union of whole factors
      for (const auto& fac : fs)
        CHECK((vs_subset(fac, s) || vs_intersect(fac, s).empty()));
  }
  CHECK_THROWS_AS(normal_standard_parabolics(complete_graph(21, 2)), Error);
}

TEST_CASE("contains_direct_factor") {
  auto c4 = cycle_graph(4, 2);
  CHECK(contains_direct_factor(c4, VertexSet::from_names(c4, {"v1", "v3"})));
  CHECK(contains_direct_factor(c4, VertexSet::from_names(c4, {"v1", "v2", "v3"})));
  CHECK(!contains_direct_factor(c4, VertexSet::from_names(c4, {"v1", "v2"})));
  CHECK(!contains_direct_factor(c4, VertexSet()));

  std::mt19937_64 rng(333);
  for (int it = 0; it < 200; ++it) {
    auto g = random_graph(pick(rng, 1, 6), {0, 2, 3}, rng);
    std::vector<int> si;
    for (int i = 0; i < g.size(); ++i)
      if (rng() % 2) si.push_back(i);
    VertexSet s(g, si);
    bool expect = false;
    for (const auto& fac : irreducible_factors(g))
      if (vs_subset(fac, s)) expect = true;
    CHECK(contains_direct_factor(g, s) == expect);
  }
}

TEST_CASE("join detection matches brute force") {
  auto c4 = cycle_graph(4, 2);
  auto j = is_join(c4);
  REQUIRE(j.has_value());
  CHECK(j->first.names(c4) == std::vector<std::string>{"v1", "v3"});
  CHECK(j->second.names(c4) == std::vector<std::string>{"v2", "v4"});
  CHECK(!is_join(cycle_graph(5, 3)).has_value());
  auto p3 = path_graph({3, 3});
  auto jp = is_join(p3);
  REQUIRE(jp.has_value());
  CHECK(jp->first.names(p3) == std::vector<std::string>{"v2"});  // the cone vertex
  CHECK(is_join(wheel_graph(6, 3, 3)).has_value());
  CHECK_THROWS_AS(is_join(make_graph({"a"}, {})), Error);

  std::mt19937_64 rng(444);
  for (int it = 0; it < 300; ++it) {
    auto g = random_graph(pick(rng, 2, 6), {0, 0, 2, 3}, rng);
    auto got = is_join(g);
    CHECK(got.has_value() == brute_is_join(g));
    if (got) {
      CHECK(vs_intersect(got->first, got->second).empty());
      CHECK(vs_union(got->first, got->second) == VertexSet::full(g));
      CHECK(!got->first.empty());
      CHECK(!got->second.empty());
      for (int u : got->first.indices())
        for (int v : got->second.indices()) CHECK(g.adjacent(u, v));
    }
  }
}

TEST_CASE("Splitting::create validates and canonicalizes") {
  auto c4 = cycle_graph(4, 2);
  auto v = [&](std::vector<std::string> names) {
    return VertexSet::from_names(c4, names);
  };
  auto s = Splitting::create(c4, v({"v1", "v2", "v4"}), v({"v2", "v3", "v4"}));
  CHECK(s.omega.names(c4) == std::vector<std::string>{"v2", "v4"});
  CHECK(s.gamma1.names(c4) == std::vector<std::string>{"v1", "v2", "v4"});
  auto swapped = Splitting::create(c4, v({"v2", "v3", "v4"}), v({"v1", "v2", "v4"}));
  CHECK(s == swapped);

  CHECK_THROWS_AS(Splitting::create(c4, v({"v1"}), v({"v2"})), Error);  // no cover
  CHECK_THROWS_AS(
      Splitting::create(c4, VertexSet::full(c4), v({"v1"})), Error);  // trivial side
  CHECK_THROWS_AS(
      Splitting::create(c4, v({"v1", "v2"}), v({"v3", "v4"})), Error);  // cross edge
}

TEST_CASE("minimal separators match the definition") {
  std::mt19937_64 rng(555);
  for (int it = 0; it < 250; ++it) {
    auto g = random_graph(pick(rng, 1, 7), {0, 0, 2, 3}, rng);
    auto got = minimal_separators(g);
    std::vector<std::vector<int>> got_idx;
    for (const auto& s : got) got_idx.push_back(s.indices());
    auto want = brute_minimal_separators(g);
    std::sort(want.begin(), want.end(), [](const auto& a, const auto& b) {
      if (a.size() != b.size()) return a.size() < b.size();
      return a < b;
    });
    CAPTURE(g.to_text());
    CHECK(got_idx == want);
  }
  // disconnected graph: the empty separator is listed
  auto g2 = make_graph({"a", "b"}, {});
  auto seps = minimal_separators(g2);
  REQUIRE(seps.size() == 1);
  CHECK(seps[0].empty());
}

TEST_CASE("wheel separator example") {
  auto w6 = wheel_graph(6, 3, 3);
  auto seps = minimal_separators(w6);
  VertexSet want = VertexSet::from_names(w6, {"h", "v1", "v4"});
  CHECK(std::find(seps.begin(), seps.end(), want) != seps.end());

  auto list = enumerate_visual_splittings(w6, SplitMode::MinimalSeparators);
  CHECK(!list.truncated);
  bool found = false;
  for (const auto& s : list.items)
    if (s.omega == want) {
      found = true;
      CHECK(s.gamma1 == VertexSet::from_names(w6, {"h", "v1", "v2", "v3", "v4"}));
      CHECK(s.gamma2 == VertexSet::from_names(w6, {"h", "v1", "v4", "v5", "v6"}));
    }
  CHECK(found);
}

TEST_CASE("splitting enumeration: validity, order, reconstruction") {
  std::mt19937_64 rng(666);
  for (int it = 0; it < 150; ++it) {
    auto g = random_graph(pick(rng, 1, 6), {0, 0, 2, 3}, rng);
    auto brute = brute_all_splittings(g);
    for (auto mode : {SplitMode::NonadjacentPairs, SplitMode::MinimalSeparators,
                      SplitMode::All}) {
      auto list = enumerate_visual_splittings(g, mode);
      CHECK(!list.truncated);
      // sorted with no duplicates
      for (size_t i = 0; i + 1 < list.items.size(); ++i) {
        const auto &a = list.items[i], &b = list.items[i + 1];
        auto ka = std::tuple(a.omega.size(), a.omega, a.gamma1, a.gamma2);
        auto kb = std::tuple(b.omega.size(), b.omega, b.gamma1, b.gamma2);
        CHECK(ka < kb);
      }
      for (const auto& s : list.items) {
        CHECK(s.omega == vs_intersect(s.gamma1, s.gamma2));
        CHECK(s.gamma1.indices() <= s.gamma2.indices());
        CHECK(brute.count({s.gamma1.indices(), s.gamma2.indices()}) == 1);
        // no information is lost: the two induced sides rebuild the graph
        auto h1 = induced_subgraph(g, s.gamma1);
        auto h2 = induced_subgraph(g, s.gamma2);
        std::set<std::tuple<std::string, std::string, int>> es;
        for (const auto& e : h1.edges()) es.insert({h1.name(e.u), h1.name(e.v), e.m});
        for (const auto& e : h2.edges()) es.insert({h2.name(e.u), h2.name(e.v), e.m});
        std::set<std::tuple<std::string, std::string, int>> want;
        for (const auto& e : g.edges()) want.insert({g.name(e.u), g.name(e.v), e.m});
        CHECK(es == want);
      }
      // existence agrees with cliqueness in every mode
      CHECK(list.items.empty() == is_clique(g, VertexSet::full(g)));
    }
    // pair mode: exactly one splitting per unrelated pair
    auto pairs = enumerate_visual_splittings(g, SplitMode::NonadjacentPairs);
    CHECK(pairs.items.size() == static_cast<size_t>(nonadjacent_pairs(g)));
    // exhaustive mode is complete
    auto all = enumerate_visual_splittings(g, SplitMode::All);
    CHECK(all.items.size() == brute.size());
  }
}

TEST_CASE("splitting caps and limits") {
  SplitOptions tight;
  tight.bipartition_cap = 3;
  // star with 4 leaves: 4 components over the hub separator, 7 bipartitions
  {
    std::vector<PresentationGraph::EdgeIn> in;
    for (int i = 1; i <= 4; ++i) in.push_back({"h", "v" + std::to_string(i), 2});
    auto k14 = PresentationGraph::create({"h", "v1", "v2", "v3", "v4"}, in);
    auto full = enumerate_visual_splittings(k14, SplitMode::MinimalSeparators);
    CHECK(!full.truncated);
    CHECK(full.items.size() == 7);
    auto capped = enumerate_visual_splittings(k14, SplitMode::MinimalSeparators, tight);
    CHECK(capped.truncated);
    CHECK(capped.items.size() == 4);  // one leaf vs the rest
    for (const auto& s : capped.items)
      CHECK((s.gamma1.size() == 2 || s.gamma2.size() == 2));
  }
  SplitOptions small_all;
  small_all.all_mode_max_vertices = 3;
  CHECK_THROWS_AS(
      enumerate_visual_splittings(cycle_graph(4, 3), SplitMode::All, small_all), Error);
}

TEST_CASE("2-convexity") {
  auto w6 = wheel_graph(6, 3, 3);
  CHECK(is_2convex(w6, VertexSet::from_names(w6, {"h", "v1", "v4"})));
  CHECK(!is_2convex(w6, VertexSet::from_names(w6, {"v1", "v4"})));  // misses h
  auto c4 = cycle_graph(4, 2);
  CHECK(!is_2convex(c4, VertexSet::from_names(c4, {"v1", "v3"})));
  CHECK(is_2convex(c4, VertexSet::from_names(c4, {"v1", "v2"})));  // an edge
  CHECK(is_2convex(c4, VertexSet()));
  CHECK(is_2convex(c4, VertexSet::full(c4)));
  auto p44 = path_graph({4, 4});
  CHECK(is_2convex(p44, VertexSet::from_names(p44, {"v2"})));

  std::mt19937_64 rng(777);
  for (int it = 0; it < 300; ++it) {
    auto g = random_graph(pick(rng, 1, 7), {0, 0, 2, 3}, rng);
    std::vector<int> si;
    for (int i = 0; i < g.size(); ++i)
      if (rng() % 2) si.push_back(i);
    VertexSet s(g, si);
    CHECK(is_2convex(g, s) == (two_convex_closure(g, s) == s));
    CHECK(is_2convex(g, two_convex_closure(g, s)));  // closures are 2-convex
  }
}
