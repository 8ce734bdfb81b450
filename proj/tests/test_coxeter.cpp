#include <random>
#include <string>
#include <tuple>
#include <vector>

#include "artin/coxeter.hpp"
#include "artin/graph.hpp"
#include "doctest.h"
#include "helpers.hpp"

using namespace artin;
using namespace testutil;

namespace {

// Builds the presentation graph of a Coxeter system from its diagram: listed
// pairs carry the given label (0 = infinity, pair left out), every other
// pair commutes (label 2).
PresentationGraph from_diagram(int n, std::vector<std::tuple<int, int, int>> diagram) {
  std::vector<std::vector<int>> lab(n, std::vector<int>(n, 2));
  for (auto [i, j, m] : diagram) lab[i][j] = lab[j][i] = m;
  auto names = vnames(n);
  std::vector<PresentationGraph::EdgeIn> in;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (lab[i][j] != 0) in.push_back({names[i], names[j], lab[i][j]});
  return PresentationGraph::create(names, in);
}

std::vector<std::tuple<int, int, int>> chain(int from, int to) {  // all-3 path
  std::vector<std::tuple<int, int, int>> d;
  for (int i = from; i < to; ++i) d.push_back({i, i + 1, 3});
  return d;
}

struct CatalogCase {
  std::string name;
  PresentationGraph g;
};

std::vector<CatalogCase> catalog_cases() {
  std::vector<CatalogCase> out;
  auto add = [&](std::string name, int n, std::vector<std::tuple<int, int, int>> d) {
    out.push_back({std::move(name), from_diagram(n, std::move(d))});
  };

  add("A1", 1, {});
  for (int n = 2; n <= 8; ++n) add("A" + std::to_string(n), n, chain(0, n - 1));
  add("B2", 2, {{0, 1, 4}});
  for (int n = 3; n <= 8; ++n) {
    auto d = chain(0, n - 2);
    d.push_back({n - 2, n - 1, 4});
    add("B" + std::to_string(n), n, d);
  }
  for (int n = 4; n <= 8; ++n) {
    auto d = chain(0, n - 2);  // path on 0..n-2
    d.push_back({1, n - 1, 3});  // extra leaf next to one end
    add("D" + std::to_string(n), n, d);
  }
  {
    auto d = chain(0, 4);
    d.push_back({2, 5, 3});
    add("E6", 6, d);
  }
  {
    auto d = chain(0, 5);
    d.push_back({2, 6, 3});
    add("E7", 7, d);
  }
  {
    auto d = chain(0, 6);
    d.push_back({2, 7, 3});
    add("E8", 8, d);
  }
  add("F4", 4, {{0, 1, 3}, {1, 2, 4}, {2, 3, 3}});
  add("H3", 3, {{0, 1, 5}, {1, 2, 3}});
  add("H4", 4, {{0, 1, 5}, {1, 2, 3}, {2, 3, 3}});
  for (int m = 5; m <= 8; ++m)
    add("I2(" + std::to_string(m) + ")", 2, {{0, 1, m}});

  add("A~1", 2, {{0, 1, 0}});  // infinite dihedral: the pair has no relation
  for (int n = 2; n <= 6; ++n) {
    auto d = chain(0, n);
    d.push_back({n, 0, 3});
    add("A~" + std::to_string(n), n + 1, d);
  }
  for (int n = 3; n <= 7; ++n) {
    // branch vertex 0 with leaves 1, 2; long arm 0-3-...-n ending with a 4
    std::vector<std::tuple<int, int, int>> d{{0, 1, 3}, {0, 2, 3}};
    for (int i = 3; i < n; ++i) d.push_back({i == 3 ? 0 : i - 1, i, 3});
    d.push_back({n == 3 ? 0 : n - 1, n, 4});
    add("B~" + std::to_string(n), n + 1, d);
  }
  for (int n = 2; n <= 6; ++n) {
    std::vector<std::tuple<int, int, int>> d{{0, 1, 4}};
    for (int i = 1; i + 1 < n; ++i) d.push_back({i, i + 1, 3});
    d.push_back({n - 1, n, 4});
    add("C~" + std::to_string(n), n + 1, d);
  }
  add("D~4", 5, {{0, 1, 3}, {0, 2, 3}, {0, 3, 3}, {0, 4, 3}});
  for (int n = 5; n <= 7; ++n) {
    // central all-3 path 0..n-4, two leaves at each end
    auto d = chain(0, n - 4);
    d.push_back({0, n - 3, 3});
    d.push_back({0, n - 2, 3});
    d.push_back({n - 4, n - 1, 3});
    d.push_back({n - 4, n, 3});
    add("D~" + std::to_string(n), n + 1, d);
  }
  {
    auto d = chain(0, 2);  // arm 0-1-2, center 0
    d.insert(d.end(), {{0, 3, 3}, {3, 4, 3}, {0, 5, 3}, {5, 6, 3}});
    add("E~6", 7, d);
  }
  {
    auto d = chain(0, 3);
    d.insert(d.end(), {{0, 4, 3}, {4, 5, 3}, {5, 6, 3}, {0, 7, 3}});
    add("E~7", 8, d);
  }
  {
    auto d = chain(0, 5);
    d.insert(d.end(), {{0, 6, 3}, {6, 7, 3}, {0, 8, 3}});
    add("E~8", 9, d);
  }
  add("F~4", 5, {{0, 1, 3}, {1, 2, 3}, {2, 3, 4}, {3, 4, 3}});
  add("G~2", 3, {{0, 1, 3}, {1, 2, 6}});
  return out;
}

int affine_component_count(const PresentationGraph& g) {
  int c = 0;
  for (const auto& comp : spherical_decomposition(g))
    if (comp.type.is_affine()) ++c;
  return c;
}

bool has_infinite_component(const PresentationGraph& g) {
  for (const auto& comp : spherical_decomposition(g))
    if (comp.type.family == CoxeterType::Family::Infinite) return true;
  return false;
}

}  // namespace

TEST_CASE("catalog diagrams classify exactly, numerics agree") {
  for (const auto& c : catalog_cases()) {
    CAPTURE(c.name);
    auto decomp = spherical_decomposition(c.g);
    REQUIRE(decomp.size() == 1);
    CHECK(decomp[0].type.name() == c.name);
    CHECK(decomp[0].component.size() == c.g.size());

    auto cs = cosine_signature(c.g);
    bool finite = decomp[0].type.is_finite();
    if (finite) {
      CHECK(is_spherical(c.g));
      CHECK(cs.signature == CosineSignature::PositiveDefinite);
      CHECK(cs.kernel_dim == 0);
    } else {
      CHECK(decomp[0].type.is_affine());
      CHECK(!is_spherical(c.g));
      CHECK(class_profile(c.g).affine);
      CHECK(cs.signature == CosineSignature::PositiveSemidefinite);
      CHECK(cs.kernel_dim == 1);
    }

    // name round trip through the parser
    if (c.name != "A~1")  // A~1 is recognized but not in the generation range
      CHECK(parse_type_name(c.name) == decomp[0].type);
  }
}

TEST_CASE("type name parsing and aliases") {
  CHECK(parse_type_name("I2(3)").name() == "A2");
  CHECK(parse_type_name("I2(4)").name() == "B2");
  CHECK(parse_type_name("I2_7").name() == "I2(7)");
  CHECK(parse_type_name("C5").name() == "B5");
  CHECK(parse_type_name("C2").name() == "B2");
  CHECK(parse_type_name("H2").name() == "I2(5)");
  CHECK(parse_type_name("G2").name() == "I2(6)");
  CHECK(parse_type_name("B~2").name() == "C~2");
  CHECK(parse_type_name("A~3").rank == 4);
  CHECK_THROWS_AS(parse_type_name("B1"), Error);
  CHECK_THROWS_AS(parse_type_name("D3"), Error);
  CHECK_THROWS_AS(parse_type_name("E9"), Error);
  CHECK_THROWS_AS(parse_type_name("H5"), Error);
  CHECK_THROWS_AS(parse_type_name("I2(2)"), Error);
  CHECK_THROWS_AS(parse_type_name("Z3"), Error);
  CHECK_THROWS_AS(parse_type_name("A~0"), Error);
  CHECK_THROWS_AS(parse_type_name(""), Error);
}

TEST_CASE("near-catalog diagrams fall out as Infinite") {
  auto expect_infinite = [](const PresentationGraph& g) {
    auto d = spherical_decomposition(g);
    REQUIRE(d.size() == 1);
    CHECK(d[0].type.family == CoxeterType::Family::Infinite);
    CHECK(cosine_signature(g).signature == CosineSignature::Indefinite);
  };
  expect_infinite(from_diagram(4, {{0, 1, 4}, {1, 2, 4}, {2, 3, 4}}));
  expect_infinite(from_diagram(3, {{0, 1, 5}, {1, 2, 5}}));
  expect_infinite(from_diagram(4, {{0, 1, 3}, {0, 2, 3}, {0, 3, 5}}));  // star 3,3,5
  expect_infinite(from_diagram(4, {{0, 1, 3}, {1, 2, 3}, {2, 3, 3}, {3, 0, 4}}));
  expect_infinite(from_diagram(3, {{0, 1, 3}, {1, 2, 0}}));  // inf label, rank 3
  expect_infinite(path_graph({5, 3, 3, 3}));  // one step past H4
}

TEST_CASE("worked classification examples") {
  {
    auto g = from_diagram(3, {{0, 1, 3}, {1, 2, 4}});
    auto d = spherical_decomposition(g);
    REQUIRE(d.size() == 1);
    CHECK(d[0].type.name() == "B3");
    CHECK(cosine_signature(g).signature == CosineSignature::PositiveDefinite);
  }
  {
    auto g = cycle_graph(3, 3);
    auto d = spherical_decomposition(g);
    REQUIRE(d.size() == 1);
    CHECK(d[0].type.name() == "A~2");
    auto cs = cosine_signature(g);
    CHECK(cs.signature == CosineSignature::PositiveSemidefinite);
    CHECK(cs.kernel_dim == 1);
  }
  {
    // triangle with labels 2, 3, 3: the diagram is an all-3 path
    auto g = make_graph({"a", "b", "c"}, {{"a", "b", 2}, {"a", "c", 3}, {"b", "c", 3}});
    auto p = class_profile(g);
    CHECK(p.spherical);
    CHECK(p.dimension == 3);
    CHECK(!p.two_dimensional);
    auto d = spherical_decomposition(g);
    REQUIRE(d.size() == 1);
    CHECK(d[0].type.name() == "A3");
  }
  {
    auto g = from_diagram(3, {{0, 1, 4}, {1, 2, 4}});
    auto p = class_profile(g);
    CHECK(p.even);
    CHECK(!p.fc);  // the only maximal clique is the whole affine triangle
    CHECK(p.affine);
    CHECK(p.two_dimensional);
    CHECK(p.dimension == 2);
    CHECK(spherical_decomposition(g)[0].type.name() == "C~2");
  }
  {
    auto g = from_diagram(5, {{0, 1, 3}, {1, 2, 3}, {2, 3, 3}, {3, 4, 3}, {4, 0, 3}});
    auto p = class_profile(g);
    CHECK(p.affine);
    CHECK(!p.spherical);
    CHECK(!p.two_dimensional);  // mixed 3,3,2 triangles are too heavy
    CHECK(p.dimension == 4);    // any four of the five span an A4
    auto cs = cosine_signature(g);
    CHECK(cs.signature == CosineSignature::PositiveSemidefinite);
    CHECK(cs.kernel_dim == 1);
    CHECK(spherical_decomposition(g)[0].type.name() == "A~4");
  }
  {
    auto p = class_profile(PresentationGraph());
    CHECK(p.spherical);
    CHECK(p.free_graph);
    CHECK(!p.affine);
    CHECK(p.dimension == 0);
  }
}

TEST_CASE("catalog matcher agrees with the cosine matrix on random graphs") {
  std::mt19937_64 rng(9090);
  int spherical_seen = 0, affine_seen = 0, indef_seen = 0;
  for (int it = 0; it < 3000; ++it) {
    auto g = random_graph(pick(rng, 1, 6), {0, 2, 3, 4, 5, 6}, rng);
    auto cs = cosine_signature(g);
    bool inf_pair = false;
    for (int i = 0; i < g.size() && !inf_pair; ++i)
      for (int j = i + 1; j < g.size(); ++j)
        if (!g.label(i, j)) { inf_pair = true; break; }

    CAPTURE(g.to_text());
    CHECK(is_spherical(g) == (cs.signature == CosineSignature::PositiveDefinite));
    if (inf_pair) {
      // an unrelated pair forces a -1 off-diagonal entry: never definite
      CHECK(cs.signature != CosineSignature::PositiveDefinite);
    } else {
      bool has_inf_comp = has_infinite_component(g);
      CHECK((cs.signature == CosineSignature::Indefinite) == has_inf_comp);
      if (!has_inf_comp) CHECK(cs.kernel_dim == affine_component_count(g));
    }
    if (cs.signature == CosineSignature::PositiveDefinite) ++spherical_seen;
    if (cs.signature == CosineSignature::PositiveSemidefinite) ++affine_seen;
    if (cs.signature == CosineSignature::Indefinite) ++indef_seen;
  }
  // the sample must actually exercise all three outcomes
  CHECK(spherical_seen > 50);
  CHECK(affine_seen > 10);
  CHECK(indef_seen > 50);
}

TEST_CASE("sphericity is inherited by induced subgraphs") {
  std::mt19937_64 rng(9191);
  int spherical_seen = 0;
  for (int it = 0; it < 4000 && spherical_seen < 120; ++it) {
    auto g = random_graph(pick(rng, 2, 6), {2, 2, 3, 3, 4}, rng);
    if (!is_spherical(g)) continue;
    ++spherical_seen;
    for (int rep = 0; rep < 8; ++rep) {
      std::vector<int> si;
      for (int i = 0; i < g.size(); ++i)
        if (rng() % 2) si.push_back(i);
      CHECK(is_spherical(induced_subgraph(g, VertexSet(g, si))));
    }
  }
  REQUIRE(spherical_seen >= 50);
}

TEST_CASE("dimension: bounds, monotonicity, and the two-dimensional class") {
  std::mt19937_64 rng(9292);
  for (int it = 0; it < 400; ++it) {
    auto g = random_graph(pick(rng, 1, 6), {0, 2, 3, 4, 5}, rng);
    auto p = class_profile(g);
    CHECK(p.dimension >= 1);
    CHECK(p.dimension <= g.size());
    CHECK((p.dimension == g.size()) == p.spherical);
    CHECK((p.dimension >= 2) == (g.edge_count() > 0));
    if (g.edge_count() > 0) CHECK(p.two_dimensional == (p.dimension == 2));

    std::vector<int> si;
    for (int i = 0; i < g.size(); ++i)
      if (rng() % 2) si.push_back(i);
    if (!si.empty()) {
      auto sub = induced_subgraph(g, VertexSet(g, si));
      auto ps = class_profile(sub);
      CHECK(ps.dimension <= p.dimension);
      if (p.fc) CHECK(ps.fc);  // FC passes to induced subgraphs
    }
  }
}

TEST_CASE("profile flag implications") {
  std::mt19937_64 rng(9393);
  for (int it = 0; it < 600; ++it) {
    auto g = random_graph(pick(rng, 1, 6), {0, 2, 2, 3, 4, 5, 6}, rng);
    auto p = class_profile(g);
    if (p.spherical) {
      CHECK(p.fc);
      CHECK(!p.affine);
    }
    if (p.raag) {
      CHECK(p.even);
      CHECK(p.fc);
    }
    if (p.xxl) CHECK(p.xl);
    if (p.xl) CHECK(p.large);
    if (p.free_graph) CHECK(p.raag);
    if (p.two_two_free_two_dim) CHECK(p.two_dimensional);
    if (p.two_dimensional) CHECK(g.edge_count() > 0);
  }
}
