#include "artin/engine.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "artin/cliques.hpp"
#include "artin/cover.hpp"
#include "artin/coxeter.hpp"

namespace artin {

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Proven: return "proven";
    case Verdict::Refuted: return "refuted";
    case Verdict::Unknown: return "unknown";
  }
  return "unknown";
}

namespace {

using ojson = nlohmann::ordered_json;

// ---------------------------------------------------------------------------
// knowledge base: every cited statement the engine is allowed to lean on
// ---------------------------------------------------------------------------

const std::map<std::string, std::string>& kb() {
  static const std::map<std::string, std::string> table = {
      {"known:ic-three-generators",
       "Artin groups on at most three generators satisfy the Intersection "
       "Conjecture: the intersection of any two parabolic subgroups is again "
       "a parabolic subgroup."},
      {"known:ic-spherical",
       "Spherical-type Artin groups satisfy the Intersection Conjecture."},
      {"known:ic-raag",
       "Right-angled Artin groups satisfy the Intersection Conjecture."},
      {"known:ic-large",
       "Large-type Artin groups, those with every label at least 3, satisfy "
       "the Intersection Conjecture."},
      {"known:ic-two-two-free-2dim",
       "Two-dimensional Artin groups whose presentation graph has no two "
       "incident edges labelled 2 satisfy the Intersection Conjecture."},
      {"known:ic-euclidean-a-c",
       "Euclidean Artin groups of type A~n or C~n satisfy the Intersection "
       "Conjecture."},
      {"known:ic-even-fc",
       "Even Artin groups of FC type satisfy the Intersection Conjecture."},
      {"lem:ic-direct-product",
       "If every irreducible direct factor of an Artin group satisfies the "
       "Intersection Conjecture, then the whole group satisfies it."},
      {"lem:ic-implies-edge-condition",
       "If an Artin group satisfies the Intersection Conjecture, then the "
       "intersection of any two conjugates of any standard parabolic "
       "subgroup is a parabolic subgroup."},
      {"thm:vertex-groups-ic",
       "Given a visual splitting, if both vertex-group Artin groups satisfy "
       "the Intersection Conjecture, then the intersection of any two "
       "conjugates of the edge-group parabolic is a parabolic subgroup."},
      {"cor:two-convex-edge-ic",
       "If the edge subgraph of a visual splitting is 2-convex, and its "
       "parabolic subgroup as well as every clique parabolic subgroup "
       "satisfies the Intersection Conjecture, then the intersection of any "
       "two conjugates of the edge-group parabolic is a parabolic subgroup."},
      {"lem:two-convex-cover-flag",
       "For a 2-convex subgraph, the cover consisting of all cliques "
       "together with all subsets of the subgraph has a flag link complex."},
      {"known:flag-cover-cat0",
       "The cube complex attached to a complete cover is CAT(0) exactly when "
       "the link complex of the cover is a flag simplicial complex."},
      {"fact:empty-edge-group",
       "The trivial subgroup is the standard parabolic subgroup on the empty "
       "set, so any two of its conjugates intersect in a parabolic "
       "subgroup."},
      {"fact:rank-one-virtually-cyclic",
       "On a single generator the Artin group is infinite cyclic, hence "
       "virtually cyclic and not acylindrically hyperbolic."},
      {"fact:reducible-not-ah",
       "A reducible Artin group is the direct product of two infinite "
       "subgroups, and such a product is never acylindrically hyperbolic."},
      {"fact:spherical-not-ah",
       "An irreducible spherical-type Artin group has infinite cyclic "
       "centre; a group with infinite centre is not acylindrically "
       "hyperbolic, although the central quotient here is."},
      {"known:ah-raag",
       "An irreducible right-angled Artin group on at least two generators "
       "is acylindrically hyperbolic."},
      {"known:ah-two-dimensional",
       "Irreducible two-dimensional Artin groups on at least three "
       "generators are acylindrically hyperbolic."},
      {"known:ah-euclidean",
       "Irreducible Euclidean-type Artin groups are acylindrically "
       "hyperbolic."},
      {"known:ah-not-join",
       "An Artin group on at least two generators whose presentation graph "
       "is not a join is acylindrically hyperbolic."},
      {"thm:even-fc-ah",
       "An irreducible even Artin group of FC type that is not of spherical "
       "type is acylindrically hyperbolic."},
      {"thm:fc-spherical-splitting-ah",
       "An irreducible FC-type Artin group that is not spherical and splits "
       "visually over a spherical-type subgraph is acylindrically "
       "hyperbolic."},
      {"thm:splitting-edge-ic-ah",
       "Let an irreducible Artin group split visually, and suppose the "
       "intersection of any two conjugates of the edge-group parabolic is a "
       "parabolic subgroup; then the edge group is weakly malnormal and the "
       "group, not being virtually cyclic, is acylindrically hyperbolic."},
      {"cor:vertex-group-wm-ah",
       "If an Artin group splits visually with a vertex group that is "
       "spherical, two-dimensional, or satisfies the visual-splitting "
       "criterion, and the edge group contains no direct factor of that "
       "vertex group, then the edge group is weakly malnormal and the group "
       "is acylindrically hyperbolic."},
      {"known:wm-spherical",
       "Spherical-type Artin groups satisfy the Weak Malnormality "
       "Conjecture."},
      {"thm:wm-two-dimensional",
       "Two-dimensional Artin groups satisfy the Weak Malnormality "
       "Conjecture."},
      {"lem:splitting-criterion-wm",
       "An irreducible Artin group with a visual splitting whose edge-group "
       "conjugates intersect in parabolic subgroups satisfies the Weak "
       "Malnormality Conjecture."},
      {"cor:ic-implies-wm",
       "An irreducible Artin group whose presentation graph is not complete "
       "and which satisfies the Intersection Conjecture satisfies the Weak "
       "Malnormality Conjecture."},
      {"lem:wm-direct-product",
       "If every irreducible direct factor of an Artin group satisfies the "
       "Weak Malnormality Conjecture, then so does the group."},
      {"fact:factor-not-weakly-malnormal",
       "A standard parabolic subgroup containing an irreducible direct "
       "factor meets each of its conjugates in an infinite subgroup, so it "
       "is not weakly malnormal."},
      {"lem:wm-parabolic-from-conjecture",
       "If the Weak Malnormality Conjecture holds for the group, then every "
       "proper standard parabolic subgroup that does not contain a direct "
       "factor is weakly malnormal."},
  };
  return table;
}

Citation cite(const std::string& anchor) {
  auto it = kb().find(anchor);
  if (it == kb().end()) throw Error("unknown citation anchor " + anchor);
  return {anchor, it->second};
}

// ---------------------------------------------------------------------------
// claim and node builders
// ---------------------------------------------------------------------------

ojson claim_with_graph(const char* kind, const PresentationGraph& g) {
  ojson c;
  c["kind"] = kind;
  c["graph"] = g.to_json();
  return c;
}

ojson splitting_json(const PresentationGraph& g, const Splitting& s) {
  ojson j;
  j["gamma1"] = s.gamma1.names(g);
  j["gamma2"] = s.gamma2.names(g);
  j["omega"] = s.omega.names(g);
  return j;
}

Certificate computation(const std::string& tag, const std::string& statement,
                        ojson witness = ojson::object()) {
  Certificate c;
  c.claim = ojson{{"kind", "fact"}, {"statement", statement}};
  c.verdict = Verdict::Proven;
  c.rule = "computation:" + tag;
  c.witness = std::move(witness);
  return c;
}

Certificate kb_fact(const std::string& anchor,
                    ojson witness = ojson::object()) {
  Certificate c;
  Citation ci = cite(anchor);
  c.claim = ojson{{"kind", "fact"}, {"statement", ci.quote}};
  c.verdict = Verdict::Proven;
  c.rule = "kb:" + anchor;
  c.citation = std::move(ci);
  c.witness = std::move(witness);
  return c;
}

Certificate not_virtually_cyclic(const PresentationGraph& g) {
  return computation(
      "not-virtually-cyclic",
      "The group is not virtually cyclic: on at least two generators an "
      "Artin group contains a rank-2 free or free abelian subgroup.",
      ojson{{"vertices", g.size()}});
}

std::vector<std::string> type_names(const PresentationGraph& g) {
  std::vector<std::string> out;
  for (const auto& c : spherical_decomposition(g)) out.push_back(c.type.name());
  return out;
}

// shared splitting search: non-adjacent pairs first, then minimal
// separators, deduplicated, capped by the budget
struct Candidates {
  std::vector<Splitting> items;
  bool truncated = false;
};

Candidates candidate_splittings(const PresentationGraph& g,
                                const EngineOptions& opt) {
  Candidates out;
  auto a = enumerate_visual_splittings(g, SplitMode::NonadjacentPairs);
  auto b = enumerate_visual_splittings(g, SplitMode::MinimalSeparators);
  out.truncated = a.truncated || b.truncated;
  std::set<Splitting> seen;
  for (const auto* lst : {&a.items, &b.items}) {
    for (const auto& s : *lst) {
      if (static_cast<int>(out.items.size()) >= opt.splitting_budget) {
        out.truncated = true;
        return out;
      }
      if (seen.insert(s).second) out.items.push_back(s);
    }
  }
  return out;
}

std::vector<std::string> rule_order(const std::vector<std::string>& given,
                                    const std::vector<std::string>& dflt) {
  if (given.empty()) return dflt;
  std::vector<std::string> out;
  for (const auto& r : given) {
    if (std::find(dflt.begin(), dflt.end(), r) == dflt.end())
      throw Error("unknown rule name '" + r + "' in rule order");
    if (std::find(out.begin(), out.end(), r) == out.end()) out.push_back(r);
  }
  return out;
}

}  // namespace

// ---------------------------------------------------------------------------
// Intersection Conjecture knowledge base
// ---------------------------------------------------------------------------

std::optional<Certificate> knows_ic(const PresentationGraph& g,
                                    const EngineOptions& opt) {
  auto claim = claim_with_graph("intersection-conjecture", g);
  auto enabled = [&](const char* r) { return !opt.disabled.count(r); };
  auto make = [&](const char* rule, const char* anchor, ojson witness,
                  std::vector<Certificate> prem = {}) {
    Certificate c;
    c.claim = claim;
    c.verdict = Verdict::Proven;
    c.rule = rule;
    c.citation = cite(anchor);
    c.witness = std::move(witness);
    c.premises = std::move(prem);
    return c;
  };

  if (enabled("IC1") && g.size() <= 3)
    return make("ic.IC1.few-generators", "known:ic-three-generators",
                ojson{{"vertices", g.size()}});

  ClassProfile prof = class_profile(g);
  if (enabled("IC2") && prof.spherical)
    return make("ic.IC2.spherical", "known:ic-spherical",
                ojson{{"types", type_names(g)}});
  if (enabled("IC3") && prof.raag)
    return make("ic.IC3.raag", "known:ic-raag", ojson::object());
  if (enabled("IC4") && prof.large)
    return make("ic.IC4.large", "known:ic-large", ojson::object());
  if (enabled("IC5") && prof.two_two_free_two_dim)
    return make("ic.IC5.two-two-free-2dim", "known:ic-two-two-free-2dim",
                ojson::object());
  if (enabled("IC6")) {
    auto decomp = spherical_decomposition(g);
    if (decomp.size() == 1 &&
        (decomp[0].type.family == CoxeterType::Family::AffA ||
         decomp[0].type.family == CoxeterType::Family::AffC))
      return make("ic.IC6.euclidean-a-c", "known:ic-euclidean-a-c",
                  ojson{{"type", decomp[0].type.name()}});
  }
  if (enabled("IC7") && prof.even && prof.fc)
    return make("ic.IC7.even-fc", "known:ic-even-fc", ojson::object());
  if (enabled("IC8") && g.size() > 0) {
    auto factors = irreducible_factors(g);
    if (factors.size() >= 2) {
      std::vector<Certificate> prem;
      bool all = true;
      ojson fw = ojson::array();
      for (const auto& f : factors) {
        auto sub = knows_ic(induced_subgraph(g, f), opt);
        if (!sub) { all = false; break; }
        fw.push_back(f.names(g));
        prem.push_back(std::move(*sub));
      }
      if (all)
        return make("ic.IC8.direct-product", "lem:ic-direct-product",
                    ojson{{"factors", fw}}, std::move(prem));
    }
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// edge condition for one visual splitting
// ---------------------------------------------------------------------------

std::optional<Certificate> certify_edge_condition(const PresentationGraph& g,
                                                  const Splitting& spl,
                                                  const EngineOptions& opt) {
  // re-validate: callers may hand-build splittings
  Splitting checked = Splitting::create(g, spl.gamma1, spl.gamma2);
  auto claim = claim_with_graph("edge-intersections-parabolic", g);
  claim["splitting"] = splitting_json(g, checked);
  auto make = [&](const char* rule, const char* anchor, ojson witness,
                  std::vector<Certificate> prem) {
    Certificate c;
    c.claim = claim;
    c.verdict = Verdict::Proven;
    c.rule = rule;
    c.citation = cite(anchor);
    c.witness = std::move(witness);
    c.premises = std::move(prem);
    return c;
  };

  if (auto whole = knows_ic(g, opt))
    return make("edge.A.whole-graph-ic", "lem:ic-implies-edge-condition",
                ojson::object(), {std::move(*whole)});

  auto ic1 = knows_ic(induced_subgraph(g, checked.gamma1), opt);
  auto ic2 = ic1 ? knows_ic(induced_subgraph(g, checked.gamma2), opt)
                 : std::nullopt;
  if (ic1 && ic2)
    return make("edge.B.vertex-groups-ic", "thm:vertex-groups-ic",
                ojson::object(), {std::move(*ic1), std::move(*ic2)});

  if (is_2convex(g, checked.omega)) {
    auto ic_omega = knows_ic(induced_subgraph(g, checked.omega), opt);
    if (ic_omega) {
      auto cliques = maximal_cliques(
          g.size(), [&](int i, int j) { return g.adjacent(i, j); });
      std::vector<Certificate> prem;
      prem.push_back(computation(
          "two-convex",
          "Every geodesic of length 2 between vertices of the edge subgraph "
          "stays inside it.",
          ojson{{"omega", checked.omega.names(g)}}));
      // the cover by cliques plus subsets of omega has a flag link complex;
      // verified directly on top of the cited guarantee
      auto flag =
          is_flag(link_complex(CompleteCover::cliques_plus(g, checked.omega)));
      if (!flag.flag) return std::nullopt;  // cannot happen for 2-convex omega
      prem.push_back(kb_fact("lem:two-convex-cover-flag"));
      prem.push_back(computation(
          "flag-link-complex",
          "The link complex of the clique-plus-edge-subgraph cover was "
          "checked to be flag: every maximal clique of its 1-skeleton spans "
          "a simplex.",
          ojson{{"flag", true}}));
      prem.push_back(kb_fact("known:flag-cover-cat0"));
      prem.push_back(std::move(*ic_omega));
      bool all = true;
      for (const auto& m : cliques) {
        auto sub = knows_ic(induced_subgraph(g, VertexSet(g, m)), opt);
        if (!sub) { all = false; break; }
        prem.push_back(std::move(*sub));
      }
      if (all)
        return make("edge.C.two-convex", "cor:two-convex-edge-ic",
                    ojson{{"omega", checked.omega.names(g)},
                          {"maximal_cliques", static_cast<int>(cliques.size())}},
                    std::move(prem));
    }
  }

  if (checked.omega.empty())
    return make("edge.D.empty-omega", "fact:empty-edge-group", ojson::object(),
                {});
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// acylindrical hyperbolicity
// ---------------------------------------------------------------------------

namespace {
const std::vector<std::string> kAhRules = {"P1", "P2", "P3", "P4",
                                           "P5", "P6", "P7", "P8"};
const std::vector<std::string> kWmRules = {"W1", "W2", "W3", "W4", "W5"};
}  // namespace

Certificate certify_ah(const PresentationGraph& g, const EngineOptions& opt) {
  if (g.size() == 0)
    throw Error("acylindrical hyperbolicity asked for the empty graph");
  auto claim = claim_with_graph("acylindrical-hyperbolicity", g);
  auto make = [&](Verdict v, const std::string& rule,
                  std::optional<Citation> ci, ojson witness,
                  std::vector<Certificate> prem = {}) {
    Certificate c;
    c.claim = claim;
    c.verdict = v;
    c.rule = rule;
    c.citation = std::move(ci);
    c.witness = std::move(witness);
    c.premises = std::move(prem);
    return c;
  };

  // refutations, fixed priority
  if (g.size() == 1)
    return make(Verdict::Refuted, "ah.R0.single-vertex",
                cite("fact:rank-one-virtually-cyclic"),
                ojson{{"attempted", {"R0"}}});
  auto factors = irreducible_factors(g);
  if (factors.size() >= 2) {
    ojson fw = ojson::array();
    for (const auto& f : factors) fw.push_back(f.names(g));
    return make(Verdict::Refuted, "ah.R1.reducible",
                cite("fact:reducible-not-ah"),
                ojson{{"attempted", {"R0", "R1"}}, {"factors", fw}});
  }
  ClassProfile prof = class_profile(g);
  if (prof.spherical)
    return make(
        Verdict::Refuted, "ah.R2.spherical", cite("fact:spherical-not-ah"),
        ojson{{"attempted", {"R0", "R1", "R2"}},
              {"types", type_names(g)},
              {"central_quotient_acylindrically_hyperbolic", true}});

  auto order = rule_order(opt.ah_rule_order, kAhRules);
  std::vector<std::string> attempted = {"R0", "R1", "R2"};
  std::optional<Candidates> cands;  // computed on first use
  auto splittings = [&]() -> const Candidates& {
    if (!cands) cands = candidate_splittings(g, opt);
    return *cands;
  };
  auto att = [&]() {
    ojson a = ojson::array();
    for (const auto& s : attempted) a.push_back(s);
    return a;
  };

  for (const auto& r : order) {
    if (opt.disabled.count(r)) continue;
    attempted.push_back(r);
    if (r == "P1" && prof.raag)
      return make(Verdict::Proven, "ah.P1.raag", cite("known:ah-raag"),
                  ojson{{"attempted", att()}});
    if (r == "P2" && prof.two_dimensional)
      return make(Verdict::Proven, "ah.P2.two-dimensional",
                  cite("known:ah-two-dimensional"),
                  ojson{{"attempted", att()}},
                  {computation("two-dimensional",
                               "Every triangle of the graph satisfies "
                               "1/a + 1/b + 1/c <= 1, and an edge exists.",
                               ojson::object())});
    if (r == "P3" && prof.affine)
      return make(Verdict::Proven, "ah.P3.euclidean",
                  cite("known:ah-euclidean"),
                  ojson{{"attempted", att()}, {"types", type_names(g)}});
    if (r == "P4" && !is_join(g))
      return make(Verdict::Proven, "ah.P4.not-join", cite("known:ah-not-join"),
                  ojson{{"attempted", att()}},
                  {computation("not-a-join",
                               "The complement graph on infinite pairs is "
                               "connected, so the graph is not a join.",
                               ojson::object())});
    if (r == "P5" && prof.even && prof.fc)
      return make(Verdict::Proven, "ah.P5.even-fc", cite("thm:even-fc-ah"),
                  ojson{{"attempted", att()}});
    if (r == "P6" && prof.fc) {
      for (const auto& s : splittings().items) {
        auto omega_sub = induced_subgraph(g, s.omega);
        if (!is_spherical(omega_sub)) continue;
        return make(
            Verdict::Proven, "ah.P6.fc-spherical-edge",
            cite("thm:fc-spherical-splitting-ah"),
            ojson{{"attempted", att()},
                  {"splitting", splitting_json(g, s)}},
            {computation("spherical-edge-subgraph",
                         "The edge subgraph of the splitting is of spherical "
                         "type.",
                         ojson{{"omega", s.omega.names(g)},
                               {"types", type_names(omega_sub)}})});
      }
    }
    if (r == "P7") {
      for (const auto& s : splittings().items) {
        auto ec = certify_edge_condition(g, s, opt);
        if (!ec) continue;
        return make(Verdict::Proven, "ah.P7.splitting-edge-condition",
                    cite("thm:splitting-edge-ic-ah"),
                    ojson{{"attempted", att()},
                          {"splitting", splitting_json(g, s)}},
                    {std::move(*ec), not_virtually_cyclic(g)});
      }
    }
    if (r == "P8") {
      for (const auto& s : splittings().items) {
        for (int side = 0; side < 2; ++side) {
          const VertexSet& v1 = side == 0 ? s.gamma1 : s.gamma2;
          auto sub = induced_subgraph(g, v1);
          VertexSet omega_in_sub =
              VertexSet::from_names(sub, s.omega.names(g));
          if (contains_direct_factor(sub, omega_in_sub)) continue;
          std::optional<Certificate> class_node;
          if (is_spherical(sub)) {
            class_node = computation(
                "vertex-group-spherical",
                "The chosen vertex subgraph is of spherical type.",
                ojson{{"gamma", v1.names(g)}, {"types", type_names(sub)}});
          } else if (class_profile(sub).two_dimensional) {
            class_node = computation(
                "vertex-group-two-dimensional",
                "The chosen vertex subgraph is two-dimensional.",
                ojson{{"gamma", v1.names(g)}});
          } else if (irreducible_factors(sub).size() == 1) {
            for (const auto& inner : candidate_splittings(sub, opt).items) {
              if (auto ec = certify_edge_condition(sub, inner, opt)) {
                class_node = *ec;  // vertex group meets the splitting criterion
                break;
              }
            }
          }
          if (!class_node) continue;
          return make(
              Verdict::Proven, "ah.P8.vertex-group-route",
              cite("cor:vertex-group-wm-ah"),
              ojson{{"attempted", att()},
                    {"splitting", splitting_json(g, s)},
                    {"vertex_group", v1.names(g)}},
              {std::move(*class_node),
               computation("edge-avoids-factors",
                           "The edge subgraph contains no irreducible direct "
                           "factor of the chosen vertex subgraph.",
                           ojson{{"omega", s.omega.names(g)}}),
               not_virtually_cyclic(g)});
        }
      }
    }
  }

  ojson w{{"attempted", att()}};
  if (cands && cands->truncated) {
    w["budget_exhausted"] = true;
    w["splitting_budget"] = opt.splitting_budget;
  }
  if (!opt.disabled.empty()) {
    ojson d = ojson::array();
    for (const auto& r : opt.disabled) d.push_back(r);
    w["disabled"] = d;
  }
  return make(Verdict::Unknown, "ah.unknown", std::nullopt, std::move(w));
}

// ---------------------------------------------------------------------------
// weak malnormality
// ---------------------------------------------------------------------------

Certificate certify_wm_conjecture(const PresentationGraph& g,
                                  const EngineOptions& opt) {
  if (g.size() == 0)
    throw Error("weak malnormality asked for the empty graph");
  auto claim = claim_with_graph("weak-malnormality-conjecture", g);
  auto make = [&](Verdict v, const std::string& rule,
                  std::optional<Citation> ci, ojson witness,
                  std::vector<Certificate> prem = {}) {
    Certificate c;
    c.claim = claim;
    c.verdict = v;
    c.rule = rule;
    c.citation = std::move(ci);
    c.witness = std::move(witness);
    c.premises = std::move(prem);
    return c;
  };

  ClassProfile prof = class_profile(g);
  auto factors = irreducible_factors(g);
  bool irreducible = factors.size() == 1;
  bool clique = is_clique(g, VertexSet::full(g));
  auto order = rule_order(opt.wm_rule_order, kWmRules);
  std::vector<std::string> attempted;
  std::optional<Candidates> cands;
  auto att = [&]() {
    ojson a = ojson::array();
    for (const auto& s : attempted) a.push_back(s);
    return a;
  };

  for (const auto& r : order) {
    if (opt.disabled.count(r)) continue;
    attempted.push_back(r);
    if (r == "W1" && prof.spherical)
      return make(Verdict::Proven, "wm.W1.spherical", cite("known:wm-spherical"),
                  ojson{{"attempted", att()}, {"types", type_names(g)}});
    if (r == "W2" && prof.two_dimensional)
      return make(Verdict::Proven, "wm.W2.two-dimensional",
                  cite("thm:wm-two-dimensional"), ojson{{"attempted", att()}});
    if (r == "W3" && irreducible && !clique) {
      if (!cands) cands = candidate_splittings(g, opt);
      for (const auto& s : cands->items) {
        auto ec = certify_edge_condition(g, s, opt);
        if (!ec) continue;
        return make(Verdict::Proven, "wm.W3.splitting-edge-condition",
                    cite("lem:splitting-criterion-wm"),
                    ojson{{"attempted", att()},
                          {"splitting", splitting_json(g, s)}},
                    {std::move(*ec)});
      }
    }
    if (r == "W4" && irreducible && !clique) {
      if (auto ic = knows_ic(g, opt))
        return make(Verdict::Proven, "wm.W4.intersection-conjecture",
                    cite("cor:ic-implies-wm"), ojson{{"attempted", att()}},
                    {std::move(*ic)});
    }
    if (r == "W5" && !irreducible) {
      std::vector<Certificate> prem;
      bool all = true;
      ojson fw = ojson::array();
      for (const auto& f : factors) {
        auto sub = certify_wm_conjecture(induced_subgraph(g, f), opt);
        if (sub.verdict != Verdict::Proven) { all = false; break; }
        fw.push_back(f.names(g));
        prem.push_back(std::move(sub));
      }
      if (all)
        return make(Verdict::Proven, "wm.W5.direct-product",
                    cite("lem:wm-direct-product"),
                    ojson{{"attempted", att()}, {"factors", fw}},
                    std::move(prem));
    }
  }

  ojson w{{"attempted", att()}};
  if (cands && cands->truncated) {
    w["budget_exhausted"] = true;
    w["splitting_budget"] = opt.splitting_budget;
  }
  return make(Verdict::Unknown, "wm.unknown", std::nullopt, std::move(w));
}

Certificate certify_wm_subgroup(const PresentationGraph& g, const VertexSet& s,
                                const EngineOptions& opt) {
  if (g.size() == 0)
    throw Error("weak malnormality asked for the empty graph");
  if (s.size() >= g.size())
    throw Error("the subgroup's vertex set must be a proper subset");
  auto claim = claim_with_graph("weakly-malnormal-subgroup", g);
  claim["subset"] = s.names(g);
  auto make = [&](Verdict v, const std::string& rule,
                  std::optional<Citation> ci, ojson witness,
                  std::vector<Certificate> prem = {}) {
    Certificate c;
    c.claim = claim;
    c.verdict = v;
    c.rule = rule;
    c.citation = std::move(ci);
    c.witness = std::move(witness);
    c.premises = std::move(prem);
    return c;
  };

  for (const auto& f : irreducible_factors(g)) {
    if (vs_subset(f, s))
      return make(Verdict::Refuted, "wms.contains-factor",
                  cite("fact:factor-not-weakly-malnormal"),
                  ojson{{"factor", f.names(g)}});
  }
  Certificate conj = certify_wm_conjecture(g, opt);
  if (conj.verdict == Verdict::Proven)
    return make(Verdict::Proven, "wms.from-conjecture",
                cite("lem:wm-parabolic-from-conjecture"), ojson::object(),
                {std::move(conj),
                 computation("no-factor-inside",
                             "The subset contains no irreducible direct "
                             "factor of the graph.",
                             ojson{{"subset", s.names(g)}})});
  return make(Verdict::Unknown, "wms.unknown", std::nullopt, ojson::object());
}

// ---------------------------------------------------------------------------
// serialization
// ---------------------------------------------------------------------------

nlohmann::ordered_json Certificate::to_json(bool with_schema) const {
  ojson j;
  if (with_schema) j["schema"] = kCertificateSchema;
  j["claim"] = claim;
  j["verdict"] = artin::to_string(verdict);
  j["rule"] = rule;
  if (citation)
    j["citation"] = ojson{{"anchor", citation->anchor},
                          {"quote", citation->quote}};
  j["witness"] = witness;
  auto prem = ojson::array();
  for (const auto& p : premises) prem.push_back(p.to_json(false));
  j["premises"] = std::move(prem);
  return j;
}

std::string Certificate::to_json_text() const { return to_json().dump(2) + "\n"; }

namespace {

std::string claim_summary(const ojson& claim) {
  std::string kind = claim.value("kind", "?");
  if (kind == "fact") return claim.value("statement", "");
  std::string out = kind;
  if (claim.contains("graph") && claim["graph"].contains("vertices")) {
    out += " [";
    bool first = true;
    for (const auto& v : claim["graph"]["vertices"]) {
      if (!first) out += " ";
      first = false;
      out += v.get<std::string>();
    }
    out += "]";
  }
  if (claim.contains("subset")) {
    out += " subset {";
    bool first = true;
    for (const auto& v : claim["subset"]) {
      if (!first) out += " ";
      first = false;
      out += v.get<std::string>();
    }
    out += "}";
  }
  return out;
}

void render(const Certificate& c, int depth, std::ostream& os) {
  std::string pad(static_cast<size_t>(depth) * 2, ' ');
  os << pad << "[" << to_string(c.verdict) << "] " << claim_summary(c.claim)
     << "\n";
  os << pad << "  rule: " << c.rule << "\n";
  if (c.citation)
    os << pad << "  cite: " << c.citation->anchor << " -- \""
       << c.citation->quote << "\"\n";
  if (!c.witness.empty())
    os << pad << "  witness: " << c.witness.dump() << "\n";
  for (const auto& p : c.premises) render(p, depth + 1, os);
}

}  // namespace

std::string Certificate::to_text() const {
  std::ostringstream os;
  render(*this, 0, os);
  return os.str();
}

}  // namespace artin
