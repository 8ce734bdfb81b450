#ifndef ARTIN_ENGINE_HPP
#define ARTIN_ENGINE_HPP

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "artin/graph.hpp"
#include "artin/structure.hpp"

namespace artin {

enum class Verdict { Proven, Refuted, Unknown };
std::string to_string(Verdict v);

struct Citation {
  std::string anchor;  // stable identifier of the cited result
  std::string quote;   // statement of the result
};

// Tree of applied rules.  Inner nodes cite a knowledge-base fact; leaves
// are either cited facts or direct computations (rule "computation:*",
// no citation).  Serialization is deterministic, byte for byte.
struct Certificate {
  nlohmann::ordered_json claim;      // {"kind":..., "graph":..., ...}
  Verdict verdict = Verdict::Unknown;
  std::string rule;
  std::optional<Citation> citation;
  nlohmann::ordered_json witness = nlohmann::ordered_json::object();
  std::vector<Certificate> premises;

  nlohmann::ordered_json to_json(bool with_schema = true) const;
  std::string to_json_text() const;  // to_json + dump(2) + newline
  std::string to_text() const;       // indented human-readable tree
};

inline constexpr const char* kCertificateSchema = "artin-certificate/1";

struct EngineOptions {
  std::set<std::string> disabled;  // rule names: P1..P8, W1..W5, IC1..IC8
  int splitting_budget = 10000;    // candidate splittings per certify call
  // debug hooks: permute the proof rule order (refutations stay fixed)
  std::vector<std::string> ah_rule_order;  // default P1..P8
  std::vector<std::string> wm_rule_order;  // default W1..W5
};

// Knowledge base for the Intersection Conjecture ("parabolic intersections
// are parabolic").  Fixed rule order; returns the certificate of the first
// rule that applies, or nullopt (no refutations exist for this claim).
std::optional<Certificate> knows_ic(const PresentationGraph& g,
                                    const EngineOptions& opt = {});

// Edge condition for a visual splitting: intersections of conjugates of the
// omega parabolic are parabolic subgroups.  Routes, in order: the whole
// graph satisfies IC; both vertex subgraphs satisfy IC; omega is 2-convex
// and IC holds for omega and every maximal clique; omega is empty.
std::optional<Certificate> certify_edge_condition(const PresentationGraph& g,
                                                  const Splitting& spl,
                                                  const EngineOptions& opt = {});

// Acylindrical hyperbolicity of the Artin group itself.  Refutations first
// (single vertex, reducible, spherical), then proof rules P1..P8.
Certificate certify_ah(const PresentationGraph& g,
                       const EngineOptions& opt = {});

// Weak malnormality conjecture for the group: every proper parabolic not
// containing a direct factor is weakly malnormal.  Rules W1..W5.
Certificate certify_wm_conjecture(const PresentationGraph& g,
                                  const EngineOptions& opt = {});

// Weak malnormality of one standard parabolic subgroup (S must be proper).
Certificate certify_wm_subgroup(const PresentationGraph& g, const VertexSet& s,
                                const EngineOptions& opt = {});

}  // namespace artin

#endif
