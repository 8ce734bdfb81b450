#ifndef ARTIN_STRUCTURE_HPP
#define ARTIN_STRUCTURE_HPP

#include <optional>
#include <vector>

#include "artin/graph.hpp"

namespace artin {

// Connected components of the m != 2 view; these are the vertex sets of the
// irreducible direct factors.  Ordered by smallest contained vertex index.
// Throws Error on the empty graph.
std::vector<VertexSet> irreducible_factors(const PresentationGraph& g);

// All unions of factors (the standard parabolics that are normal), listed
// by (size, lex).  Includes the empty set and the full vertex set.
std::vector<VertexSet> normal_standard_parabolics(const PresentationGraph& g);

// Does S contain the vertex set of some irreducible factor?
bool contains_direct_factor(const PresentationGraph& g, const VertexSet& s);

// Join decomposition: a partition (V1, V2) with every cross pair finite,
// or nullopt.  Equivalently the complement graph on infinite pairs is
// disconnected; returns (smallest component by (size, lex), rest).
// Requires at least 2 vertices.
std::optional<std::pair<VertexSet, VertexSet>> is_join(
    const PresentationGraph& g);

// Visual splitting: gamma1 u gamma2 = V, omega = gamma1 n gamma2, no edge
// between gamma1 \ omega and gamma2 \ omega, and both sides exceed omega.
struct Splitting {
  VertexSet gamma1, gamma2, omega;  // canonical: gamma1 <= gamma2 lex

  static Splitting create(const PresentationGraph& g, const VertexSet& g1,
                          const VertexSet& g2);  // validates, throws Error
  auto operator<=>(const Splitting&) const = default;
};

enum class SplitMode {
  NonadjacentPairs,   // gamma_i = V \ {s}, V \ {t} for infinite pairs (s,t)
  MinimalSeparators,  // omega runs over minimal vertex separators
  All                 // omega runs over every disconnecting subset
};

struct SplitOptions {
  int bipartition_cap = 1 << 12;  // per separator; beyond it only 1-vs-rest
  int all_mode_max_vertices = 16;
};

struct SplittingList {
  std::vector<Splitting> items;  // sorted by (|omega|, omega, gamma1, gamma2)
  bool truncated = false;        // some bipartition family was capped
};

SplittingList enumerate_visual_splittings(const PresentationGraph& g,
                                          SplitMode mode,
                                          const SplitOptions& opt = {});

// All minimal vertex separators of the adjacency graph (close-separator
// generation).  For a disconnected graph this includes the empty set.
std::vector<VertexSet> minimal_separators(const PresentationGraph& g);

// Every geodesic of length 2 between vertices of S stays in S: for each
// S-pair at distance exactly 2, all common neighbors lie in S.
bool is_2convex(const PresentationGraph& g, const VertexSet& s);

}  // namespace artin

#endif
