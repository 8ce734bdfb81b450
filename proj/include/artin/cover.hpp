#ifndef ARTIN_COVER_HPP
#define ARTIN_COVER_HPP

#include <optional>
#include <set>
#include <vector>

#include "artin/graph.hpp"

namespace artin {

// A complete cover: a family of vertex subsets that contains every edge of
// the graph and is closed under subsets (so the empty set too).  Cliques
// and cliques-plus-subsets-of-omega are the two constructed kinds used by
// the splitting machinery; arbitrary families come in as Explicit.
class CompleteCover {
 public:
  enum class Kind { CliquesOnly, CliquesPlusOmega, Explicit };

  static CompleteCover cliques(const PresentationGraph& g);
  static CompleteCover cliques_plus(const PresentationGraph& g, VertexSet omega);
  static CompleteCover explicit_cover(const PresentationGraph& g,
                                      const std::vector<VertexSet>& members);

  Kind kind() const { return kind_; }
  const PresentationGraph& graph() const { return g_; }
  const VertexSet& omega() const { return omega_; }
  bool contains(const VertexSet& s) const;

  // members as given (Explicit only; constructed kinds are implicit)
  const std::set<std::vector<int>>& explicit_members() const { return members_; }

 private:
  Kind kind_ = Kind::CliquesOnly;
  PresentationGraph g_;
  VertexSet omega_;
  std::set<std::vector<int>> members_;
};

struct CoverViolation {
  enum class What { MissingEdge, NotSubsetClosed };
  What what;
  VertexSet witness;  // the uncovered edge, or the member whose subset is missing
};

// Constructed kinds always validate; Explicit is checked exhaustively.
std::optional<CoverViolation> check_cover(const CompleteCover& u);
bool validate_cover(const CompleteCover& u);

// Nerve-like complex of the cover: vertices are the graph's vertices, and a
// set spans a simplex iff it is a member.  Only the 1-skeleton is stored;
// higher membership queries go back to the cover.
class LinkComplex {
 public:
  explicit LinkComplex(CompleteCover cover);  // throws Error on invalid cover

  const CompleteCover& cover() const { return cover_; }
  int size() const { return cover_.graph().size(); }
  bool skeleton_adjacent(int u, int v) const {
    return u != v && skel_[u * size() + v] != 0;
  }
  bool simplex(const VertexSet& s) const { return cover_.contains(s); }

 private:
  CompleteCover cover_;
  std::vector<char> skel_;
};

LinkComplex link_complex(const CompleteCover& u);

struct FlagResult {
  bool flag = true;
  std::optional<VertexSet> witness;  // minimal skeleton clique spanning no simplex
};

// Flag iff every clique of the 1-skeleton is a member.  Skeleton edges are
// members by construction and singletons are simplices by convention, so
// maximal cliques of size >= 3 decide it; the witness is shrunk to a
// minimal non-member (all proper subsets are members).
FlagResult is_flag(const LinkComplex& l);

}  // namespace artin

#endif
