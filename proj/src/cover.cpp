#include "artin/cover.hpp"

#include <algorithm>

#include "artin/cliques.hpp"

namespace artin {

CompleteCover CompleteCover::cliques(const PresentationGraph& g) {
  CompleteCover u;
  u.kind_ = Kind::CliquesOnly;
  u.g_ = g;
  return u;
}

CompleteCover CompleteCover::cliques_plus(const PresentationGraph& g,
                                          VertexSet omega) {
  CompleteCover u;
  u.kind_ = Kind::CliquesPlusOmega;
  u.g_ = g;
  u.omega_ = std::move(omega);
  return u;
}

CompleteCover CompleteCover::explicit_cover(
    const PresentationGraph& g, const std::vector<VertexSet>& members) {
  CompleteCover u;
  u.kind_ = Kind::Explicit;
  u.g_ = g;
  for (const auto& m : members) u.members_.insert(m.indices());
  return u;
}

bool CompleteCover::contains(const VertexSet& s) const {
  switch (kind_) {
    case Kind::CliquesOnly:
      return is_clique(g_, s);
    case Kind::CliquesPlusOmega:
      return is_clique(g_, s) || vs_subset(s, omega_);
    case Kind::Explicit:
      return members_.count(s.indices()) > 0;
  }
  return false;
}

std::optional<CoverViolation> check_cover(const CompleteCover& u) {
  const auto& g = u.graph();
  if (u.kind() != CompleteCover::Kind::Explicit) return std::nullopt;
  for (const auto& e : g.edges()) {
    VertexSet ev(g, {e.u, e.v});
    if (!u.contains(ev))
      return CoverViolation{CoverViolation::What::MissingEdge, ev};
  }
  // subset closure, checked member by member over all subsets
  for (const auto& m : u.explicit_members()) {
    size_t k = m.size();
    if (k > 20) throw Error("cover member too large to validate");
    for (size_t mask = 0; mask < (size_t{1} << k); ++mask) {
      std::vector<int> sub;
      for (size_t i = 0; i < k; ++i)
        if (mask & (size_t{1} << i)) sub.push_back(m[i]);
      if (!u.explicit_members().count(sub))
        return CoverViolation{CoverViolation::What::NotSubsetClosed,
                              VertexSet(g, m)};
    }
  }
  return std::nullopt;
}

bool validate_cover(const CompleteCover& u) { return !check_cover(u); }

LinkComplex::LinkComplex(CompleteCover cover) : cover_(std::move(cover)) {
  if (auto v = check_cover(cover_)) {
    const auto& g = cover_.graph();
    std::string what = v->what == CoverViolation::What::MissingEdge
                           ? "edge not covered:"
                           : "not subset-closed at member:";
    for (const auto& n : v->witness.names(g)) what += " " + n;
    throw Error("invalid cover: " + what);
  }
  int n = cover_.graph().size();
  skel_.assign(static_cast<size_t>(n) * n, 0);
  const auto& g = cover_.graph();
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (cover_.contains(VertexSet(g, {i, j})))
        skel_[i * n + j] = skel_[j * n + i] = 1;
}

LinkComplex link_complex(const CompleteCover& u) { return LinkComplex(u); }

FlagResult is_flag(const LinkComplex& l) {
  int n = l.size();
  const auto& g = l.cover().graph();
  auto cliques = maximal_cliques(
      n, [&](int i, int j) { return l.skeleton_adjacent(i, j); });
  for (const auto& c : cliques) {
    if (c.size() < 3) continue;  // vertices and skeleton edges always span
    VertexSet s(g, c);
    if (l.simplex(s)) continue;
    // shrink to a minimal non-member: non-membership is superset-closed
    std::vector<int> w = c;
    bool shrunk = true;
    while (shrunk && w.size() > 3) {
      shrunk = false;
      for (size_t i = 0; i < w.size(); ++i) {
        std::vector<int> cand = w;
        cand.erase(cand.begin() + i);
        if (!l.simplex(VertexSet(g, cand))) {
          w = std::move(cand);
          shrunk = true;
          break;
        }
      }
    }
    return {false, VertexSet(g, w)};
  }
  return {true, std::nullopt};
}

}  // namespace artin
