#ifndef ARTIN_GRAPH_HPP
#define ARTIN_GRAPH_HPP

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

namespace artin {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ParseError : Error {
  ParseError(const std::string& msg, int line_no)
      : Error(line_no > 0 ? "line " + std::to_string(line_no) + ": " + msg : msg),
        line(line_no) {}
  int line;  // 1-based; 0 when the input has no line structure (JSON)
};

// Labeled presentation graph: vertices are generator names, an edge {u,v}
// carries an integer label m >= 2, and an absent pair means m = infinity
// (no relation between the two generators).  Vertex order is canonical
// (lexicographic), so equal graphs serialize to identical bytes.
class PresentationGraph {
 public:
  struct EdgeIn {           // construction input, label must be finite
    std::string u, v;
    int m;
  };

  PresentationGraph() = default;  // the empty graph (0 vertices) is valid

  static PresentationGraph create(std::vector<std::string> vertices,
                                  const std::vector<EdgeIn>& edges);

  int size() const { return n_; }
  const std::vector<std::string>& names() const { return names_; }
  const std::string& name(int i) const { return names_.at(i); }
  int index(const std::string& name) const;      // -1 if unknown
  int index_checked(const std::string& name) const;  // throws Error

  std::optional<int> label(int i, int j) const;  // nullopt = infinity
  bool adjacent(int i, int j) const { return i != j && lab_[i * n_ + j] != 0; }
  // Coxeter-diagram adjacency: pairs with m != 2 (that is, m >= 3 or infinity)
  bool dynkin_adjacent(int i, int j) const {
    return i != j && lab_[i * n_ + j] != 2;
  }
  std::vector<int> neighbors(int i) const;

  struct Edge {
    int u, v, m;  // u < v, m finite
    auto operator<=>(const Edge&) const = default;
  };
  std::vector<Edge> edges() const;  // sorted by (u, v)
  int edge_count() const;

  bool operator==(const PresentationGraph& o) const {
    return names_ == o.names_ && lab_ == o.lab_;
  }

  // --- serialization -----------------------------------------------------
  // Text format:   "vertices: a b c" then lines "edge u v m" (m >= 2 or
  // "inf"); '#' starts a comment.  Infinity pairs are never written out.
  static PresentationGraph parse(const std::string& text);
  std::string to_text() const;

  // JSON format: {"vertices":[...], "edges":[["u","v",m],...]}, m integer
  // or the string "inf" (accepted on input, never emitted).
  static PresentationGraph from_json(const nlohmann::json& j);
  static PresentationGraph from_json_text(const std::string& text);
  nlohmann::ordered_json to_json() const;
  std::string to_json_text() const;

 private:
  int n_ = 0;
  std::vector<std::string> names_;  // sorted, unique
  std::vector<int> lab_;            // n*n, 0 = infinity/diagonal, else m >= 2
};

// Validated subset of a graph's vertices; stores sorted unique indices.
class VertexSet {
 public:
  VertexSet() = default;
  VertexSet(const PresentationGraph& g, std::vector<int> indices);
  static VertexSet from_names(const PresentationGraph& g,
                              const std::vector<std::string>& names);
  static VertexSet full(const PresentationGraph& g);
  // trusted path for set algebra over already-validated sets
  static VertexSet from_sorted_unique(std::vector<int> indices);

  const std::vector<int>& indices() const { return v_; }
  bool contains(int i) const;
  int size() const { return static_cast<int>(v_.size()); }
  bool empty() const { return v_.empty(); }
  std::vector<std::string> names(const PresentationGraph& g) const;

  auto operator<=>(const VertexSet&) const = default;

 private:
  std::vector<int> v_;
};

VertexSet vs_union(const VertexSet& a, const VertexSet& b);
VertexSet vs_intersect(const VertexSet& a, const VertexSet& b);
VertexSet vs_minus(const VertexSet& a, const VertexSet& b);
bool vs_subset(const VertexSet& a, const VertexSet& b);  // a subseteq b

// Unlabeled view keeping the pairs with m != 2; its connected components
// are the irreducible factors of the group.
struct DynkinView {
  int n = 0;
  std::vector<char> adj;  // row-major n*n
  bool at(int i, int j) const { return adj[i * n + j] != 0; }
};

DynkinView dynkin_view(const PresentationGraph& g);

PresentationGraph induced_subgraph(const PresentationGraph& g, const VertexSet& s);

bool is_clique(const PresentationGraph& g, const VertexSet& s);

// Pairs of S-vertices at distance exactly 2 in the adjacency graph of g
// (finite-label edges), together with all their common neighbors in g.
struct Distance2Pair {
  int u, w;                  // u < w, non-adjacent
  std::vector<int> common;   // non-empty, sorted
  auto operator<=>(const Distance2Pair&) const = default;
};

std::vector<Distance2Pair> distance2_pairs(const PresentationGraph& g,
                                           const VertexSet& s);

}  // namespace artin

#endif
