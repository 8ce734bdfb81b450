#include "artin/graph.hpp"

#include <algorithm>
#include <sstream>

namespace artin {

PresentationGraph PresentationGraph::create(std::vector<std::string> vertices,
                                            const std::vector<EdgeIn>& edges) {
  PresentationGraph g;
  std::sort(vertices.begin(), vertices.end());
  for (size_t i = 0; i + 1 < vertices.size(); ++i)
    if (vertices[i] == vertices[i + 1])
      throw Error("duplicate vertex '" + vertices[i] + "'");
  for (const auto& v : vertices)
    if (v.empty()) throw Error("empty vertex name");
  g.names_ = std::move(vertices);
  g.n_ = static_cast<int>(g.names_.size());
  g.lab_.assign(static_cast<size_t>(g.n_) * g.n_, 0);
  for (const auto& e : edges) {
    int i = g.index(e.u), j = g.index(e.v);
    if (i < 0) throw Error("edge references unknown vertex '" + e.u + "'");
    if (j < 0) throw Error("edge references unknown vertex '" + e.v + "'");
    if (i == j) throw Error("self-edge on vertex '" + e.u + "'");
    if (e.m < 2) throw Error("label " + std::to_string(e.m) + " on edge " +
                             e.u + " " + e.v + " is below 2");
    if (g.lab_[i * g.n_ + j] != 0)
      throw Error("duplicate edge " + e.u + " " + e.v);
    g.lab_[i * g.n_ + j] = g.lab_[j * g.n_ + i] = e.m;
  }
  return g;
}

int PresentationGraph::index(const std::string& name) const {
  auto it = std::lower_bound(names_.begin(), names_.end(), name);
  if (it == names_.end() || *it != name) return -1;
  return static_cast<int>(it - names_.begin());
}

int PresentationGraph::index_checked(const std::string& name) const {
  int i = index(name);
  if (i < 0) throw Error("unknown vertex '" + name + "'");
  return i;
}

std::optional<int> PresentationGraph::label(int i, int j) const {
  if (i == j) throw Error("label queried for a vertex against itself");
  int m = lab_.at(static_cast<size_t>(i) * n_ + j);
  if (m == 0) return std::nullopt;
  return m;
}

std::vector<int> PresentationGraph::neighbors(int i) const {
  std::vector<int> out;
  for (int j = 0; j < n_; ++j)
    if (adjacent(i, j)) out.push_back(j);
  return out;
}

std::vector<PresentationGraph::Edge> PresentationGraph::edges() const {
  std::vector<Edge> out;
  for (int i = 0; i < n_; ++i)
    for (int j = i + 1; j < n_; ++j)
      if (lab_[i * n_ + j] != 0) out.push_back({i, j, lab_[i * n_ + j]});
  return out;
}

int PresentationGraph::edge_count() const {
  int c = 0;
  for (int i = 0; i < n_; ++i)
    for (int j = i + 1; j < n_; ++j)
      if (lab_[i * n_ + j] != 0) ++c;
  return c;
}

namespace {

std::vector<std::string> split_ws(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream is(s);
  std::string tok;
  while (is >> tok) out.push_back(tok);
  return out;
}

// label token: integer >= 2 or "inf"; nullopt encodes infinity
std::optional<int> parse_label_token(const std::string& tok, int line_no) {
  if (tok == "inf") return std::nullopt;
  size_t pos = 0;
  int m = 0;
  try {
    m = std::stoi(tok, &pos);
  } catch (const std::exception&) {
    throw ParseError("bad label '" + tok + "'", line_no);
  }
  if (pos != tok.size()) throw ParseError("bad label '" + tok + "'", line_no);
  if (m < 2) throw ParseError("label " + tok + " is below 2", line_no);
  return m;
}

}  // namespace

PresentationGraph PresentationGraph::parse(const std::string& text) {
  std::istringstream is(text);
  std::string line;
  int line_no = 0;
  bool saw_vertices = false;
  std::vector<std::string> vertices;
  std::vector<EdgeIn> edges;
  std::vector<std::pair<std::string, std::string>> inf_pairs;  // accepted, dropped
  while (std::getline(is, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos)
      line.erase(hash);
    auto toks = split_ws(line);
    if (toks.empty()) continue;
    if (toks[0] == "vertices:") {
      if (saw_vertices) throw ParseError("second 'vertices:' line", line_no);
      saw_vertices = true;
      vertices.assign(toks.begin() + 1, toks.end());
    } else if (toks[0] == "edge") {
      if (!saw_vertices)
        throw ParseError("'edge' before the 'vertices:' line", line_no);
      if (toks.size() != 4)
        throw ParseError("expected 'edge u v m'", line_no);
      auto m = parse_label_token(toks[3], line_no);
      if (toks[1] == toks[2])
        throw ParseError("self-edge on vertex '" + toks[1] + "'", line_no);
      if (!m) {
        inf_pairs.emplace_back(toks[1], toks[2]);  // "edge u v inf" == no edge
        continue;
      }
      edges.push_back({toks[1], toks[2], *m});
    } else {
      throw ParseError("unrecognized line starting with '" + toks[0] + "'",
                       line_no);
    }
  }
  if (!saw_vertices) throw ParseError("missing 'vertices:' line", 0);
  try {
    auto g = create(std::move(vertices), edges);
    for (auto& [u, v] : inf_pairs) {  // still validate the endpoints
      g.index_checked(u);
      g.index_checked(v);
    }
    return g;
  } catch (const ParseError&) {
    throw;
  } catch (const Error& e) {
    throw ParseError(e.what(), 0);
  }
}

std::string PresentationGraph::to_text() const {
  std::ostringstream os;
  os << "vertices:";
  for (const auto& v : names_) os << ' ' << v;
  os << '\n';
  for (const auto& e : edges())
    os << "edge " << names_[e.u] << ' ' << names_[e.v] << ' ' << e.m << '\n';
  return os.str();
}

PresentationGraph PresentationGraph::from_json(const nlohmann::json& j) {
  try {
    if (!j.is_object()) throw ParseError("top level is not an object", 0);
    if (!j.contains("vertices") || !j["vertices"].is_array())
      throw ParseError("missing 'vertices' array", 0);
    std::vector<std::string> vertices;
    for (const auto& v : j["vertices"]) {
      if (!v.is_string()) throw ParseError("vertex name is not a string", 0);
      vertices.push_back(v.get<std::string>());
    }
    std::vector<EdgeIn> edges;
    if (j.contains("edges")) {
      if (!j["edges"].is_array()) throw ParseError("'edges' is not an array", 0);
      for (const auto& e : j["edges"]) {
        if (!e.is_array() || e.size() != 3 || !e[0].is_string() ||
            !e[1].is_string())
          throw ParseError("edge entry is not [u, v, m]", 0);
        std::string u = e[0].get<std::string>(), v = e[1].get<std::string>();
        if (e[2].is_string()) {
          if (e[2].get<std::string>() != "inf")
            throw ParseError("bad label '" + e[2].get<std::string>() + "'", 0);
          continue;  // explicit infinity, same as absent
        }
        if (!e[2].is_number_integer())
          throw ParseError("edge label is not an integer or \"inf\"", 0);
        int m = e[2].get<int>();
        if (u == v) throw ParseError("self-edge on vertex '" + u + "'", 0);
        if (m < 2)
          throw ParseError("label " + std::to_string(m) + " is below 2", 0);
        edges.push_back({u, v, m});
      }
    }
    return create(std::move(vertices), edges);
  } catch (const ParseError&) {
    throw;
  } catch (const Error& e) {
    throw ParseError(e.what(), 0);
  }
}

PresentationGraph PresentationGraph::from_json_text(const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text, nullptr, false);
  if (j.is_discarded()) throw ParseError("malformed JSON", 0);
  return from_json(j);
}

nlohmann::ordered_json PresentationGraph::to_json() const {
  nlohmann::ordered_json j;
  j["vertices"] = names_;
  auto arr = nlohmann::ordered_json::array();
  for (const auto& e : edges())
    arr.push_back({names_[e.u], names_[e.v], e.m});
  j["edges"] = std::move(arr);
  return j;
}

std::string PresentationGraph::to_json_text() const {
  return to_json().dump(2) + "\n";
}

// --- VertexSet -------------------------------------------------------------

VertexSet::VertexSet(const PresentationGraph& g, std::vector<int> indices) {
  for (int i : indices)
    if (i < 0 || i >= g.size())
      throw Error("vertex index " + std::to_string(i) + " out of range");
  std::sort(indices.begin(), indices.end());
  indices.erase(std::unique(indices.begin(), indices.end()), indices.end());
  v_ = std::move(indices);
}

VertexSet VertexSet::from_names(const PresentationGraph& g,
                                const std::vector<std::string>& names) {
  std::vector<int> idx;
  idx.reserve(names.size());
  for (const auto& n : names) idx.push_back(g.index_checked(n));
  return VertexSet(g, std::move(idx));
}

VertexSet VertexSet::full(const PresentationGraph& g) {
  std::vector<int> idx(g.size());
  for (int i = 0; i < g.size(); ++i) idx[i] = i;
  VertexSet s;
  s.v_ = std::move(idx);
  return s;
}

bool VertexSet::contains(int i) const {
  return std::binary_search(v_.begin(), v_.end(), i);
}

std::vector<std::string> VertexSet::names(const PresentationGraph& g) const {
  std::vector<std::string> out;
  out.reserve(v_.size());
  for (int i : v_) out.push_back(g.name(i));
  return out;
}

VertexSet VertexSet::from_sorted_unique(std::vector<int> indices) {
  VertexSet s;
  s.v_ = std::move(indices);
  return s;
}

VertexSet vs_union(const VertexSet& a, const VertexSet& b) {
  std::vector<int> out;
  std::set_union(a.indices().begin(), a.indices().end(), b.indices().begin(),
                 b.indices().end(), std::back_inserter(out));
  return VertexSet::from_sorted_unique(std::move(out));
}

VertexSet vs_intersect(const VertexSet& a, const VertexSet& b) {
  std::vector<int> out;
  std::set_intersection(a.indices().begin(), a.indices().end(),
                        b.indices().begin(), b.indices().end(),
                        std::back_inserter(out));
  return VertexSet::from_sorted_unique(std::move(out));
}

VertexSet vs_minus(const VertexSet& a, const VertexSet& b) {
  std::vector<int> out;
  std::set_difference(a.indices().begin(), a.indices().end(),
                      b.indices().begin(), b.indices().end(),
                      std::back_inserter(out));
  return VertexSet::from_sorted_unique(std::move(out));
}

bool vs_subset(const VertexSet& a, const VertexSet& b) {
  return std::includes(b.indices().begin(), b.indices().end(),
                       a.indices().begin(), a.indices().end());
}

// --- derived views ----------------------------------------------------------

DynkinView dynkin_view(const PresentationGraph& g) {
  DynkinView d;
  d.n = g.size();
  d.adj.assign(static_cast<size_t>(d.n) * d.n, 0);
  for (int i = 0; i < d.n; ++i)
    for (int j = 0; j < d.n; ++j)
      if (g.dynkin_adjacent(i, j)) d.adj[i * d.n + j] = 1;
  return d;
}

PresentationGraph induced_subgraph(const PresentationGraph& g,
                                   const VertexSet& s) {
  std::vector<std::string> names = s.names(g);
  std::vector<PresentationGraph::EdgeIn> edges;
  const auto& idx = s.indices();
  for (size_t a = 0; a < idx.size(); ++a)
    for (size_t b = a + 1; b < idx.size(); ++b)
      if (auto m = g.label(idx[a], idx[b]))
        edges.push_back({g.name(idx[a]), g.name(idx[b]), *m});
  return PresentationGraph::create(std::move(names), edges);
}

bool is_clique(const PresentationGraph& g, const VertexSet& s) {
  const auto& idx = s.indices();
  for (size_t a = 0; a < idx.size(); ++a)
    for (size_t b = a + 1; b < idx.size(); ++b)
      if (!g.adjacent(idx[a], idx[b])) return false;
  return true;
}

std::vector<Distance2Pair> distance2_pairs(const PresentationGraph& g,
                                           const VertexSet& s) {
  std::vector<Distance2Pair> out;
  const auto& idx = s.indices();
  for (size_t a = 0; a < idx.size(); ++a) {
    for (size_t b = a + 1; b < idx.size(); ++b) {
      int u = idx[a], w = idx[b];
      if (g.adjacent(u, w)) continue;
      std::vector<int> common;
      for (int x = 0; x < g.size(); ++x)
        if (g.adjacent(u, x) && g.adjacent(w, x)) common.push_back(x);
      if (common.empty()) continue;  // distance > 2 (or infinite)
      out.push_back({u, w, std::move(common)});
    }
  }
  return out;  // already sorted: (u, w) ascends with the loops
}

}  // namespace artin
