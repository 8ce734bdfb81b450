#include "artin/coxeter.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cctype>
#include <cmath>

#include "artin/cliques.hpp"

namespace artin {

bool CoxeterType::is_finite() const {
  switch (family) {
    case Family::A: case Family::B: case Family::D: case Family::E6:
    case Family::E7: case Family::E8: case Family::F4: case Family::H3:
    case Family::H4: case Family::I2:
      return true;
    default:
      return false;
  }
}

bool CoxeterType::is_affine() const {
  return !is_finite() && family != Family::Infinite;
}

std::string CoxeterType::name() const {
  using F = Family;
  switch (family) {
    case F::A: return "A" + std::to_string(rank);
    case F::B: return "B" + std::to_string(rank);
    case F::D: return "D" + std::to_string(rank);
    case F::E6: return "E6";
    case F::E7: return "E7";
    case F::E8: return "E8";
    case F::F4: return "F4";
    case F::H3: return "H3";
    case F::H4: return "H4";
    case F::I2: return "I2(" + std::to_string(m) + ")";
    case F::AffA: return "A~" + std::to_string(rank - 1);
    case F::AffB: return "B~" + std::to_string(rank - 1);
    case F::AffC: return "C~" + std::to_string(rank - 1);
    case F::AffD: return "D~" + std::to_string(rank - 1);
    case F::AffE6: return "E~6";
    case F::AffE7: return "E~7";
    case F::AffE8: return "E~8";
    case F::AffF4: return "F~4";
    case F::AffG2: return "G~2";
    case F::Infinite: return "Infinite";
  }
  return "Infinite";
}

CoxeterType parse_type_name(const std::string& name) {
  using F = CoxeterType::Family;
  auto num = [&](size_t from) -> int {
    if (from >= name.size()) throw Error("bad type name '" + name + "'");
    for (size_t i = from; i < name.size(); ++i)
      if (!isdigit(static_cast<unsigned char>(name[i])))
        throw Error("bad type name '" + name + "'");
    return std::stoi(name.substr(from));
  };
  if (name.rfind("I2", 0) == 0) {
    int m;
    if (name.size() > 3 && name[2] == '(' && name.back() == ')')
      m = std::stoi(name.substr(3, name.size() - 4));
    else if (name.size() > 3 && name[2] == '_')
      m = num(3);
    else
      throw Error("bad type name '" + name + "'");
    if (m < 3) throw Error("I2 parameter below 3 in '" + name + "'");
    if (m == 3) return {F::A, 2, 0};
    if (m == 4) return {F::B, 2, 0};
    return {F::I2, 2, m};
  }
  if (name.size() >= 3 && name[1] == '~') {
    int sub = num(2);
    char fam = name[0];
    if (fam == 'A' && sub >= 1) return {F::AffA, sub + 1, 0};
    if ((fam == 'C' || fam == 'B') && sub == 2) return {F::AffC, 3, 0};
    if (fam == 'C' && sub >= 2) return {F::AffC, sub + 1, 0};
    if (fam == 'B' && sub >= 3) return {F::AffB, sub + 1, 0};
    if (fam == 'D' && sub >= 4) return {F::AffD, sub + 1, 0};
    if (fam == 'E' && sub == 6) return {F::AffE6, 7, 0};
    if (fam == 'E' && sub == 7) return {F::AffE7, 8, 0};
    if (fam == 'E' && sub == 8) return {F::AffE8, 9, 0};
    if (fam == 'F' && sub == 4) return {F::AffF4, 5, 0};
    if (fam == 'G' && sub == 2) return {F::AffG2, 3, 0};
    throw Error("unknown affine type '" + name + "'");
  }
  char fam = name.empty() ? '?' : name[0];
  int r = name.size() >= 2 ? num(1) : throw Error("bad type name '" + name + "'");
  switch (fam) {
    case 'A': if (r >= 1) return {F::A, r, 0}; break;
    case 'B': case 'C':
      if (r == 2) return {F::B, 2, 0};
      if (r >= 3) return {F::B, r, 0};
      break;
    case 'D': if (r >= 4) return {F::D, r, 0}; break;
    case 'E':
      if (r == 6) return {F::E6, 6, 0};
      if (r == 7) return {F::E7, 7, 0};
      if (r == 8) return {F::E8, 8, 0};
      break;
    case 'F': if (r == 4) return {F::F4, 4, 0}; break;
    case 'H':
      if (r == 2) return {F::I2, 2, 5};
      if (r == 3) return {F::H3, 3, 0};
      if (r == 4) return {F::H4, 4, 0};
      break;
    case 'G': if (r == 2) return {F::I2, 2, 6}; break;
    default: break;
  }
  throw Error("unknown type name '" + name + "'");
}

namespace {

using F = CoxeterType::Family;

// Classify one diagram component given the labels restricted to it.
// Vertices are local ids 0..k-1; lab(i,j) returns the label with 0 = inf.
struct ComponentMatcher {
  int k;
  std::vector<int> lab;  // k*k, 0 = infinity

  int L(int i, int j) const { return lab[i * k + j]; }
  bool diagram_edge(int i, int j) const {  // finite m >= 3
    return i != j && L(i, j) >= 3;
  }

  CoxeterType infinite() const { return {F::Infinite, k, 0}; }

  CoxeterType match() const {
    if (k == 1) return {F::A, 1, 0};
    // infinite labels: only the rank-2 infinite-dihedral diagram is affine
    bool has_inf = false;
    for (int i = 0; i < k && !has_inf; ++i)
      for (int j = i + 1; j < k; ++j)
        if (L(i, j) == 0) { has_inf = true; break; }
    if (has_inf) {
      if (k == 2) return {F::AffA, 2, 0};  // A~1
      return infinite();
    }

    std::vector<int> deg(k, 0);
    int edge_cnt = 0;
    for (int i = 0; i < k; ++i)
      for (int j = i + 1; j < k; ++j)
        if (diagram_edge(i, j)) { ++deg[i]; ++deg[j]; ++edge_cnt; }

    if (edge_cnt >= k) {
      // the only catalog diagram with a cycle is the all-3 circuit (A~ family)
      if (edge_cnt == k && std::all_of(deg.begin(), deg.end(),
                                       [](int d) { return d == 2; })) {
        for (int i = 0; i < k; ++i)
          for (int j = i + 1; j < k; ++j)
            if (diagram_edge(i, j) && L(i, j) != 3) return infinite();
        return {F::AffA, k, 0};
      }
      return infinite();
    }
    // edge_cnt == k-1 and connected: a tree
    std::vector<int> branch;
    for (int i = 0; i < k; ++i)
      if (deg[i] >= 3) branch.push_back(i);

    if (branch.empty()) return match_path(deg);
    if (branch.size() == 1) return match_one_branch(branch[0], deg);
    if (branch.size() == 2) return match_two_branch(branch[0], branch[1], deg);
    return infinite();
  }

  // labels along the path from one endpoint, lexicographically minimal
  // between the two walk directions
  CoxeterType match_path(const std::vector<int>& deg) const {
    std::vector<int> ends;
    for (int i = 0; i < k; ++i)
      if (deg[i] == 1) ends.push_back(i);
    auto walk = [&](int start) {
      std::vector<int> seq;
      int prev = -1, cur = start;
      while (true) {
        int next = -1;
        for (int j = 0; j < k; ++j)
          if (j != prev && diagram_edge(cur, j)) { next = j; break; }
        if (next < 0) break;
        seq.push_back(L(cur, next));
        prev = cur;
        cur = next;
      }
      return seq;
    };
    std::vector<int> s = walk(ends[0]), t = walk(ends[1]);
    std::vector<int> q = std::min(s, t);  // canonical orientation
    int len = static_cast<int>(q.size());  // == k-1 >= 1

    if (std::all_of(q.begin(), q.end(), [](int m) { return m == 3; }))
      return {F::A, k, 0};
    if (len == 1) {
      int m = q[0];
      if (m == 4) return {F::B, 2, 0};
      return {F::I2, 2, m};  // m >= 5
    }
    std::vector<int> big;
    for (int i = 0; i < len; ++i)
      if (q[i] != 3) big.push_back(i);
    if (big.size() == 1) {
      int p = big[0], m = q[p];
      if (m == 4) {
        if (p == len - 1) return {F::B, k, 0};
        if (len == 3 && p == 1) return {F::F4, 4, 0};
        if (len == 4 && p == 2) return {F::AffF4, 5, 0};
        return infinite();
      }
      if (m == 5) {
        if (p == len - 1 && len == 2) return {F::H3, 3, 0};
        if (p == len - 1 && len == 3) return {F::H4, 4, 0};
        return infinite();
      }
      if (m == 6 && len == 2 && p == 1) return {F::AffG2, 3, 0};
      return infinite();
    }
    if (big.size() == 2 && q[0] == 4 && q[len - 1] == 4 && big[0] == 0 &&
        big[1] == len - 1)
      return {F::AffC, k, 0};  // C~(k-1), includes the (4,4) path
    return infinite();
  }

  // arms from the unique branch vertex b: lists of labels walking outwards
  CoxeterType match_one_branch(int b, const std::vector<int>& deg) const {
    std::vector<std::vector<int>> arms;
    for (int j = 0; j < k; ++j) {
      if (!diagram_edge(b, j)) continue;
      std::vector<int> arm{L(b, j)};
      int prev = b, cur = j;
      while (true) {
        int next = -1;
        for (int t = 0; t < k; ++t)
          if (t != prev && diagram_edge(cur, t)) { next = t; break; }
        if (next < 0) break;
        arm.push_back(L(cur, next));
        prev = cur;
        cur = next;
      }
      arms.push_back(std::move(arm));
    }
    int nonthree = 0;
    for (const auto& a : arms)
      for (int m : a)
        if (m != 3) ++nonthree;

    if (deg[b] == 4) {
      if (k == 5 && nonthree == 0) return {F::AffD, 5, 0};  // D~4 star
      return infinite();
    }
    if (deg[b] != 3) return infinite();

    std::vector<size_t> lens{arms[0].size(), arms[1].size(), arms[2].size()};
    std::sort(lens.begin(), lens.end(), std::greater<>());
    size_t a = lens[0], bb = lens[1], c = lens[2];

    if (nonthree == 0) {
      if (bb == 1 && c == 1) return {F::D, k, 0};
      if (a == 2 && bb == 2 && c == 1) return {F::E6, 6, 0};
      if (a == 3 && bb == 2 && c == 1) return {F::E7, 7, 0};
      if (a == 4 && bb == 2 && c == 1) return {F::E8, 8, 0};
      if (a == 2 && bb == 2 && c == 2) return {F::AffE6, 7, 0};
      if (a == 3 && bb == 3 && c == 1) return {F::AffE7, 8, 0};
      if (a == 5 && bb == 2 && c == 1) return {F::AffE8, 9, 0};
      return infinite();
    }
    if (nonthree == 1) {
      // B~ pattern: two arms of length 1 labeled 3, the remaining arm all 3
      // except a terminal 4 (B~3 is the star with labels 3,3,4)
      int long_arm = -1;
      for (int i = 0; i < 3; ++i) {
        const auto& arm = arms[i];
        bool tail4 = arm.back() == 4 &&
                     std::all_of(arm.begin(), arm.end() - 1,
                                 [](int m) { return m == 3; });
        if (tail4) { long_arm = i; break; }
      }
      if (long_arm < 0) return infinite();
      for (int i = 0; i < 3; ++i) {
        if (i == long_arm) continue;
        if (arms[i].size() != 1 || arms[i][0] != 3) return infinite();
      }
      return {F::AffB, k, 0};  // B~(k-1), k >= 4
    }
    return infinite();
  }

  CoxeterType match_two_branch(int b1, int b2,
                               const std::vector<int>& deg) const {
    if (deg[b1] != 3 || deg[b2] != 3) return infinite();
    for (int i = 0; i < k; ++i)
      for (int j = i + 1; j < k; ++j)
        if (diagram_edge(i, j) && L(i, j) != 3) return infinite();
    // D~ pattern: each branch vertex carries exactly two leaves
    auto leaves_at = [&](int b) {
      int c = 0;
      for (int j = 0; j < k; ++j)
        if (diagram_edge(b, j) && deg[j] == 1) ++c;
      return c;
    };
    if (leaves_at(b1) == 2 && leaves_at(b2) == 2) return {F::AffD, k, 0};
    return infinite();
  }
};

}  // namespace

std::vector<SphericalComponent> spherical_decomposition(
    const PresentationGraph& g) {
  int n = g.size();
  DynkinView d = dynkin_view(g);
  std::vector<int> comp(n, -1);
  int nc = 0;
  for (int s = 0; s < n; ++s) {
    if (comp[s] >= 0) continue;
    std::vector<int> stack{s};
    comp[s] = nc;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int w = 0; w < n; ++w)
        if (d.at(v, w) && comp[w] < 0) {
          comp[w] = nc;
          stack.push_back(w);
        }
    }
    ++nc;
  }
  std::vector<SphericalComponent> out;
  for (int c = 0; c < nc; ++c) {
    std::vector<int> verts;
    for (int i = 0; i < n; ++i)
      if (comp[i] == c) verts.push_back(i);
    ComponentMatcher m;
    m.k = static_cast<int>(verts.size());
    m.lab.assign(static_cast<size_t>(m.k) * m.k, 0);
    for (int a = 0; a < m.k; ++a)
      for (int b = 0; b < m.k; ++b) {
        if (a == b) continue;
        auto l = g.label(verts[a], verts[b]);
        m.lab[a * m.k + b] = l.value_or(0);
      }
    out.push_back({VertexSet(g, verts), m.match()});
  }
  return out;  // component order follows smallest contained index
}

bool is_spherical(const PresentationGraph& g) {
  for (int i = 0; i < g.size(); ++i)
    for (int j = i + 1; j < g.size(); ++j)
      if (!g.label(i, j)) return false;
  for (const auto& c : spherical_decomposition(g))
    if (!c.type.is_finite()) return false;
  return true;
}

CosineResult cosine_signature(const PresentationGraph& g, double tol) {
  int n = g.size();
  CosineResult r;
  if (n == 0) return r;  // empty matrix: positive definite by convention
  Eigen::MatrixXd B(n, n);
  const double pi = std::acos(-1.0);
  for (int i = 0; i < n; ++i) {
    B(i, i) = 1.0;
    for (int j = i + 1; j < n; ++j) {
      auto m = g.label(i, j);
      double v = m ? -std::cos(pi / *m) : -1.0;
      B(i, j) = B(j, i) = v;
    }
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(B, Eigen::EigenvaluesOnly);
  r.eigenvalues.assign(es.eigenvalues().data(), es.eigenvalues().data() + n);
  std::sort(r.eigenvalues.begin(), r.eigenvalues.end());
  int neg = 0, zero = 0;
  for (double ev : r.eigenvalues) {
    if (ev < -tol) ++neg;
    else if (ev <= tol) ++zero;
  }
  r.kernel_dim = zero;
  if (neg > 0) r.signature = CosineSignature::Indefinite;
  else if (zero > 0) r.signature = CosineSignature::PositiveSemidefinite;
  else r.signature = CosineSignature::PositiveDefinite;
  return r;
}

namespace {

// Largest spherical subset.  Spherical subgraphs are cliques and sphericity
// is closed under subsets, so grow cliques and prune as soon as the current
// set stops being spherical.
int dimension_search(const PresentationGraph& g) {
  int n = g.size();
  int best = n > 0 ? 1 : 0;  // every single generator is spherical
  std::vector<int> cur;
  auto spherical_set = [&](const std::vector<int>& s) {
    return is_spherical(induced_subgraph(g, VertexSet(g, s)));
  };
  std::function<void(int)> grow = [&](int from) {
    for (int v = from; v < n; ++v) {
      bool cliq = true;
      for (int u : cur)
        if (!g.adjacent(u, v)) { cliq = false; break; }
      if (!cliq) continue;
      cur.push_back(v);
      if (spherical_set(cur)) {
        best = std::max(best, static_cast<int>(cur.size()));
        grow(v + 1);
      }
      cur.pop_back();
    }
  };
  grow(0);
  return best;
}

}  // namespace

ClassProfile class_profile(const PresentationGraph& g) {
  ClassProfile p;
  int n = g.size();
  auto es = g.edges();

  p.free_graph = es.empty();
  p.even = std::all_of(es.begin(), es.end(),
                       [](const auto& e) { return e.m % 2 == 0; });
  p.raag = std::all_of(es.begin(), es.end(),
                       [](const auto& e) { return e.m == 2; });
  p.large = std::all_of(es.begin(), es.end(),
                        [](const auto& e) { return e.m >= 3; });
  p.xl = std::all_of(es.begin(), es.end(),
                     [](const auto& e) { return e.m >= 4; });
  p.xxl = std::all_of(es.begin(), es.end(),
                      [](const auto& e) { return e.m >= 5; });

  auto decomp = spherical_decomposition(g);
  p.spherical = n >= 0 && std::all_of(decomp.begin(), decomp.end(),
                                      [](const auto& c) {
                                        return c.type.is_finite();
                                      });
  for (int i = 0; i < n && p.spherical; ++i)
    for (int j = i + 1; j < n; ++j)
      if (!g.label(i, j)) { p.spherical = false; break; }
  p.affine = !decomp.empty() && std::all_of(decomp.begin(), decomp.end(),
                                            [](const auto& c) {
                                              return c.type.is_affine();
                                            });

  // FC: sphericity is subset-closed, so checking maximal cliques suffices
  auto cliques = maximal_cliques(n, [&](int i, int j) { return g.adjacent(i, j); });
  p.fc = true;
  for (const auto& c : cliques)
    if (!is_spherical(induced_subgraph(g, VertexSet(g, c)))) {
      p.fc = false;
      break;
    }

  // triangle condition for two-dimensionality
  bool tri_ok = true;
  for (int a = 0; a < n && tri_ok; ++a)
    for (int b = a + 1; b < n && tri_ok; ++b)
      for (int c = b + 1; c < n && tri_ok; ++c) {
        if (!(g.adjacent(a, b) && g.adjacent(b, c) && g.adjacent(a, c)))
          continue;
        double s = 1.0 / *g.label(a, b) + 1.0 / *g.label(b, c) +
                   1.0 / *g.label(a, c);
        if (s > 1.0 + 1e-12) tri_ok = false;
      }
  p.two_dimensional = !es.empty() && tri_ok;

  bool no_22 = true;  // no two incident label-2 edges
  for (int v = 0; v < n && no_22; ++v) {
    int twos = 0;
    for (int u = 0; u < n; ++u)
      if (u != v && g.label(v, u) == std::optional<int>(2)) ++twos;
    if (twos >= 2) no_22 = false;
  }
  p.two_two_free_two_dim = p.two_dimensional && no_22;

  p.dimension = dimension_search(g);
  return p;
}

}  // namespace artin
