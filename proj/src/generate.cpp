#include "artin/generate.hpp"

#include <random>

#include "artin/coxeter.hpp"

namespace artin {

namespace {

struct Pair {
  int u, v;
};

void check_label(int m) {
  if (m != 0 && m < 2) throw Error("edge label must be 0 (infinity) or >= 2");
}

std::vector<std::string> vnames(int n, int from = 1) {
  if (n < 0) throw Error("vertex count must be non-negative");
  std::vector<std::string> out;
  out.reserve(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) out.push_back("v" + std::to_string(from + i));
  return out;
}

// assigns labels to structural edges in their construction order; modulo
// reduction instead of uniform_int_distribution keeps streams identical
// across standard libraries
class Labeller {
 public:
  explicit Labeller(const LabelSpec& spec) : spec_(spec), rng_(spec.seed) {
    check_label(spec.uniform);
    for (int m : spec.choices) check_label(m);
  }
  int next() {
    if (spec_.choices.empty()) return spec_.uniform;
    return spec_.choices[static_cast<size_t>(rng_() % spec_.choices.size())];
  }

 private:
  LabelSpec spec_;
  std::mt19937_64 rng_;
};

PresentationGraph assemble(const std::vector<std::string>& names,
                           const std::vector<Pair>& pairs,
                           const LabelSpec& spec) {
  Labeller lab(spec);
  std::vector<PresentationGraph::EdgeIn> edges;
  for (const auto& p : pairs) {
    int m = lab.next();
    if (m == 0) continue;  // infinity: leave the pair unjoined
    edges.push_back({names[static_cast<size_t>(p.u)],
                     names[static_cast<size_t>(p.v)], m});
  }
  return PresentationGraph::create(names, edges);
}

}  // namespace

PresentationGraph gen_path(int n, const LabelSpec& labels) {
  if (n < 1) throw Error("path needs at least one vertex");
  std::vector<Pair> pairs;
  for (int i = 0; i + 1 < n; ++i) pairs.push_back({i, i + 1});
  return assemble(vnames(n), pairs, labels);
}

PresentationGraph gen_cycle(int n, const LabelSpec& labels) {
  if (n < 3) throw Error("cycle needs at least three vertices");
  std::vector<Pair> pairs;
  for (int i = 0; i < n; ++i) pairs.push_back({i, (i + 1) % n});
  return assemble(vnames(n), pairs, labels);
}

PresentationGraph gen_complete(int n, const LabelSpec& labels) {
  if (n < 1) throw Error("complete graph needs at least one vertex");
  std::vector<Pair> pairs;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) pairs.push_back({i, j});
  return assemble(vnames(n), pairs, labels);
}

PresentationGraph gen_wheel(int n, const LabelSpec& rim,
                            const LabelSpec& spokes) {
  if (n < 3) throw Error("wheel needs at least three rim vertices");
  std::vector<std::string> names = vnames(n);
  names.push_back("h");
  std::vector<Pair> rim_pairs, spoke_pairs;
  for (int i = 0; i < n; ++i) {
    rim_pairs.push_back({i, (i + 1) % n});
    spoke_pairs.push_back({n, i});
  }
  Labeller rim_lab(rim), spoke_lab(spokes);
  std::vector<PresentationGraph::EdgeIn> edges;
  for (const auto& p : rim_pairs) {
    int m = rim_lab.next();
    if (m == 0) continue;
    edges.push_back({names[static_cast<size_t>(p.u)],
                     names[static_cast<size_t>(p.v)], m});
  }
  for (const auto& p : spoke_pairs) {
    int m = spoke_lab.next();
    if (m == 0) continue;
    edges.push_back({names[static_cast<size_t>(p.u)],
                     names[static_cast<size_t>(p.v)], m});
  }
  return PresentationGraph::create(names, edges);
}

PresentationGraph gen_random(int n, const LabelSpec& labels) {
  if (n < 1) throw Error("random graph needs at least one vertex");
  if (labels.choices.empty())
    throw Error("random graph needs a non-empty label choice list");
  std::vector<Pair> pairs;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) pairs.push_back({i, j});
  return assemble(vnames(n), pairs, labels);
}

PresentationGraph gen_catalog(const std::string& type_name) {
  CoxeterType t = parse_type_name(type_name);
  using F = CoxeterType::Family;
  int k = t.rank;
  std::vector<std::tuple<int, int, int>> diagram;  // (u, v, label)
  auto chain = [&](int from, int to) {             // all-3 path from..to
    for (int i = from; i < to; ++i) diagram.emplace_back(i, i + 1, 3);
  };
  switch (t.family) {
    case F::A: chain(0, k - 1); break;
    case F::B:
      chain(0, k - 2);
      diagram.emplace_back(k - 2, k - 1, 4);
      break;
    case F::D:
      chain(0, k - 3);
      diagram.emplace_back(k - 3, k - 2, 3);
      diagram.emplace_back(k - 3, k - 1, 3);
      break;
    case F::E6: case F::E7: case F::E8:
      chain(0, k - 2);
      diagram.emplace_back(2, k - 1, 3);  // extra leaf on the third node
      break;
    case F::F4:
      diagram = {{0, 1, 3}, {1, 2, 4}, {2, 3, 3}};
      break;
    case F::H3:
      diagram = {{0, 1, 5}, {1, 2, 3}};
      break;
    case F::H4:
      diagram = {{0, 1, 5}, {1, 2, 3}, {2, 3, 3}};
      break;
    case F::I2:
      diagram = {{0, 1, t.m}};
      break;
    case F::AffA:
      if (k == 2) {
        diagram = {{0, 1, 0}};  // the one infinite-label pair
      } else {
        chain(0, k - 1);
        diagram.emplace_back(k - 1, 0, 3);
      }
      break;
    case F::AffB:
      chain(0, k - 3);
      std::get<2>(diagram.front()) = 4;   // long arm ends with the 4
      diagram.emplace_back(k - 3, k - 2, 3);
      diagram.emplace_back(k - 3, k - 1, 3);
      break;
    case F::AffC:
      chain(0, k - 1);
      std::get<2>(diagram.front()) = 4;
      std::get<2>(diagram.back()) = 4;
      break;
    case F::AffD:
      if (k == 5) {
        diagram = {{0, 1, 3}, {0, 2, 3}, {0, 3, 3}, {0, 4, 3}};
      } else {
        chain(0, k - 5);                  // central path
        diagram.emplace_back(0, k - 4, 3);
        diagram.emplace_back(0, k - 3, 3);
        diagram.emplace_back(k - 5, k - 2, 3);
        diagram.emplace_back(k - 5, k - 1, 3);
      }
      break;
    case F::AffE6:
      chain(0, 4);                        // arms (2,2,2) around node 2
      diagram.emplace_back(2, 5, 3);
      diagram.emplace_back(5, 6, 3);
      break;
    case F::AffE7:
      chain(0, 6);                        // arms (3,3,1) around node 3
      diagram.emplace_back(3, 7, 3);
      break;
    case F::AffE8:
      chain(0, 7);                        // arms (5,2,1) around node 2
      diagram.emplace_back(2, 8, 3);
      break;
    case F::AffF4:
      diagram = {{0, 1, 3}, {1, 2, 3}, {2, 3, 4}, {3, 4, 3}};
      break;
    case F::AffG2:
      diagram = {{0, 1, 3}, {1, 2, 6}};
      break;
    case F::Infinite:
      throw Error("'" + type_name + "' is not a finite or affine type");
  }
  // presentation-graph convention: pairs not on the diagram commute
  std::vector<std::vector<int>> label(static_cast<size_t>(k),
                                      std::vector<int>(static_cast<size_t>(k), 2));
  for (const auto& [u, v, m] : diagram) {
    label[static_cast<size_t>(u)][static_cast<size_t>(v)] = m;
    label[static_cast<size_t>(v)][static_cast<size_t>(u)] = m;
  }
  auto names = vnames(k);
  std::vector<PresentationGraph::EdgeIn> edges;
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j)
      if (label[static_cast<size_t>(i)][static_cast<size_t>(j)] != 0)
        edges.push_back({names[static_cast<size_t>(i)],
                         names[static_cast<size_t>(j)],
                         label[static_cast<size_t>(i)][static_cast<size_t>(j)]});
  return PresentationGraph::create(names, edges);
}

}  // namespace artin
