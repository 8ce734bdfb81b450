#include "artin/cliques.hpp"

#include <algorithm>

namespace artin {

namespace {

struct BK {
  int n;
  const std::vector<char>& adj;  // n*n
  std::vector<std::vector<int>> out;

  bool a(int i, int j) const { return adj[i * n + j] != 0; }

  void run(std::vector<int>& r, std::vector<int> p, std::vector<int> x) {
    if (p.empty() && x.empty()) {
      out.push_back(r);
      return;
    }
    // pivot: vertex of P u X with the most neighbors in P (ties: smallest id)
    int pivot = -1, best = -1;
    for (int cand : p) {
      int c = 0;
      for (int v : p) c += a(cand, v);
      if (c > best) best = c, pivot = cand;
    }
    for (int cand : x) {
      int c = 0;
      for (int v : p) c += a(cand, v);
      if (c > best) best = c, pivot = cand;
    }
    std::vector<int> ext;
    for (int v : p)
      if (!a(pivot, v)) ext.push_back(v);
    for (int v : ext) {
      std::vector<int> p2, x2;
      for (int w : p)
        if (a(v, w)) p2.push_back(w);
      for (int w : x)
        if (a(v, w)) x2.push_back(w);
      r.push_back(v);
      run(r, std::move(p2), std::move(x2));
      r.pop_back();
      p.erase(std::find(p.begin(), p.end(), v));
      x.insert(std::lower_bound(x.begin(), x.end(), v), v);
    }
  }
};

}  // namespace

std::vector<std::vector<int>> maximal_cliques(
    int n, const std::function<bool(int, int)>& adj) {
  std::vector<char> m(static_cast<size_t>(n) * n, 0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j && adj(i, j)) m[i * n + j] = 1;
  BK bk{n, m, {}};
  std::vector<int> r, p(n), x;
  for (int i = 0; i < n; ++i) p[i] = i;
  if (n > 0) bk.run(r, std::move(p), std::move(x));
  for (auto& c : bk.out) std::sort(c.begin(), c.end());
  std::sort(bk.out.begin(), bk.out.end());
  return bk.out;
}

}  // namespace artin
