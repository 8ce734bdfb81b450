#ifndef ARTIN_CLIQUES_HPP
#define ARTIN_CLIQUES_HPP

#include <functional>
#include <vector>

namespace artin {

// All maximal cliques of the graph given by a symmetric adjacency predicate
// on {0..n-1}.  Bron-Kerbosch with pivoting; output cliques are sorted
// internally and the list is sorted lexicographically, so the result is a
// deterministic function of the adjacency.  Isolated vertices come out as
// singleton cliques.  n = 0 yields the empty list.
std::vector<std::vector<int>> maximal_cliques(
    int n, const std::function<bool(int, int)>& adj);

}  // namespace artin

#endif
