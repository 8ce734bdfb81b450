#ifndef ARTIN_GENERATE_HPP
#define ARTIN_GENERATE_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "artin/graph.hpp"

namespace artin {

// How edges of a generated family get their labels.  With empty `choices`
// every structural edge receives `uniform`; otherwise each edge draws
// uniformly from `choices`, seeded for reproducibility.  Label 0 stands for
// infinity (the pair is dropped from the graph).
struct LabelSpec {
  int uniform = 3;
  std::vector<int> choices;
  std::uint64_t seed = 0;
};

PresentationGraph gen_path(int n, const LabelSpec& labels = {});
PresentationGraph gen_cycle(int n, const LabelSpec& labels = {});   // n >= 3
PresentationGraph gen_complete(int n, const LabelSpec& labels = {});

// Hub "h" joined to every rim vertex v1..vn of a cycle; n >= 3.
PresentationGraph gen_wheel(int n, const LabelSpec& rim = {},
                            const LabelSpec& spokes = {});

// Every unordered pair draws a label from `labels.choices` (which may
// include 0 = infinity); requires a non-empty choice list.
PresentationGraph gen_random(int n, const LabelSpec& labels);

// Presentation graph of a finite or affine Coxeter diagram: the diagram's
// edges keep their labels, every other pair is labelled 2 (so the group is
// the named spherical or Euclidean type, not a free product).
PresentationGraph gen_catalog(const std::string& type_name);

}  // namespace artin

#endif
