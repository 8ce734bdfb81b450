#ifndef ARTIN_COXETER_HPP
#define ARTIN_COXETER_HPP

#include <string>
#include <vector>

#include "artin/graph.hpp"

namespace artin {

// Irreducible Coxeter type of one diagram component.  rank is the number of
// vertices of the component; affine families print with subscript rank-1
// (A~2 is the all-3 triangle on 3 vertices).  B = C throughout.
struct CoxeterType {
  enum class Family {
    A, B, D, E6, E7, E8, F4, H3, H4, I2,          // finite catalog
    AffA, AffB, AffC, AffD, AffE6, AffE7, AffE8,  // affine catalog
    AffF4, AffG2,
    Infinite                                       // neither
  };
  Family family = Family::Infinite;
  int rank = 0;  // component size
  int m = 0;     // dihedral parameter, only for I2

  bool is_finite() const;
  bool is_affine() const;
  std::string name() const;  // "B3", "I2(7)", "A~2", "Infinite"

  auto operator<=>(const CoxeterType&) const = default;
};

// Parse a catalog name ("E8", "B5", "I2(7)" or "I2_7", "A~3", "C~2").
// Aliases collapse: I2(3) -> A2, I2(4) -> B2, C names -> B.  Throws Error
// for names outside the finite + affine A~/C~ generation range.
CoxeterType parse_type_name(const std::string& name);

struct SphericalComponent {
  VertexSet component;  // one connected component of the Coxeter diagram
  CoxeterType type;
};

// Decompose the Coxeter quotient: components of the m != 2 view, each
// matched exactly against the finite catalog, then the affine catalog,
// else Infinite.  Deterministic order (by smallest vertex index).
std::vector<SphericalComponent> spherical_decomposition(
    const PresentationGraph& g);

bool is_spherical(const PresentationGraph& g);  // all labels finite, all components finite

// Numeric route, independent of the catalog matcher: signature of the
// matrix B with B_ss = 1, B_st = -cos(pi/m_st), and -1 for infinite pairs.
// Eigenvalues within tol of zero count as zero.
enum class CosineSignature { PositiveDefinite, PositiveSemidefinite, Indefinite };

struct CosineResult {
  CosineSignature signature = CosineSignature::PositiveDefinite;
  int kernel_dim = 0;               // zero eigenvalues (within tol)
  std::vector<double> eigenvalues;  // ascending
};

CosineResult cosine_signature(const PresentationGraph& g, double tol = 1e-9);

// Presentation-graph class predicates used by the inference rules.
struct ClassProfile {
  bool spherical = false;
  bool affine = false;           // every diagram component affine (Euclidean)
  bool fc = false;               // every clique spherical
  bool even = false;             // every finite label even
  bool two_dimensional = false;  // >= 1 edge, every triangle 1/a+1/b+1/c <= 1
  bool large = false;            // every finite label >= 3
  bool xl = false;               // >= 4
  bool xxl = false;              // >= 5
  bool raag = false;             // every finite label == 2
  bool free_graph = false;       // no edges
  bool two_two_free_two_dim = false;  // two_dimensional, no two incident 2-edges
  int dimension = 0;             // largest spherical subset; 0 only for the empty graph
};

ClassProfile class_profile(const PresentationGraph& g);

}  // namespace artin

#endif
