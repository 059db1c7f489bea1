#pragma once

#include <optional>

#include "morseposet/complex.hpp"
#include "morseposet/matrix.hpp"
#include "morseposet/tristate.hpp"

namespace morseposet {

struct NonPrimeModulus : Error {
  using Error::Error;
};
struct NotSubposet : Error {
  using Error::Error;
};

struct Coefficients {
  enum class Domain { Integers, PrimeField };
  Domain domain = Domain::Integers;
  long prime = 0;

  static Coefficients integers() { return {}; }
  static Coefficients field(long p);  // throws NonPrimeModulus
};

struct HomologyResult {
  Coefficients coeffs;
  bool reduced = false;
  std::vector<long> betti;                     // degree 0 .. dim
  std::vector<std::vector<Integer>> torsion;   // invariant factors > 1

  long betti_at(std::size_t i) const {
    return i < betti.size() ? betti[i] : 0;
  }
  std::size_t torsion_count(std::size_t i) const {
    return i < torsion.size() ? torsion[i].size() : 0;
  }
  bool trivial() const;  // all betti zero and no torsion

  /// Same groups, ignoring the degree ranges beyond both dimensions.
  static bool same_groups(const HomologyResult& a, const HomologyResult& b);
};

/// Simplicial boundary operators d_1 .. d_dim, with alternating signs over
/// the sorted vertex order. Entry [i-1] maps i-chains to (i-1)-chains.
std::vector<IntegerMatrix> boundary_matrices(const SimplicialComplex& k);

HomologyResult homology(const SimplicialComplex& k, Coefficients coeffs,
                        bool reduced = false);

HomologyResult homology(const Poset& p, Coefficients coeffs,
                        bool reduced = false);
HomologyResult homology(const Subposet& s, Coefficients coeffs,
                        bool reduced = false);

/// Paper convention: the empty subposet is not acyclic.
bool is_acyclic(const Subposet& s);

/// Reduced homology equals that of S^d; for d = -1 exactly the empty set.
bool has_sphere_homology(const Subposet& s, int d);
bool complex_has_sphere_homology(const SimplicialComplex& k, int d);

enum class AdmissibilityMode { Homological, One, Full };

struct EdgeAdmissibility {
  IdPair edge;  // (w, x) with w -< x
  TriState status;
};

struct AdmissibilityResult {
  std::vector<EdgeAdmissibility> edges;
  TriState aggregate;
};

AdmissibilityResult admissibility(const Poset& p, AdmissibilityMode mode);

/// Link condition over the order complex; requires a pure order complex.
bool is_closed_homology_manifold(const Poset& p);

/// Alternating chain count of the order complex.
long euler_characteristic(const Poset& p);

/// Homology of the quotient of order-complex chain complexes.
HomologyResult relative_homology(const Poset& big, const Subposet& small);

/// Relative homology of nested member sets b <= a inside p.
HomologyResult relative_homology_sets(const Poset& p, const Bitset& a,
                                      const Bitset& b);

}  // namespace morseposet
