#pragma once

#include <functional>
#include <vector>

#include "morseposet/poset.hpp"

namespace morseposet {

struct EmptyComplex : Error {
  using Error::Error;
};
struct NotHomogeneous : Error {
  using Error::Error;
};

using Simplex = std::vector<int>;  // sorted vertex indices

/// An abstract simplicial complex over named vertices. Simplices are stored
/// per dimension as sorted vertex-index tuples, closed under faces and
/// deduplicated; the basis order within each dimension is lexicographic so
/// boundary matrices are reproducible.
struct SimplicialComplex {
  std::vector<Id> vertices;                   // sorted unique names
  std::vector<std::vector<Simplex>> by_dim;   // by_dim[k] = k-simplices

  static SimplicialComplex from_facets(const std::vector<std::vector<Id>>& facets);

  int dimension() const { return static_cast<int>(by_dim.size()) - 1; }
  bool empty() const { return by_dim.empty(); }
  std::size_t simplex_count(int k) const {
    return (k >= 0 && k <= dimension()) ? by_dim[k].size() : 0;
  }
  std::size_t total_simplices() const;

  /// All maximal simplices, each as sorted vertex names.
  std::vector<std::vector<Id>> facets() const;

  /// true iff all facets share one dimension (the complex is pure).
  bool homogeneous() const;

  Id simplex_name(const Simplex& s) const;

  /// Link of `s`: all t disjoint from s with s u t in the complex.
  SimplicialComplex link(const Simplex& s) const;
};

/// Order complex K(p): k-simplices are the (k+1)-element chains of p.
SimplicialComplex order_complex(const Poset& p);
SimplicialComplex order_complex(const Subposet& s);

/// Face poset D(k): simplices ordered by inclusion; covers are
/// codimension-1 inclusions. Element ids are comma-joined vertex names.
Poset face_poset(const SimplicialComplex& k);

/// Visits every nonempty chain within `members` once (elements in
/// increasing poset order).
void for_each_chain(const Poset& p, const Bitset& members,
                    const std::function<void(const std::vector<std::size_t>&)>& fn);

}  // namespace morseposet
