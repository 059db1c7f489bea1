#pragma once

#include "morseposet/complex.hpp"
#include "morseposet/morse.hpp"
#include "morseposet/poset.hpp"

namespace fixtures {

using namespace morseposet;

// Chain 0 < 1 < 2.
inline Poset chain3() {
  return build_poset({{"0", "1"}, {"1", "2"}});
}

// Face poset of a single 1-simplex.
inline Poset seg() {
  return build_poset({{"v0", "e"}, {"v1", "e"}});
}

// Face poset of the boundary of the triangle.
inline Poset tri() {
  return build_poset({{"v0", "e01"},
                      {"v1", "e01"},
                      {"v1", "e12"},
                      {"v2", "e12"},
                      {"v0", "e20"},
                      {"v2", "e20"}});
}

// tri() plus a top cell covering all three edges.
inline Poset tri2() {
  return build_poset({{"v0", "e01"},
                      {"v1", "e01"},
                      {"v1", "e12"},
                      {"v2", "e12"},
                      {"v0", "e20"},
                      {"v2", "e20"},
                      {"e01", "T"},
                      {"e12", "T"},
                      {"e20", "T"}});
}

// Minimal finite model of the circle.
inline Poset circ4() {
  return build_poset({{"a", "c"}, {"b", "c"}, {"a", "d"}, {"b", "d"}});
}

// One maximum over three incomparable minima.
inline Poset fan3() {
  return build_poset({{"a", "x"}, {"b", "x"}, {"c", "x"}});
}

// Face poset of the path graph v0 - v1 - v2.
inline Poset path2() {
  return build_poset(
      {{"v0", "e01"}, {"v1", "e01"}, {"v1", "e12"}, {"v2", "e12"}});
}

// Boundary of the n-simplex: all n-subsets of n+1 vertices.
inline SimplicialComplex boundary_simplex(int n) {
  std::vector<Id> verts;
  for (int i = 0; i <= n; ++i) verts.push_back(std::to_string(i));
  std::vector<std::vector<Id>> facets;
  for (int skip = 0; skip <= n; ++skip) {
    std::vector<Id> facet;
    for (int i = 0; i <= n; ++i)
      if (i != skip) facet.push_back(verts[i]);
    facets.push_back(facet);
  }
  return SimplicialComplex::from_facets(facets);
}

// The 6-vertex triangulation of the projective plane.
inline SimplicialComplex rp2() {
  return SimplicialComplex::from_facets({{"1", "2", "4"},
                                         {"1", "2", "5"},
                                         {"1", "3", "4"},
                                         {"1", "3", "6"},
                                         {"1", "5", "6"},
                                         {"2", "3", "5"},
                                         {"2", "3", "6"},
                                         {"2", "4", "6"},
                                         {"3", "4", "5"},
                                         {"4", "5", "6"}});
}

// The running SEG function: f(v0) = 0, f(v1) = 2, f(e) = 1.
inline MorseFunction seg_function(const Poset& p) {
  return make_function(
      p, {{"v0", Rational(0)}, {"v1", Rational(2)}, {"e", Rational(1)}});
}

// Layered function on tri() integrating {(v0,e01), (v1,e12)}.
inline MorseFunction tri_layered(const Poset& p) {
  return make_function(p, {{"v2", Rational(0)},
                           {"v1", Rational(1)},
                           {"e12", Rational(1)},
                           {"v0", Rational(2)},
                           {"e01", Rational(2)},
                           {"e20", Rational(3)}});
}

inline bool same_poset(const Poset& a, const Poset& b) {
  return a.ids() == b.ids() && a.cover_id_pairs() == b.cover_id_pairs();
}

inline Poset disjoint_union(const Poset& a, const Poset& b,
                            const std::string& pa, const std::string& pb) {
  std::vector<Id> elements;
  std::vector<IdPair> covers;
  for (const Id& id : a.ids()) elements.push_back(pa + id);
  for (const Id& id : b.ids()) elements.push_back(pb + id);
  for (const auto& [u, v] : a.cover_id_pairs())
    covers.emplace_back(pa + u, pa + v);
  for (const auto& [u, v] : b.cover_id_pairs())
    covers.emplace_back(pb + u, pb + v);
  return Poset::build(std::move(elements), covers);
}

}  // namespace fixtures
