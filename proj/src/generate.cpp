#include "morseposet/generate.hpp"

#include <algorithm>

namespace morseposet {

namespace {

int pick(Rng& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

Id element_name(int level, int i) {
  return "n" + std::to_string(level) + "_" + std::to_string(i);
}

Poset layered(Rng& rng, int max_elements, bool adjacent_only) {
  const int levels = pick(rng, 1, 4);
  std::vector<int> width(levels);
  int total = 0;
  for (int l = 0; l < levels; ++l) {
    width[l] = pick(rng, 1, 5);
    total += width[l];
  }
  while (total > max_elements) {
    for (int l = 0; l < levels && total > max_elements; ++l)
      if (width[l] > 1) {
        --width[l];
        --total;
      }
  }
  std::vector<Id> elements;
  std::vector<IdPair> covers;
  for (int l = 0; l < levels; ++l)
    for (int i = 0; i < width[l]; ++i) elements.push_back(element_name(l, i));
  for (int l = 1; l < levels; ++l) {
    for (int i = 0; i < width[l]; ++i) {
      int parents = pick(rng, 1, std::min(3, width[l - 1] + (adjacent_only ? 0 : l - 1)));
      for (int k = 0; k < parents; ++k) {
        int from_level = adjacent_only ? l - 1 : pick(rng, 0, l - 1);
        int j = pick(rng, 0, width[from_level] - 1);
        covers.emplace_back(element_name(from_level, j), element_name(l, i));
      }
    }
  }
  return Poset::build(std::move(elements), covers);
}

}  // namespace

Poset random_poset(Rng& rng, int max_elements) {
  return layered(rng, max_elements, /*adjacent_only=*/false);
}

Poset random_graded_poset(Rng& rng, int max_elements) {
  return layered(rng, max_elements, /*adjacent_only=*/true);
}

SimplicialComplex random_complex(Rng& rng, int max_vertices, int max_dim,
                                 bool connected) {
  const int nv = pick(rng, 2, std::max(2, max_vertices));
  std::vector<Id> names;
  for (int i = 0; i < nv; ++i) names.push_back("v" + std::to_string(i));
  std::vector<std::vector<Id>> facets;
  const int nf = pick(rng, 1, nv + 1);
  for (int f = 0; f < nf; ++f) {
    int size = pick(rng, 2, std::min(max_dim + 1, nv));
    std::vector<int> chosen;
    while (static_cast<int>(chosen.size()) < size) {
      int v = pick(rng, 0, nv - 1);
      if (std::find(chosen.begin(), chosen.end(), v) == chosen.end())
        chosen.push_back(v);
    }
    std::vector<Id> facet;
    for (int v : chosen) facet.push_back(names[v]);
    facets.push_back(std::move(facet));
  }
  SimplicialComplex k = SimplicialComplex::from_facets(facets);
  if (connected) {
    Poset fp = face_poset(k);
    auto comps = components(fp);
    while (comps.size() > 1) {
      // Bridge the first vertex of two components with an edge.
      facets.push_back({comps[0][0].substr(0, comps[0][0].find(',')),
                        comps[1][0].substr(0, comps[1][0].find(','))});
      k = SimplicialComplex::from_facets(facets);
      comps = components(face_poset(k));
    }
  }
  return k;
}

Poset random_face_poset(Rng& rng, int max_elements, bool connected) {
  for (;;) {
    SimplicialComplex k = random_complex(rng, 5, 3, connected);
    if (static_cast<int>(k.total_simplices()) <= max_elements)
      return face_poset(k);
  }
}

Poset random_two_wide_poset(Rng& rng, int max_elements) {
  for (;;) {
    Poset p;
    if (pick(rng, 0, 1) == 0) {
      // Height-one bipartite poset: two-wide vacuously.
      int bottom = pick(rng, 1, 5), top = pick(rng, 1, 5);
      std::vector<Id> elements;
      std::vector<IdPair> covers;
      for (int i = 0; i < bottom; ++i)
        elements.push_back("a" + std::to_string(i));
      for (int i = 0; i < top; ++i) elements.push_back("b" + std::to_string(i));
      for (int i = 0; i < top; ++i) {
        int deg = pick(rng, 1, bottom);
        for (int k = 0; k < deg; ++k)
          covers.emplace_back("a" + std::to_string(pick(rng, 0, bottom - 1)),
                              "b" + std::to_string(i));
      }
      p = Poset::build(std::move(elements), covers);
    } else {
      p = random_face_poset(rng, max_elements);
    }
    if (static_cast<int>(p.size()) <= max_elements && is_two_wide(p).two_wide)
      return p;
  }
}

MorseFunction random_morse_function(Rng& rng, const Poset& p) {
  HeightProfile hp = height_profile(p);
  MorseFunction f;
  f.base = &p;
  f.values.resize(p.size());
  for (std::size_t i = 0; i < p.size(); ++i)
    f.values[i] = Rational(hp.height[i]);
  if (p.covers().empty()) return f;

  const int mutations = pick(rng, 0, static_cast<int>(p.covers().size()));
  for (int k = 0; k < mutations; ++k) {
    auto [w, x] = p.covers()[pick(rng, 0, static_cast<int>(p.covers().size()) - 1)];
    Rational old = f.values[w];
    // Raise the lower endpoint to or above the upper one.
    f.values[w] = f.values[x] + Rational(pick(rng, 0, 1));
    if (!is_morse(f).morse) f.values[w] = old;
  }
  // Random positive affine reparametrization preserves everything.
  static const Rational scales[] = {Rational(1), Rational(2), Rational(1, 2)};
  Rational scale = scales[pick(rng, 0, 2)];
  Rational shift = Rational(pick(rng, -3, 3));
  for (auto& v : f.values) v = scale * v + shift;
  return f;
}

Matching random_morse_matching(Rng& rng, const Poset& p) {
  auto covers = p.covers();
  std::shuffle(covers.begin(), covers.end(), rng);
  Matching m;
  m.base = &p;
  std::vector<bool> used(p.size(), false);
  for (auto [s, t] : covers) {
    if (used[s] || used[t]) continue;
    m.pairs.emplace_back(s, t);
    std::sort(m.pairs.begin(), m.pairs.end());
    if (is_morse_matching(m).morse) {
      used[s] = used[t] = true;
    } else {
      m.pairs.erase(std::find(m.pairs.begin(), m.pairs.end(),
                              std::make_pair(s, t)));
    }
  }
  return m;
}

}  // namespace morseposet
