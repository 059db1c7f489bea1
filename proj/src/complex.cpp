#include "morseposet/complex.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace morseposet {

SimplicialComplex SimplicialComplex::from_facets(
    const std::vector<std::vector<Id>>& facets) {
  SimplicialComplex k;
  std::set<Id> names;
  for (const auto& f : facets) names.insert(f.begin(), f.end());
  k.vertices.assign(names.begin(), names.end());
  std::map<Id, int> idx;
  for (std::size_t i = 0; i < k.vertices.size(); ++i)
    idx[k.vertices[i]] = static_cast<int>(i);

  std::vector<std::set<Simplex>> seen;
  for (const auto& f : facets) {
    std::set<int> verts;
    for (const auto& v : f) verts.insert(idx[v]);
    Simplex facet(verts.begin(), verts.end());
    const std::size_t m = facet.size();
    if (m == 0) continue;
    for (std::size_t mask = 1; mask < (std::size_t{1} << m); ++mask) {
      Simplex s;
      for (std::size_t j = 0; j < m; ++j)
        if (mask & (std::size_t{1} << j)) s.push_back(facet[j]);
      std::size_t d = s.size() - 1;
      if (seen.size() <= d) seen.resize(d + 1);
      seen[d].insert(std::move(s));
    }
  }
  for (auto& level : seen)
    k.by_dim.emplace_back(level.begin(), level.end());
  return k;
}

std::size_t SimplicialComplex::total_simplices() const {
  std::size_t n = 0;
  for (const auto& level : by_dim) n += level.size();
  return n;
}

std::vector<std::vector<Id>> SimplicialComplex::facets() const {
  std::vector<std::vector<Id>> out;
  for (int k = 0; k <= dimension(); ++k) {
    std::set<Simplex> faces_of_next;
    if (k + 1 <= dimension()) {
      for (const auto& s : by_dim[k + 1]) {
        for (std::size_t j = 0; j < s.size(); ++j) {
          Simplex f = s;
          f.erase(f.begin() + static_cast<long>(j));
          faces_of_next.insert(std::move(f));
        }
      }
    }
    for (const auto& s : by_dim[k]) {
      if (faces_of_next.count(s)) continue;
      std::vector<Id> names;
      for (int v : s) names.push_back(vertices[v]);
      out.push_back(std::move(names));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool SimplicialComplex::homogeneous() const {
  if (empty()) return true;
  const std::size_t top = by_dim.back()[0].size();
  for (const auto& f : facets())
    if (f.size() != top) return false;
  return true;
}

Id SimplicialComplex::simplex_name(const Simplex& s) const {
  Id name;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) name += ",";
    name += vertices[s[i]];
  }
  return name;
}

SimplicialComplex SimplicialComplex::link(const Simplex& s) const {
  std::vector<std::vector<Id>> pieces;
  for (const auto& level : by_dim) {
    for (const auto& u : level) {
      if (!std::includes(u.begin(), u.end(), s.begin(), s.end())) continue;
      Simplex t;
      std::set_difference(u.begin(), u.end(), s.begin(), s.end(),
                          std::back_inserter(t));
      if (t.empty()) continue;
      std::vector<Id> names;
      for (int v : t) names.push_back(vertices[v]);
      pieces.push_back(std::move(names));
    }
  }
  return from_facets(pieces);
}

void for_each_chain(
    const Poset& p, const Bitset& members,
    const std::function<void(const std::vector<std::size_t>&)>& fn) {
  std::vector<std::size_t> chain;
  std::function<void(std::size_t)> extend = [&](std::size_t last) {
    fn(chain);
    Bitset above = p.up_set(last) & members;
    above.reset(last);
    for (std::size_t w = above.find_first(); w != Bitset::npos;
         w = above.find_next(w)) {
      chain.push_back(w);
      extend(w);
      chain.pop_back();
    }
  };
  for (std::size_t v = members.find_first(); v != Bitset::npos;
       v = members.find_next(v)) {
    chain.assign(1, v);
    extend(v);
  }
}

SimplicialComplex order_complex(const Subposet& s) {
  SimplicialComplex k;
  const Poset& p = *s.parent;
  k.vertices = s.member_ids();
  std::vector<int> pos(p.size(), -1);
  {
    int j = 0;
    for (std::size_t i = s.members.find_first(); i != Bitset::npos;
         i = s.members.find_next(i))
      pos[i] = j++;
  }
  for_each_chain(p, s.members, [&](const std::vector<std::size_t>& chain) {
    Simplex simplex;
    simplex.reserve(chain.size());
    for (std::size_t e : chain) simplex.push_back(pos[e]);
    std::sort(simplex.begin(), simplex.end());
    std::size_t d = simplex.size() - 1;
    if (k.by_dim.size() <= d) k.by_dim.resize(d + 1);
    k.by_dim[d].push_back(std::move(simplex));
  });
  for (auto& level : k.by_dim) std::sort(level.begin(), level.end());
  return k;
}

SimplicialComplex order_complex(const Poset& p) {
  return order_complex(full_subposet(p));
}

Poset face_poset(const SimplicialComplex& k) {
  if (k.empty()) throw EmptyComplex("face poset of the empty complex");
  std::vector<Id> elements;
  std::vector<IdPair> covers;
  for (int d = 0; d <= k.dimension(); ++d) {
    for (const auto& s : k.by_dim[d]) {
      elements.push_back(k.simplex_name(s));
      if (d == 0) continue;
      for (std::size_t j = 0; j < s.size(); ++j) {
        Simplex f = s;
        f.erase(f.begin() + static_cast<long>(j));
        covers.emplace_back(k.simplex_name(f), k.simplex_name(s));
      }
    }
  }
  return Poset::build(std::move(elements), covers);
}

}  // namespace morseposet
