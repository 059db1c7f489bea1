#include "morseposet/homology.hpp"

#include <algorithm>
#include <map>

#include "morseposet/pi1.hpp"

namespace morseposet {

Coefficients Coefficients::field(long p) {
  if (p < 2) throw NonPrimeModulus("field modulus must be a prime, got " +
                                   std::to_string(p));
  for (long d = 2; d * d <= p; ++d)
    if (p % d == 0)
      throw NonPrimeModulus("field modulus must be a prime, got " +
                            std::to_string(p));
  Coefficients c;
  c.domain = Domain::PrimeField;
  c.prime = p;
  return c;
}

bool HomologyResult::trivial() const {
  for (long b : betti)
    if (b != 0) return false;
  for (const auto& t : torsion)
    if (!t.empty()) return false;
  return true;
}

bool HomologyResult::same_groups(const HomologyResult& a,
                                 const HomologyResult& b) {
  std::size_t n = std::max(a.betti.size(), b.betti.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (a.betti_at(i) != b.betti_at(i)) return false;
    std::vector<Integer> ta = i < a.torsion.size() ? a.torsion[i]
                                                   : std::vector<Integer>{};
    std::vector<Integer> tb = i < b.torsion.size() ? b.torsion[i]
                                                   : std::vector<Integer>{};
    if (ta != tb) return false;
  }
  return true;
}

std::vector<IntegerMatrix> boundary_matrices(const SimplicialComplex& k) {
  std::vector<IntegerMatrix> out;
  for (int d = 1; d <= k.dimension(); ++d) {
    const auto& rows = k.by_dim[d - 1];
    const auto& cols = k.by_dim[d];
    std::map<Simplex, std::size_t> row_index;
    for (std::size_t i = 0; i < rows.size(); ++i) row_index[rows[i]] = i;
    IntegerMatrix m(rows.size(), cols.size());
    for (std::size_t i = 0; i < rows.size(); ++i)
      m.row_labels.push_back(k.simplex_name(rows[i]));
    for (std::size_t j = 0; j < cols.size(); ++j) {
      m.col_labels.push_back(k.simplex_name(cols[j]));
      const Simplex& s = cols[j];
      int sign = 1;
      for (std::size_t v = 0; v < s.size(); ++v) {
        Simplex face = s;
        face.erase(face.begin() + static_cast<long>(v));
        m.at(row_index.at(face), j) = sign;
        sign = -sign;
      }
    }
    out.push_back(std::move(m));
  }
  return out;
}

namespace {

struct RankData {
  std::size_t rank = 0;
  std::vector<Integer> factors;  // only filled over Z
};

HomologyResult homology_from_boundaries(
    const std::vector<std::size_t>& dims,
    const std::vector<IntegerMatrix>& boundaries, Coefficients coeffs,
    bool reduced, bool nonempty) {
  HomologyResult h;
  h.coeffs = coeffs;
  h.reduced = reduced;
  if (dims.empty()) return h;

  std::vector<RankData> rk(boundaries.size());
  for (std::size_t i = 0; i < boundaries.size(); ++i) {
    if (coeffs.domain == Coefficients::Domain::Integers) {
      SmithResult s = smith_normal_form(boundaries[i]);
      rk[i].rank = s.rank;
      rk[i].factors = std::move(s.factors);
    } else {
      rk[i].rank = rank_mod_p(boundaries[i], coeffs.prime);
    }
  }

  auto rank_of = [&](std::size_t i) -> std::size_t {
    // rank of d_i; d_0 is the augmentation when reduced, zero otherwise.
    if (i == 0) return (reduced && nonempty) ? 1 : 0;
    if (i - 1 < rk.size()) return rk[i - 1].rank;
    return 0;
  };

  h.betti.resize(dims.size());
  h.torsion.resize(dims.size());
  for (std::size_t i = 0; i < dims.size(); ++i) {
    h.betti[i] = static_cast<long>(dims[i]) -
                 static_cast<long>(rank_of(i)) -
                 static_cast<long>(rank_of(i + 1));
    if (coeffs.domain == Coefficients::Domain::Integers && i < rk.size()) {
      for (const Integer& f : rk[i].factors)
        if (f > 1) h.torsion[i].push_back(f);
    }
  }
  return h;
}

}  // namespace

HomologyResult homology(const SimplicialComplex& k, Coefficients coeffs,
                        bool reduced) {
  std::vector<std::size_t> dims;
  for (int d = 0; d <= k.dimension(); ++d) dims.push_back(k.simplex_count(d));
  return homology_from_boundaries(dims, boundary_matrices(k), coeffs, reduced,
                                  !k.empty());
}

HomologyResult homology(const Subposet& s, Coefficients coeffs, bool reduced) {
  return homology(order_complex(s), coeffs, reduced);
}

HomologyResult homology(const Poset& p, Coefficients coeffs, bool reduced) {
  return homology(full_subposet(p), coeffs, reduced);
}

bool is_acyclic(const Subposet& s) {
  if (s.empty()) return false;
  return homology(s, Coefficients::integers(), /*reduced=*/true).trivial();
}

bool complex_has_sphere_homology(const SimplicialComplex& k, int d) {
  if (d == -1) return k.empty();
  if (k.empty()) return false;
  HomologyResult h = homology(k, Coefficients::integers(), /*reduced=*/true);
  for (std::size_t i = 0; i < std::max<std::size_t>(h.betti.size(), d + 1); ++i)
    if (h.betti_at(i) != (static_cast<int>(i) == d ? 1 : 0)) return false;
  for (const auto& t : h.torsion)
    if (!t.empty()) return false;
  return true;
}

bool has_sphere_homology(const Subposet& s, int d) {
  if (d < -1) throw PreconditionError("sphere dimension must be >= -1");
  if (d == -1) return s.empty();
  if (s.empty()) return false;
  return complex_has_sphere_homology(order_complex(s), d);
}

AdmissibilityResult admissibility(const Poset& p, AdmissibilityMode mode) {
  AdmissibilityResult out;
  out.aggregate = TriState::yes("all edges admissible");
  for (auto [w, x] : p.covers()) {
    Bitset set = p.down_set(x);
    set.reset(x);
    set.reset(w);
    Subposet s = make_subposet(p, set);

    TriState homological = TriState::unknown("");
    if (mode != AdmissibilityMode::One) {
      homological = is_acyclic(s)
                        ? TriState::yes("punctured open star is acyclic")
                        : TriState::no("punctured open star is not acyclic");
    }
    TriState one = TriState::unknown("");
    if (mode != AdmissibilityMode::Homological) {
      if (s.empty())
        one = TriState::no("punctured open star is empty");
      else if (component_count(p, set) != 1)
        one = TriState::no("punctured open star is disconnected");
      else {
        HomologyResult h = homology(s, Coefficients::integers(), true);
        if (h.betti_at(1) != 0 || h.torsion_count(1) != 0)
          one = TriState::no("nontrivial first homology");
        else
          one = edge_path_group_trivial(order_complex(s));
      }
    }

    TriState status;
    switch (mode) {
      case AdmissibilityMode::Homological: status = homological; break;
      case AdmissibilityMode::One: status = one; break;
      case AdmissibilityMode::Full: status = tri_and(homological, one); break;
    }
    if (!status.is_yes()) {
      TriState agg = status;
      agg.reason = "edge (" + p.id(w) + ", " + p.id(x) + "): " + status.reason;
      out.aggregate = tri_and(out.aggregate, agg);
    }
    out.edges.push_back({{p.id(w), p.id(x)}, std::move(status)});
  }
  return out;
}

bool is_closed_homology_manifold(const Poset& p) {
  SimplicialComplex k = order_complex(p);
  if (k.empty()) throw NotHomogeneous("order complex is empty");
  if (!k.homogeneous())
    throw NotHomogeneous("order complex is not homogeneous");
  const int n = k.dimension();
  for (int d = 0; d <= n; ++d)
    for (const auto& s : k.by_dim[d])
      if (!complex_has_sphere_homology(k.link(s), n - d - 1)) return false;
  return true;
}

long euler_characteristic(const Poset& p) {
  SimplicialComplex k = order_complex(p);
  long chi = 0;
  for (int d = 0; d <= k.dimension(); ++d)
    chi += (d % 2 == 0 ? 1 : -1) * static_cast<long>(k.simplex_count(d));
  return chi;
}

HomologyResult relative_homology_sets(const Poset& p, const Bitset& a,
                                      const Bitset& b) {
  if (!b.is_subset_of(a))
    throw NotSubposet("relative pair is not nested");
  // Basis per degree: chains inside `a` that are not entirely inside `b`,
  // each keyed by its index-sorted element tuple.
  std::vector<std::vector<std::vector<std::size_t>>> basis;
  for_each_chain(p, a, [&](const std::vector<std::size_t>& chain) {
    bool inside_b = true;
    for (std::size_t e : chain)
      if (!b.test(e)) {
        inside_b = false;
        break;
      }
    if (inside_b) return;
    std::vector<std::size_t> key = chain;
    std::sort(key.begin(), key.end());
    std::size_t d = key.size() - 1;
    if (basis.size() <= d) basis.resize(d + 1);
    basis[d].push_back(std::move(key));
  });
  for (auto& level : basis) std::sort(level.begin(), level.end());

  std::vector<std::size_t> dims;
  for (const auto& level : basis) dims.push_back(level.size());
  std::vector<IntegerMatrix> boundaries;
  for (std::size_t d = 1; d < basis.size(); ++d) {
    std::map<std::vector<std::size_t>, std::size_t> row_index;
    for (std::size_t i = 0; i < basis[d - 1].size(); ++i)
      row_index[basis[d - 1][i]] = i;
    IntegerMatrix m(basis[d - 1].size(), basis[d].size());
    for (std::size_t j = 0; j < basis[d].size(); ++j) {
      const auto& s = basis[d][j];
      int sign = 1;
      for (std::size_t v = 0; v < s.size(); ++v) {
        std::vector<std::size_t> face = s;
        face.erase(face.begin() + static_cast<long>(v));
        auto it = row_index.find(face);
        if (it != row_index.end()) m.at(it->second, j) = sign;
        sign = -sign;
      }
    }
    boundaries.push_back(std::move(m));
  }
  return homology_from_boundaries(dims, boundaries, Coefficients::integers(),
                                  /*reduced=*/false, !a.none());
}

HomologyResult relative_homology(const Poset& big, const Subposet& small) {
  Bitset b(big.size());
  if (small.parent == &big) {
    b = small.members;
  } else {
    for (const Id& id : small.member_ids()) {
      if (!big.contains(id))
        throw NotSubposet("member " + id + " is not in the ambient poset");
      b.set(big.index(id));
    }
  }
  return relative_homology_sets(big, big.full_set(), b);
}

}  // namespace morseposet
