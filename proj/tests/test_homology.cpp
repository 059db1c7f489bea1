#include <doctest.h>

#include <algorithm>

#include "morseposet/generate.hpp"
#include "morseposet/homology.hpp"
#include "support/fixtures.hpp"
#include "support/oracles.hpp"

using namespace morseposet;
using namespace fixtures;

namespace {

IntegerMatrix from_rows(const std::vector<std::vector<long>>& rows) {
  IntegerMatrix m(rows.size(), rows.empty() ? 0 : rows[0].size());
  for (std::size_t r = 0; r < m.rows; ++r)
    for (std::size_t c = 0; c < m.cols; ++c) m.at(r, c) = rows[r][c];
  return m;
}

IntegerMatrix multiply(const IntegerMatrix& a, const IntegerMatrix& b) {
  IntegerMatrix out(a.rows, b.cols);
  for (std::size_t r = 0; r < a.rows; ++r)
    for (std::size_t k = 0; k < a.cols; ++k)
      for (std::size_t c = 0; c < b.cols; ++c)
        out.at(r, c) += a.at(r, k) * b.at(k, c);
  return out;
}

bool zero(const IntegerMatrix& m) {
  return std::all_of(m.a.begin(), m.a.end(),
                     [](const Integer& v) { return v == 0; });
}

}  // namespace

TEST_SUITE("homology") {

TEST_CASE("order complex of fixtures") {
  SimplicialComplex chain = order_complex(chain3());
  CHECK(chain.simplex_count(0) == 3);
  CHECK(chain.simplex_count(1) == 3);
  CHECK(chain.simplex_count(2) == 1);

  SimplicialComplex circ = order_complex(circ4());
  CHECK(circ.dimension() == 1);
  CHECK(circ.simplex_count(0) == 4);
  CHECK(circ.simplex_count(1) == 4);

  Poset point = Poset::build({"p"}, {});
  CHECK(order_complex(point).total_simplices() == 1);
}

TEST_CASE("order complex simplices are exactly the chains") {
  Rng rng(9001);
  for (int i = 0; i < 20; ++i) {
    Poset p = random_poset(rng, 12);
    auto expected = oracles::brute_chains(p);
    SimplicialComplex k = order_complex(p);
    std::set<std::vector<Id>> got;
    for (int d = 0; d <= k.dimension(); ++d) {
      for (const auto& s : k.by_dim[d]) {
        std::vector<Id> names;
        for (int v : s) names.push_back(k.vertices[v]);
        std::sort(names.begin(), names.end());
        got.insert(names);
      }
    }
    std::set<std::vector<Id>> want;
    for (auto chain : expected) {
      std::sort(chain.begin(), chain.end());
      want.insert(chain);
    }
    REQUIRE(got == want);
  }
}

TEST_CASE("face poset of fixtures") {
  Poset s = face_poset(SimplicialComplex::from_facets({{"v0", "v1"}}));
  CHECK(s.size() == 3);
  CHECK(s.covers().size() == 2);

  Poset t = face_poset(boundary_simplex(2));
  CHECK(t.size() == 6);
  CHECK(t.covers().size() == 6);
  CHECK(height_profile(t).poset_height == 1);

  Poset t2 = face_poset(SimplicialComplex::from_facets({{"a", "b", "c"}}));
  CHECK(t2.size() == 7);
  CHECK(t2.covers().size() == 9);

  CHECK_THROWS_AS(face_poset(SimplicialComplex::from_facets({})), EmptyComplex);
}

TEST_CASE("order complex of the face poset is the barycentric subdivision") {
  // sd counts: vertices are the simplices; top cells are the maximal flags.
  SimplicialComplex tri_full = SimplicialComplex::from_facets({{"a", "b", "c"}});
  SimplicialComplex sd = order_complex(face_poset(tri_full));
  CHECK(sd.simplex_count(0) == tri_full.total_simplices());
  CHECK(sd.simplex_count(1) == 12);
  CHECK(sd.simplex_count(2) == 6);

  SimplicialComplex sd_boundary = order_complex(face_poset(boundary_simplex(2)));
  CHECK(sd_boundary.simplex_count(0) == 6);
  CHECK(sd_boundary.simplex_count(1) == 6);
  CHECK(sd_boundary.dimension() == 1);
}

TEST_CASE("boundary matrix conventions") {
  SimplicialComplex edge = SimplicialComplex::from_facets({{"a", "b"}});
  auto mats = boundary_matrices(edge);
  REQUIRE(mats.size() == 1);
  CHECK(mats[0].rows == 2);
  CHECK(mats[0].cols == 1);
  CHECK(mats[0].at(0, 0) == -1);
  CHECK(mats[0].at(1, 0) == 1);

  SimplicialComplex vertex = SimplicialComplex::from_facets({{"a"}});
  CHECK(boundary_matrices(vertex).empty());

  SimplicialComplex circ = order_complex(circ4());
  auto circ_mats = boundary_matrices(circ);
  REQUIRE(circ_mats.size() == 1);
  for (std::size_t c = 0; c < circ_mats[0].cols; ++c) {
    int plus = 0, minus = 0;
    for (std::size_t r = 0; r < circ_mats[0].rows; ++r) {
      if (circ_mats[0].at(r, c) == 1) ++plus;
      if (circ_mats[0].at(r, c) == -1) ++minus;
    }
    CHECK(plus == 1);
    CHECK(minus == 1);
  }
}

TEST_CASE("boundary of boundary vanishes") {
  Rng rng(9002);
  for (int i = 0; i < 20; ++i) {
    SimplicialComplex k = random_complex(rng, 6, 3, false);
    auto mats = boundary_matrices(k);
    for (std::size_t d = 1; d < mats.size(); ++d)
      CHECK(zero(multiply(mats[d - 1], mats[d])));
  }
}

TEST_CASE("smith normal form on pinned matrices") {
  SmithResult id2 = smith_normal_form(from_rows({{1, 0}, {0, 1}}));
  CHECK(id2.factors == std::vector<Integer>{1, 1});
  CHECK(id2.rank == 2);

  SmithResult zero22 = smith_normal_form(from_rows({{0, 0}, {0, 0}}));
  CHECK(zero22.factors.empty());
  CHECK(zero22.rank == 0);

  IntegerMatrix diag = from_rows({{2, 0}, {0, 3}});
  CHECK(oracles::invariant_factors_by_minors(diag) ==
        std::vector<Integer>{1, 6});
  SmithResult d = smith_normal_form(diag);
  CHECK(d.factors == std::vector<Integer>{1, 6});
}

TEST_CASE("smith factors match the minor-gcd oracle on random matrices") {
  Rng rng(9003);
  for (int i = 0; i < 40; ++i) {
    std::size_t r = 1 + rng() % 4, c = 1 + rng() % 4;
    IntegerMatrix m(r, c);
    for (auto& v : m.a) v = static_cast<long>(rng() % 9) - 4;
    auto oracle = oracles::invariant_factors_by_minors(m);
    SmithResult got = smith_normal_form(m);
    REQUIRE(got.factors == oracle);
  }
}

TEST_CASE("smith factors are stable under unimodular operations") {
  Rng rng(9004);
  for (int trial = 0; trial < 50; ++trial) {
    IntegerMatrix m(3, 3);
    for (auto& v : m.a) v = static_cast<long>(rng() % 7) - 3;
    SmithResult base = smith_normal_form(m);
    IntegerMatrix t = m;
    for (int ops = 0; ops < 4; ++ops) {
      std::size_t i = rng() % 3, j = rng() % 3;
      long k = static_cast<long>(rng() % 5) - 2;
      if (i == j) continue;
      if (rng() % 2 == 0)
        for (std::size_t c = 0; c < 3; ++c) t.at(i, c) += k * t.at(j, c);
      else
        for (std::size_t r = 0; r < 3; ++r) t.at(r, i) += k * t.at(r, j);
    }
    SmithResult after = smith_normal_form(t);
    REQUIRE(after.factors == base.factors);
  }
}

TEST_CASE("homology of fixtures") {
  HomologyResult chain = homology(chain3(), Coefficients::integers());
  CHECK(chain.betti == std::vector<long>{1, 0, 0});

  HomologyResult circ = homology(circ4(), Coefficients::integers());
  CHECK(circ.betti == std::vector<long>{1, 1});
  CHECK(circ.torsion_count(0) == 0);
  CHECK(circ.torsion_count(1) == 0);

  HomologyResult circ_red = homology(circ4(), Coefficients::integers(), true);
  CHECK(circ_red.betti == std::vector<long>{0, 1});
}

TEST_CASE("projective plane homology") {
  SimplicialComplex k = rp2();
  HomologyResult z = homology(k, Coefficients::integers());
  CHECK(z.betti == std::vector<long>{1, 0, 0});
  REQUIRE(z.torsion_count(1) == 1);
  CHECK(z.torsion[1][0] == 2);

  HomologyResult f2 = homology(k, Coefficients::field(2));
  CHECK(f2.betti == std::vector<long>{1, 1, 1});

  CHECK_THROWS_AS(homology(k, Coefficients::field(6)), NonPrimeModulus);
}

TEST_CASE("field and integer betti numbers are consistent") {
  Rng rng(9005);
  for (int i = 0; i < 15; ++i) {
    SimplicialComplex k = random_complex(rng, 6, 3, false);
    HomologyResult z = homology(k, Coefficients::integers());
    for (long p : {2L, 3L}) {
      HomologyResult fp = homology(k, Coefficients::field(p));
      for (std::size_t d = 0; d < z.betti.size(); ++d) {
        long extra = 0;
        if (d < z.torsion.size())
          for (const Integer& t : z.torsion[d])
            if (t % p == 0) ++extra;
        if (d >= 1 && d - 1 < z.torsion.size())
          for (const Integer& t : z.torsion[d - 1])
            if (t % p == 0) ++extra;
        REQUIRE(fp.betti_at(d) == z.betti[d] + extra);
      }
    }
  }
}

TEST_CASE("acyclicity and sphere homology") {
  Poset point = Poset::build({"p"}, {});
  CHECK(is_acyclic(full_subposet(point)));
  Poset empty = build_poset({});
  CHECK_FALSE(is_acyclic(full_subposet(empty)));
  Poset two = Poset::build({"a", "b"}, {});
  CHECK_FALSE(is_acyclic(full_subposet(two)));

  Poset c4 = circ4();
  CHECK(has_sphere_homology(full_subposet(c4), 1));
  CHECK_FALSE(has_sphere_homology(full_subposet(c4), 0));
  Poset f3 = fan3();
  CHECK_FALSE(has_sphere_homology(neighborhoods(f3, "x").u_hat, 0));
  CHECK(has_sphere_homology(full_subposet(empty), -1));
  CHECK_FALSE(has_sphere_homology(full_subposet(point), -1));
}

TEST_CASE("admissibility") {
  Poset s = seg();
  AdmissibilityResult seg_h = admissibility(s, AdmissibilityMode::Homological);
  CHECK(seg_h.aggregate.is_yes());
  for (const auto& e : seg_h.edges) CHECK(e.status.is_yes());

  Poset f = fan3();
  AdmissibilityResult fan_h = admissibility(f, AdmissibilityMode::Homological);
  CHECK(fan_h.aggregate.is_no());
  for (const auto& e : fan_h.edges) CHECK(e.status.is_no());

  Poset c = chain3();
  AdmissibilityResult chain_h = admissibility(c, AdmissibilityMode::Homological);
  CHECK(chain_h.aggregate.is_no());  // U^_1 - {0} is empty
  for (const auto& e : chain_h.edges) {
    if (e.edge == IdPair{"1", "2"}) CHECK(e.status.is_yes());
    if (e.edge == IdPair{"0", "1"}) CHECK(e.status.is_no());
  }

  AdmissibilityResult seg_full = admissibility(s, AdmissibilityMode::Full);
  CHECK(seg_full.aggregate.is_yes());
}

TEST_CASE("homologically admissible posets are down-wide and two-wide") {
  Rng rng(9006);
  int admissible_seen = 0;
  for (int i = 0; i < 40; ++i) {
    Poset p =
        (i % 2 == 0) ? random_face_poset(rng, 25) : random_poset(rng, 16);
    AdmissibilityResult a = admissibility(p, AdmissibilityMode::Homological);
    if (!a.aggregate.is_yes()) continue;
    ++admissible_seen;
    CHECK(is_down_wide(p).down_wide);
    CHECK(is_two_wide(p).two_wide);
  }
  CHECK(admissible_seen > 0);
}

TEST_CASE("closed homology manifold detection") {
  CHECK(is_closed_homology_manifold(circ4()));
  CHECK_FALSE(is_closed_homology_manifold(chain3()));
  CHECK_FALSE(is_closed_homology_manifold(seg()));
  CHECK(is_closed_homology_manifold(face_poset(rp2())));

  Poset mixed = disjoint_union(seg(), Poset::build({"q"}, {}), "s_", "p_");
  CHECK_THROWS_AS(is_closed_homology_manifold(mixed), NotHomogeneous);
}

TEST_CASE("euler characteristic") {
  CHECK(euler_characteristic(chain3()) == 1);
  CHECK(euler_characteristic(circ4()) == 0);
  CHECK(euler_characteristic(tri()) == 0);
}

TEST_CASE("euler characteristic equals the alternating betti sum") {
  Rng rng(9007);
  for (int i = 0; i < 15; ++i) {
    Poset p = random_poset(rng, 14);
    HomologyResult h = homology(p, Coefficients::integers());
    long chi = 0;
    for (std::size_t d = 0; d < h.betti.size(); ++d)
      chi += (d % 2 == 0 ? 1 : -1) * h.betti[d];
    CHECK(euler_characteristic(p) == chi);
  }
}

TEST_CASE("relative homology of contractible pairs vanishes") {
  Poset c = chain3();
  Bitset zero_only(c.size());
  zero_only.set(c.index("0"));
  CHECK(relative_homology(c, make_subposet(c, zero_only)).trivial());

  Poset s = seg();
  Bitset v0(s.size());
  v0.set(s.index("v0"));
  CHECK(relative_homology(s, make_subposet(s, v0)).trivial());

  Poset c4 = circ4();
  CHECK(relative_homology(c4, full_subposet(c4)).trivial());

  Poset stray = Poset::build({"zz"}, {});
  CHECK_THROWS_AS(relative_homology(c4, full_subposet(stray)), NotSubposet);
}

}  // TEST_SUITE
