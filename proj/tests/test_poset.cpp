#include <doctest.h>

#include "morseposet/generate.hpp"
#include "morseposet/poset.hpp"
#include "support/fixtures.hpp"
#include "support/oracles.hpp"

using namespace morseposet;
using namespace fixtures;

TEST_SUITE("poset") {

TEST_CASE("build: empty input gives the empty poset") {
  Poset p = build_poset({});
  CHECK(p.empty());
  CHECK(height_profile(p).poset_height == -1);
}

TEST_CASE("build: redundant edges are reduced away") {
  Poset p = build_poset({{"0", "1"}, {"1", "2"}, {"0", "2"}});
  CHECK(same_poset(p, chain3()));
  CHECK(p.covers().size() == 2);
}

TEST_CASE("build: duplicate edges are tolerated") {
  Poset p = build_poset({{"0", "1"}, {"0", "1"}, {"1", "2"}});
  CHECK(same_poset(p, chain3()));
}

TEST_CASE("build: cycles are rejected") {
  CHECK_THROWS_AS(build_poset({{"a", "c"}, {"c", "a"}}), CycleError);
  CHECK_THROWS_AS(build_poset({{"a", "a"}}), CycleError);
}

TEST_CASE("order_query") {
  Poset p = chain3();
  CHECK(order_query(p, "0", "2"));
  CHECK_FALSE(order_query(p, "2", "0"));
  CHECK_FALSE(order_query(circ4(), "a", "b"));
  CHECK_THROWS_AS(order_query(p, "0", "zz"), UnknownElement);
}

TEST_CASE("neighborhoods") {
  Poset p = seg();
  Neighborhoods n = neighborhoods(p, "e");
  CHECK(n.u.member_ids() == std::vector<Id>{"e", "v0", "v1"});
  CHECK(n.u_hat.member_ids() == std::vector<Id>{"v0", "v1"});
  CHECK(n.u.open);
  CHECK(n.u_hat.open);

  CHECK(neighborhoods(chain3(), "1").c_hat.member_ids() ==
        std::vector<Id>{"0", "2"});
  CHECK(neighborhoods(circ4(), "a").c_hat.member_ids() ==
        std::vector<Id>{"c", "d"});
  CHECK_THROWS_AS(neighborhoods(p, "nope"), UnknownElement);
}

TEST_CASE("height_profile on fixtures") {
  Poset p = chain3();
  HeightProfile hp = height_profile(p);
  CHECK(hp.height == std::vector<int>{0, 1, 2});
  CHECK(hp.poset_height == 2);
  CHECK(hp.graded);

  HeightProfile tri_hp = height_profile(tri());
  CHECK(tri_hp.poset_height == 1);
  CHECK(tri_hp.graded);
  for (std::size_t i = 0; i < tri().size(); ++i)
    CHECK(tri_hp.height[i] == (tri().id(i)[0] == 'e' ? 1 : 0));
}

TEST_CASE("gradedness agrees with maximal-chain enumeration") {
  // Every U_x homogeneous even though the heights of the maxima differ.
  Poset graded_mixed = build_poset({{"a", "x"}, {"a", "m"}, {"m", "y"}});
  CHECK(oracles::graded_by_enumeration(graded_mixed));
  CHECK(height_profile(graded_mixed).graded);

  // y covers both a height-1 and a height-0 element: U_y not homogeneous.
  Poset skewed = build_poset({{"a", "m"}, {"m", "y"}, {"b", "y"}});
  CHECK_FALSE(oracles::graded_by_enumeration(skewed));
  CHECK_FALSE(height_profile(skewed).graded);
}

TEST_CASE("is_two_wide on fixtures") {
  TwoWideResult chain = is_two_wide(chain3());
  CHECK_FALSE(chain.two_wide);
  REQUIRE(chain.witness.has_value());
  CHECK(*chain.witness == std::array<Id, 3>{"0", "1", "2"});

  CHECK(is_two_wide(tri2()).two_wide);
  CHECK(is_two_wide(tri()).two_wide);  // vacuous at height 1
}

TEST_CASE("two-wide agrees with the interval criterion on random posets") {
  Rng rng(7001);
  for (int i = 0; i < 200; ++i) {
    Poset p = random_poset(rng, 25);
    CHECK(is_two_wide(p).two_wide == oracles::two_wide_by_intervals(p));
  }
}

TEST_CASE("key_lemma_witness") {
  Poset p = tri2();
  CHECK(key_lemma_witness(p, "v0", "T") == std::pair<Id, Id>{"e01", "e20"});
  CHECK(key_lemma_witness(p, "v1", "T") == std::pair<Id, Id>{"e01", "e12"});
  CHECK_THROWS_AS(key_lemma_witness(chain3(), "0", "2"), PreconditionError);
  CHECK_THROWS_AS(key_lemma_witness(p, "e01", "T"), PreconditionError);
}

TEST_CASE("key lemma holds for every eligible pair of random two-wide posets") {
  Rng rng(7002);
  for (int i = 0; i < 50; ++i) {
    Poset p = random_two_wide_poset(rng, 25);
    for (std::size_t w = 0; w < p.size(); ++w) {
      for (std::size_t y = 0; y < p.size(); ++y) {
        if (w == y || !p.leq(w, y) || p.is_cover(w, y)) continue;
        auto [x1, x2] = key_lemma_witness(p, p.id(w), p.id(y));
        CHECK(x1 != x2);
        CHECK(p.is_cover(w, p.index(x1)));
        CHECK(p.is_cover(w, p.index(x2)));
        CHECK(p.leq(p.index(x1), y));
        CHECK(p.leq(p.index(x2), y));
      }
    }
  }
}

TEST_CASE("is_down_wide") {
  CHECK(is_down_wide(seg()).down_wide);
  DownWideResult chain = is_down_wide(chain3());
  CHECK_FALSE(chain.down_wide);
  CHECK(*chain.witness == "1");
  CHECK(is_down_wide(fan3()).down_wide);
}

TEST_CASE("components") {
  CHECK(components(chain3()).size() == 1);
  CHECK(components(disjoint_union(chain3(), chain3(), "l_", "r_")).size() == 2);
  CHECK(components(build_poset({})).empty());
}

TEST_CASE("transitive reduction is idempotent on random posets") {
  Rng rng(7003);
  for (int i = 0; i < 60; ++i) {
    Poset p = random_poset(rng, 25);
    Poset again = Poset::build(p.ids(), p.cover_id_pairs());
    CHECK(same_poset(p, again));
  }
}

TEST_CASE("minimal open sets are open and inherit down-wideness") {
  Rng rng(7004);
  for (int i = 0; i < 25; ++i) {
    Poset p = random_face_poset(rng, 25);
    REQUIRE(is_down_wide(p).down_wide);
    for (const Id& id : p.ids()) {
      Subposet u = neighborhoods(p, id).u;
      CHECK(u.open);
      CHECK(is_down_wide(u.materialize()).down_wide);
    }
  }
}

TEST_CASE("subposet materialization keeps the induced order") {
  Poset p = tri2();
  Bitset members(p.size());
  for (const Id& id : {"v0", "v1", "e01", "T"}) members.set(p.index(id));
  Poset q = make_subposet(p, members).materialize();
  CHECK(q.size() == 4);
  // e12 and e20 dropped: T now covers e01 only.
  CHECK(order_query(q, "e01", "T"));
  CHECK(q.is_cover(q.index("e01"), q.index("T")));
}

}  // TEST_SUITE
