#include <doctest.h>

#include <algorithm>

#include "morseposet/generate.hpp"
#include "morseposet/homology.hpp"
#include "morseposet/morse.hpp"
#include "support/fixtures.hpp"

using namespace morseposet;
using namespace fixtures;

namespace {

MorseFunction height_function(const Poset& p) {
  HeightProfile hp = height_profile(p);
  MorseFunction f;
  f.base = &p;
  for (int h : hp.height) f.values.push_back(Rational(h));
  return f;
}

// Regular value creating a component: y has a single lower cover w whose
// value is above f(y), so reaching f(y) drags in a detached pair.
Poset not_down_wide_fixture() {
  return build_poset({{"w", "y"}, {"a", "z"}, {"y", "z"}});
}

MorseFunction not_down_wide_function(const Poset& p) {
  return make_function(p, {{"a", Rational(0)},
                           {"y", Rational(1)},
                           {"w", Rational(2)},
                           {"z", Rational(3)}});
}

}  // namespace

TEST_SUITE("morse") {

TEST_CASE("is_morse") {
  for (const Poset& p : {chain3(), circ4(), tri2()})
    CHECK(is_morse(height_function(p)).morse);

  Poset s = seg();
  CHECK(is_morse(seg_function(s)).morse);

  MorseFunction bad = make_function(
      s, {{"v0", Rational(2)}, {"v1", Rational(2)}, {"e", Rational(1)}});
  MorseCheck chk = is_morse(bad);
  CHECK_FALSE(chk.morse);
  REQUIRE(chk.violations.size() == 1);
  CHECK(chk.violations[0].element == "e");
  CHECK(chk.violations[0].direction == "down");
}

TEST_CASE("critical points") {
  Poset c4 = circ4();
  CHECK(critical_points(height_function(c4)).size() == 4);

  Poset s = seg();
  CHECK(critical_points(seg_function(s)) == std::vector<Id>{"v0"});

  Poset t = tri();
  CHECK(critical_points(tri_layered(t)) == std::vector<Id>{"e20", "v2"});

  MorseFunction bad = make_function(
      s, {{"v0", Rational(2)}, {"v1", Rational(2)}, {"e", Rational(1)}});
  CHECK_THROWS_AS(critical_points(bad), NotMorse);
}

TEST_CASE("exclusion condition") {
  Poset c4 = circ4();
  CHECK(satisfies_exclusion(height_function(c4)).ok);  // all critical
  CHECK(satisfies_exclusion(seg_function(seg())).ok);
}

TEST_CASE("exclusion holds for random Morse functions on two-wide posets") {
  Rng rng(10001);
  for (int i = 0; i < 60; ++i) {
    Poset p = random_two_wide_poset(rng, 25);
    MorseFunction f = random_morse_function(rng, p);
    REQUIRE(is_morse(f).morse);
    CHECK(satisfies_exclusion(f).ok);
  }
}

TEST_CASE("sublevels") {
  Poset s = seg();
  MorseFunction f = seg_function(s);
  CHECK(sublevel(f, Rational(0)).member_ids() == std::vector<Id>{"v0"});
  CHECK(sublevel(f, Rational(1)).member_ids() ==
        std::vector<Id>{"e", "v0", "v1"});
  CHECK(sublevel(f, Rational(-1)).empty());
  CHECK(sublevel(f, Rational(1)).open);
}

TEST_CASE("sublevel monotonicity on random functions") {
  Rng rng(10002);
  for (int i = 0; i < 25; ++i) {
    Poset p = random_two_wide_poset(rng, 20);
    MorseFunction f = random_morse_function(rng, p);
    std::vector<Rational> values = f.values;
    std::sort(values.begin(), values.end());
    Bitset prev(p.size());
    for (const Rational& a : values) {
      Subposet s = sublevel(f, a);
      CHECK(prev.is_subset_of(s.members));
      CHECK(s.open);
      prev = s.members;
    }
  }
}

TEST_CASE("make_injective fixes injective input") {
  Poset s = seg();
  MorseFunction f = seg_function(s);
  MorseFunction g = make_injective(f);
  CHECK(g.values == f.values);
}

TEST_CASE("make_injective on a constant antichain") {
  Poset p = Poset::build({"a", "b", "c"}, {});
  MorseFunction f = make_function(
      p, {{"a", Rational(0)}, {"b", Rational(0)}, {"c", Rational(0)}});
  MorseFunction g = make_injective(f);
  std::vector<Rational> vals = g.values;
  std::sort(vals.begin(), vals.end());
  CHECK(std::adjacent_find(vals.begin(), vals.end()) == vals.end());
  CHECK(critical_points(g).size() == 3);
}

TEST_CASE("make_injective keeps a tied matched pair matched") {
  Poset s = seg();
  MorseFunction f = make_function(
      s, {{"v0", Rational(0)}, {"v1", Rational(1)}, {"e", Rational(1)}});
  REQUIRE(is_morse(f).morse);
  MorseFunction g = make_injective(f);
  CHECK(g.values[s.index("e")] < g.values[s.index("v1")]);
  CHECK(matching_from_function(g).pair_ids() ==
        std::vector<IdPair>{{"v1", "e"}});
}

TEST_CASE("make_injective preserves matching, criticality and sublevels") {
  Rng rng(10003);
  for (int i = 0; i < 40; ++i) {
    Poset p = random_two_wide_poset(rng, 20);
    MorseFunction f = random_morse_function(rng, p);
    MorseFunction g = make_injective(f);
    REQUIRE(is_morse(g).morse);
    {
      std::vector<Rational> vals = g.values;
      std::sort(vals.begin(), vals.end());
      REQUIRE(std::adjacent_find(vals.begin(), vals.end()) == vals.end());
    }
    CHECK(critical_points(f) == critical_points(g));
    CHECK(matching_from_function(f).pairs == matching_from_function(g).pairs);
    for (const Rational& a : f.values) {
      Rational refined = a;
      for (std::size_t e = 0; e < p.size(); ++e)
        if (f.values[e] <= a && g.values[e] > refined) refined = g.values[e];
      CHECK(sublevel(f, a).members == sublevel(g, refined).members);
    }
  }
}

TEST_CASE("matching_from_function on fixtures") {
  Poset c4 = circ4();
  CHECK(matching_from_function(height_function(c4)).pairs.empty());

  Poset s = seg();
  CHECK(matching_from_function(seg_function(s)).pair_ids() ==
        std::vector<IdPair>{{"v1", "e"}});

  Poset t = tri();
  CHECK(matching_from_function(tri_layered(t)).pair_ids() ==
        std::vector<IdPair>{{"v0", "e01"}, {"v1", "e12"}});
}

TEST_CASE("function_from_matching on fixtures") {
  Poset c = chain3();
  Matching empty{&c, {}};
  MorseFunction f = function_from_matching(empty);
  CHECK(f.values == std::vector<Rational>{0, 1, 2});

  Poset t = tri();
  Matching m = make_matching(t, {{"v0", "e01"}, {"v1", "e12"}});
  MorseFunction g = function_from_matching(m);
  CHECK(g.values[t.index("v2")] == 0);
  CHECK(g.values[t.index("v1")] == 1);
  CHECK(g.values[t.index("e12")] == 1);
  CHECK(g.values[t.index("v0")] == 2);
  CHECK(g.values[t.index("e01")] == 2);
  CHECK(g.values[t.index("e20")] == 3);

  Matching cyclic =
      make_matching(t, {{"v0", "e01"}, {"v1", "e12"}, {"v2", "e20"}});
  CHECK_THROWS_AS(function_from_matching(cyclic), NotMorseMatching);
}

TEST_CASE("integration produces order-preserving exclusion functions") {
  Rng rng(10004);
  for (int i = 0; i < 50; ++i) {
    Poset p = random_graded_poset(rng, 25);
    Matching m = random_morse_matching(rng, p);
    MorseFunction f = function_from_matching(m);
    REQUIRE(is_morse(f).morse);
    CHECK(satisfies_exclusion(f).ok);
    for (auto [u, v] : p.covers()) CHECK(f.values[u] <= f.values[v]);
    // equality along covers exactly on matched pairs
    for (auto [u, v] : p.covers()) {
      bool matched = std::find(m.pairs.begin(), m.pairs.end(),
                               std::make_pair(u, v)) != m.pairs.end();
      CHECK((f.values[u] == f.values[v]) == matched);
    }
    Matching back = matching_from_function(f);
    CHECK(back.pairs == m.pairs);
    CHECK(critical_set(back) == critical_set(m));
    CHECK(critical_points(f) == critical_set(m));
  }
}

TEST_CASE("doubling a Morse function keeps its matching") {
  Rng rng(10005);
  for (int i = 0; i < 20; ++i) {
    Poset p = random_two_wide_poset(rng, 18);
    MorseFunction f = random_morse_function(rng, p);
    MorseFunction doubled = f;
    for (auto& v : doubled.values) v *= 2;
    REQUIRE(is_morse(doubled).morse);
    CHECK(matching_from_function(f).pairs ==
          matching_from_function(doubled).pairs);
  }
}

TEST_CASE("filtration events on the segment") {
  Poset s = seg();
  std::vector<FiltrationEvent> events = filtration_events(seg_function(s));
  REQUIRE(events.size() == 3);
  CHECK(events[0].kind == FiltrationEvent::Kind::CriticalAdjunction);
  CHECK(events[0].cell == "v0");
  CHECK(events[0].boundary.empty());
  CHECK(events[0].threshold == 0);
  CHECK(events[1].kind == FiltrationEvent::Kind::BeatPair);
  CHECK(events[1].v == "e");
  CHECK(events[1].w == "v1");
  CHECK(events[1].threshold == 1);
  CHECK(events[2].kind == FiltrationEvent::Kind::NoChange);
}

TEST_CASE("filtration events on the circle") {
  Poset c4 = circ4();
  std::vector<FiltrationEvent> events =
      filtration_events(height_function(c4));
  REQUIRE(events.size() == 4);
  int adjunctions = 0;
  for (const auto& ev : events) {
    REQUIRE(ev.kind == FiltrationEvent::Kind::CriticalAdjunction);
    ++adjunctions;
    if (ev.cell == "c" || ev.cell == "d")
      CHECK(ev.boundary == std::vector<Id>{"a", "b"});
  }
  CHECK(adjunctions == 4);

  CHECK(filtration_events(height_function(build_poset({}))).empty());
}

TEST_CASE("down-wide filtrations have no anomalies") {
  Rng rng(10006);
  for (int i = 0; i < 30; ++i) {
    Poset p = random_face_poset(rng, 25);
    Matching m = random_morse_matching(rng, p);
    MorseFunction f = function_from_matching(m);
    for (const auto& ev : filtration_events(f)) {
      REQUIRE(ev.kind != FiltrationEvent::Kind::Anomaly);
      if (ev.kind == FiltrationEvent::Kind::BeatPair)
        CHECK(ev.b0_after <= ev.b0_before);
    }
  }
}

TEST_CASE("filtration flags the non-down-wide counterexample") {
  Poset p = not_down_wide_fixture();
  MorseFunction f = not_down_wide_function(p);
  REQUIRE(is_morse(f).morse);
  REQUIRE(satisfies_exclusion(f).ok);
  std::vector<FiltrationEvent> events = filtration_events(f);
  bool anomaly_with_jump = false;
  for (const auto& ev : events)
    if (ev.kind == FiltrationEvent::Kind::Anomaly &&
        ev.b0_after > ev.b0_before)
      anomaly_with_jump = true;
  CHECK(anomaly_with_jump);
}

TEST_CASE("component births") {
  Poset s = seg();
  std::vector<ComponentBirth> births = component_births(seg_function(s));
  REQUIRE(births.size() == 1);
  CHECK(births[0].value == 0);
  CHECK(births[0].b0_after == 1);

  Poset two = disjoint_union(seg(), seg(), "l_", "r_");
  MorseFunction f = make_function(two, {{"l_v0", Rational(0)},
                                        {"l_v1", Rational(2)},
                                        {"l_e", Rational(1)},
                                        {"r_v0", Rational(10)},
                                        {"r_v1", Rational(12)},
                                        {"r_e", Rational(11)}});
  std::vector<ComponentBirth> both = component_births(f);
  REQUIRE(both.size() == 2);
  CHECK(both[0].value == 0);
  CHECK(both[0].b0_after == 1);
  CHECK(both[1].value == 10);
  CHECK(both[1].b0_after == 2);

  Poset point = Poset::build({"p"}, {});
  MorseFunction fp = make_function(point, {{"p", Rational(0)}});
  REQUIRE(component_births(fp).size() == 1);
}

TEST_CASE("component births reject non-down-wide bases") {
  Poset p = not_down_wide_fixture();
  MorseFunction f = not_down_wide_function(p);
  CHECK_THROWS_AS(component_births(f), HypothesisViolation);
}

}  // TEST_SUITE
