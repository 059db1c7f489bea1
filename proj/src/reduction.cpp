#include "morseposet/reduction.hpp"

#include "morseposet/homology.hpp"
#include "morseposet/pi1.hpp"

namespace morseposet {

namespace {

bool is_beat_in(const Poset& p, const Bitset& members, std::size_t x) {
  Bitset u_hat = p.down_set(x) & members;
  u_hat.reset(x);
  if (u_hat.any() && p.maximum_of(u_hat).has_value()) return true;
  Bitset f_hat = p.up_set(x) & members;
  f_hat.reset(x);
  return f_hat.any() && p.minimum_of(f_hat).has_value();
}

}  // namespace

BeatPoints beat_points(const Poset& p) {
  BeatPoints out;
  for (std::size_t x = 0; x < p.size(); ++x) {
    Bitset u_hat = p.down_set(x);
    u_hat.reset(x);
    if (u_hat.any() && p.maximum_of(u_hat).has_value())
      out.down.push_back(p.id(x));
    Bitset f_hat = p.up_set(x);
    f_hat.reset(x);
    if (f_hat.any() && p.minimum_of(f_hat).has_value())
      out.up.push_back(p.id(x));
  }
  return out;
}

Subposet core(const Poset& p) {
  Bitset members = p.full_set();
  bool removed = true;
  while (removed) {
    removed = false;
    for (std::size_t x = members.find_first(); x != Bitset::npos;
         x = members.find_next(x)) {
      if (is_beat_in(p, members, x)) {
        members.reset(x);
        removed = true;
        break;
      }
    }
  }
  return make_subposet(p, members);
}

TriState is_homotopically_trivial(const Poset& p) {
  if (p.empty()) return TriState::no("empty poset");
  Subposet c = core(p);
  if (c.count() == 1) return TriState::yes("core is a point");
  std::size_t comps = component_count(p, c.members);
  if (comps != 1)
    return TriState::no("b0 = " + std::to_string(comps));
  HomologyResult h = homology(c, Coefficients::integers(), /*reduced=*/true);
  for (std::size_t i = 0; i < h.betti.size(); ++i) {
    if (h.betti[i] != 0)
      return TriState::no("nontrivial reduced H" + std::to_string(i));
    if (h.torsion_count(i) != 0)
      return TriState::no("torsion in H" + std::to_string(i));
  }
  TriState pi1 = edge_path_group_trivial(order_complex(c));
  if (pi1.is_yes())
    return TriState::yes("acyclic and simply connected");
  return TriState::unknown("acyclic, but pi1 triviality is not certified");
}

TriState is_gamma_point(const Poset& p, const Id& x) {
  std::size_t i = p.index(x);
  Bitset set = p.down_set(i) | p.up_set(i);
  set.reset(i);
  return is_homotopically_trivial(make_subposet(p, set).materialize());
}

}  // namespace morseposet
