#include "morseposet/matching.hpp"

#include <algorithm>
#include <functional>
#include <optional>
#include <set>

#include "morseposet/homology.hpp"
#include "morseposet/pi1.hpp"

namespace morseposet {

namespace {

void validate(const Matching& m) {
  const Poset& p = *m.base;
  std::vector<int> used(p.size(), 0);
  for (auto [s, t] : m.pairs) {
    if (!p.is_cover(s, t))
      throw InvalidMatching("pair (" + p.id(s) + ", " + p.id(t) +
                            ") is not a cover edge");
    if (++used[s] > 1 || ++used[t] > 1)
      throw InvalidMatching("element " + p.id(used[s] > 1 ? s : t) +
                            " occurs in two pairs");
  }
}

std::vector<long> match_up_map(const Matching& m) {
  std::vector<long> up(m.base->size(), -1);
  for (auto [s, t] : m.pairs) up[s] = static_cast<long>(t);
  return up;
}

HeightProfile graded_heights(const Matching& m, const char* who) {
  HeightProfile hp = height_profile(*m.base);
  if (!hp.graded)
    throw NotGraded(std::string(who) + " needs a graded base poset");
  return hp;
}

void require_morse_matching(const Matching& m) {
  MorseMatchingCheck chk = is_morse_matching(m);
  if (!chk.morse) throw NotMorseMatching("matching is not Morse", chk.cycle);
}

}  // namespace

std::vector<IdPair> Matching::pair_ids() const {
  std::vector<IdPair> out;
  out.reserve(pairs.size());
  for (auto [s, t] : pairs) out.emplace_back(base->id(s), base->id(t));
  return out;
}

Matching make_matching(const Poset& p, const std::vector<IdPair>& pairs) {
  Matching m;
  m.base = &p;
  for (const auto& [s, t] : pairs)
    m.pairs.emplace_back(p.index(s), p.index(t));
  std::sort(m.pairs.begin(), m.pairs.end());
  validate(m);
  return m;
}

MorseMatchingCheck is_morse_matching(const Matching& m) {
  validate(m);
  const Poset& p = *m.base;
  std::vector<long> up = match_up_map(m);

  // H_M(X): matched covers point upward, all others downward.
  std::vector<std::vector<std::size_t>> succ(p.size());
  for (auto [u, v] : p.covers()) {
    if (up[u] == static_cast<long>(v))
      succ[u].push_back(v);
    else
      succ[v].push_back(u);
  }

  enum { White, Grey, Black };
  std::vector<int> colour(p.size(), White);
  std::vector<std::size_t> trail;
  MorseMatchingCheck out;

  std::function<bool(std::size_t)> dfs = [&](std::size_t v) -> bool {
    colour[v] = Grey;
    trail.push_back(v);
    for (std::size_t w : succ[v]) {
      if (colour[w] == Grey) {
        auto start = std::find(trail.begin(), trail.end(), w);
        for (auto it = start; it != trail.end(); ++it)
          out.cycle.push_back(p.id(*it));
        return true;
      }
      if (colour[w] == White && dfs(w)) return true;
    }
    colour[v] = Black;
    trail.pop_back();
    return false;
  };
  for (std::size_t v = 0; v < p.size(); ++v) {
    if (colour[v] == White && dfs(v)) {
      out.morse = false;
      return out;
    }
  }
  return out;
}

std::vector<Id> critical_set(const Matching& m) {
  validate(m);
  const Poset& p = *m.base;
  std::vector<bool> used(p.size(), false);
  for (auto [s, t] : m.pairs) used[s] = used[t] = true;
  std::vector<Id> out;
  for (std::size_t i = 0; i < p.size(); ++i)
    if (!used[i]) out.push_back(p.id(i));
  return out;
}

std::vector<MPath> enumerate_m_paths(const Matching& m,
                                     const std::vector<Id>& from,
                                     const Id& to) {
  require_morse_matching(m);
  const Poset& p = *m.base;
  HeightProfile hp = graded_heights(m, "M-path enumeration");
  std::vector<long> up = match_up_map(m);
  const std::size_t ito = p.index(to);

  std::vector<std::size_t> starts;
  for (const Id& id : from) starts.push_back(p.index(id));
  std::sort(starts.begin(), starts.end());
  starts.erase(std::unique(starts.begin(), starts.end()), starts.end());

  std::vector<MPath> out;
  MPath path;
  // H_M is acyclic, so no element repeats along a path and the walk ends.
  std::function<void(std::size_t)> walk = [&](std::size_t x) {
    if (x == ito) {
      MPath hit = path;
      hit.index = hp.height[path.xs.front()];
      out.push_back(std::move(hit));
      return;
    }
    if (up[x] < 0) return;
    std::size_t y = static_cast<std::size_t>(up[x]);
    for (std::size_t x2 : p.lower_covers(y)) {
      if (x2 == x) continue;
      path.ys.push_back(y);
      path.xs.push_back(x2);
      walk(x2);
      path.xs.pop_back();
      path.ys.pop_back();
    }
  };
  for (std::size_t s : starts) {
    path.xs.assign(1, s);
    path.ys.clear();
    walk(s);
  }
  return out;
}

Matching cancel_pair(const Matching& m, const Id& z, const Id& x) {
  const Poset& p = *m.base;
  require_morse_matching(m);
  const std::size_t iz = p.index(z), ix = p.index(x);

  std::vector<bool> used(p.size(), false);
  for (auto [s, t] : m.pairs) used[s] = used[t] = true;
  if (used[iz]) throw NotCritical(z + " is not critical");
  if (used[ix]) throw NotCritical(x + " is not critical");

  HeightProfile hp = graded_heights(m, "cancellation");
  if (hp.height[iz] != hp.height[ix] + 1)
    throw HeightMismatch("expected height(" + z + ") == height(" + x +
                         ") + 1");

  std::vector<Id> from;
  for (std::size_t w : p.lower_covers(iz)) from.push_back(p.id(w));
  std::vector<MPath> paths = enumerate_m_paths(m, from, x);
  if (paths.size() != 1)
    throw PathNotUnique("found " + std::to_string(paths.size()) +
                            " M-paths from the boundary of " + z + " to " + x,
                        paths.size());

  const MPath& gamma = paths[0];
  const std::size_t r = gamma.ys.size();
  Matching out;
  out.base = &p;
  std::set<std::pair<std::size_t, std::size_t>> pairs(m.pairs.begin(),
                                                      m.pairs.end());
  for (std::size_t i = 0; i < r; ++i)
    pairs.erase({gamma.xs[i], gamma.ys[i]});
  pairs.insert({gamma.xs[0], iz});
  for (std::size_t i = 1; i <= r; ++i)
    pairs.insert({gamma.xs[i], gamma.ys[i - 1]});
  out.pairs.assign(pairs.begin(), pairs.end());

  MorseMatchingCheck chk = is_morse_matching(out);
  if (!chk.morse)
    throw InternalError("cancellation along a unique M-path produced a cycle");
  return out;
}

TriState regularity(const Matching& m, RegularityMode mode) {
  require_morse_matching(m);
  const Poset& p = *m.base;
  HeightProfile hp = graded_heights(m, "regularity");

  std::vector<bool> used(p.size(), false);
  for (auto [s, t] : m.pairs) used[s] = used[t] = true;

  std::optional<TriState> pending;
  for (std::size_t x = 0; x < p.size(); ++x) {
    if (used[x]) continue;
    const int height = hp.height[x];
    Bitset u_hat = p.down_set(x);
    u_hat.reset(x);
    Subposet s = make_subposet(p, u_hat);
    if (!has_sphere_homology(s, height - 1))
      return TriState::no("critical " + p.id(x) + " of height " +
                          std::to_string(height) +
                          " lacks the homology of the matching sphere");
    if (mode == RegularityMode::Homotopy && height >= 3 && !pending) {
      // Up to height 2 the punctured down-set has dimension <= 1, where
      // sphere homology already pins the weak homotopy type. Above that a
      // pi1 certificate is needed on top of the homology.
      TriState pi1 = edge_path_group_trivial(order_complex(s));
      if (!pi1.is_yes())
        pending = TriState::unknown("critical " + p.id(x) +
                                    ": sphere model not certified (" +
                                    pi1.reason + ")");
    }
  }
  if (pending) return *pending;
  return TriState::yes(mode == RegularityMode::Homology
                           ? "every critical element has spherical homology"
                           : "every critical element has a certified sphere "
                             "model");
}

std::pair<Matching, std::vector<CancellationEntry>> optimize(const Matching& m) {
  require_morse_matching(m);
  graded_heights(m, "optimization");
  const Poset& p = *m.base;

  Matching current = m;
  std::vector<CancellationEntry> log;
  bool progressed = true;
  while (progressed) {
    progressed = false;
    HeightProfile hp = height_profile(p);
    std::vector<bool> used(p.size(), false);
    for (auto [s, t] : current.pairs) used[s] = used[t] = true;
    std::vector<std::size_t> crit;
    for (std::size_t i = 0; i < p.size(); ++i)
      if (!used[i]) crit.push_back(i);
    std::stable_sort(crit.begin(), crit.end(),
                     [&](std::size_t a, std::size_t b) {
                       return hp.height[a] < hp.height[b];
                     });

    for (std::size_t z : crit) {
      for (std::size_t x : crit) {
        if (hp.height[z] != hp.height[x] + 1) continue;
        std::vector<Id> from;
        for (std::size_t w : p.lower_covers(z)) from.push_back(p.id(w));
        std::vector<MPath> paths = enumerate_m_paths(current, from, p.id(x));
        if (paths.size() != 1) continue;
        current = cancel_pair(current, p.id(z), p.id(x));
        log.push_back({p.id(z), p.id(x), paths[0].ys.size()});
        progressed = true;
        break;
      }
      if (progressed) break;
    }
  }
  return {current, log};
}

}  // namespace morseposet
