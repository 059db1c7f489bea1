#include "morseposet/morse.hpp"

#include <algorithm>
#include <map>
#include <queue>

namespace morseposet {

namespace {

struct ExcCounts {
  std::vector<int> up, down;  // exceptional covers above / below each element
};

ExcCounts exceptional_counts(const MorseFunction& f) {
  const Poset& p = *f.base;
  ExcCounts c{std::vector<int>(p.size(), 0), std::vector<int>(p.size(), 0)};
  for (auto [w, x] : p.covers()) {
    if (f.values[w] >= f.values[x]) {
      ++c.up[w];
      ++c.down[x];
    }
  }
  return c;
}

void require_morse(const MorseFunction& f) {
  MorseCheck chk = is_morse(f);
  if (!chk.morse)
    throw NotMorse("function is not Morse (first violation at " +
                   chk.violations.front().element + ", " +
                   chk.violations.front().direction + ")");
}

bool is_critical_at(const ExcCounts& c, std::size_t x) {
  return c.up[x] == 0 && c.down[x] == 0;
}

}  // namespace

MorseFunction make_function(const Poset& p,
                            const std::vector<std::pair<Id, Rational>>& vals) {
  MorseFunction f;
  f.base = &p;
  f.values.assign(p.size(), Rational(0));
  std::vector<bool> seen(p.size(), false);
  for (const auto& [id, v] : vals) {
    std::size_t i = p.index(id);
    if (seen[i]) throw PreconditionError("duplicate value for element " + id);
    seen[i] = true;
    f.values[i] = v;
  }
  for (std::size_t i = 0; i < p.size(); ++i)
    if (!seen[i])
      throw PreconditionError("element " + p.id(i) + " has no value");
  return f;
}

MorseCheck is_morse(const MorseFunction& f) {
  const Poset& p = *f.base;
  ExcCounts c = exceptional_counts(f);
  MorseCheck out;
  for (std::size_t x = 0; x < p.size(); ++x) {
    if (c.up[x] > 1) out.violations.push_back({p.id(x), "up"});
    if (c.down[x] > 1) out.violations.push_back({p.id(x), "down"});
  }
  out.morse = out.violations.empty();
  return out;
}

std::vector<Id> critical_points(const MorseFunction& f) {
  require_morse(f);
  const Poset& p = *f.base;
  ExcCounts c = exceptional_counts(f);
  std::vector<Id> out;
  for (std::size_t x = 0; x < p.size(); ++x)
    if (is_critical_at(c, x)) out.push_back(p.id(x));
  return out;
}

ExclusionCheck satisfies_exclusion(const MorseFunction& f) {
  require_morse(f);
  const Poset& p = *f.base;
  ExcCounts c = exceptional_counts(f);
  for (std::size_t x = 0; x < p.size(); ++x)
    if (c.up[x] == 1 && c.down[x] == 1)
      return ExclusionCheck{false, p.id(x)};
  return ExclusionCheck{};
}

Subposet sublevel(const MorseFunction& f, const Rational& a) {
  require_morse(f);
  const Poset& p = *f.base;
  Bitset members(p.size());
  for (std::size_t x = 0; x < p.size(); ++x)
    if (f.values[x] <= a) members |= p.down_set(x);
  return make_subposet(p, members, /*open=*/true);
}

MorseFunction make_injective(const MorseFunction& f) {
  require_morse(f);
  const Poset& p = *f.base;
  HeightProfile hp = height_profile(p);

  // Tie constraints: an exceptional cover with equal values is a matched
  // pair (source below, target above); the target must receive the smaller
  // perturbed value so the pair survives. Morse bounds make these
  // constraints a disjoint union of descending chains.
  std::vector<long> target_to_source(p.size(), -1);
  std::vector<int> constrained_in(p.size(), 0);
  for (auto [w, x] : p.covers()) {
    if (f.values[w] == f.values[x]) {
      target_to_source[x] = static_cast<long>(w);
      ++constrained_in[w];
    }
  }

  std::map<Rational, std::vector<std::size_t>> classes;
  for (std::size_t x = 0; x < p.size(); ++x) classes[f.values[x]].push_back(x);

  MorseFunction g;
  g.base = &p;
  g.values.assign(p.size(), Rational(0));

  auto it = classes.begin();
  while (it != classes.end()) {
    const Rational& value = it->first;
    const std::vector<std::size_t>& cls = it->second;
    auto next = std::next(it);
    Rational gap = (next != classes.end()) ? Rational(next->first - value)
                                           : Rational(1);

    // Kahn over the in-class constraint chains; free elements released by
    // (height, identifier) so the order refines a linear extension.
    auto higher = [&](std::size_t a, std::size_t b) {
      return std::make_pair(hp.height[a], a) > std::make_pair(hp.height[b], b);
    };
    std::priority_queue<std::size_t, std::vector<std::size_t>,
                        decltype(higher)>
        ready(higher);
    for (std::size_t x : cls)
      if (constrained_in[x] == 0) ready.push(x);
    std::vector<std::size_t> order;
    while (!ready.empty()) {
      std::size_t x = ready.top();
      ready.pop();
      order.push_back(x);
      long s = target_to_source[x];
      if (s >= 0 && f.values[s] == value) ready.push(static_cast<std::size_t>(s));
    }
    if (order.size() != cls.size())
      throw InternalError("tie-break constraints are cyclic");

    const std::size_t k = order.size();
    for (std::size_t j = 0; j < k; ++j)
      g.values[order[j]] =
          value + gap * Rational(static_cast<long>(j), static_cast<long>(k));
    it = next;
  }
  return g;
}

Matching matching_from_function(const MorseFunction& f) {
  ExclusionCheck ex = satisfies_exclusion(f);
  if (!ex.ok)
    throw ExclusionViolated("Exclusion condition fails at " + *ex.violator);
  const Poset& p = *f.base;
  Matching m;
  m.base = &p;
  for (auto [w, x] : p.covers())
    if (f.values[w] >= f.values[x]) m.pairs.emplace_back(w, x);
  MorseMatchingCheck chk = is_morse_matching(m);
  if (!chk.morse)
    throw InternalError("induced matching of an exclusion-satisfying Morse "
                        "function is cyclic");
  return m;
}

MorseFunction function_from_matching(const Matching& m) {
  const Poset& p = *m.base;
  MorseMatchingCheck chk = is_morse_matching(m);
  if (!chk.morse) throw NotMorseMatching("matching is not Morse", chk.cycle);
  HeightProfile hp = height_profile(p);
  if (!hp.graded)
    throw NotGraded("integration needs a graded base poset");

  // Condense matched pairs; unmatched covers become upward edges.
  std::vector<std::size_t> node(p.size());
  std::vector<long> match_up(p.size(), -1);
  for (std::size_t i = 0; i < p.size(); ++i) node[i] = i;
  for (auto [s, t] : m.pairs) {
    node[t] = s;
    match_up[s] = static_cast<long>(t);
  }
  std::map<std::size_t, std::vector<std::size_t>> succ;
  std::map<std::size_t, int> indeg;
  for (std::size_t i = 0; i < p.size(); ++i) indeg[node[i]];
  for (auto [u, v] : p.covers()) {
    if (match_up[u] == static_cast<long>(v)) continue;
    succ[node[u]].push_back(node[v]);
    ++indeg[node[v]];
  }

  std::map<std::size_t, long> layer;
  std::priority_queue<std::size_t, std::vector<std::size_t>,
                      std::greater<std::size_t>>
      ready;
  for (auto [n, d] : indeg)
    if (d == 0) ready.push(n);
  std::size_t processed = 0;
  while (!ready.empty()) {
    std::size_t n = ready.top();
    ready.pop();
    ++processed;
    long level = layer[n];  // defaults to 0 at sources
    for (std::size_t w : succ[n]) {
      layer[w] = std::max(layer[w], level + 1);
      if (--indeg[w] == 0) ready.push(w);
    }
  }
  if (processed != indeg.size())
    throw InternalError("condensed diagram of a Morse matching is cyclic");

  MorseFunction f;
  f.base = &p;
  f.values.resize(p.size());
  for (std::size_t i = 0; i < p.size(); ++i)
    f.values[i] = Rational(layer[node[i]]);
  return f;
}

std::vector<FiltrationEvent> filtration_events(const MorseFunction& f) {
  ExclusionCheck ex = satisfies_exclusion(f);
  if (!ex.ok)
    throw ExclusionViolated("Exclusion condition fails at " + *ex.violator);
  const Poset& p = *f.base;
  MorseFunction g = make_injective(f);
  ExcCounts crit = exceptional_counts(f);

  std::vector<std::size_t> by_value(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) by_value[i] = i;
  std::sort(by_value.begin(), by_value.end(), [&](std::size_t a, std::size_t b) {
    return g.values[a] < g.values[b];
  });

  std::vector<FiltrationEvent> events;
  Bitset before(p.size());
  std::size_t b0_before = 0;
  for (std::size_t x : by_value) {
    Bitset after = before | p.down_set(x);
    Bitset added = after & ~before;
    FiltrationEvent ev;
    ev.threshold = g.values[x];
    ev.size_before = before.count();
    ev.size_after = after.count();
    ev.b0_before = b0_before;
    ev.b0_after = component_count(p, after);

    const std::size_t n_added = added.count();
    if (n_added == 0) {
      ev.kind = FiltrationEvent::Kind::NoChange;
    } else if (n_added == 1) {
      bool boundary_present = true;
      for (std::size_t w : p.lower_covers(x))
        if (!before.test(w)) boundary_present = false;
      if (!is_critical_at(crit, x)) {
        ev.kind = FiltrationEvent::Kind::Anomaly;
        ev.description = "regular element " + p.id(x) + " entered alone";
      } else if (!boundary_present) {
        ev.kind = FiltrationEvent::Kind::Anomaly;
        ev.description = "boundary of " + p.id(x) + " missing from sublevel";
      } else {
        ev.kind = FiltrationEvent::Kind::CriticalAdjunction;
        ev.cell = p.id(x);
        for (std::size_t w : p.lower_covers(x)) ev.boundary.push_back(p.id(w));
      }
    } else if (n_added == 2) {
      std::size_t other = added.find_first();
      if (other == x) other = added.find_next(other);
      Bitset f_hat = p.up_set(other) & after;
      f_hat.reset(other);
      if (!p.is_cover(other, x)) {
        ev.kind = FiltrationEvent::Kind::Anomaly;
        ev.description = "entered pair {" + p.id(x) + ", " + p.id(other) +
                         "} is not a cover pair";
      } else if (f_hat.none() || !p.minimum_of(f_hat).has_value()) {
        ev.kind = FiltrationEvent::Kind::Anomaly;
        ev.description = p.id(other) + " is not an up beat point in the new "
                         "sublevel";
      } else if (ev.b0_after > ev.b0_before) {
        ev.kind = FiltrationEvent::Kind::Anomaly;
        ev.description = "regular step {" + p.id(x) + ", " + p.id(other) +
                         "} created a new component";
      } else {
        ev.kind = FiltrationEvent::Kind::BeatPair;
        ev.v = p.id(x);
        ev.w = p.id(other);
      }
    } else {
      ev.kind = FiltrationEvent::Kind::Anomaly;
      ev.description = std::to_string(n_added) +
                       " elements entered at one value";
    }
    events.push_back(std::move(ev));
    before = std::move(after);
    b0_before = events.back().b0_after;
  }
  return events;
}

std::vector<ComponentBirth> component_births(const MorseFunction& f) {
  const Poset& p = *f.base;
  DownWideResult dw = is_down_wide(p);
  if (!dw.down_wide)
    throw HypothesisViolation("base is not down-wide (witness: " +
                              *dw.witness + ")");
  MorseCheck chk = is_morse(f);
  if (!chk.morse)
    throw HypothesisViolation("function is not Morse (violation at " +
                              chk.violations.front().element + ")");
  {
    std::vector<Rational> sorted = f.values;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      throw HypothesisViolation("function is not injective");
  }

  ExcCounts crit = exceptional_counts(f);
  std::vector<std::size_t> by_value(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) by_value[i] = i;
  std::sort(by_value.begin(), by_value.end(), [&](std::size_t a, std::size_t b) {
    return f.values[a] < f.values[b];
  });

  std::vector<ComponentBirth> births;
  Bitset members(p.size());
  std::size_t b0 = 0;
  for (std::size_t x : by_value) {
    members |= p.down_set(x);
    std::size_t b0_new = component_count(p, members);
    if (b0_new > b0) {
      if (!is_critical_at(crit, x) || !p.lower_covers(x).empty())
        throw HypothesisViolation(
            "component born at " + p.id(x) +
            ", which is not a critical minimal element");
      births.push_back({f.values[x], b0_new});
    }
    b0 = b0_new;
  }
  return births;
}

}  // namespace morseposet
