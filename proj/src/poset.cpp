#include "morseposet/poset.hpp"

#include <algorithm>
#include <queue>
#include <set>

namespace morseposet {

std::size_t Poset::index(const Id& x) const {
  auto it = index_.find(x);
  if (it == index_.end()) throw UnknownElement("unknown element: " + x);
  return it->second;
}

bool Poset::is_cover(std::size_t a, std::size_t b) const {
  return std::binary_search(covers_.begin(), covers_.end(),
                            std::make_pair(a, b));
}

std::vector<Id> Poset::to_ids(const Bitset& s) const {
  std::vector<Id> out;
  for (std::size_t i = s.find_first(); i != Bitset::npos; i = s.find_next(i))
    out.push_back(ids_[i]);
  return out;
}

std::optional<std::size_t> Poset::maximum_of(const Bitset& s) const {
  for (std::size_t m = s.find_first(); m != Bitset::npos; m = s.find_next(m))
    if (s.is_subset_of(down_[m])) return m;
  return std::nullopt;
}

std::optional<std::size_t> Poset::minimum_of(const Bitset& s) const {
  for (std::size_t m = s.find_first(); m != Bitset::npos; m = s.find_next(m))
    if (s.is_subset_of(up_[m])) return m;
  return std::nullopt;
}

std::vector<IdPair> Poset::cover_id_pairs() const {
  std::vector<IdPair> out;
  out.reserve(covers_.size());
  for (auto [a, b] : covers_) out.emplace_back(ids_[a], ids_[b]);
  return out;
}

Poset Poset::build(std::vector<Id> elements,
                   const std::vector<IdPair>& relations) {
  Poset p;
  for (const auto& [a, b] : relations) {
    elements.push_back(a);
    elements.push_back(b);
  }
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()),
                 elements.end());
  p.ids_ = std::move(elements);
  for (std::size_t i = 0; i < p.ids_.size(); ++i) p.index_[p.ids_[i]] = i;
  const std::size_t n = p.ids_.size();

  std::set<std::pair<std::size_t, std::size_t>> edges;
  for (const auto& [a, b] : relations) {
    std::size_t ia = p.index_[a], ib = p.index_[b];
    if (ia == ib) throw CycleError("relation has a self-loop at " + a);
    edges.insert({ia, ib});
  }

  std::vector<std::vector<std::size_t>> succ(n);
  std::vector<std::size_t> indeg(n, 0);
  for (auto [a, b] : edges) {
    succ[a].push_back(b);
    ++indeg[b];
  }

  // Kahn's algorithm; a min-heap keeps the linear extension deterministic.
  std::priority_queue<std::size_t, std::vector<std::size_t>,
                      std::greater<std::size_t>>
      ready;
  for (std::size_t i = 0; i < n; ++i)
    if (indeg[i] == 0) ready.push(i);
  std::vector<std::size_t> order;
  order.reserve(n);
  while (!ready.empty()) {
    std::size_t v = ready.top();
    ready.pop();
    order.push_back(v);
    for (std::size_t w : succ[v])
      if (--indeg[w] == 0) ready.push(w);
  }
  if (order.size() != n) {
    std::string stuck;
    for (std::size_t i = 0; i < n; ++i)
      if (indeg[i] > 0) stuck += (stuck.empty() ? "" : ", ") + p.ids_[i];
    throw CycleError("relation has a directed cycle through: " + stuck);
  }
  p.linext_ = order;

  p.down_.assign(n, Bitset(n));
  p.up_.assign(n, Bitset(n));
  for (std::size_t v : order) {
    p.down_[v].set(v);
    for (std::size_t w : succ[v]) p.down_[w] |= p.down_[v];
  }
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    p.up_[*it].set(*it);
    for (std::size_t w : succ[*it]) p.up_[*it] |= p.up_[w];
  }

  // Covers of the closure: pairs whose closed interval has exactly 2 points.
  p.lower_.assign(n, {});
  p.upper_.assign(n, {});
  for (std::size_t b = 0; b < n; ++b) {
    const Bitset& below = p.down_[b];
    for (std::size_t a = below.find_first(); a != Bitset::npos;
         a = below.find_next(a)) {
      if (a == b) continue;
      if ((p.down_[b] & p.up_[a]).count() == 2) {
        p.covers_.emplace_back(a, b);
        p.lower_[b].push_back(a);
        p.upper_[a].push_back(b);
      }
    }
  }
  std::sort(p.covers_.begin(), p.covers_.end());
  for (auto& v : p.lower_) std::sort(v.begin(), v.end());
  for (auto& v : p.upper_) std::sort(v.begin(), v.end());
  return p;
}

Poset build_poset(const std::vector<IdPair>& covers) {
  return Poset::build({}, covers);
}

std::vector<Id> Subposet::member_ids() const { return parent->to_ids(members); }

std::vector<std::pair<std::size_t, std::size_t>> Subposet::induced_covers()
    const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t b = members.find_first(); b != Bitset::npos;
       b = members.find_next(b)) {
    Bitset below = parent->down_set(b) & members;
    for (std::size_t a = below.find_first(); a != Bitset::npos;
         a = below.find_next(a)) {
      if (a == b) continue;
      if ((parent->down_set(b) & parent->up_set(a) & members).count() == 2)
        out.emplace_back(a, b);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

Poset Subposet::materialize() const {
  std::vector<IdPair> covers;
  for (auto [a, b] : induced_covers())
    covers.emplace_back(parent->id(a), parent->id(b));
  return Poset::build(member_ids(), covers);
}

Subposet full_subposet(const Poset& p) {
  return Subposet{&p, p.full_set(), true};
}

Subposet make_subposet(const Poset& p, const Bitset& members, bool open) {
  if (open) {
    for (std::size_t x = members.find_first(); x != Bitset::npos;
         x = members.find_next(x))
      if (!p.down_set(x).is_subset_of(members))
        throw PreconditionError("subposet flagged open is not downward closed");
  }
  return Subposet{&p, members, open};
}

std::size_t component_count(const Poset& p, const Bitset& members) {
  Bitset seen(members.size());
  std::size_t comps = 0;
  for (std::size_t s = members.find_first(); s != Bitset::npos;
       s = members.find_next(s)) {
    if (seen.test(s)) continue;
    ++comps;
    std::vector<std::size_t> stack{s};
    seen.set(s);
    while (!stack.empty()) {
      std::size_t v = stack.back();
      stack.pop_back();
      Bitset nbrs = (p.down_set(v) | p.up_set(v)) & members & ~seen;
      for (std::size_t w = nbrs.find_first(); w != Bitset::npos;
           w = nbrs.find_next(w)) {
        seen.set(w);
        stack.push_back(w);
      }
    }
  }
  return comps;
}

bool order_query(const Poset& p, const Id& x, const Id& y) {
  return p.leq(p.index(x), p.index(y));
}

Neighborhoods neighborhoods(const Poset& p, const Id& x) {
  std::size_t i = p.index(x);
  Bitset u = p.down_set(i);
  Bitset f = p.up_set(i);
  Bitset point(p.size());
  point.set(i);
  Neighborhoods n;
  n.u = make_subposet(p, u, true);
  n.u_hat = make_subposet(p, u & ~point, true);
  n.f = make_subposet(p, f);
  n.f_hat = make_subposet(p, f & ~point);
  n.c_hat = make_subposet(p, (u | f) & ~point);
  return n;
}

HeightProfile height_profile(const Poset& p) {
  HeightProfile hp;
  const std::size_t n = p.size();
  hp.height.assign(n, 0);
  std::vector<int> shortest(n, 0);
  for (std::size_t v : p.linear_extension()) {
    const auto& low = p.lower_covers(v);
    if (low.empty()) continue;
    int longest = 0, least = -1;
    for (std::size_t w : low) {
      longest = std::max(longest, hp.height[w]);
      least = (least < 0) ? shortest[w] : std::min(least, shortest[w]);
    }
    hp.height[v] = longest + 1;
    shortest[v] = least + 1;
  }
  hp.poset_height = -1;
  hp.graded = true;
  for (std::size_t v = 0; v < n; ++v) {
    hp.poset_height = std::max(hp.poset_height, hp.height[v]);
    if (hp.height[v] != shortest[v]) hp.graded = false;
  }
  return hp;
}

TwoWideResult is_two_wide(const Poset& p) {
  for (auto [x, z] : p.covers()) {
    for (std::size_t y : p.upper_covers(z)) {
      bool found = false;
      for (std::size_t z2 : p.upper_covers(x)) {
        if (z2 != z && p.is_cover(z2, y)) {
          found = true;
          break;
        }
      }
      if (!found)
        return TwoWideResult{false,
                             std::array<Id, 3>{p.id(x), p.id(z), p.id(y)}};
    }
  }
  return TwoWideResult{};
}

std::pair<Id, Id> key_lemma_witness(const Poset& p, const Id& w, const Id& y) {
  auto tw = is_two_wide(p);
  if (!tw.two_wide) throw PreconditionError("poset is not two-wide");
  std::size_t iw = p.index(w), iy = p.index(y);
  if (!(p.leq(iw, iy) && iw != iy))
    throw PreconditionError("expected " + w + " < " + y);
  if (p.is_cover(iw, iy))
    throw PreconditionError("expected a non-cover pair, got " + w + " -< " + y);
  std::vector<std::size_t> hits;
  for (std::size_t x : p.upper_covers(iw))
    if (p.leq(x, iy) && x != iy) hits.push_back(x);
  if (hits.size() < 2)
    throw InternalError(
        "fewer than two key-lemma witnesses in a two-wide poset");
  return {p.id(hits[0]), p.id(hits[1])};
}

DownWideResult is_down_wide(const Poset& p) {
  for (std::size_t x = 0; x < p.size(); ++x) {
    std::size_t deg = p.lower_covers(x).size();
    if (deg == 1) return DownWideResult{false, p.id(x)};
  }
  return DownWideResult{};
}

std::vector<std::vector<Id>> components(const Poset& p) {
  Bitset all = p.full_set();
  Bitset seen(p.size());
  std::vector<std::vector<Id>> out;
  for (std::size_t s = all.find_first(); s != Bitset::npos;
       s = all.find_next(s)) {
    if (seen.test(s)) continue;
    Bitset comp(p.size());
    std::vector<std::size_t> stack{s};
    comp.set(s);
    seen.set(s);
    while (!stack.empty()) {
      std::size_t v = stack.back();
      stack.pop_back();
      Bitset nbrs = (p.down_set(v) | p.up_set(v)) & ~seen;
      for (std::size_t w = nbrs.find_first(); w != Bitset::npos;
           w = nbrs.find_next(w)) {
        seen.set(w);
        comp.set(w);
        stack.push_back(w);
      }
    }
    out.push_back(p.to_ids(comp));
  }
  return out;
}

}  // namespace morseposet
