#include "morseposet/pi1.hpp"

#include <algorithm>
#include <map>
#include <queue>

namespace morseposet {

namespace {

using Word = std::vector<int>;  // letters are +-(generator index + 1)

Word inverse(const Word& w) {
  Word out(w.rbegin(), w.rend());
  for (int& l : out) l = -l;
  return out;
}

void free_reduce(Word& w) {
  Word out;
  for (int l : w) {
    if (!out.empty() && out.back() == -l)
      out.pop_back();
    else
      out.push_back(l);
  }
  w = std::move(out);
}

void cyclic_reduce(Word& w) {
  free_reduce(w);
  while (w.size() >= 2 && w.front() == -w.back()) {
    w.erase(w.begin());
    w.pop_back();
    free_reduce(w);
  }
}

// Replace generator g (1-based) by expression `expr` everywhere.
void substitute(Word& w, int g, const Word& expr) {
  Word out;
  Word inv = inverse(expr);
  for (int l : w) {
    if (l == g)
      out.insert(out.end(), expr.begin(), expr.end());
    else if (l == -g)
      out.insert(out.end(), inv.begin(), inv.end());
    else
      out.push_back(l);
  }
  w = std::move(out);
}

constexpr std::size_t kMaxWordLength = 4096;

}  // namespace

TriState edge_path_group_trivial(const SimplicialComplex& k) {
  if (k.empty() || k.simplex_count(0) == 0)
    return TriState::unknown("empty complex has no edge-path group");
  const std::size_t nv = k.simplex_count(0);

  // Spanning tree of the 1-skeleton by BFS from the least vertex.
  std::map<std::pair<int, int>, int> edge_gen;  // non-tree edge -> generator
  std::vector<std::vector<int>> adj(nv);
  if (k.dimension() >= 1) {
    for (const auto& e : k.by_dim[1]) {
      adj[e[0]].push_back(e[1]);
      adj[e[1]].push_back(e[0]);
    }
  }
  std::vector<bool> seen(nv, false);
  std::map<std::pair<int, int>, bool> in_tree;
  std::queue<int> bfs;
  bfs.push(0);
  seen[0] = true;
  while (!bfs.empty()) {
    int v = bfs.front();
    bfs.pop();
    for (int w : adj[v]) {
      if (seen[w]) continue;
      seen[w] = true;
      in_tree[{std::min(v, w), std::max(v, w)}] = true;
      bfs.push(w);
    }
  }
  for (std::size_t v = 0; v < nv; ++v)
    if (!seen[v])
      return TriState::unknown("complex is not connected");

  int ngens = 0;
  if (k.dimension() >= 1) {
    for (const auto& e : k.by_dim[1]) {
      std::pair<int, int> key{e[0], e[1]};
      if (!in_tree.count(key)) edge_gen[key] = ++ngens;
    }
  }
  if (ngens == 0) return TriState::yes("edge-path presentation has no generators");

  auto letter = [&](int u, int v) -> Word {  // path u -> v along edge
    auto it = edge_gen.find({std::min(u, v), std::max(u, v)});
    if (it == edge_gen.end()) return {};
    return {u < v ? it->second : -it->second};
  };

  std::vector<Word> relators;
  if (k.dimension() >= 2) {
    for (const auto& t : k.by_dim[2]) {
      Word w;
      Word ab = letter(t[0], t[1]), bc = letter(t[1], t[2]),
           ac = letter(t[0], t[2]);
      w.insert(w.end(), ab.begin(), ab.end());
      w.insert(w.end(), bc.begin(), bc.end());
      Word ca = inverse(ac);
      w.insert(w.end(), ca.begin(), ca.end());
      free_reduce(w);
      if (!w.empty()) relators.push_back(std::move(w));
    }
  }

  std::vector<bool> alive(static_cast<std::size_t>(ngens) + 1, true);
  int alive_count = ngens;
  const std::size_t budget = 10 * std::max<std::size_t>(1, relators.size());
  std::size_t steps = 0;

  auto eliminate = [&](int g, const Word& expr) {
    for (auto& r : relators) substitute(r, g, expr);
    alive[g] = false;
    --alive_count;
    ++steps;
  };

  while (steps < budget && alive_count > 0) {
    for (auto& r : relators) cyclic_reduce(r);
    relators.erase(std::remove_if(relators.begin(), relators.end(),
                                  [](const Word& w) { return w.empty(); }),
                   relators.end());
    bool too_long = std::any_of(relators.begin(), relators.end(),
                                [](const Word& w) {
                                  return w.size() > kMaxWordLength;
                                });
    if (too_long) break;

    bool acted = false;
    // Length-1 relator: the generator is trivial.
    for (const auto& r : relators) {
      if (r.size() == 1) {
        eliminate(std::abs(r[0]), {});
        acted = true;
        break;
      }
    }
    if (acted) continue;
    // Length-2 relator on two distinct generators: one defines the other.
    for (const auto& r : relators) {
      if (r.size() == 2 && std::abs(r[0]) != std::abs(r[1])) {
        int g = std::abs(r[0]);
        Word rest{r[1]};
        Word expr = (r[0] > 0) ? inverse(rest) : rest;
        eliminate(g, expr);
        acted = true;
        break;
      }
    }
    if (acted) continue;
    // A generator occurring exactly once in some relator can be solved for.
    std::size_t best = relators.size();
    int best_pos = -1;
    for (std::size_t i = 0; i < relators.size(); ++i) {
      const Word& r = relators[i];
      for (std::size_t j = 0; j < r.size(); ++j) {
        int g = std::abs(r[j]);
        int occ = 0;
        for (int l : r) occ += (std::abs(l) == g);
        if (occ == 1 &&
            (best == relators.size() || r.size() < relators[best].size())) {
          best = i;
          best_pos = static_cast<int>(j);
          break;
        }
      }
    }
    if (best < relators.size()) {
      const Word r = relators[best];
      int g = std::abs(r[best_pos]);
      Word u(r.begin(), r.begin() + best_pos);
      Word v(r.begin() + best_pos + 1, r.end());
      // u g^e v = 1  =>  g^e = u^-1 v^-1.
      Word expr = inverse(u);
      Word vinv = inverse(v);
      expr.insert(expr.end(), vinv.begin(), vinv.end());
      if (r[best_pos] < 0) expr = inverse(expr);
      relators.erase(relators.begin() + static_cast<long>(best));
      eliminate(g, expr);
      continue;
    }
    break;
  }

  if (alive_count == 0)
    return TriState::yes("edge-path presentation collapses to the trivial group");
  return TriState::unknown("edge-path presentation did not simplify within budget");
}

}  // namespace morseposet
