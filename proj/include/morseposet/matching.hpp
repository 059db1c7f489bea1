#pragma once

#include "morseposet/poset.hpp"
#include "morseposet/tristate.hpp"

namespace morseposet {

struct InvalidMatching : Error {
  using Error::Error;
};
struct NotMorseMatching : Error {
  std::vector<Id> cycle;
  NotMorseMatching(std::string what, std::vector<Id> certificate)
      : Error(std::move(what)), cycle(std::move(certificate)) {}
};
struct NotGraded : Error {
  using Error::Error;
};
struct NotCritical : Error {
  using Error::Error;
};
struct PathNotUnique : Error {
  std::size_t count;
  PathNotUnique(std::string what, std::size_t n)
      : Error(std::move(what)), count(n) {}
};
struct HeightMismatch : Error {
  using Error::Error;
};

/// A matching on the Hasse diagram: pairs (source, target) with
/// source -< target, every element in at most one pair.
struct Matching {
  const Poset* base = nullptr;
  std::vector<std::pair<std::size_t, std::size_t>> pairs;  // sorted by source

  std::vector<IdPair> pair_ids() const;
};

Matching make_matching(const Poset& p, const std::vector<IdPair>& pairs);

struct MorseMatchingCheck {
  bool morse = true;
  std::vector<Id> cycle;  // a directed cycle of H_M when not Morse
};

/// Acyclicity of H_M(X): matched covers oriented upward, the rest downward.
MorseMatchingCheck is_morse_matching(const Matching& m);

/// Elements not incident to any pair, sorted.
std::vector<Id> critical_set(const Matching& m);

/// Alternating path x_0 -< y_0 >- x_1 -< y_1 ... >- x_r with every
/// (x_i, y_i) matched; r = 0 (a bare element) is admitted.
struct MPath {
  std::vector<std::size_t> xs;  // r + 1 elements of height p
  std::vector<std::size_t> ys;  // r elements of height p + 1
  int index = 0;                // common height p of the xs
};

std::vector<MPath> enumerate_m_paths(const Matching& m,
                                     const std::vector<Id>& from,
                                     const Id& to);

/// Cancels the critical pair (z, x) of adjacent heights by reversing the
/// unique M-path from the boundary of z to x.
Matching cancel_pair(const Matching& m, const Id& z, const Id& x);

enum class RegularityMode { Homology, Homotopy };

/// Every critical element of height p has U^_x looking like S^(p-1):
/// exactly in homology, or as a certified sphere model (homotopy mode).
TriState regularity(const Matching& m, RegularityMode mode);

struct CancellationEntry {
  Id upper, lower;
  std::size_t path_length = 0;  // r of the reversed path
};

/// Greedy cancellation: repeatedly cancels the first critical pair of
/// adjacent heights joined by a unique M-path, scanning by (height of
/// upper, then identifiers). No optimality is claimed.
std::pair<Matching, std::vector<CancellationEntry>> optimize(const Matching& m);

}  // namespace morseposet
