#pragma once

#include "morseposet/poset.hpp"
#include "morseposet/tristate.hpp"

namespace morseposet {

struct BeatPoints {
  std::vector<Id> down;  // U^_x has a maximum
  std::vector<Id> up;    // F^_x has a minimum
};

BeatPoints beat_points(const Poset& p);

/// Iteratively removes beat points (lowest identifier first) until none
/// remain. The result has the homology and weak homotopy type of p.
Subposet core(const Poset& p);

/// Computable surrogate for homotopical triviality: Yes when the core is a
/// point, or when reduced homology vanishes and the edge-path group
/// certifiably collapses; No on empty, disconnected or homologically
/// nontrivial input; Unknown otherwise.
TriState is_homotopically_trivial(const Poset& p);

/// is_homotopically_trivial of the punctured star C^_x.
TriState is_gamma_point(const Poset& p, const Id& x);

}  // namespace morseposet
