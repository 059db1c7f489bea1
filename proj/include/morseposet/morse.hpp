#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include "morseposet/matching.hpp"
#include "morseposet/poset.hpp"

namespace morseposet {

using Rational = boost::multiprecision::cpp_rational;

struct NotMorse : Error {
  using Error::Error;
};
struct ExclusionViolated : Error {
  using Error::Error;
};
struct HypothesisViolation : Error {
  using Error::Error;
};

/// A rational-valued assignment on a poset's elements. Values are exact;
/// the theory is driven entirely by order comparisons, so no floating
/// point is allowed anywhere.
struct MorseFunction {
  const Poset* base = nullptr;
  std::vector<Rational> values;  // by element index

  const Rational& at(std::size_t i) const { return values[i]; }
};

MorseFunction make_function(const Poset& p,
                            const std::vector<std::pair<Id, Rational>>& vals);

struct MorseViolation {
  Id element;
  std::string direction;  // "up" or "down"
};

struct MorseCheck {
  bool morse = true;
  std::vector<MorseViolation> violations;
};

/// Both cover-count bounds at every element.
MorseCheck is_morse(const MorseFunction& f);

std::vector<Id> critical_points(const MorseFunction& f);

struct ExclusionCheck {
  bool ok = true;
  std::optional<Id> violator;
};

/// Every regular point has exactly one exceptional cover, never one in
/// each direction.
ExclusionCheck satisfies_exclusion(const MorseFunction& f);

/// X_a = union of U_x over f(x) <= a; always an open subposet.
Subposet sublevel(const MorseFunction& f, const Rational& a);

/// Injective refinement preserving the induced matching, the critical set
/// and every sublevel at thresholds attained by f. Ties are broken so each
/// matched target precedes its source, otherwise by (height, identifier);
/// classes are spread by fractions of the gap to the next distinct value.
MorseFunction make_injective(const MorseFunction& f);

/// M_f = { (x, y) : x -< y and f(x) >= f(y) }; Morse by the converse
/// integration theorem whenever f satisfies the Exclusion condition.
Matching matching_from_function(const MorseFunction& f);

/// Integration: condense matched pairs, orient unmatched covers upward and
/// layer each condensed node by its longest path from a source.
MorseFunction function_from_matching(const Matching& m);

struct FiltrationEvent {
  enum class Kind { NoChange, BeatPair, CriticalAdjunction, Anomaly };
  Rational threshold;
  Kind kind = Kind::NoChange;
  Id v, w;                   // BeatPair: w -< v, w up-beat afterwards
  Id cell;                   // CriticalAdjunction
  std::vector<Id> boundary;  // CriticalAdjunction: lower covers of cell
  std::string description;   // Anomaly
  std::size_t size_before = 0, size_after = 0;
  std::size_t b0_before = 0, b0_after = 0;
};

/// One event per distinct value of the internal injective refinement, in
/// ascending order. On down-wide bases every event is NoChange, BeatPair
/// or CriticalAdjunction; hypothesis failures come back as Anomaly events
/// rather than errors so counterexamples remain reportable.
std::vector<FiltrationEvent> filtration_events(const MorseFunction& f);

struct ComponentBirth {
  Rational value;
  std::size_t b0_after = 0;
};

/// Values where b_0 of the sublevels grows. Requires a down-wide base and
/// an injective Morse function; each birth is checked to land on a
/// critical value of a minimal element.
std::vector<ComponentBirth> component_births(const MorseFunction& f);

}  // namespace morseposet
