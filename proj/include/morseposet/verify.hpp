#pragma once

#include "morseposet/homology.hpp"
#include "morseposet/matching.hpp"
#include "morseposet/morse.hpp"
#include "morseposet/tristate.hpp"

namespace morseposet {

struct BadInterval : Error {
  using Error::Error;
};

enum class Conclusion { Pass, Violated, Inapplicable };

inline const char* to_string(Conclusion c) {
  switch (c) {
    case Conclusion::Pass: return "pass";
    case Conclusion::Violated: return "violated";
    default: return "inapplicable";
  }
}

struct HypothesisCheck {
  std::string name;
  TriState status;
};

/// Executable account of one theorem on one instance. The conclusion may
/// only read "violated" when every hypothesis passed; hypothesis failures
/// downgrade the report to "inapplicable" (with the findings kept as
/// witnesses, so counterexamples stay visible).
struct TheoremReport {
  std::string theorem;
  std::vector<HypothesisCheck> hypotheses;
  Conclusion conclusion = Conclusion::Inapplicable;
  std::vector<std::string> witnesses;
  std::vector<std::string> notes;

  bool hypotheses_ok() const {
    for (const auto& h : hypotheses)
      if (!h.status.is_yes()) return false;
    return true;
  }
  void finish(bool checks_ok) {
    conclusion = !hypotheses_ok() ? Conclusion::Inapplicable
                 : checks_ok      ? Conclusion::Pass
                                  : Conclusion::Violated;
  }
};

struct CollapseReport {
  TheoremReport report;
  std::vector<FiltrationEvent> steps;  // events with values inside (a, b]
  HomologyResult relative;             // H(X_b, X_a) over Z
};

/// Collapse theorem on (a, b]: with the hypotheses in force and no
/// critical value inside, the inclusion X_a into X_b must be a homology
/// isomorphism, each step a NoChange or BeatPair, and the excision
/// identity must hold step by step.
CollapseReport check_collapse_interval(const MorseFunction& f,
                                       const Rational& a, const Rational& b);

struct AdjunctionReport {
  TheoremReport report;
  HomologyResult before, after;  // H(X_a), H(X_b) over Z
};

/// Adjunction theorem: an isolated critical value attaches exactly its
/// cell, with the boundary already present.
AdjunctionReport check_adjunction(const MorseFunction& f, const Rational& a,
                                  const Rational& b, const Id& x);

struct InequalityRow {
  std::string domain;        // "Z", "F2", "F3"
  std::vector<long> betti;   // b_0 .. b_H (free ranks over Z)
  bool weak_ok = true;
  bool strong_ok = true;
  bool chi_ok = true;
};

struct InequalityReport {
  TheoremReport report;
  std::vector<long> m;            // critical counts by height
  std::vector<InequalityRow> rows;
  bool pitcher = false;
  std::vector<long> mu;           // torsion generator counts (Z), clamped
  bool pitcher_ok = true;
};

InequalityReport morse_inequalities(const Poset& p, const Matching& m);
InequalityReport pitcher_inequalities(const Poset& p, const Matching& m);

}  // namespace morseposet
