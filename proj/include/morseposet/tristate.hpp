#pragma once

#include <string>

namespace morseposet {

enum class Verdict { Yes, No, Unknown };

/// Three-valued answer for questions we can only partially decide. Yes and
/// No always carry the certifying reason; Unknown makes no claim.
struct TriState {
  Verdict v = Verdict::Unknown;
  std::string reason;

  static TriState yes(std::string why) { return {Verdict::Yes, std::move(why)}; }
  static TriState no(std::string why) { return {Verdict::No, std::move(why)}; }
  static TriState unknown(std::string why) {
    return {Verdict::Unknown, std::move(why)};
  }

  bool is_yes() const { return v == Verdict::Yes; }
  bool is_no() const { return v == Verdict::No; }
  bool is_unknown() const { return v == Verdict::Unknown; }
};

inline const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::Yes: return "yes";
    case Verdict::No: return "no";
    default: return "unknown";
  }
}

/// Conjunction: any No wins, then any Unknown, else Yes.
inline TriState tri_and(const TriState& a, const TriState& b) {
  if (a.is_no()) return a;
  if (b.is_no()) return b;
  if (a.is_unknown()) return a;
  if (b.is_unknown()) return b;
  return a;
}

}  // namespace morseposet
