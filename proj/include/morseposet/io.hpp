#pragma once

#include "morseposet/complex.hpp"
#include "morseposet/matching.hpp"
#include "morseposet/morse.hpp"
#include "morseposet/poset.hpp"

namespace morseposet {

struct ParseError : Error {
  int line;
  ParseError(std::string what, int at) : Error(std::move(what)), line(at) {}
};
struct UsageError : Error {
  using Error::Error;
};

inline constexpr const char* kVersion = "0.1.0";
inline constexpr const char* kReportSchema = "morseposet.report.v1";

/// Accepts either one `a < b` cover per line, or a structured JSON
/// document with "elements" and "covers" arrays. `#` starts a comment.
Poset parse_poset(const std::string& text);

/// One facet per line, whitespace-separated vertex names.
SimplicialComplex parse_complex(const std::string& text);

/// One `element value` per line; values as exact rationals.
MorseFunction parse_function(const std::string& text, const Poset& p);

/// One `source target` pair per line.
Matching parse_matching(const std::string& text, const Poset& p);

/// "p", "p/q" or a decimal literal, all parsed exactly.
Rational parse_rational(const std::string& s);
std::string format_rational(const Rational& r);

std::string serialize_poset(const Poset& p);
std::string serialize_complex(const SimplicialComplex& k);
std::string serialize_function(const MorseFunction& f);
std::string serialize_matching(const Matching& m);

/// Hasse diagram in dot format (edges point upward).
std::string hasse_dot(const Poset& p);

struct RunResult {
  int exit_code = 0;
  std::string output;
};

/// CLI entry point; `args` excludes the program name. Exit codes: 0 ok,
/// 1 theorem/property violated or inapplicable, 2 input or usage error.
RunResult run(const std::vector<std::string>& args);

}  // namespace morseposet
