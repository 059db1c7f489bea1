#include "morseposet/io.hpp"

#include <cctype>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "morseposet/generate.hpp"
#include "morseposet/homology.hpp"
#include "morseposet/reduction.hpp"
#include "morseposet/verify.hpp"

namespace morseposet {

namespace {

using json = nlohmann::ordered_json;

std::string strip_comment(const std::string& line) {
  auto pos = line.find('#');
  return pos == std::string::npos ? line : line.substr(0, pos);
}

std::vector<std::string> tokens(const std::string& line) {
  std::istringstream in(line);
  std::vector<std::string> out;
  std::string tok;
  while (in >> tok) out.push_back(tok);
  return out;
}

// Detects a structured document, ignoring leading comment lines. Returns
// the text from the first substantive line on, or nothing.
std::optional<std::string> json_body(const std::string& text) {
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t eol = text.find('\n', pos);
    if (eol == std::string::npos) eol = text.size();
    std::size_t i = pos;
    while (i < eol && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    if (i < eol && text[i] != '#')
      return text[i] == '{' ? std::optional<std::string>(text.substr(i))
                            : std::nullopt;
    pos = eol + 1;
  }
  return std::nullopt;
}

std::string fnv1a(const std::string& bytes) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx",
                static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace

Poset parse_poset(const std::string& text) {
  if (std::optional<std::string> body = json_body(text)) {
    json doc;
    try {
      doc = json::parse(*body);
    } catch (const json::exception& e) {
      throw ParseError(std::string("bad poset document: ") + e.what(), 0);
    }
    if (!doc.is_object() || !doc.contains("elements") ||
        !doc["elements"].is_array())
      throw ParseError("poset document needs an \"elements\" array", 0);
    std::vector<Id> elements;
    for (const auto& e : doc["elements"]) elements.push_back(e.get<Id>());
    std::vector<IdPair> covers;
    if (doc.contains("covers")) {
      for (const auto& c : doc["covers"]) {
        if (!c.is_array() || c.size() != 2)
          throw ParseError("covers must be [lower, upper] pairs", 0);
        covers.emplace_back(c[0].get<Id>(), c[1].get<Id>());
      }
    }
    return Poset::build(std::move(elements), covers);
  }
  std::vector<IdPair> covers;
  std::vector<Id> elements;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto toks = tokens(strip_comment(line));
    if (toks.empty()) continue;
    if (toks.size() == 1) {
      elements.push_back(toks[0]);  // isolated element
      continue;
    }
    if (toks.size() != 3 || toks[1] != "<")
      throw ParseError("expected `a < b` on line " + std::to_string(lineno),
                       lineno);
    covers.emplace_back(toks[0], toks[2]);
  }
  return Poset::build(std::move(elements), covers);
}

SimplicialComplex parse_complex(const std::string& text) {
  std::vector<std::vector<Id>> facets;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto toks = tokens(strip_comment(line));
    if (toks.empty()) continue;
    facets.push_back(std::move(toks));
  }
  return SimplicialComplex::from_facets(facets);
}

namespace {

// Strictly decimal; the boost string constructor would read a leading
// zero as an octal prefix.
Integer decimal_integer(const std::string& s) {
  std::size_t i = 0;
  bool negative = false;
  if (i < s.size() && (s[i] == '+' || s[i] == '-')) negative = s[i++] == '-';
  if (i == s.size()) throw ParseError("bad integer: " + s, 0);
  Integer value = 0;
  for (; i < s.size(); ++i) {
    if (s[i] < '0' || s[i] > '9')
      throw ParseError("bad integer: " + s, 0);
    value = value * 10 + (s[i] - '0');
  }
  return negative ? -value : value;
}

}  // namespace

Rational parse_rational(const std::string& s) {
  if (s.empty()) throw ParseError("empty rational", 0);
  auto slash = s.find('/');
  if (slash != std::string::npos) {
    Integer num = decimal_integer(s.substr(0, slash));
    Integer den = decimal_integer(s.substr(slash + 1));
    if (den == 0) throw ParseError("zero denominator in " + s, 0);
    return Rational(num, den);
  }
  auto dot = s.find('.');
  if (dot != std::string::npos) {
    Integer num = decimal_integer(s.substr(0, dot) + s.substr(dot + 1));
    Integer den = 1;
    for (std::size_t i = dot + 1; i < s.size(); ++i) den *= 10;
    return Rational(num, den);
  }
  return Rational(decimal_integer(s));
}

std::string format_rational(const Rational& r) { return r.str(); }

MorseFunction parse_function(const std::string& text, const Poset& p) {
  std::vector<std::pair<Id, Rational>> vals;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto toks = tokens(strip_comment(line));
    if (toks.empty()) continue;
    if (toks.size() != 2)
      throw ParseError(
          "expected `element value` on line " + std::to_string(lineno),
          lineno);
    vals.emplace_back(toks[0], parse_rational(toks[1]));
  }
  return make_function(p, vals);
}

Matching parse_matching(const std::string& text, const Poset& p) {
  std::vector<IdPair> pairs;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto toks = tokens(strip_comment(line));
    if (toks.empty()) continue;
    if (toks.size() != 2)
      throw ParseError(
          "expected `source target` on line " + std::to_string(lineno),
          lineno);
    pairs.emplace_back(toks[0], toks[1]);
  }
  return make_matching(p, pairs);
}

std::string serialize_poset(const Poset& p) {
  json doc;
  doc["elements"] = p.ids();
  json covers = json::array();
  for (const auto& [a, b] : p.cover_id_pairs())
    covers.push_back(json::array({a, b}));
  doc["covers"] = covers;
  return doc.dump(2) + "\n";
}

std::string serialize_complex(const SimplicialComplex& k) {
  std::string out;
  for (const auto& facet : k.facets()) {
    for (std::size_t i = 0; i < facet.size(); ++i)
      out += (i ? " " : "") + facet[i];
    out += "\n";
  }
  return out;
}

std::string serialize_function(const MorseFunction& f) {
  std::string out;
  for (std::size_t i = 0; i < f.base->size(); ++i)
    out += f.base->id(i) + " " + format_rational(f.values[i]) + "\n";
  return out;
}

std::string serialize_matching(const Matching& m) {
  std::string out;
  for (const auto& [s, t] : m.pair_ids()) out += s + " " + t + "\n";
  return out;
}

std::string hasse_dot(const Poset& p) {
  std::string out = "digraph hasse {\n  rankdir=BT;\n";
  for (const Id& id : p.ids()) out += "  \"" + id + "\";\n";
  for (const auto& [a, b] : p.cover_id_pairs())
    out += "  \"" + a + "\" -> \"" + b + "\";\n";
  out += "}\n";
  return out;
}

namespace {

json tri_json(const TriState& t) {
  return json{{"status", to_string(t.v)}, {"reason", t.reason}};
}

json homology_json(const HomologyResult& h) {
  json out;
  out["domain"] = h.coeffs.domain == Coefficients::Domain::Integers
                      ? "Z"
                      : "F" + std::to_string(h.coeffs.prime);
  out["reduced"] = h.reduced;
  out["betti"] = h.betti;
  json torsion = json::array();
  for (const auto& level : h.torsion) {
    json factors = json::array();
    for (const Integer& f : level) factors.push_back(f.str());
    torsion.push_back(factors);
  }
  out["torsion"] = torsion;
  return out;
}

json event_json(const FiltrationEvent& ev) {
  json out;
  out["threshold"] = format_rational(ev.threshold);
  switch (ev.kind) {
    case FiltrationEvent::Kind::NoChange:
      out["kind"] = "no-change";
      break;
    case FiltrationEvent::Kind::BeatPair:
      out["kind"] = "beat-pair";
      out["v"] = ev.v;
      out["w"] = ev.w;
      break;
    case FiltrationEvent::Kind::CriticalAdjunction:
      out["kind"] = "critical-adjunction";
      out["cell"] = ev.cell;
      out["boundary"] = ev.boundary;
      break;
    case FiltrationEvent::Kind::Anomaly:
      out["kind"] = "anomaly";
      out["description"] = ev.description;
      break;
  }
  out["size_before"] = ev.size_before;
  out["size_after"] = ev.size_after;
  out["b0_before"] = ev.b0_before;
  out["b0_after"] = ev.b0_after;
  return out;
}

json report_json(const TheoremReport& r) {
  json out;
  out["theorem"] = r.theorem;
  json hyps = json::array();
  for (const auto& h : r.hypotheses) {
    json entry;
    entry["name"] = h.name;
    entry["status"] = to_string(h.status.v);
    entry["reason"] = h.status.reason;
    hyps.push_back(entry);
  }
  out["hypotheses"] = hyps;
  out["conclusion"] = to_string(r.conclusion);
  out["witnesses"] = r.witnesses;
  out["notes"] = r.notes;
  return out;
}

json admissibility_json(const AdmissibilityResult& a) {
  json out;
  out["aggregate"] = tri_json(a.aggregate);
  json edges = json::array();
  for (const auto& e : a.edges) {
    json entry;
    entry["edge"] = json::array({e.edge.first, e.edge.second});
    entry["status"] = to_string(e.status.v);
    entry["reason"] = e.status.reason;
    edges.push_back(entry);
  }
  out["edges"] = edges;
  return out;
}

struct Invocation {
  std::string command;
  std::vector<std::pair<std::string, std::string>> inputs;  // path, digest
  std::vector<std::string> warnings;
  bool pretty = false;

  std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw UsageError("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    std::string text = buf.str();
    inputs.emplace_back(path, fnv1a(text));
    return text;
  }

  RunResult report(int code, json payload) const {
    json doc;
    doc["schema"] = kReportSchema;
    doc["version"] = kVersion;
    doc["command"] = command;
    json ins = json::array();
    for (const auto& [path, digest] : inputs)
      ins.push_back(json{{"path", path}, {"digest", digest}});
    doc["inputs"] = ins;
    doc["payload"] = std::move(payload);
    doc["warnings"] = warnings;
    return RunResult{code, doc.dump(pretty ? 2 : -1) + "\n"};
  }

  RunResult error(int code, const std::string& type, const std::string& msg,
                  json extra = json::object()) const {
    json payload;
    payload["error"] = json{{"type", type}, {"message", msg}};
    for (auto& [k, v] : extra.items()) payload["error"][k] = v;
    return report(code, payload);
  }
};

Coefficients parse_coeffs(const std::string& spec) {
  if (spec == "z" || spec == "Z") return Coefficients::integers();
  if (spec.rfind("p:", 0) == 0)
    return Coefficients::field(std::stol(spec.substr(2)));
  throw UsageError("bad --coeffs, expected z or p:<prime>");
}

int conclusion_exit(Conclusion c) {
  return c == Conclusion::Pass ? 0 : 1;
}

std::uint64_t selftest_seed() {
  if (const char* env = std::getenv("MORSEPOSET_SEED"))
    return std::strtoull(env, nullptr, 10);
  return 20240311ULL;
}

}  // namespace

RunResult run(const std::vector<std::string>& args) {
  CLI::App app{"discrete Morse theory on finite posets"};
  app.require_subcommand(1);

  Invocation inv;
  app.add_flag("--pretty", inv.pretty, "indent the report");

  std::string poset_path, complex_path, function_path, matching_path;
  std::string coeffs_spec = "z";
  bool reduced = false, pitcher = false, emit_dot = false;
  std::string from_str, to_str, cell, upper, lower;
  int count = 25;

  auto* props = app.add_subcommand("props", "structural predicates");
  props->add_option("poset", poset_path)->required();
  props->add_flag("--emit-dot", emit_dot, "include a dot rendering");

  auto* hom = app.add_subcommand("homology", "order-complex homology");
  hom->add_option("poset", poset_path)->required();
  hom->add_option("--coeffs", coeffs_spec, "z or p:<prime>");
  hom->add_flag("--reduced", reduced);

  auto* oc = app.add_subcommand("ordercomplex", "order complex of a poset");
  oc->add_option("poset", poset_path)->required();

  auto* fp = app.add_subcommand("faceposet", "face poset of a complex");
  fp->add_option("complex", complex_path)->required();

  auto* mc = app.add_subcommand("morse-check", "validate a Morse function");
  mc->add_option("poset", poset_path)->required();
  mc->add_option("function", function_path)->required();

  auto* integ = app.add_subcommand("integrate", "matching to Morse function");
  integ->add_option("poset", poset_path)->required();
  integ->add_option("matching", matching_path)->required();

  auto* diff = app.add_subcommand("differentiate", "Morse function to matching");
  diff->add_option("poset", poset_path)->required();
  diff->add_option("function", function_path)->required();

  auto* filt = app.add_subcommand("filtration", "sublevel filtration events");
  filt->add_option("poset", poset_path)->required();
  filt->add_option("function", function_path)->required();

  auto* col = app.add_subcommand("collapse", "collapse theorem on an interval");
  col->add_option("poset", poset_path)->required();
  col->add_option("function", function_path)->required();
  col->add_option("--from", from_str)->required();
  col->add_option("--to", to_str)->required();

  auto* adj = app.add_subcommand("adjunction", "adjunction theorem at a cell");
  adj->add_option("poset", poset_path)->required();
  adj->add_option("function", function_path)->required();
  adj->add_option("--from", from_str)->required();
  adj->add_option("--to", to_str)->required();
  adj->add_option("--cell", cell)->required();

  auto* ineq = app.add_subcommand("inequalities", "Morse(-Pitcher) inequalities");
  ineq->add_option("poset", poset_path)->required();
  ineq->add_option("matching", matching_path)->required();
  ineq->add_flag("--pitcher", pitcher);

  auto* can = app.add_subcommand("cancel", "cancel a critical pair");
  can->add_option("poset", poset_path)->required();
  can->add_option("matching", matching_path)->required();
  can->add_option("--upper", upper)->required();
  can->add_option("--lower", lower)->required();

  auto* opt = app.add_subcommand("optimize", "greedy criticality reduction");
  opt->add_option("poset", poset_path)->required();
  opt->add_option("matching", matching_path)->required();

  auto* man = app.add_subcommand("manifold-check", "closed homology manifold");
  man->add_option("poset", poset_path)->required();

  auto* self = app.add_subcommand("selftest", "randomized property checks");
  self->add_option("--count", count, "instances per property");

  // Let global flags like --pretty appear after the subcommand.
  for (CLI::App* s : {props, hom, oc, fp, mc, integ, diff, filt, col, adj,
                      ineq, can, opt, man, self})
    s->fallthrough();

  {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
      app.parse(reversed);
    } catch (const CLI::ParseError& e) {
      if (e.get_exit_code() == 0)
        return RunResult{0, app.help()};
      return RunResult{2, std::string(e.what()) + "\n" + app.help()};
    }
  }

  CLI::App* sub = app.get_subcommands().front();
  inv.command = sub->get_name();

  try {
    if (sub == props) {
      Poset p = parse_poset(inv.read_file(poset_path));
      HeightProfile hp = height_profile(p);
      TwoWideResult tw = is_two_wide(p);
      DownWideResult dw = is_down_wide(p);
      BeatPoints bp = beat_points(p);
      json payload;
      payload["elements"] = p.ids();
      json covers = json::array();
      for (const auto& [a, b] : p.cover_id_pairs())
        covers.push_back(json::array({a, b}));
      payload["covers"] = covers;
      json heights;
      for (std::size_t i = 0; i < p.size(); ++i)
        heights[p.id(i)] = hp.height[i];
      payload["heights"] = heights;
      payload["poset_height"] = hp.poset_height;
      payload["graded"] = hp.graded;
      payload["two_wide"] = json{{"value", tw.two_wide}};
      if (tw.witness)
        payload["two_wide"]["witness"] =
            json::array({(*tw.witness)[0], (*tw.witness)[1], (*tw.witness)[2]});
      payload["down_wide"] = json{{"value", dw.down_wide}};
      if (dw.witness) payload["down_wide"]["witness"] = *dw.witness;
      payload["beat_points"] = json{{"down", bp.down}, {"up", bp.up}};
      payload["components"] = components(p).size();
      payload["admissibility"] = json{
          {"homological",
           admissibility_json(admissibility(p, AdmissibilityMode::Homological))},
          {"one", admissibility_json(admissibility(p, AdmissibilityMode::One))},
          {"full", admissibility_json(admissibility(p, AdmissibilityMode::Full))}};
      if (emit_dot) payload["dot"] = hasse_dot(p);
      return inv.report(0, payload);
    }

    if (sub == hom) {
      Poset p = parse_poset(inv.read_file(poset_path));
      HomologyResult h = homology(p, parse_coeffs(coeffs_spec), reduced);
      json payload = homology_json(h);
      payload["euler"] = euler_characteristic(p);
      return inv.report(0, payload);
    }

    if (sub == oc) {
      Poset p = parse_poset(inv.read_file(poset_path));
      SimplicialComplex k = order_complex(p);
      json payload;
      payload["vertices"] = k.vertices;
      payload["facets"] = k.facets();
      payload["dimension"] = k.dimension();
      payload["text"] = serialize_complex(k);
      return inv.report(0, payload);
    }

    if (sub == fp) {
      SimplicialComplex k = parse_complex(inv.read_file(complex_path));
      Poset p = face_poset(k);
      json payload;
      payload["elements"] = p.ids();
      json covers = json::array();
      for (const auto& [a, b] : p.cover_id_pairs())
        covers.push_back(json::array({a, b}));
      payload["covers"] = covers;
      payload["text"] = serialize_poset(p);
      return inv.report(0, payload);
    }

    if (sub == mc) {
      Poset p = parse_poset(inv.read_file(poset_path));
      MorseFunction f = parse_function(inv.read_file(function_path), p);
      MorseCheck chk = is_morse(f);
      json payload;
      payload["morse"] = chk.morse;
      json violations = json::array();
      for (const auto& v : chk.violations)
        violations.push_back(
            json{{"element", v.element}, {"direction", v.direction}});
      payload["violations"] = violations;
      if (chk.morse) {
        payload["critical"] = critical_points(f);
        ExclusionCheck ex = satisfies_exclusion(f);
        payload["exclusion"] = json{{"ok", ex.ok}};
        if (ex.violator) payload["exclusion"]["violator"] = *ex.violator;
      }
      return inv.report(chk.morse ? 0 : 1, payload);
    }

    if (sub == integ) {
      Poset p = parse_poset(inv.read_file(poset_path));
      Matching m = parse_matching(inv.read_file(matching_path), p);
      MorseFunction f = function_from_matching(m);
      json payload;
      json values;
      for (std::size_t i = 0; i < p.size(); ++i)
        values[p.id(i)] = format_rational(f.values[i]);
      payload["values"] = values;
      payload["critical"] = critical_points(f);
      payload["text"] = serialize_function(f);
      return inv.report(0, payload);
    }

    if (sub == diff) {
      Poset p = parse_poset(inv.read_file(poset_path));
      MorseFunction f = parse_function(inv.read_file(function_path), p);
      Matching m = matching_from_function(f);
      json payload;
      json pairs = json::array();
      for (const auto& [s, t] : m.pair_ids())
        pairs.push_back(json::array({s, t}));
      payload["pairs"] = pairs;
      payload["critical"] = critical_set(m);
      payload["text"] = serialize_matching(m);
      return inv.report(0, payload);
    }

    if (sub == filt) {
      Poset p = parse_poset(inv.read_file(poset_path));
      MorseFunction f = parse_function(inv.read_file(function_path), p);
      std::vector<FiltrationEvent> events = filtration_events(f);
      bool anomaly = false;
      json list = json::array();
      for (const auto& ev : events) {
        anomaly = anomaly || ev.kind == FiltrationEvent::Kind::Anomaly;
        list.push_back(event_json(ev));
      }
      json payload;
      payload["events"] = list;
      return inv.report(anomaly ? 1 : 0, payload);
    }

    if (sub == col) {
      Poset p = parse_poset(inv.read_file(poset_path));
      MorseFunction f = parse_function(inv.read_file(function_path), p);
      CollapseReport rep =
          check_collapse_interval(f, parse_rational(from_str),
                                  parse_rational(to_str));
      json payload;
      payload["report"] = report_json(rep.report);
      json steps = json::array();
      for (const auto& ev : rep.steps) steps.push_back(event_json(ev));
      payload["steps"] = steps;
      payload["relative"] = homology_json(rep.relative);
      return inv.report(conclusion_exit(rep.report.conclusion), payload);
    }

    if (sub == adj) {
      Poset p = parse_poset(inv.read_file(poset_path));
      MorseFunction f = parse_function(inv.read_file(function_path), p);
      AdjunctionReport rep = check_adjunction(
          f, parse_rational(from_str), parse_rational(to_str), cell);
      json payload;
      payload["report"] = report_json(rep.report);
      payload["before"] = homology_json(rep.before);
      payload["after"] = homology_json(rep.after);
      return inv.report(conclusion_exit(rep.report.conclusion), payload);
    }

    if (sub == ineq) {
      Poset p = parse_poset(inv.read_file(poset_path));
      Matching m = parse_matching(inv.read_file(matching_path), p);
      InequalityReport rep =
          pitcher ? pitcher_inequalities(p, m) : morse_inequalities(p, m);
      json payload;
      payload["report"] = report_json(rep.report);
      payload["m"] = rep.m;
      json rows = json::array();
      for (const auto& row : rep.rows)
        rows.push_back(json{{"domain", row.domain},
                            {"betti", row.betti},
                            {"weak_ok", row.weak_ok},
                            {"strong_ok", row.strong_ok},
                            {"chi_ok", row.chi_ok}});
      payload["rows"] = rows;
      if (rep.pitcher) {
        payload["mu"] = rep.mu;
        payload["pitcher_ok"] = rep.pitcher_ok;
      }
      return inv.report(conclusion_exit(rep.report.conclusion), payload);
    }

    if (sub == can) {
      Poset p = parse_poset(inv.read_file(poset_path));
      Matching m = parse_matching(inv.read_file(matching_path), p);
      Matching out = cancel_pair(m, upper, lower);
      json payload;
      json pairs = json::array();
      for (const auto& [s, t] : out.pair_ids())
        pairs.push_back(json::array({s, t}));
      payload["pairs"] = pairs;
      payload["critical"] = critical_set(out);
      payload["text"] = serialize_matching(out);
      return inv.report(0, payload);
    }

    if (sub == opt) {
      Poset p = parse_poset(inv.read_file(poset_path));
      Matching m = parse_matching(inv.read_file(matching_path), p);
      auto [out, log] = optimize(m);
      json payload;
      json pairs = json::array();
      for (const auto& [s, t] : out.pair_ids())
        pairs.push_back(json::array({s, t}));
      payload["pairs"] = pairs;
      payload["critical"] = critical_set(out);
      json entries = json::array();
      for (const auto& e : log)
        entries.push_back(json{{"upper", e.upper},
                               {"lower", e.lower},
                               {"path_length", e.path_length}});
      payload["log"] = entries;
      payload["text"] = serialize_matching(out);
      return inv.report(0, payload);
    }

    if (sub == man) {
      Poset p = parse_poset(inv.read_file(poset_path));
      json payload;
      try {
        bool ok = is_closed_homology_manifold(p);
        payload["applicable"] = true;
        payload["manifold"] = ok;
        return inv.report(ok ? 0 : 1, payload);
      } catch (const NotHomogeneous& e) {
        payload["applicable"] = false;
        payload["reason"] = e.what();
        return inv.report(1, payload);
      }
    }

    if (sub == self) {
      const std::uint64_t seed = selftest_seed();
      json properties = json::array();
      int failures = 0;

      {
        Rng rng(seed);
        int bad = 0;
        for (int i = 0; i < count; ++i) {
          Poset p = random_two_wide_poset(rng, 25);
          MorseFunction f = random_morse_function(rng, p);
          if (!satisfies_exclusion(f).ok) ++bad;
        }
        failures += bad;
        properties.push_back(json{{"name", "exclusion-on-two-wide"},
                                  {"runs", count},
                                  {"failures", bad}});
      }
      {
        Rng rng(seed + 1);
        int bad = 0;
        for (int i = 0; i < count; ++i) {
          Poset p = random_graded_poset(rng, 25);
          Matching m = random_morse_matching(rng, p);
          MorseFunction f = function_from_matching(m);
          Matching back = matching_from_function(f);
          if (back.pairs != m.pairs ||
              critical_set(back) != critical_set(m) ||
              !satisfies_exclusion(f).ok)
            ++bad;
        }
        failures += bad;
        properties.push_back(json{{"name", "matching-function-round-trip"},
                                  {"runs", count},
                                  {"failures", bad}});
      }
      {
        Rng rng(seed + 2);
        int bad = 0;
        for (int i = 0; i < count; ++i) {
          Poset p = random_poset(rng, 20);
          HomologyResult whole =
              homology(p, Coefficients::integers(), true);
          HomologyResult reduced_core =
              homology(core(p), Coefficients::integers(), true);
          if (!HomologyResult::same_groups(whole, reduced_core)) ++bad;
        }
        failures += bad;
        properties.push_back(json{{"name", "core-preserves-homology"},
                                  {"runs", count},
                                  {"failures", bad}});
      }

      json payload;
      payload["seed"] = seed;
      payload["count"] = count;
      payload["properties"] = properties;
      return inv.report(failures == 0 ? 0 : 1, payload);
    }

    throw UsageError("unknown subcommand");
  } catch (const ParseError& e) {
    return inv.error(2, "ParseError", e.what(), json{{"line", e.line}});
  } catch (const UsageError& e) {
    return inv.error(2, "UsageError", e.what());
  } catch (const CycleError& e) {
    return inv.error(2, "CycleError", e.what());
  } catch (const UnknownElement& e) {
    return inv.error(2, "UnknownElement", e.what());
  } catch (const NotMorseMatching& e) {
    return inv.error(2, "NotMorseMatching", e.what(),
                     json{{"cycle", e.cycle}});
  } catch (const InvalidMatching& e) {
    return inv.error(2, "InvalidMatching", e.what());
  } catch (const NotGraded& e) {
    return inv.error(2, "NotGraded", e.what());
  } catch (const NotMorse& e) {
    return inv.error(2, "NotMorse", e.what());
  } catch (const ExclusionViolated& e) {
    return inv.error(2, "ExclusionViolated", e.what());
  } catch (const NonPrimeModulus& e) {
    return inv.error(2, "NonPrimeModulus", e.what());
  } catch (const EmptyComplex& e) {
    return inv.error(2, "EmptyComplex", e.what());
  } catch (const BadInterval& e) {
    return inv.error(2, "BadInterval", e.what());
  } catch (const PathNotUnique& e) {
    return inv.error(1, "PathNotUnique", e.what(),
                     json{{"count", e.count}});
  } catch (const NotCritical& e) {
    return inv.error(1, "NotCritical", e.what());
  } catch (const HeightMismatch& e) {
    return inv.error(1, "HeightMismatch", e.what());
  } catch (const HypothesisViolation& e) {
    return inv.error(1, "HypothesisViolation", e.what());
  } catch (const Error& e) {
    return inv.error(2, "Error", e.what());
  }
}

}  // namespace morseposet
