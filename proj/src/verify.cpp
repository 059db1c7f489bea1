#include "morseposet/verify.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "morseposet/pi1.hpp"
#include "morseposet/reduction.hpp"

namespace morseposet {

namespace {

TriState pass_fail(bool ok, std::string why_not) {
  return ok ? TriState::yes("ok") : TriState::no(std::move(why_not));
}

/// Homological admissibility of every matched pair of m.
TriState matching_homologically_admissible(const Matching& m) {
  const Poset& p = *m.base;
  for (auto [w, v] : m.pairs) {
    Bitset set = p.down_set(v);
    set.reset(v);
    set.reset(w);
    if (!is_acyclic(make_subposet(p, set)))
      return TriState::no("pair (" + p.id(w) + ", " + p.id(v) +
                          ") is not homologically admissible");
  }
  return TriState::yes("every matched pair is homologically admissible");
}

/// 1-admissibility surrogate for one matched cover edge (w, v).
TriState edge_one_admissible(const Poset& p, std::size_t w, std::size_t v) {
  Bitset set = p.down_set(v);
  set.reset(v);
  set.reset(w);
  Subposet s = make_subposet(p, set);
  if (s.empty()) return TriState::no("punctured open star is empty");
  if (component_count(p, set) != 1)
    return TriState::no("punctured open star is disconnected");
  HomologyResult h = homology(s, Coefficients::integers(), true);
  if (h.betti_at(1) != 0 || h.torsion_count(1) != 0)
    return TriState::no("nontrivial first homology");
  return edge_path_group_trivial(order_complex(s));
}

std::string event_label(const FiltrationEvent& ev) {
  switch (ev.kind) {
    case FiltrationEvent::Kind::NoChange: return "no-change";
    case FiltrationEvent::Kind::BeatPair:
      return "beat-pair {" + ev.v + ", " + ev.w + "}";
    case FiltrationEvent::Kind::CriticalAdjunction:
      return "critical adjunction of " + ev.cell;
    default: return "anomaly: " + ev.description;
  }
}

std::vector<long> critical_counts_by_height(const Matching& m,
                                            const HeightProfile& hp) {
  const Poset& p = *m.base;
  std::vector<bool> used(p.size(), false);
  for (auto [s, t] : m.pairs) used[s] = used[t] = true;
  std::vector<long> counts(std::max(hp.poset_height + 1, 1), 0);
  for (std::size_t i = 0; i < p.size(); ++i)
    if (!used[i]) ++counts[hp.height[i]];
  return counts;
}

long alternating_partial(const std::vector<long>& v, int n) {
  long sum = 0;
  for (int i = 0; i <= n; ++i) {
    long term = (i < static_cast<int>(v.size())) ? v[i] : 0;
    sum += ((n - i) % 2 == 0 ? term : -term);
  }
  return sum;
}

InequalityReport inequalities_impl(const Poset& p, const Matching& m,
                                   bool pitcher) {
  InequalityReport out;
  out.pitcher = pitcher;
  TheoremReport& rep = out.report;
  rep.theorem = pitcher ? "morse-pitcher inequalities" : "morse inequalities";

  MorseMatchingCheck mm = is_morse_matching(m);
  rep.hypotheses.push_back(
      {"matching is Morse", pass_fail(mm.morse, "H_M has a directed cycle")});
  HeightProfile hp = height_profile(p);
  rep.hypotheses.push_back(
      {"base is graded", pass_fail(hp.graded, "some U_x is not homogeneous")});
  DownWideResult dw = is_down_wide(p);
  rep.hypotheses.push_back(
      {"base is down-wide",
       pass_fail(dw.down_wide,
                 dw.witness ? "witness: " + *dw.witness : "not down-wide")});

  if (!mm.morse || !hp.graded) {
    rep.finish(false);
    return out;
  }

  MorseFunction f = function_from_matching(m);
  rep.hypotheses.push_back({"order-preserving integrated function exists",
                            TriState::yes("layering of the condensed diagram")});
  ExclusionCheck ex = satisfies_exclusion(f);
  rep.hypotheses.push_back(
      {"integrated function satisfies exclusion",
       pass_fail(ex.ok, ex.violator ? "violated at " + *ex.violator : "")});
  rep.hypotheses.push_back(
      {"matching homologically admissible", matching_homologically_admissible(m)});
  rep.hypotheses.push_back({"matching homology-regular",
                            regularity(m, RegularityMode::Homology)});

  out.m = critical_counts_by_height(m, hp);
  const int top = hp.poset_height;

  bool all_ok = true;
  struct DomainSpec {
    std::string name;
    Coefficients coeffs;
  };
  std::vector<DomainSpec> domains{{"Z", Coefficients::integers()},
                                  {"F2", Coefficients::field(2)},
                                  {"F3", Coefficients::field(3)}};
  HomologyResult h_z;
  for (const auto& d : domains) {
    HomologyResult h = homology(p, d.coeffs, /*reduced=*/false);
    if (d.name == "Z") h_z = h;
    InequalityRow row;
    row.domain = d.name;
    for (int i = 0; i <= std::max(top, 0); ++i)
      row.betti.push_back(h.betti_at(i));
    for (int i = 0; i <= top; ++i) {
      long mi = (i < static_cast<int>(out.m.size())) ? out.m[i] : 0;
      if (mi < row.betti[i]) row.weak_ok = false;
    }
    for (int n = 0; n <= top; ++n)
      if (alternating_partial(out.m, n) < alternating_partial(row.betti, n))
        row.strong_ok = false;
    long chi_m = 0, chi_b = 0;
    for (int i = 0; i <= top; ++i) {
      long sgn = (i % 2 == 0) ? 1 : -1;
      chi_m += sgn * ((i < static_cast<int>(out.m.size())) ? out.m[i] : 0);
      chi_b += sgn * row.betti[i];
    }
    row.chi_ok = (chi_m == chi_b);
    if (!row.weak_ok || !row.strong_ok || !row.chi_ok) {
      all_ok = false;
      rep.witnesses.push_back("inequalities fail over " + d.name);
    }
    out.rows.push_back(std::move(row));
  }

  if (pitcher) {
    out.mu.assign(std::max(top, 0) + 1, 0);
    for (int i = 0; i <= top; ++i)
      out.mu[i] = static_cast<long>(h_z.torsion_count(i));
    // H_0 is free and the top homology embeds in the free chain group, so
    // these counts are zero; clamp anyway to keep the checks honest.
    if (top >= 0) {
      out.mu[0] = 0;
      out.mu[top] = 0;
    }
    const std::vector<long>& b = out.rows[0].betti;  // over Z
    for (int n = 0; n <= top; ++n) {
      long mn = (n < static_cast<int>(out.m.size())) ? out.m[n] : 0;
      long mun = out.mu[n];
      long mun1 = (n >= 1) ? out.mu[n - 1] : 0;
      if (mn < b[n] + mun + mun1) {
        out.pitcher_ok = false;
        rep.witnesses.push_back("m_" + std::to_string(n) + " < b + mu + mu'");
      }
      if (alternating_partial(out.m, n) <
          alternating_partial(b, n) + mun) {
        out.pitcher_ok = false;
        rep.witnesses.push_back("strong Pitcher form fails at n = " +
                                std::to_string(n));
      }
    }
    all_ok = all_ok && out.pitcher_ok;
  }

  rep.finish(all_ok);
  return out;
}

}  // namespace

CollapseReport check_collapse_interval(const MorseFunction& f,
                                       const Rational& a, const Rational& b) {
  if (!(a < b)) throw BadInterval("expected a < b");
  const Poset& p = *f.base;
  CollapseReport out;
  TheoremReport& rep = out.report;
  rep.theorem = "collapse";

  DownWideResult dw = is_down_wide(p);
  rep.hypotheses.push_back(
      {"base is down-wide",
       pass_fail(dw.down_wide,
                 dw.witness ? "witness: " + *dw.witness : "not down-wide")});
  std::size_t comps = component_count(p, p.full_set());
  rep.hypotheses.push_back(
      {"base is path-connected",
       pass_fail(comps == 1, "b0 = " + std::to_string(comps))});
  MorseCheck mc = is_morse(f);
  rep.hypotheses.push_back(
      {"function is Morse",
       pass_fail(mc.morse, mc.morse ? ""
                                    : "violation at " +
                                          mc.violations.front().element)});
  if (!mc.morse) {
    rep.finish(false);
    return out;
  }
  ExclusionCheck ex = satisfies_exclusion(f);
  rep.hypotheses.push_back(
      {"function satisfies exclusion",
       pass_fail(ex.ok, ex.violator ? "violated at " + *ex.violator : "")});
  if (!ex.ok) {
    rep.finish(false);
    return out;
  }
  Matching m = matching_from_function(f);
  rep.hypotheses.push_back(
      {"associated matching homologically admissible",
       matching_homologically_admissible(m)});
  std::vector<Id> crit = critical_points(f);
  {
    std::optional<Id> inside;
    for (const Id& c : crit) {
      const Rational& v = f.values[p.index(c)];
      if (a < v && v <= b) {
        inside = c;
        break;
      }
    }
    rep.hypotheses.push_back(
        {"no critical values in the interval",
         pass_fail(!inside,
                   inside ? "critical value of " + *inside + " inside" : "")});
  }

  // Step decomposition: events of the injective refinement whose element
  // has an f-value inside (a, b].
  MorseFunction g = make_injective(f);
  std::set<Rational> wanted;
  for (std::size_t i = 0; i < p.size(); ++i)
    if (a < f.values[i] && f.values[i] <= b) wanted.insert(g.values[i]);
  std::vector<FiltrationEvent> all_events = filtration_events(f);
  std::map<Rational, std::pair<Bitset, Bitset>> snapshots;  // before, after
  {
    Bitset before(p.size());
    std::vector<std::size_t> by_value(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) by_value[i] = i;
    std::sort(by_value.begin(), by_value.end(),
              [&](std::size_t u, std::size_t v) {
                return g.values[u] < g.values[v];
              });
    for (std::size_t x : by_value) {
      Bitset after = before | p.down_set(x);
      if (wanted.count(g.values[x])) snapshots[g.values[x]] = {before, after};
      before = std::move(after);
    }
  }
  for (const FiltrationEvent& ev : all_events)
    if (wanted.count(ev.threshold)) out.steps.push_back(ev);

  Bitset xa = sublevel(f, a).members;
  Bitset xb = sublevel(f, b).members;
  out.relative = relative_homology_sets(p, xb, xa);

  bool checks_ok = out.relative.trivial();
  if (!checks_ok)
    rep.witnesses.push_back("relative homology of (X_b, X_a) is nonzero");

  for (const FiltrationEvent& ev : out.steps) {
    if (ev.kind == FiltrationEvent::Kind::NoChange) continue;
    if (ev.kind != FiltrationEvent::Kind::BeatPair) {
      checks_ok = false;
      rep.witnesses.push_back("step at " + ev.threshold.str() + ": " +
                              event_label(ev));
      continue;
    }
    const auto& snap = snapshots.at(ev.threshold);
    std::size_t iv = p.index(ev.v), iw = p.index(ev.w);
    // Excision: H(U_v, U^_v - {w}) must equal H(X_after, X_before).
    Bitset uv = p.down_set(iv);
    Bitset punctured = uv;
    punctured.reset(iv);
    punctured.reset(iw);
    HomologyResult lhs = relative_homology_sets(p, uv, punctured);
    HomologyResult rhs = relative_homology_sets(p, snap.second, snap.first);
    if (!HomologyResult::same_groups(lhs, rhs)) {
      checks_ok = false;
      rep.witnesses.push_back("excision identity fails at step " +
                              ev.threshold.str());
    }
    TriState one_adm = edge_one_admissible(p, iw, iv);
    if (one_adm.is_yes()) {
      Bitset q = snap.second;
      q.reset(iw);
      TriState gamma = is_gamma_point(make_subposet(p, q).materialize(), ev.v);
      rep.notes.push_back("step " + ev.threshold.str() + ": " + ev.v +
                          " gamma-point in X_b - {" + ev.w +
                          "}: " + to_string(gamma.v) + " (" + gamma.reason +
                          ")");
    }
  }
  // Keep counterexample findings visible even when hypotheses failed.
  for (const FiltrationEvent& ev : out.steps) {
    if (ev.b0_after > ev.b0_before)
      rep.witnesses.push_back("b0 jumps from " +
                              std::to_string(ev.b0_before) + " to " +
                              std::to_string(ev.b0_after) + " at " +
                              ev.threshold.str() + " (" + event_label(ev) +
                              ")");
  }

  rep.finish(checks_ok);
  return out;
}

AdjunctionReport check_adjunction(const MorseFunction& f, const Rational& a,
                                  const Rational& b, const Id& x) {
  if (!(a < b)) throw BadInterval("expected a < b");
  const Poset& p = *f.base;
  const std::size_t ix = p.index(x);
  AdjunctionReport out;
  TheoremReport& rep = out.report;
  rep.theorem = "adjunction";

  MorseCheck mc = is_morse(f);
  rep.hypotheses.push_back(
      {"function is Morse",
       pass_fail(mc.morse, mc.morse ? ""
                                    : "violation at " +
                                          mc.violations.front().element)});
  if (!mc.morse) {
    rep.finish(false);
    return out;
  }
  ExclusionCheck ex = satisfies_exclusion(f);
  rep.hypotheses.push_back(
      {"function satisfies exclusion",
       pass_fail(ex.ok, ex.violator ? "violated at " + *ex.violator : "")});
  {
    // Order-preservation is evidence, not a gate: the isolation hypothesis
    // plus the direct set checks below already carry its role for the
    // given interval.
    std::optional<std::string> bad;
    for (auto [u, v] : p.covers())
      if (f.values[u] > f.values[v]) {
        bad = "f(" + p.id(u) + ") > f(" + p.id(v) + ")";
        break;
      }
    rep.notes.push_back(bad ? "function is not order-preserving (" + *bad + ")"
                            : "function is order-preserving");
  }
  {
    std::vector<Id> crit = critical_points(f);
    bool x_critical =
        std::find(crit.begin(), crit.end(), x) != crit.end();
    rep.hypotheses.push_back(
        {"cell is critical", pass_fail(x_critical, x + " is regular")});
  }
  rep.hypotheses.push_back(
      {"critical value lies in the interval",
       pass_fail(a < f.values[ix] && f.values[ix] <= b,
                 "f(" + x + ") = " + f.values[ix].str() + " outside")});
  {
    std::optional<Id> other;
    for (std::size_t i = 0; i < p.size(); ++i)
      if (i != ix && a < f.values[i] && f.values[i] <= b) {
        other = p.id(i);
        break;
      }
    rep.hypotheses.push_back(
        {"no other elements map into the interval",
         pass_fail(!other, other ? *other + " also maps inside" : "")});
  }

  Bitset xa = sublevel(f, a).members;
  Bitset xb = sublevel(f, b).members;
  out.before = relative_homology_sets(p, xa, Bitset(p.size()));
  out.after = relative_homology_sets(p, xb, Bitset(p.size()));

  bool checks_ok = true;
  Bitset diff = xb & ~xa;
  if (!(diff.count() == 1 && diff.test(ix))) {
    checks_ok = false;
    rep.witnesses.push_back("X_b - X_a is not exactly {" + x + "}");
  }
  for (std::size_t w : p.lower_covers(ix)) {
    if (!xa.test(w)) {
      checks_ok = false;
      rep.witnesses.push_back("boundary element " + p.id(w) +
                              " missing from X_a");
    }
  }
  rep.finish(checks_ok);
  return out;
}

InequalityReport morse_inequalities(const Poset& p, const Matching& m) {
  return inequalities_impl(p, m, /*pitcher=*/false);
}

InequalityReport pitcher_inequalities(const Poset& p, const Matching& m) {
  return inequalities_impl(p, m, /*pitcher=*/true);
}

}  // namespace morseposet
