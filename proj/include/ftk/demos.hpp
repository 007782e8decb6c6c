// Copyright 2026 The ftk Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <string>
#include <vector>

#include "ftk/json_io.hpp"

namespace ftk::demo {

using io::json;

/// Accumulates named boolean checks for a demo's output.
class Checks {
 public:
  void add(const std::string& name, bool passed) {
    items_.push_back({{"check", name}, {"passed", passed}});
    all_ = all_ && passed;
  }
  bool all() const { return all_; }
  const json& items() const { return items_; }

 private:
  json items_ = json::array();
  bool all_ = true;
};

inline json finish(const std::string& name, json instance, const Checks& checks, json result) {
  return {{"demo", name}, {"instance", std::move(instance)}, {"checks", checks.items()},
          {"passed", checks.all()}, {"result", std::move(result)}};
}

/// S = [0,1), p = 1/2 on the rational line: α(a) and the neighbourhoods
/// [x, x + 2^{-n}).
inline json semiring() {
  const IntervalSet s({{Rational(0), Rational(1), true, false}});
  Checks checks;
  json alphas = json::array();
  for (const char* text : {"0", "1/4", "1/2", "3/4", "7/8", "63/64"}) {
    const Rational a = parse_rational(text);
    const std::size_t n = semiring_alpha(a);
    const Rational step = Rational(Integer(1), Integer(1) << n);
    const bool minimal = n == 0 || a + step * 2 > 1;
    checks.add(std::string("alpha(") + text + ") is the least n with a + 2^-n <= 1", a + step <= 1 && minimal);
    alphas.push_back({{"a", text}, {"alpha", n}});
  }
  json nbhd = json::array();
  for (std::size_t n = 0; n <= 3; ++n) {
    const Rational x(1, 3);
    const IntervalSet u({{x, x + Rational(Integer(1), Integer(1) << n), true, false}});
    checks.add("N(" + std::to_string(n) + ",1/3) is open", sorgenfrey_is_open(u).open);
    nbhd.push_back({{"n", n}, {"x", "1/3"}, {"N", io::to_json(u)["intervals"]}});
  }
  checks.add("S is open", sorgenfrey_is_open(s).open);
  return finish("semiring", {{"S", io::to_json(s)}, {"p", "1/2"}}, checks,
                {{"alpha", alphas}, {"neighbourhoods", nbhd}});
}

/// Openness in the half-open-interval topology for a few interval sets.
inline json sorgenfrey() {
  struct Case {
    const char* name;
    std::vector<RationalInterval> parts;
    bool expected;
  };
  const std::vector<Case> cases = {
      {"[0,1)", {{Rational(0), Rational(1), true, false}}, true},
      {"(0,1]", {{Rational(0), Rational(1), false, true}}, false},
      {"{0}", {{Rational(0), Rational(0), true, true}}, false},
      {"[0,1/2] u (1/2,1)", {{Rational(0), Rational(1, 2), true, true}, {Rational(1, 2), Rational(1), false, false}},
       true},
      {"[0,1) u [1,2]", {{Rational(0), Rational(1), true, false}, {Rational(1), Rational(2), true, true}}, false},
  };
  Checks checks;
  json instances = json::array(), results = json::array();
  for (const auto& c : cases) {
    const IntervalSet s(c.parts);
    const auto r = sorgenfrey_is_open(s);
    checks.add(std::string(c.name) + (c.expected ? " is open" : " is not open"), r.open == c.expected);
    json entry = {{"set", c.name}, {"normalized", io::to_json(s)["intervals"]}, {"open", r.open}};
    if (r.witness) entry["witness"] = format_rational(*r.witness);
    instances.push_back({{"set", c.name}, {"intervals", io::to_json(IntervalSet(c.parts))["intervals"]}});
    results.push_back(entry);
  }
  return finish("sorgenfrey", instances, checks, results);
}

/// u = (1/2)^{e_u}; α is the least n with e_u + 2^{-n} < 1.
inline json sqrt() {
  Checks checks;
  json out = json::array();
  const std::vector<std::pair<const char*, std::size_t>> cases = {{"0", 1}, {"1/2", 2}, {"7/8", 4}, {"3/4", 3}};
  for (const auto& [text, expected] : cases) {
    const std::size_t n = sqrt_example_alpha(parse_rational(text));
    checks.add(std::string("alpha(e_u=") + text + ") = " + std::to_string(expected), n == expected);
    out.push_back({{"e_u", text}, {"alpha", n}});
  }
  return finish("sqrt", {{"t", "sqrt"}, {"encoding", "u = (1/2)^e_u"}, {"e_u", {"0", "1/2", "7/8", "3/4"}}},
                checks, out);
}

/// Maps on small monoids: membership in S and α.
inline json funcspace() {
  struct Case {
    const char* name;
    FiniteMonoid m;
    std::vector<std::size_t> t;
    Subset p;
    std::vector<std::size_t> f;
  };
  const auto sat = saturating_monoid(2);
  const auto z4 = cyclic_monoid(4);
  const std::vector<Case> cases = {
      {"saturating {0,1,2}, t = id, P = {0,1}, f = 0", sat, {0, 1, 2}, Subset::from_bits(0b011), {0, 0, 0}},
      {"saturating {0,1,2}, t = id, P = {0,1}, f = 1", sat, {0, 1, 2}, Subset::from_bits(0b011), {1, 1, 1}},
      {"saturating {0,1,2}, t = 0, P = {0,1}, f = 1", sat, {0, 0, 0}, Subset::from_bits(0b011), {1, 1, 1}},
      {"Z4, t = 2x, P = {0,2}, f = 0", z4, {0, 2, 0, 2}, Subset::from_bits(0b0101), {0, 0, 0, 0}},
  };
  Checks checks;
  json instances = json::array(), results = json::array();
  for (const auto& c : cases) {
    const auto r = function_space_alpha(c.m, c.t, c.p, c.f);
    const auto& X = c.m.elements();
    json tj = json::array(), fj = json::array();
    for (std::size_t x = 0; x < X.size(); ++x) {
      tj.push_back({X.label(x), X.label(c.t[x])});
      fj.push_back({X.label(x), X.label(c.f[x])});
    }
    instances.push_back({{"case", c.name}, {"monoid", io::to_json(c.m, false)}, {"t", tj},
                         {"P", io::subset_json(X, c.p)}, {"f", fj}});
    json entry = {{"case", c.name}, {"membership", to_string(r.membership)}, {"invariant", r.invariant}};
    if (r.alpha) entry["alpha"] = *r.alpha;
    json shifts = json::array();
    for (const auto& s : r.shifts) {
      json sj = {{"n", s.n}, {"membership", to_string(s.membership)}, {"bound", s.bound}, {"identity", s.identity}};
      if (s.alpha) sj["alpha"] = *s.alpha;
      shifts.push_back(sj);
      checks.add(std::string(c.name) + ": alpha(t^" + std::to_string(s.n) + " f) <= alpha(f) + " +
                     std::to_string(s.n),
                 s.bound);
    }
    entry["shifts"] = shifts;
    results.push_back(entry);
    if (std::all_of(c.f.begin(), c.f.end(), [&](std::size_t v) { return v == c.m.zero(); }))
      checks.add(std::string(c.name) + ": alpha(0) = 0", r.alpha == std::size_t{0});
  }
  checks.add("f = 1 on the saturating monoid is not a member",
             function_space_alpha(sat, {0, 1, 2}, Subset::from_bits(0b011), {1, 1, 1}).membership ==
                 Membership::NotMember);
  return finish("funcspace", instances, checks, results);
}

/// Three points with d(x,y) = 0 and d(x,z) = d(y,z) = 1/2, cap 2.
inline json metric() {
  const Carrier c({"x", "y", "z"});
  const Rational h(1, 2);
  const io::PseudometricInstance inst{{c, {0, 0, h, 0, 0, h, h, h, 0}}, 2};
  Checks checks;
  checks.add("pseudometric axioms", check_pseudometric(inst.metric).passed());
  const FibrousPreorder fp = from_pseudometric(inst.metric, inst.cap);
  checks.add("C1-C3", check_axioms(fp).passed());
  const FiniteTopology t = induced_topology(fp);
  checks.add("induced family is a topology", validate_topology(t).passed());
  const FiniteTopology expected(c, {Subset(), Subset::from_bits(0b100), Subset::from_bits(0b011), c.full()});
  checks.add("topology is {0, {z}, {x,y}, X}", t == expected);
  return finish("metric", io::to_json(inst), checks, {{"fibrous_preorder", io::to_json(fp)}, {"opens", io::opens_json(t)}});
}

/// Cosets of S_n in Z4, and the module examples built on them.
inline json coset() {
  const auto z4 = cyclic_monoid(4);
  const auto i2 = capped_nat_mult(2);
  Checks checks;

  const SnFamily sf{z4, i2, {z4.elements().full(), Subset::from_bits(0b0101)}, {{0, 0, 0, 0}, {1, 1, 1, 1}}};
  checks.add("S_n family conditions", check_sn_family(sf).passed());
  const FibrousPreorder fp = fp_from_sn_family(sf);
  checks.add("C1-C3", check_axioms(fp).passed());
  const FiniteTopology t = induced_topology(fp);
  const FiniteTopology expected(z4.elements(), {Subset(), Subset::from_bits(0b0101), Subset::from_bits(0b1010),
                                                z4.elements().full()});
  checks.add("topology is {0, {0,2}, {1,3}, Z4}", t == expected);
  const EtaGammaRep eg = ternary_to_etagamma(nmap_to_ternary(fp_to_nmap(fp)));
  const Report beta = check_beta_decomposition(eg);

  const ModuleData zero_action{z4, i2, {0, 1, 2, 3, 0, 0, 0, 0}, Subset::from_bits(0b0101),
                               std::vector<std::optional<std::size_t>>{1, std::nullopt, 1, std::nullopt}};
  checks.add("zero action is an action", validate_action(zero_action).passed());
  checks.add("zero action satisfies (a)", check_module_condition(zero_action, ModuleKind::A).passed());
  const FiniteTopology discrete = module_topology(zero_action);
  checks.add("zero action gives the discrete topology", discrete.size() == 16);
  const MoreoverReport both = check_moreover_clause(zero_action);
  checks.add("zero action: closure and cartesian agree", both.agree() && both.closure);

  const ModuleData triple{z4, i2, {0, 1, 2, 3, 0, 3, 2, 1}, Subset::from_bits(0b0011),
                          std::vector<std::optional<std::size_t>>{0, 1, std::nullopt, std::nullopt}};
  const MoreoverReport neither = check_moreover_clause(triple);
  checks.add("xi(2,x) = 3x, S = {0,1}: closure fails", !neither.closure);
  checks.add("xi(2,x) = 3x, S = {0,1}: cartesian fails", !neither.cartesian);

  json failures = io::to_json(neither.cartesian_failures);
  return finish("coset", {{"sn_family", io::to_json(sf)}, {"zero_action", io::to_json(zero_action)},
                          {"triple_action", io::to_json(triple)}},
                checks,
                {{"opens", io::opens_json(t)},
                 {"beta_decomposition", io::to_json(beta)},
                 {"zero_action_opens", io::opens_json(discrete)},
                 {"triple_action_moreover",
                  {{"closure", neither.closure}, {"closure_witness", io::to_json(neither.closure_witness)},
                   {"cartesian", neither.cartesian}, {"first_failure", failures["violations"][0]}}}});
}

inline const std::vector<std::string>& names() {
  static const std::vector<std::string> all = {"semiring", "sorgenfrey", "sqrt", "funcspace", "metric", "coset"};
  return all;
}

inline json run(const std::string& name) {
  if (name == "semiring") return semiring();
  if (name == "sorgenfrey") return sorgenfrey();
  if (name == "sqrt") return sqrt();
  if (name == "funcspace") return funcspace();
  if (name == "metric") return metric();
  if (name == "coset") return coset();
  throw Error(ErrorCode::Usage, "unknown demo '" + name + "'", {{"demo", name}});
}

}  // namespace ftk::demo
