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

#include <algorithm>
#include <functional>
#include <initializer_list>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include <json.hpp>

#include "ftk/algebra.hpp"
#include "ftk/constructors.hpp"
#include "ftk/error.hpp"
#include "ftk/fibrous_preorder.hpp"
#include "ftk/finite_topology.hpp"
#include "ftk/magma.hpp"
#include "ftk/module_theory.hpp"
#include "ftk/rational.hpp"
#include "ftk/representations.hpp"
#include "ftk/subset.hpp"
#include "ftk/worked_examples.hpp"

namespace ftk::io {

using json = nlohmann::json;

// ------------------------------------------------------------ instance types

struct PseudometricInstance {
  RationalPseudometric metric;
  std::size_t cap = 1;
};

struct GroupSubsetInstance {
  FiniteGroup group;
  Subset b;
  std::vector<std::optional<std::size_t>> alpha;
  UnitaryMagma magma;
};

struct LaxMaltsevInstance {
  LaxMaltsevData data;
  LinkingForm form = LinkingForm::Nested;
};

struct MorphismBundle {
  FibrousPreorder src;
  FibrousPreorder dst;
  std::vector<std::size_t> f;
  std::vector<std::vector<std::size_t>> g;  // g[j][x]
};

using Instance = std::variant<FibrousPreorder, Preorder, FiniteTopology, NeighborhoodMap, TernaryRep, EtaGammaRep,
                              PseudometricInstance, GroupSubsetInstance, LaxMaltsevInstance, FiniteMonoid, SnFamily,
                              ModuleData, IntervalSet, MorphismBundle>;

inline const char* kind_name(const Instance& inst) {
  static constexpr const char* names[] = {
      "fibrous_preorder", "preorder", "topology",     "nmap",   "ternary",     "etagamma",     "pseudometric",
      "group_subset",     "lax_maltsev", "monoid", "sn_family", "module_data", "interval_set", "morphism"};
  return names[inst.index()];
}

// ------------------------------------------------------------------ reading

/// A JSON value together with its path from the document root.
class Node {
 public:
  Node(const json& value, std::string path) : v_(&value), path_(std::move(path)) {}

  const json& raw() const { return *v_; }
  const std::string& path() const { return path_; }

  [[noreturn]] void fail(const std::string& message) const {
    throw Error(ErrorCode::SchemaError, path_ + ": " + message, {{"path", path_}});
  }

  /// Requires an object whose keys are all in `allowed`.
  const Node& object(std::initializer_list<std::string_view> allowed) const {
    if (!v_->is_object()) fail("expected an object");
    for (const auto& [key, value] : v_->items())
      if (std::find(allowed.begin(), allowed.end(), key) == allowed.end()) child(key).fail("unknown field");
    return *this;
  }

  bool has(const std::string& key) const { return v_->is_object() && v_->contains(key); }

  Node field(const std::string& key) const {
    if (!v_->is_object()) fail("expected an object");
    auto it = v_->find(key);
    if (it == v_->end()) fail("missing field '" + key + "'");
    return Node(*it, path_ + "." + key);
  }

  std::optional<Node> optional_field(const std::string& key) const {
    if (!has(key)) return std::nullopt;
    return field(key);
  }

  std::vector<Node> items() const {
    if (!v_->is_array()) fail("expected an array");
    std::vector<Node> out;
    for (std::size_t k = 0; k < v_->size(); ++k) out.emplace_back((*v_)[k], path_ + "[" + std::to_string(k) + "]");
    return out;
  }

  /// An array of exactly n entries.
  std::vector<Node> tuple(std::size_t n) const {
    auto out = items();
    if (out.size() != n) fail("expected " + std::to_string(n) + " entries");
    return out;
  }

  std::string str() const {
    if (!v_->is_string()) fail("expected a string");
    return v_->get<std::string>();
  }

  long long integer() const {
    if (!v_->is_number_integer()) fail("expected an integer");
    return v_->get<long long>();
  }

  std::size_t natural() const {
    const long long v = integer();
    if (v < 0) fail("expected a non-negative integer");
    return static_cast<std::size_t>(v);
  }

  bool boolean() const {
    if (!v_->is_boolean()) fail("expected a boolean");
    return v_->get<bool>();
  }

 private:
  Node child(const std::string& key) const { return Node((*v_)[key], path_ + "." + key); }

  const json* v_;
  std::string path_;
};

/// Runs f, attaching `path` to any library error it raises.
template <class F>
auto at_path(const std::string& path, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const Error& e) {
    for (const auto& [k, v] : e.witness())
      if (k == "path") throw;
    Witness w = e.witness();
    w.insert(w.begin(), {"path", path});
    throw Error(e.code(), path + ": " + e.message(), std::move(w));
  }
}

/// Parses text as JSON, reporting the line and column of a syntax error.
inline json parse_json(std::string_view text) {
  try {
    return json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    std::size_t line = 1, column = 1;
    const std::size_t stop = std::min<std::size_t>(e.byte == 0 ? 0 : e.byte - 1, text.size());
    for (std::size_t k = 0; k < stop; ++k) {
      if (text[k] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    throw Error(ErrorCode::ParseError, "malformed JSON at line " + std::to_string(line) + ", column " +
                                           std::to_string(column),
                {{"line", std::to_string(line)}, {"column", std::to_string(column)}});
  }
}

inline std::vector<std::string> read_labels(const Node& n) {
  std::vector<std::string> out;
  for (const Node& item : n.items()) out.push_back(item.str());
  return out;
}

inline Carrier read_carrier(const Node& n) {
  return at_path(n.path(), [&] { return Carrier(read_labels(n)); });
}

inline std::size_t read_point(const Carrier& c, const Node& n) {
  const std::string label = n.str();
  if (auto i = c.find(label)) return *i;
  n.fail("unknown carrier label '" + label + "'");
}

inline std::size_t read_index(const UnitaryMagma& m, const Node& n) {
  const std::string label = n.str();
  if (auto i = m.find(label)) return *i;
  n.fail("unknown magma element '" + label + "'");
}

inline Subset read_subset(const Carrier& c, const Node& n) {
  Subset s;
  for (const Node& item : n.items()) s = s.with(read_point(c, item));
  return s;
}

inline Rational read_rational(const Node& n) {
  const std::string text = n.str();
  return at_path(n.path(), [&] { return parse_rational(text); });
}

inline std::vector<std::vector<std::string>> read_label_table(const Node& n) {
  std::vector<std::vector<std::string>> rows;
  for (const Node& row : n.items()) rows.push_back(read_labels(row));
  return rows;
}

inline UnitaryMagma read_magma(const Node& n) {
  const std::string kind = n.field("kind").str();
  if (kind == "capped_mult" || kind == "capped_add") {
    n.object({"kind", "max"});
    const std::size_t max = n.field("max").natural();
    if (max > kMaxCarrier) n.field("max").fail("cap is too large");
    return at_path(n.path(), [&] { return kind == "capped_mult" ? capped_nat_mult(max) : capped_nat_add(max); });
  }
  if (kind == "table") {
    n.object({"kind", "elements", "unit", "table"});
    auto elements = read_labels(n.field("elements"));
    auto unit = n.field("unit").str();
    auto table = read_label_table(n.field("table"));
    return at_path(n.path(), [&] { return make_table_magma(elements, unit, table); });
  }
  if (kind == "endomap") {
    n.object({"kind", "elements", "unit", "mu"});
    auto elements = read_labels(n.field("elements"));
    auto unit = n.field("unit").str();
    auto mu = read_label_table(n.field("mu"));
    return at_path(n.path(), [&] { return endomap_magma(elements, unit, mu); });
  }
  n.field("kind").fail("unknown magma kind '" + kind + "'");
}

/// {"elements":[...],"zero":"0","table":[[...],...]}, optionally tagged.
inline FiniteMonoid read_monoid(const Node& n) {
  n.object({"kind", "elements", "zero", "table"});
  if (auto k = n.optional_field("kind"); k && k->str() != "monoid") k->fail("expected kind 'monoid'");
  const Carrier c = read_carrier(n.field("elements"));
  const std::size_t zero = read_point(c, n.field("zero"));
  const auto rows = n.field("table").items();
  if (rows.size() != c.size()) n.field("table").fail("table must have one row per element");
  std::vector<std::size_t> add;
  for (const Node& row : rows) {
    const auto cells = row.items();
    if (cells.size() != c.size()) row.fail("row has the wrong length");
    for (const Node& cell : cells) add.push_back(read_point(c, cell));
  }
  return at_path(n.path(), [&] { return FiniteMonoid(c, zero, std::move(add)); });
}

inline FibrousPreorder read_fibrous_preorder(const Node& n) {
  n.object({"kind", "magma", "carrier", "rel", "partial_d"});
  UnitaryMagma m = read_magma(n.field("magma"));
  Carrier c = read_carrier(n.field("carrier"));
  std::vector<RelTriple> rel;
  for (const Node& t : n.field("rel").items()) {
    auto e = t.tuple(3);
    rel.push_back({read_index(m, e[0]), read_point(c, e[1]), read_point(c, e[2])});
  }
  std::vector<PartialEntry> partial;
  for (const Node& t : n.field("partial_d").items()) {
    auto e = t.tuple(4);
    partial.push_back({read_index(m, e[0]), read_point(c, e[1]), read_point(c, e[2]), read_index(m, e[3])});
  }
  return at_path(n.path(), [&] { return FibrousPreorder::from_triples(m, c, rel, partial); });
}

inline Preorder read_preorder(const Node& n) {
  n.object({"kind", "carrier", "leq"});
  Carrier c = read_carrier(n.field("carrier"));
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (const Node& t : n.field("leq").items()) {
    auto e = t.tuple(2);
    pairs.emplace_back(read_point(c, e[0]), read_point(c, e[1]));
  }
  return Preorder::from_pairs(c, pairs);
}

inline FiniteTopology read_topology(const Node& n) {
  n.object({"kind", "carrier", "opens"});
  Carrier c = read_carrier(n.field("carrier"));
  std::vector<Subset> opens;
  for (const Node& u : n.field("opens").items()) opens.push_back(read_subset(c, u));
  return FiniteTopology(c, std::move(opens));
}

/// Entries [n, x, value] covering I×X exactly once.
template <class T, class ReadValue>
std::vector<T> read_total_nx(const Node& n, const UnitaryMagma& m, const Carrier& c, ReadValue&& value) {
  const std::size_t nx = c.size();
  std::vector<T> out(m.size() * nx);
  std::vector<char> seen(out.size(), 0);
  for (const Node& t : n.items()) {
    auto e = t.tuple(3);
    const std::size_t k = read_index(m, e[0]) * nx + read_point(c, e[1]);
    if (seen[k]) t.fail("duplicate entry");
    seen[k] = 1;
    out[k] = value(e[2]);
  }
  if (std::find(seen.begin(), seen.end(), 0) != seen.end()) n.fail("map must be total on I×X");
  return out;
}

inline NeighborhoodMap read_nmap(const Node& n) {
  n.object({"kind", "magma", "carrier", "N"});
  UnitaryMagma m = read_magma(n.field("magma"));
  Carrier c = read_carrier(n.field("carrier"));
  auto sets = read_total_nx<Subset>(n.field("N"), m, c, [&](const Node& v) { return read_subset(c, v); });
  return {m, c, std::move(sets)};
}

inline TernaryRep read_ternary(const Node& n) {
  n.object({"kind", "magma", "carrier", "R", "p"});
  UnitaryMagma m = read_magma(n.field("magma"));
  Carrier c = read_carrier(n.field("carrier"));
  const std::size_t nx = c.size();
  TernaryRep tr{m, c, std::vector<Subset>(m.size() * nx), std::vector<std::size_t>(m.size() * nx * nx, 0)};
  for (const Node& t : n.field("R").items()) {
    auto e = t.tuple(3);
    const std::size_t k = read_index(m, e[0]) * nx + read_point(c, e[1]);
    tr.rel[k] = tr.rel[k].with(read_point(c, e[2]));
  }
  std::vector<char> seen(m.size() * nx * nx, 0);
  for (const Node& t : n.field("p").items()) {
    auto e = t.tuple(4);
    const std::size_t i = read_index(m, e[0]), x = read_point(c, e[1]), y = read_point(c, e[2]);
    if (!tr.at(i, x).contains(y)) t.fail("p is defined outside R");
    const std::size_t k = (i * nx + x) * nx + y;
    if (seen[k]) t.fail("duplicate entry");
    seen[k] = 1;
    tr.p[k] = read_index(m, e[3]);
  }
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t x = 0; x < nx; ++x)
      tr.at(i, x).for_each([&](std::size_t y) {
        if (!seen[(i * nx + x) * nx + y])
          n.field("p").fail("p is missing at (" + m.label(i) + "," + c.label(x) + "," + c.label(y) + ")");
      });
  return tr;
}

inline EtaGammaRep read_etagamma(const Node& n) {
  n.object({"kind", "magma", "carrier", "opens", "eta", "gamma"});
  UnitaryMagma m = read_magma(n.field("magma"));
  Carrier c = read_carrier(n.field("carrier"));
  std::vector<Subset> opens;
  for (const Node& u : n.field("opens").items()) opens.push_back(read_subset(c, u));
  FiniteTopology t(c, std::move(opens));
  auto eta = read_total_nx<Subset>(n.field("eta"), m, c, [&](const Node& v) { return read_subset(c, v); });
  const std::size_t nx = c.size();
  std::vector<std::optional<std::size_t>> gamma(t.size() * nx);
  for (const Node& e3 : n.field("gamma").items()) {
    auto e = e3.tuple(3);
    const Subset u = read_subset(c, e[0]);
    const std::size_t pos = t.position(u);
    if (pos == FiniteTopology::npos) e[0].fail("gamma refers to a set that is not listed as open");
    const std::size_t x = read_point(c, e[1]);
    if (!u.contains(x)) e[1].fail("gamma point lies outside its open set");
    if (gamma[pos * nx + x]) e3.fail("duplicate entry");
    gamma[pos * nx + x] = read_index(m, e[2]);
  }
  return {m, c, std::move(t), std::move(eta), std::move(gamma)};
}

inline PseudometricInstance read_pseudometric(const Node& n) {
  n.object({"kind", "carrier", "d", "cap"});
  Carrier c = read_carrier(n.field("carrier"));
  const auto rows = n.field("d").items();
  if (rows.size() != c.size()) n.field("d").fail("d must have one row per point");
  std::vector<Rational> d;
  for (const Node& row : rows) {
    const auto cells = row.items();
    if (cells.size() != c.size()) row.fail("row has the wrong length");
    for (const Node& cell : cells) d.push_back(read_rational(cell));
  }
  const std::size_t cap = n.field("cap").natural();
  if (cap < 1 || cap > kMaxCarrier) n.field("cap").fail("cap must lie in 1..64");
  return {{c, std::move(d)}, cap};
}

/// Entries [key, value] defining a partial map on a carrier.
template <class ReadKey, class ReadValue>
std::vector<std::optional<std::size_t>> read_partial_map(const Node& n, std::size_t size, ReadKey&& key,
                                                         ReadValue&& value) {
  std::vector<std::optional<std::size_t>> out(size);
  for (const Node& t : n.items()) {
    auto e = t.tuple(2);
    const std::size_t k = key(e[0]);
    if (out[k]) t.fail("duplicate entry");
    out[k] = value(e[1]);
  }
  return out;
}

inline GroupSubsetInstance read_group_subset(const Node& n) {
  n.object({"kind", "group", "B", "alpha", "magma"});
  FiniteMonoid mon = read_monoid(n.field("group"));
  FiniteGroup g = at_path(n.field("group").path(), [&] { return FiniteGroup(mon); });
  const Carrier& c = g.elements();
  Subset b = read_subset(c, n.field("B"));
  UnitaryMagma m = read_magma(n.field("magma"));
  auto alpha = read_partial_map(
      n.field("alpha"), c.size(), [&](const Node& k) { return read_point(c, k); },
      [&](const Node& v) { return read_index(m, v); });
  return {std::move(g), b, std::move(alpha), std::move(m)};
}

inline ValueOrder read_values(const Node& n) {
  if (n.has("window")) {
    n.object({"window"});
    auto w = n.field("window").tuple(2);
    const long long lo = w[0].integer(), hi = w[1].integer();
    if (hi < lo || hi - lo > 4096) n.field("window").fail("window must be non-empty and at most 4097 wide");
    return ValueOrder::window(lo, hi);
  }
  n.object({"labels", "leq"});
  auto labels = read_labels(n.field("labels"));
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  auto find = [&](const Node& v) {
    const std::string s = v.str();
    auto it = std::find(labels.begin(), labels.end(), s);
    if (it == labels.end()) v.fail("unknown value '" + s + "'");
    return static_cast<std::size_t>(it - labels.begin());
  };
  for (const Node& t : n.field("leq").items()) {
    auto e = t.tuple(2);
    pairs.emplace_back(find(e[0]), find(e[1]));
  }
  return at_path(n.path(), [&] { return ValueOrder::from_pairs(labels, pairs); });
}

inline LaxMaltsevInstance read_lax_maltsev(const Node& n) {
  n.object({"kind", "magma", "carrier", "values", "p", "g", "linking"});
  UnitaryMagma m = read_magma(n.field("magma"));
  ValueOrder values = read_values(n.field("values"));
  const Node p = n.field("p");
  MaltsevOperation op;
  if (p.has("delta")) {
    p.object({"delta"});
    Carrier c = read_carrier(n.field("carrier"));
    const auto rows = p.field("delta").items();
    if (rows.size() != c.size()) p.field("delta").fail("delta must have one row per point");
    std::vector<long long> delta;
    for (const Node& row : rows) {
      const auto cells = row.items();
      if (cells.size() != c.size()) row.fail("row has the wrong length");
      for (const Node& cell : cells) delta.push_back(cell.integer());
    }
    op = at_path(p.path(), [&] { return maltsev_from_delta(values, c, delta); });
  } else if (p.has("subadditive")) {
    p.object({"subadditive"});
    if (n.has("carrier")) n.field("carrier").fail("the carrier is the group's element set here");
    const Node s = p.field("subadditive");
    s.object({"group", "t"});
    FiniteMonoid mon = read_monoid(s.field("group"));
    FiniteGroup g = at_path(s.field("group").path(), [&] { return FiniteGroup(mon); });
    const auto ts = s.field("t").items();
    if (ts.size() != g.size()) s.field("t").fail("t must list one integer per group element");
    std::vector<long long> t;
    for (const Node& v : ts) t.push_back(v.integer());
    op = at_path(p.path(), [&] { return maltsev_from_subadditive(g, t, values); });
  } else {
    p.object({"table"});
    Carrier c = read_carrier(n.field("carrier"));
    const std::size_t nb = c.size(), ne = values.size();
    op = MaltsevOperation{values, c, std::vector<std::size_t>(ne * nb * nb, 0)};
    std::vector<char> seen(op.table.size(), 0);
    for (const Node& t : p.field("table").items()) {
      auto e = t.tuple(4);
      auto val = [&](const Node& v) { return at_path(v.path(), [&] { return values.index_of(v.str()); }); };
      const std::size_t k = (val(e[0]) * nb + read_point(c, e[1])) * nb + read_point(c, e[2]);
      if (seen[k]) t.fail("duplicate entry");
      seen[k] = 1;
      op.table[k] = val(e[3]);
    }
    if (std::find(seen.begin(), seen.end(), 0) != seen.end()) p.field("table").fail("p must be total on E×B×B");
  }
  std::vector<std::size_t> g(m.size());
  std::vector<char> seen(m.size(), 0);
  for (const Node& t : n.field("g").items()) {
    auto e = t.tuple(2);
    const std::size_t k = read_index(m, e[0]);
    if (seen[k]) t.fail("duplicate entry");
    seen[k] = 1;
    g[k] = at_path(e[1].path(), [&] { return op.values.index_of(e[1].str()); });
  }
  if (std::find(seen.begin(), seen.end(), 0) != seen.end()) n.field("g").fail("g must be total on I");
  LinkingForm form = LinkingForm::Nested;
  if (auto l = n.optional_field("linking")) {
    const std::string s = l->str();
    if (s == "factorwise") form = LinkingForm::Factorwise;
    else if (s != "nested") l->fail("linking must be 'nested' or 'factorwise'");
  }
  return {{std::move(op), std::move(m), std::move(g)}, form};
}

inline SnFamily read_sn_family(const Node& n) {
  n.object({"kind", "monoid", "magma", "S", "alpha"});
  FiniteMonoid mon = read_monoid(n.field("monoid"));
  UnitaryMagma m = read_magma(n.field("magma"));
  const Carrier& c = mon.elements();
  std::vector<Subset> s(m.size());
  std::vector<char> seen(m.size(), 0);
  for (const Node& t : n.field("S").items()) {
    auto e = t.tuple(2);
    const std::size_t k = read_index(m, e[0]);
    if (seen[k]) t.fail("duplicate entry");
    seen[k] = 1;
    s[k] = read_subset(c, e[1]);
  }
  if (std::find(seen.begin(), seen.end(), 0) != seen.end()) n.field("S").fail("S_n must be given for every n");
  std::vector<std::vector<std::optional<std::size_t>>> alpha(m.size(),
                                                             std::vector<std::optional<std::size_t>>(c.size()));
  for (const Node& t : n.field("alpha").items()) {
    auto e = t.tuple(3);
    const std::size_t k = read_index(m, e[0]), a = read_point(c, e[1]);
    if (alpha[k][a]) t.fail("duplicate entry");
    alpha[k][a] = read_index(m, e[2]);
  }
  return {std::move(mon), std::move(m), std::move(s), std::move(alpha)};
}

inline ModuleData read_module_data(const Node& n) {
  n.object({"kind", "monoid", "magma", "xi", "S", "alpha"});
  FiniteMonoid mon = read_monoid(n.field("monoid"));
  UnitaryMagma m = read_magma(n.field("magma"));
  const Carrier& c = mon.elements();
  auto xi = read_total_nx<std::size_t>(n.field("xi"), m, c, [&](const Node& v) { return read_point(c, v); });
  Subset s = read_subset(c, n.field("S"));
  std::optional<std::vector<std::optional<std::size_t>>> alpha;
  if (auto a = n.optional_field("alpha"))
    alpha = read_partial_map(
        *a, c.size(), [&](const Node& k) { return read_point(c, k); }, [&](const Node& v) { return read_index(m, v); });
  return {std::move(mon), std::move(m), std::move(xi), s, std::move(alpha)};
}

inline IntervalSet read_interval_set(const Node& n) {
  n.object({"kind", "intervals"});
  std::vector<RationalInterval> parts;
  for (const Node& t : n.field("intervals").items()) {
    t.object({"lower", "upper", "lower_closed", "upper_closed"});
    parts.push_back({read_rational(t.field("lower")), read_rational(t.field("upper")),
                     t.field("lower_closed").boolean(), t.field("upper_closed").boolean()});
  }
  return at_path(n.path(), [&] { return IntervalSet(std::move(parts)); });
}

inline MorphismBundle read_morphism(const Node& n) {
  n.object({"kind", "src", "dst", "f", "g"});
  auto sub = [&](const char* key) {
    const Node s = n.field(key);
    if (s.field("kind").str() != "fibrous_preorder") s.field("kind").fail("expected kind 'fibrous_preorder'");
    return read_fibrous_preorder(s);
  };
  MorphismBundle b{sub("src"), sub("dst"), {}, {}};
  if (!(b.src.magma() == b.dst.magma()))
    throw Error(ErrorCode::MagmaMismatch, n.path() + ": src and dst are indexed by different magmas",
                {{"path", n.path()}});
  const Carrier& cs = b.src.carrier();
  const Carrier& cd = b.dst.carrier();
  const UnitaryMagma& m = b.src.magma();
  auto f = read_partial_map(
      n.field("f"), cs.size(), [&](const Node& k) { return read_point(cs, k); },
      [&](const Node& v) { return read_point(cd, v); });
  for (const auto& v : f)
    if (!v) n.field("f").fail("f must be total on the source carrier");
  for (const auto& v : f) b.f.push_back(*v);
  auto g = read_total_nx<std::size_t>(n.field("g"), m, cs, [&](const Node& v) { return read_index(m, v); });
  b.g.assign(m.size(), std::vector<std::size_t>(cs.size()));
  for (std::size_t j = 0; j < m.size(); ++j)
    for (std::size_t x = 0; x < cs.size(); ++x) b.g[j][x] = g[j * cs.size() + x];
  return b;
}

inline Instance read_instance(const json& doc) {
  const Node root(doc, "$");
  const std::string kind = root.field("kind").str();
  if (kind == "fibrous_preorder") return read_fibrous_preorder(root);
  if (kind == "preorder") return read_preorder(root);
  if (kind == "topology") return read_topology(root);
  if (kind == "nmap") return read_nmap(root);
  if (kind == "ternary") return read_ternary(root);
  if (kind == "etagamma") return read_etagamma(root);
  if (kind == "pseudometric") return read_pseudometric(root);
  if (kind == "group_subset") return read_group_subset(root);
  if (kind == "lax_maltsev") return read_lax_maltsev(root);
  if (kind == "monoid") return read_monoid(root);
  if (kind == "sn_family") return read_sn_family(root);
  if (kind == "module_data") return read_module_data(root);
  if (kind == "interval_set") return read_interval_set(root);
  if (kind == "morphism") return read_morphism(root);
  root.field("kind").fail("unknown instance kind '" + kind + "'");
}

inline Instance parse_instance(std::string_view text) { return read_instance(parse_json(text)); }

// ------------------------------------------------------------------ writing

inline json to_json(const Witness& w) {
  json out = json::object();
  for (const auto& [k, v] : w) out[k] = v;
  return out;
}

inline json to_json(const Report& r) {
  json v = json::array();
  for (const auto& x : r.violations) v.push_back({{"condition", x.condition}, {"witness", to_json(x.witness)}});
  return {{"passed", r.passed()}, {"violations", v}};
}

inline json to_json(const Error& e) {
  json out = {{"code", to_string(e.code())}, {"message", e.message()}};
  if (!e.witness().empty()) out["witness"] = to_json(e.witness());
  return out;
}

inline json subset_json(const Carrier& c, Subset s) {
  json out = json::array();
  for (const auto& l : c.labels_of(s)) out.push_back(l);
  return out;
}

inline json label_table(const std::vector<std::string>& labels, std::size_t n,
                        const std::function<std::size_t(std::size_t, std::size_t)>& at) {
  json rows = json::array();
  for (std::size_t r = 0; r < n; ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < n; ++c) row.push_back(labels[at(r, c)]);
    rows.push_back(row);
  }
  return rows;
}

inline json to_json(const UnitaryMagma& m) {
  switch (m.kind()) {
    case UnitaryMagma::Kind::CappedMult: return {{"kind", "capped_mult"}, {"max", m.cap()}};
    case UnitaryMagma::Kind::CappedAdd: return {{"kind", "capped_add"}, {"max", m.cap()}};
    case UnitaryMagma::Kind::Table:
    case UnitaryMagma::Kind::Endomap: {
      const bool table = m.kind() == UnitaryMagma::Kind::Table;
      return {{"kind", table ? "table" : "endomap"},
              {"elements", m.labels()},
              {"unit", m.label(m.unit())},
              {table ? "table" : "mu", label_table(m.labels(), m.size(), [&](auto r, auto c) { return m.op(r, c); })}};
    }
  }
  return {};
}

inline json to_json(const FiniteMonoid& mon, bool tagged = true) {
  json out = {{"elements", mon.elements().labels()},
              {"zero", mon.label(mon.zero())},
              {"table", label_table(mon.elements().labels(), mon.size(), [&](auto r, auto c) { return mon.plus(r, c); })}};
  if (tagged) out["kind"] = "monoid";
  return out;
}

inline json opens_json(const FiniteTopology& t) {
  json opens = json::array();
  for (Subset u : t.opens()) opens.push_back(subset_json(t.carrier(), u));
  return opens;
}

inline json to_json(const FiniteTopology& t) {
  return {{"kind", "topology"}, {"carrier", t.carrier().labels()}, {"opens", opens_json(t)}};
}

inline json to_json(const Preorder& p) {
  json leq = json::array();
  for (auto [x, y] : p.pairs()) leq.push_back({p.carrier().label(x), p.carrier().label(y)});
  return {{"kind", "preorder"}, {"carrier", p.carrier().labels()}, {"leq", leq}};
}

inline json to_json(const FibrousPreorder& fp) {
  const auto& m = fp.magma();
  const auto& c = fp.carrier();
  json rel = json::array(), partial = json::array();
  for (const auto& t : fp.triples()) rel.push_back({m.label(t.i), c.label(t.x), c.label(t.y)});
  for (const auto& e : fp.partial_entries())
    partial.push_back({m.label(e.i), c.label(e.x), c.label(e.y), m.label(e.j)});
  return {{"kind", "fibrous_preorder"}, {"magma", to_json(m)}, {"carrier", c.labels()},
          {"rel", rel}, {"partial_d", partial}};
}

inline json nx_sets_json(const UnitaryMagma& m, const Carrier& c, const std::vector<Subset>& sets) {
  json out = json::array();
  for (std::size_t n = 0; n < m.size(); ++n)
    for (std::size_t x = 0; x < c.size(); ++x)
      out.push_back({m.label(n), c.label(x), subset_json(c, sets[n * c.size() + x])});
  return out;
}

inline json to_json(const NeighborhoodMap& nm) {
  return {{"kind", "nmap"}, {"magma", to_json(nm.magma)}, {"carrier", nm.carrier.labels()},
          {"N", nx_sets_json(nm.magma, nm.carrier, nm.sets)}};
}

inline json to_json(const TernaryRep& tr) {
  const auto& m = tr.magma;
  const auto& c = tr.carrier;
  json r = json::array(), p = json::array();
  for (std::size_t n = 0; n < m.size(); ++n)
    for (std::size_t x = 0; x < c.size(); ++x)
      tr.at(n, x).for_each([&](std::size_t y) {
        r.push_back({m.label(n), c.label(x), c.label(y)});
        p.push_back({m.label(n), c.label(x), c.label(y), m.label(tr.witness(n, x, y))});
      });
  return {{"kind", "ternary"}, {"magma", to_json(m)}, {"carrier", c.labels()}, {"R", r}, {"p", p}};
}

inline json to_json(const EtaGammaRep& eg) {
  const auto& m = eg.magma;
  const auto& c = eg.carrier;
  json gamma = json::array();
  const auto& opens = eg.topology.opens();
  for (std::size_t u = 0; u < opens.size(); ++u)
    opens[u].for_each([&](std::size_t x) {
      if (auto g = eg.gamma[u * c.size() + x]) gamma.push_back({subset_json(c, opens[u]), c.label(x), m.label(*g)});
    });
  return {{"kind", "etagamma"}, {"magma", to_json(m)}, {"carrier", c.labels()}, {"opens", opens_json(eg.topology)},
          {"eta", nx_sets_json(m, c, eg.eta)}, {"gamma", gamma}};
}

inline json to_json(const PseudometricInstance& p) {
  const auto& c = p.metric.carrier;
  json d = json::array();
  for (std::size_t x = 0; x < c.size(); ++x) {
    json row = json::array();
    for (std::size_t y = 0; y < c.size(); ++y) row.push_back(format_rational(p.metric.at(x, y)));
    d.push_back(row);
  }
  return {{"kind", "pseudometric"}, {"carrier", c.labels()}, {"d", d}, {"cap", p.cap}};
}

inline json partial_map_json(const Carrier& c, const UnitaryMagma& m, const std::vector<std::optional<std::size_t>>& a) {
  json out = json::array();
  for (std::size_t x = 0; x < a.size(); ++x)
    if (a[x]) out.push_back({c.label(x), m.label(*a[x])});
  return out;
}

inline json to_json(const GroupSubsetInstance& g) {
  return {{"kind", "group_subset"}, {"group", to_json(g.group.monoid(), false)},
          {"B", subset_json(g.group.elements(), g.b)},
          {"alpha", partial_map_json(g.group.elements(), g.magma, g.alpha)}, {"magma", to_json(g.magma)}};
}

inline json to_json(const LaxMaltsevInstance& l) {
  const auto& op = l.data.op;
  const auto& E = op.values;
  const auto& c = op.carrier;
  json values;
  if (E.is_window()) {
    values = {{"window", {E.lower(), E.upper()}}};
  } else {
    json leq = json::array();
    for (std::size_t a = 0; a < E.size(); ++a)
      for (std::size_t b = 0; b < E.size(); ++b)
        if (E.leq(a, b)) leq.push_back({E.label(a), E.label(b)});
    values = {{"labels", E.labels()}, {"leq", leq}};
  }
  json table = json::array();
  for (std::size_t a = 0; a < E.size(); ++a)
    for (std::size_t x = 0; x < c.size(); ++x)
      for (std::size_t y = 0; y < c.size(); ++y)
        table.push_back({E.label(a), c.label(x), c.label(y), E.label(op.at(a, x, y))});
  json g = json::array();
  for (std::size_t n = 0; n < l.data.magma.size(); ++n) g.push_back({l.data.magma.label(n), E.label(l.data.g[n])});
  return {{"kind", "lax_maltsev"}, {"magma", to_json(l.data.magma)}, {"carrier", c.labels()}, {"values", values},
          {"p", {{"table", table}}}, {"g", g}, {"linking", l.form == LinkingForm::Nested ? "nested" : "factorwise"}};
}

inline json to_json(const SnFamily& sf) {
  const auto& m = sf.magma;
  const auto& c = sf.monoid.elements();
  json s = json::array(), alpha = json::array();
  for (std::size_t n = 0; n < m.size(); ++n) {
    s.push_back({m.label(n), subset_json(c, sf.s[n])});
    for (std::size_t a = 0; a < c.size(); ++a)
      if (sf.alpha[n][a]) alpha.push_back({m.label(n), c.label(a), m.label(*sf.alpha[n][a])});
  }
  return {{"kind", "sn_family"}, {"monoid", to_json(sf.monoid, false)}, {"magma", to_json(m)}, {"S", s},
          {"alpha", alpha}};
}

inline json to_json(const ModuleData& md) {
  const auto& m = md.magma;
  const auto& c = md.monoid.elements();
  json xi = json::array();
  for (std::size_t n = 0; n < m.size(); ++n)
    for (std::size_t x = 0; x < c.size(); ++x) xi.push_back({m.label(n), c.label(x), c.label(md.act(n, x))});
  json out = {{"kind", "module_data"}, {"monoid", to_json(md.monoid, false)}, {"magma", to_json(m)},
              {"xi", xi}, {"S", subset_json(c, md.s)}};
  if (md.alpha) out["alpha"] = partial_map_json(c, m, *md.alpha);
  return out;
}

inline json to_json(const RationalInterval& r) {
  return {{"lower", format_rational(r.lower)}, {"upper", format_rational(r.upper)},
          {"lower_closed", r.lower_closed}, {"upper_closed", r.upper_closed}};
}

inline json to_json(const IntervalSet& s) {
  json parts = json::array();
  for (const auto& p : s.components()) parts.push_back(to_json(p));
  return {{"kind", "interval_set"}, {"intervals", parts}};
}

inline json to_json(const MorphismBundle& b) {
  const auto& cs = b.src.carrier();
  const auto& cd = b.dst.carrier();
  const auto& m = b.src.magma();
  json f = json::array(), g = json::array();
  for (std::size_t x = 0; x < b.f.size(); ++x) f.push_back({cs.label(x), cd.label(b.f[x])});
  for (std::size_t j = 0; j < b.g.size(); ++j)
    for (std::size_t x = 0; x < cs.size(); ++x) g.push_back({m.label(j), cs.label(x), m.label(b.g[j][x])});
  return {{"kind", "morphism"}, {"src", to_json(b.src)}, {"dst", to_json(b.dst)}, {"f", f}, {"g", g}};
}

inline json to_json(const Instance& inst) {
  return std::visit([](const auto& v) -> json {
    if constexpr (std::is_same_v<std::decay_t<decltype(v)>, FiniteMonoid>) return to_json(v, true);
    else return to_json(v);
  }, inst);
}

/// Two-space indented JSON with sorted keys and a trailing newline.
inline std::string dump(const json& j) { return j.dump(2) + "\n"; }

}  // namespace ftk::io
