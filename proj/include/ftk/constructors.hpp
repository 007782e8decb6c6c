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

// Fibrous preorders built from other data: preorders, rational
// pseudometrics, abelian groups with a distinguished subset, and lax
// Mal'tsev operations glued to a magma by a linking map. Wherever a witness
// is only required to exist, the smallest one in declared order is used.

#pragma once

#include <algorithm>
#include <limits>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "ftk/algebra.hpp"
#include "ftk/error.hpp"
#include "ftk/fibrous_preorder.hpp"
#include "ftk/finite_topology.hpp"
#include "ftk/magma.hpp"
#include "ftk/rational.hpp"
#include "ftk/subset.hpp"

namespace ftk {

// ---------------------------------------------------------------- preorders

/// Trivial magma, ≤^1 = ≤, ∂ ≡ 1.
inline FibrousPreorder from_preorder(const Preorder& p) {
  require_preorder(p);
  return FibrousPreorder::from_rule(trivial_magma(), p.carrier(),
                                    [&](std::size_t, std::size_t x, std::size_t y)
                                        -> std::optional<std::size_t> {
                                      if (!p.leq(x, y)) return std::nullopt;
                                      return 0;
                                    });
}

// ------------------------------------------------------------ pseudometrics

/// Symmetric, zero-diagonal, non-negative distances obeying the triangle
/// inequality. Distinct points at distance 0 are allowed.
struct RationalPseudometric {
  Carrier carrier;
  std::vector<Rational> d;  // row-major |X|×|X|

  const Rational& at(std::size_t x, std::size_t y) const { return d[x * carrier.size() + y]; }
};

namespace detail {

/// Integers D and a positive L with D[k] / L equal to d[k].
inline std::pair<std::vector<Integer>, Integer> common_denominator(const std::vector<Rational>& d) {
  Integer unit = 1;
  for (const Rational& v : d) {
    const Integer& q = boost::multiprecision::denominator(v);
    if (unit % q != 0) unit = boost::multiprecision::lcm(unit, q);
  }
  std::vector<Integer> scaled;
  scaled.reserve(d.size());
  for (const Rational& v : d)
    scaled.push_back(boost::multiprecision::numerator(v) * (unit / boost::multiprecision::denominator(v)));
  return {std::move(scaled), std::move(unit)};
}

}  // namespace detail

inline Report check_pseudometric(const RationalPseudometric& m) {
  const std::size_t n = m.carrier.size();
  if (m.d.size() != n * n) throw Error(ErrorCode::TableShape, "distance matrix must be |X|×|X|");
  const Carrier& c = m.carrier;
  Report r;
  const auto [scaled, unit] = detail::common_denominator(m.d);
  for (std::size_t x = 0; x < n; ++x) {
    if (scaled[x * n + x] != 0) r.add("zero-diagonal", {{"x", c.label(x)}});
    for (std::size_t y = 0; y < n; ++y) {
      if (scaled[x * n + y] < 0) r.add("non-negative", {{"x", c.label(x)}, {"y", c.label(y)}});
      if (y > x && scaled[x * n + y] != scaled[y * n + x])
        r.add("symmetric", {{"x", c.label(x)}, {"y", c.label(y)}});
    }
  }
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t z = 0; z < n; ++z)
        if (scaled[x * n + z] > scaled[x * n + y] + scaled[y * n + z])
          r.add("triangle", {{"x", c.label(x)}, {"y", c.label(y)}, {"z", c.label(z)}});
  return r;
}

/// Indexed by capped_nat_mult(cap): x ≤^n y iff d(x,y) < 1/n, and ∂^n(x,y)
/// is the smallest k with 1/k ≤ 1/n − d(x,y). Throws CapTooSmall when that k
/// exceeds the cap.
inline FibrousPreorder from_pseudometric(const RationalPseudometric& m, std::size_t cap) {
  const Report r = check_pseudometric(m);
  if (!r.passed())
    throw Error(ErrorCode::InvalidPseudometric, "not a pseudometric (" + r.violations.front().condition + ")",
                r.violations.front().witness);
  UnitaryMagma magma = capped_nat_mult(cap);
  const Carrier& c = m.carrier;
  const std::size_t nx = c.size();
  const auto [scaled, unit] = detail::common_denominator(m.d);
  return FibrousPreorder::from_rule(
      std::move(magma), c,
      [&](std::size_t i, std::size_t x, std::size_t y) -> std::optional<std::size_t> {
        const Integer n = static_cast<long long>(i + 1);
        const Integer slack = unit - n * scaled[x * nx + y];
        if (slack <= 0) return std::nullopt;
        const Integer k = (n * unit + slack - 1) / slack;
        if (k > cap)
          throw Error(ErrorCode::CapTooSmall,
                      "need index " + k.str() + " but the cap is " + std::to_string(cap) +
                          "; minimal sufficient cap for this pair is " + k.str(),
                      {{"n", std::to_string(i + 1)}, {"x", c.label(x)}, {"y", c.label(y)},
                       {"required", k.str()}});
        return static_cast<std::size_t>(k) - 1;
      });
}

// ------------------------------------------------------ groups with a subset

namespace detail {

inline void require_capped_mult(const UnitaryMagma& m) {
  if (m.kind() != UnitaryMagma::Kind::CappedMult)
    throw Error(ErrorCode::SchemaError, "this construction is indexed by capped_nat_mult");
}

}  // namespace detail

/// Conditions (i) 0 ∈ B, (iii) n·u ∈ B ⇒ u ∈ B, (ii) α(x)·u ∈ B ⇒ u + x ∈ B,
/// reported in that order; n ranges over the magma's values.
inline Report check_group_subset(const FiniteGroup& g, Subset b,
                                 const std::vector<std::optional<std::size_t>>& alpha,
                                 const UnitaryMagma& magma) {
  detail::require_capped_mult(magma);
  if (!g.elements().contains(b)) throw Error(ErrorCode::SchemaError, "B leaves the group");
  if (alpha.size() != g.size()) throw Error(ErrorCode::TableShape, "alpha must be indexed by group elements");
  b.for_each([&](std::size_t x) {
    if (!alpha[x] || *alpha[x] >= magma.size())
      throw Error(ErrorCode::SchemaError, "alpha must map B into the magma", {{"x", g.label(x)}});
  });
  Report r;
  if (!b.contains(g.zero())) r.add("i", {{"zero", g.label(g.zero())}});
  for (std::size_t n = 0; n < magma.size(); ++n)
    for (std::size_t u = 0; u < g.size(); ++u)
      if (b.contains(g.times(n + 1, u)) && !b.contains(u))
        r.add("iii", {{"n", magma.label(n)}, {"u", g.label(u)}});
  b.for_each([&](std::size_t x) {
    const std::size_t a = *alpha[x] + 1;
    for (std::size_t u = 0; u < g.size(); ++u)
      if (b.contains(g.times(a, u)) && !b.contains(g.plus(u, x)))
        r.add("ii", {{"x", g.label(x)}, {"u", g.label(u)}});
  });
  return r;
}

/// x ≤^n y iff n(y−x) ∈ B, ∂^n(x,y) = α(n(y−x))·n.
inline FibrousPreorder from_group_subset(const FiniteGroup& g, Subset b,
                                         const std::vector<std::optional<std::size_t>>& alpha,
                                         const UnitaryMagma& magma) {
  const Report r = check_group_subset(g, b, alpha, magma);
  if (!r.passed()) {
    Witness w = r.violations.front().witness;
    w.insert(w.begin(), {"condition", r.violations.front().condition});
    throw Error(ErrorCode::ConditionFailed, "condition (" + r.violations.front().condition + ") fails", w);
  }
  FibrousPreorder fp = FibrousPreorder::from_rule(
      magma, g.elements(), [&](std::size_t n, std::size_t x, std::size_t y) -> std::optional<std::size_t> {
        const std::size_t v = g.times(n + 1, g.minus(y, x));
        if (!b.contains(v)) return std::nullopt;
        return magma.op(*alpha[v], n);
      });
  require_axioms(fp);
  return fp;
}

// ------------------------------------------------------- lax Mal'tsev data

/// A finite set E with a transitive relation ≤E. Integer windows carry their
/// values so that saturating arithmetic can be done on them.
class ValueOrder {
 public:
  ValueOrder() = default;

  /// Integers lo..hi with the usual order.
  static ValueOrder window(long long lo, long long hi) {
    if (hi < lo) throw Error(ErrorCode::SchemaError, "empty value window");
    ValueOrder v;
    const std::size_t n = static_cast<std::size_t>(hi - lo + 1);
    for (long long k = lo; k <= hi; ++k) v.labels_.push_back(std::to_string(k));
    v.leq_.assign(n * n, 0);
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = a; b < n; ++b) v.leq_[a * n + b] = 1;
    v.lo_ = lo;
    v.index_labels();
    return v;
  }

  /// Arbitrary labels with ≤E given by pairs. Only transitivity is required.
  static ValueOrder from_pairs(std::vector<std::string> labels,
                               const std::vector<std::pair<std::size_t, std::size_t>>& leq) {
    ValueOrder v;
    v.labels_ = std::move(labels);
    const std::size_t n = v.labels_.size();
    if (n == 0) throw Error(ErrorCode::SchemaError, "value set must be non-empty");
    v.leq_.assign(n * n, 0);
    for (auto [a, b] : leq) {
      if (a >= n || b >= n) throw Error(ErrorCode::UnknownElement, "order pair leaves the value set");
      v.leq_[a * n + b] = 1;
    }
    v.index_labels();
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        for (std::size_t c = 0; c < n; ++c)
          if (v.leq(a, b) && v.leq(b, c) && !v.leq(a, c))
            throw Error(ErrorCode::LaxAxiomFailed, "value relation is not transitive",
                        {{"a", v.labels_[a]}, {"b", v.labels_[b]}, {"c", v.labels_[c]}});
    return v;
  }

  std::size_t size() const { return labels_.size(); }
  bool leq(std::size_t a, std::size_t b) const { return leq_[a * size() + b] != 0; }
  const std::string& label(std::size_t a) const { return labels_.at(a); }
  const std::vector<std::string>& labels() const { return labels_; }

  std::size_t index_of(std::string_view label) const {
    auto it = index_.find(std::string(label));
    if (it == index_.end())
      throw Error(ErrorCode::UnknownElement, "unknown value '" + std::string(label) + "'",
                  {{"label", std::string(label)}});
    return it->second;
  }

  bool is_window() const { return lo_.has_value(); }
  long long lower() const { return *lo_; }
  long long upper() const { return *lo_ + static_cast<long long>(size()) - 1; }
  long long value(std::size_t a) const { return *lo_ + static_cast<long long>(a); }

  /// Index of v clamped into the window.
  std::size_t saturate(long long v) const {
    return static_cast<std::size_t>(std::clamp(v, lower(), upper()) - lower());
  }

  bool operator==(const ValueOrder& o) const { return labels_ == o.labels_ && leq_ == o.leq_; }

 private:
  void index_labels() {
    for (std::size_t a = 0; a < labels_.size(); ++a)
      if (!index_.emplace(labels_[a], a).second)
        throw Error(ErrorCode::SchemaError, "duplicate value label '" + labels_[a] + "'");
  }

  std::vector<std::string> labels_;
  std::unordered_map<std::string, std::size_t> index_;
  std::vector<char> leq_;
  std::optional<long long> lo_;
};

/// p : E×B×B → E as a table, table[(a*|B| + x)*|B| + y].
struct MaltsevOperation {
  ValueOrder values;
  Carrier carrier;
  std::vector<std::size_t> table;

  std::size_t at(std::size_t a, std::size_t x, std::size_t y) const {
    return table[(a * carrier.size() + x) * carrier.size() + y];
  }
};

/// a ≤ p(a,x,x); p(p(a,x,y),y,z) ≤ p(a,x,z); a ≤ b ⇒ p(a,x,y) ≤ p(b,x,y).
inline Report check_lax_axioms(const MaltsevOperation& op) {
  const std::size_t ne = op.values.size(), nb = op.carrier.size();
  if (op.table.size() != ne * nb * nb) throw Error(ErrorCode::TableShape, "p must be total on E×B×B");
  for (std::size_t v : op.table)
    if (v >= ne) throw Error(ErrorCode::NotClosed, "p takes a value outside E");
  const auto& E = op.values;
  const Carrier& B = op.carrier;
  Report r;
  for (std::size_t a = 0; a < ne; ++a)
    for (std::size_t x = 0; x < nb; ++x)
      if (!E.leq(a, op.at(a, x, x))) r.add("lax1", {{"a", E.label(a)}, {"x", B.label(x)}});
  for (std::size_t a = 0; a < ne; ++a)
    for (std::size_t x = 0; x < nb; ++x)
      for (std::size_t y = 0; y < nb; ++y)
        for (std::size_t z = 0; z < nb; ++z)
          if (!E.leq(op.at(op.at(a, x, y), y, z), op.at(a, x, z)))
            r.add("lax2", {{"a", E.label(a)}, {"x", B.label(x)}, {"y", B.label(y)}, {"z", B.label(z)}});
  for (std::size_t a = 0; a < ne; ++a)
    for (std::size_t b = 0; b < ne; ++b) {
      if (!E.leq(a, b)) continue;
      for (std::size_t x = 0; x < nb; ++x)
        for (std::size_t y = 0; y < nb; ++y)
          if (!E.leq(op.at(a, x, y), op.at(b, x, y)))
            r.add("lax3", {{"a", E.label(a)}, {"b", E.label(b)}, {"x", B.label(x)}, {"y", B.label(y)}});
    }
  return r;
}

namespace detail {

inline void require_lax(const MaltsevOperation& op) {
  const Report r = check_lax_axioms(op);
  if (!r.passed())
    throw Error(ErrorCode::LaxAxiomFailed, "lax axiom " + r.violations.front().condition + " fails",
                r.violations.front().witness);
}

inline void require_window(const ValueOrder& e) {
  if (!e.is_window()) throw Error(ErrorCode::SchemaError, "an integer value window is required");
}

}  // namespace detail

/// p(a,x,y) = a − δ(x,y), saturated into the window. δ must vanish on the
/// diagonal and satisfy δ(x,y) + δ(y,z) ≥ δ(x,z). The lax axioms are
/// re-checked after saturation.
inline MaltsevOperation maltsev_from_delta(const ValueOrder& window, const Carrier& carrier,
                                           const std::vector<long long>& delta) {
  detail::require_window(window);
  const std::size_t nb = carrier.size();
  if (delta.size() != nb * nb) throw Error(ErrorCode::TableShape, "delta must be |B|×|B|");
  auto d = [&](std::size_t x, std::size_t y) { return delta[x * nb + y]; };
  for (std::size_t x = 0; x < nb; ++x)
    if (d(x, x) != 0)
      throw Error(ErrorCode::DeltaAxiomFailed, "delta(x,x) must be 0", {{"x", carrier.label(x)}});
  for (std::size_t x = 0; x < nb; ++x)
    for (std::size_t y = 0; y < nb; ++y)
      for (std::size_t z = 0; z < nb; ++z)
        if (d(x, y) + d(y, z) < d(x, z))
          throw Error(ErrorCode::DeltaAxiomFailed, "delta violates the triangle inequality",
                      {{"x", carrier.label(x)}, {"y", carrier.label(y)}, {"z", carrier.label(z)}});
  MaltsevOperation op{window, carrier, std::vector<std::size_t>(window.size() * nb * nb)};
  for (std::size_t a = 0; a < window.size(); ++a)
    for (std::size_t x = 0; x < nb; ++x)
      for (std::size_t y = 0; y < nb; ++y)
        op.table[(a * nb + x) * nb + y] = window.saturate(window.value(a) - d(x, y));
  detail::require_lax(op);
  return op;
}

/// p(a,x,y) = a − t(y−x) on the group's elements, saturated into the window.
/// t(0) = 0 and t(u) + t(v) ≥ t(u+v) are required.
inline MaltsevOperation maltsev_from_subadditive(const FiniteGroup& g, const std::vector<long long>& t,
                                                 const ValueOrder& window) {
  detail::require_window(window);
  const std::size_t nb = g.size();
  if (t.size() != nb) throw Error(ErrorCode::TableShape, "t must be defined on every group element");
  if (t[g.zero()] != 0)
    throw Error(ErrorCode::SubadditivityFailed, "t(0) must be 0", {{"u", g.label(g.zero())}});
  for (std::size_t u = 0; u < nb; ++u)
    for (std::size_t v = 0; v < nb; ++v)
      if (t[u] + t[v] < t[g.plus(u, v)])
        throw Error(ErrorCode::SubadditivityFailed, "t(u) + t(v) < t(u+v)",
                    {{"u", g.label(u)}, {"v", g.label(v)}});
  MaltsevOperation op{window, g.elements(), std::vector<std::size_t>(window.size() * nb * nb)};
  for (std::size_t a = 0; a < window.size(); ++a)
    for (std::size_t x = 0; x < nb; ++x)
      for (std::size_t y = 0; y < nb; ++y)
        op.table[(a * nb + x) * nb + y] = window.saturate(window.value(a) - t[g.minus(y, x)]);
  detail::require_lax(op);
  return op;
}

struct LaxMaltsevData {
  MaltsevOperation op;
  UnitaryMagma magma;
  std::vector<std::size_t> g;  // g : I → E
};

enum class LinkingForm {
  /// g(n·(k·m)) ≤ g(n·m)
  Nested,
  /// g(n·m) ≤ g(n) and g(n·m) ≤ g(m)
  Factorwise,
};

inline Report check_linking(const LaxMaltsevData& data, LinkingForm form = LinkingForm::Nested) {
  const auto& I = data.magma;
  const auto& E = data.op.values;
  if (data.g.size() != I.size()) throw Error(ErrorCode::TableShape, "g must be defined on every magma element");
  for (std::size_t v : data.g)
    if (v >= E.size()) throw Error(ErrorCode::NotClosed, "g takes a value outside E");
  Report r;
  const std::size_t ni = I.size();
  if (form == LinkingForm::Nested) {
    for (std::size_t n = 0; n < ni; ++n)
      for (std::size_t m = 0; m < ni; ++m)
        for (std::size_t k = 0; k < ni; ++k)
          if (!E.leq(data.g[I.op(n, I.op(k, m))], data.g[I.op(n, m)]))
            r.add("linking", {{"n", I.label(n)}, {"m", I.label(m)}, {"k", I.label(k)}});
  } else {
    for (std::size_t n = 0; n < ni; ++n)
      for (std::size_t m = 0; m < ni; ++m) {
        const std::size_t nm = data.g[I.op(n, m)];
        if (!E.leq(nm, data.g[n]) || !E.leq(nm, data.g[m]))
          r.add("linking", {{"n", I.label(n)}, {"m", I.label(m)}});
      }
  }
  return r;
}

/// x ≤^n y iff g(m) ≤E p(g(n),x,y) for some m; ∂^n(x,y) is the first such m.
inline FibrousPreorder from_lax_maltsev(const LaxMaltsevData& data) {
  detail::require_lax(data.op);
  const Report link = check_linking(data);
  if (!link.passed())
    throw Error(ErrorCode::LinkingFailed, "g is not a linking map", link.violations.front().witness);
  const auto& E = data.op.values;
  const std::size_t ni = data.magma.size();
  return FibrousPreorder::from_rule(
      data.magma, data.op.carrier,
      [&](std::size_t n, std::size_t x, std::size_t y) -> std::optional<std::size_t> {
        const std::size_t bound = data.op.at(data.g[n], x, y);
        for (std::size_t m = 0; m < ni; ++m)
          if (E.leq(data.g[m], bound)) return m;
        return std::nullopt;
      });
}

}  // namespace ftk
