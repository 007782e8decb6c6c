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

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ftk/error.hpp"
#include "ftk/finite_topology.hpp"
#include "ftk/magma.hpp"
#include "ftk/subset.hpp"

namespace ftk {

/// x ≤^i y
struct RelTriple {
  std::size_t i, x, y;
  bool operator==(const RelTriple&) const = default;
};

/// ∂^i(x,y) = j
struct PartialEntry {
  std::size_t i, x, y, j;
  bool operator==(const PartialEntry&) const = default;
};

/// A carrier with a family of relations ≤^i indexed by a unitary magma and
/// partial maps ∂^i defined exactly where ≤^i holds.
///
/// Relations are stored per (i, x) as the up-set N(i,x); ∂ is a dense table
/// whose entry is defined iff the triple is related, so the domain condition
/// holds by construction.
class FibrousPreorder {
 public:
  FibrousPreorder() = default;

  /// Builds from a rule: rule(i, x, y) returns ∂^i(x,y) when x ≤^i y and
  /// nullopt otherwise.
  template <class Rule>
  static FibrousPreorder from_rule(UnitaryMagma magma, Carrier carrier, Rule&& rule) {
    FibrousPreorder fp(std::move(magma), std::move(carrier));
    const std::size_t ni = fp.magma_.size(), nx = fp.carrier_.size();
    for (std::size_t i = 0; i < ni; ++i)
      for (std::size_t x = 0; x < nx; ++x)
        for (std::size_t y = 0; y < nx; ++y) {
          const std::optional<std::size_t> j = rule(i, x, y);
          if (!j) continue;
          if (*j >= ni)
            throw Error(ErrorCode::NotClosed, "partial map value is not a magma element");
          fp.rel_[i * nx + x] = fp.rel_[i * nx + x].with(y);
          fp.d_[(i * nx + x) * nx + y] = static_cast<std::uint32_t>(*j);
        }
    return fp;
  }

  /// Builds from explicit lists. The domain of `partial` must equal `rel`.
  static FibrousPreorder from_triples(UnitaryMagma magma, Carrier carrier,
                                      std::span<const RelTriple> rel,
                                      std::span<const PartialEntry> partial) {
    FibrousPreorder fp(std::move(magma), std::move(carrier));
    const std::size_t ni = fp.magma_.size(), nx = fp.carrier_.size();
    auto check = [&](std::size_t i, std::size_t x, std::size_t y) {
      if (i >= ni) throw Error(ErrorCode::UnknownElement, "magma index out of range");
      fp.carrier_.check_index(x);
      fp.carrier_.check_index(y);
    };
    for (const RelTriple& t : rel) {
      check(t.i, t.x, t.y);
      fp.rel_[t.i * nx + t.x] = fp.rel_[t.i * nx + t.x].with(t.y);
    }
    for (const PartialEntry& e : partial) {
      check(e.i, e.x, e.y);
      if (e.j >= ni) throw Error(ErrorCode::NotClosed, "partial map value is not a magma element");
      const Witness w{{"i", fp.magma_.label(e.i)}, {"x", fp.carrier_.label(e.x)},
                      {"y", fp.carrier_.label(e.y)}};
      if (!fp.related(e.i, e.x, e.y))
        throw Error(ErrorCode::MalformedPartialMap, "partial map defined outside the relation", w);
      std::uint32_t& slot = fp.d_[(e.i * nx + e.x) * nx + e.y];
      if (slot != kUndefined && slot != e.j)
        throw Error(ErrorCode::MalformedPartialMap, "partial map given two values", w);
      slot = static_cast<std::uint32_t>(e.j);
    }
    for (std::size_t i = 0; i < ni; ++i)
      for (std::size_t x = 0; x < nx; ++x)
        fp.rel_[i * nx + x].for_each([&](std::size_t y) {
          if (fp.d_[(i * nx + x) * nx + y] == kUndefined)
            throw Error(ErrorCode::MalformedPartialMap, "partial map undefined on a related pair",
                        {{"i", fp.magma_.label(i)}, {"x", fp.carrier_.label(x)},
                         {"y", fp.carrier_.label(y)}});
        });
    return fp;
  }

  const UnitaryMagma& magma() const { return magma_; }
  const Carrier& carrier() const { return carrier_; }

  bool related(std::size_t i, std::size_t x, std::size_t y) const {
    return rel_[i * carrier_.size() + x].contains(y);
  }
  /// N(i,x) without bounds checks; see neighborhood() for the checked form.
  Subset up(std::size_t i, std::size_t x) const { return rel_[i * carrier_.size() + x]; }

  std::optional<std::size_t> partial(std::size_t i, std::size_t x, std::size_t y) const {
    const std::uint32_t j = d_[(i * carrier_.size() + x) * carrier_.size() + y];
    if (j == kUndefined) return std::nullopt;
    return j;
  }

  std::vector<RelTriple> triples() const {
    std::vector<RelTriple> out;
    const std::size_t nx = carrier_.size();
    for (std::size_t i = 0; i < magma_.size(); ++i)
      for (std::size_t x = 0; x < nx; ++x)
        up(i, x).for_each([&](std::size_t y) { out.push_back({i, x, y}); });
    return out;
  }

  std::vector<PartialEntry> partial_entries() const {
    std::vector<PartialEntry> out;
    for (const RelTriple& t : triples()) out.push_back({t.i, t.x, t.y, *partial(t.i, t.x, t.y)});
    return out;
  }

 private:
  static constexpr std::uint32_t kUndefined = 0xffffffffU;

  FibrousPreorder(UnitaryMagma magma, Carrier carrier)
      : magma_(std::move(magma)),
        carrier_(std::move(carrier)),
        rel_(magma_.size() * carrier_.size()),
        d_(magma_.size() * carrier_.size() * carrier_.size(), kUndefined) {}

  UnitaryMagma magma_;
  Carrier carrier_;
  std::vector<Subset> rel_;
  std::vector<std::uint32_t> d_;
};

struct AxiomReport {
  struct C1 { std::size_t i, x; bool operator==(const C1&) const = default; };
  struct C2 { std::size_t i, x, y, j, z; bool operator==(const C2&) const = default; };
  struct C3 { std::size_t i, j, x, y; bool operator==(const C3&) const = default; };

  std::vector<C1> c1_violations;
  std::vector<C2> c2_violations;
  std::vector<C3> c3_violations;

  bool passed() const {
    return c1_violations.empty() && c2_violations.empty() && c3_violations.empty();
  }
};

/// Exhaustive scan of C1 (x ≤^i x), C2 (x ≤^i y, ∂^i(x,y)=j, y ≤^j z ⇒ x ≤^i z)
/// and C3 (x ≤^{ij} y ⇒ x ≤^i y and x ≤^j y). Witnesses are listed in
/// lexicographic order of their tuples.
inline AxiomReport check_axioms(const FibrousPreorder& fp) {
  AxiomReport r;
  const std::size_t ni = fp.magma().size(), nx = fp.carrier().size();
  for (std::size_t i = 0; i < ni; ++i)
    for (std::size_t x = 0; x < nx; ++x)
      if (!fp.related(i, x, x)) r.c1_violations.push_back({i, x});
  for (std::size_t i = 0; i < ni; ++i)
    for (std::size_t x = 0; x < nx; ++x) {
      const Subset nix = fp.up(i, x);
      nix.for_each([&](std::size_t y) {
        const std::size_t j = *fp.partial(i, x, y);
        (fp.up(j, y) - nix).for_each([&](std::size_t z) { r.c2_violations.push_back({i, x, y, j, z}); });
      });
    }
  for (std::size_t i = 0; i < ni; ++i)
    for (std::size_t j = 0; j < ni; ++j) {
      const std::size_t ij = fp.magma().op(i, j);
      for (std::size_t x = 0; x < nx; ++x)
        (fp.up(ij, x) - (fp.up(i, x) & fp.up(j, x))).for_each([&](std::size_t y) {
          r.c3_violations.push_back({i, j, x, y});
        });
    }
  return r;
}

/// Axiom failures as generic violations with labelled witnesses.
inline Report to_report(const FibrousPreorder& fp, const AxiomReport& a) {
  Report r;
  const auto& m = fp.magma();
  const auto& c = fp.carrier();
  for (const auto& v : a.c1_violations) r.add("C1", {{"i", m.label(v.i)}, {"x", c.label(v.x)}});
  for (const auto& v : a.c2_violations)
    r.add("C2", {{"i", m.label(v.i)}, {"x", c.label(v.x)}, {"y", c.label(v.y)},
                 {"j", m.label(v.j)}, {"z", c.label(v.z)}});
  for (const auto& v : a.c3_violations)
    r.add("C3", {{"i", m.label(v.i)}, {"j", m.label(v.j)}, {"x", c.label(v.x)}, {"y", c.label(v.y)}});
  return r;
}

inline void require_axioms(const FibrousPreorder& fp) {
  const AxiomReport a = check_axioms(fp);
  if (!a.passed()) {
    const Report r = to_report(fp, a);
    throw Error(ErrorCode::AxiomsFailed, "axiom " + r.violations.front().condition + " fails",
                r.violations.front().witness);
  }
}

/// N(i,x) = {y : x ≤^i y}.
inline Subset neighborhood(const FibrousPreorder& fp, std::size_t i, std::size_t x) {
  if (i >= fp.magma().size()) throw Error(ErrorCode::UnknownElement, "magma index out of range");
  fp.carrier().check_index(x);
  return fp.up(i, x);
}

inline Subset neighborhood(const FibrousPreorder& fp, std::string_view i, std::string_view x) {
  return fp.up(fp.magma().index_of(i), fp.carrier().index_of(x));
}

/// Topology generated by the sets N(i,x). Refuses inputs that fail C1–C3.
/// On carriers within exhaustive_bound() the result is compared against the
/// defining rule O open ⇔ ∀x∈O ∃i N(i,x) ⊆ O.
inline FiniteTopology induced_topology(const FibrousPreorder& fp) {
  require_axioms(fp);
  const std::size_t ni = fp.magma().size(), nx = fp.carrier().size();
  std::vector<Subset> basis;
  basis.reserve(ni * nx);
  for (std::size_t i = 0; i < ni; ++i)
    for (std::size_t x = 0; x < nx; ++x) basis.push_back(fp.up(i, x));
  FiniteTopology t = union_closure(fp.carrier(), basis);
  if (nx <= exhaustive_bound()) {
    const FiniteTopology scanned = neighbourhood_rule_scan(fp.carrier(), [&](std::size_t x) {
      std::vector<Subset> at;
      for (std::size_t i = 0; i < ni; ++i) at.push_back(fp.up(i, x));
      return at;
    });
    if (!(scanned == t))
      throw Error(ErrorCode::Internal, "basis closure disagrees with the subset scan");
  }
  return t;
}

struct MorphismResult {
  bool holds = true;
  /// First (x, y, j), in lexicographic order, with x ≤^{g_j(x)} y but not
  /// f(x) ≤^j f(y).
  std::optional<std::array<std::size_t, 3>> witness;
};

/// Checks x ≤^{g_j(x)} y ⇒ f(x) ≤^j f(y) for all x, y, j. `g[j][x]` is g_j(x).
inline MorphismResult check_morphism(const FibrousPreorder& src, const FibrousPreorder& dst,
                                     std::span<const std::size_t> f,
                                     const std::vector<std::vector<std::size_t>>& g) {
  if (!(src.magma() == dst.magma()))
    throw Error(ErrorCode::MagmaMismatch, "source and target are indexed by different magmas");
  const std::size_t ni = src.magma().size(), nx = src.carrier().size();
  if (f.size() != nx) throw Error(ErrorCode::SchemaError, "carrier map is not total");
  for (std::size_t v : f) dst.carrier().check_index(v);
  if (g.size() != ni) throw Error(ErrorCode::SchemaError, "need one map g_j per magma element");
  for (const auto& gj : g) {
    if (gj.size() != nx) throw Error(ErrorCode::SchemaError, "g_j is not total");
    for (std::size_t v : gj)
      if (v >= ni) throw Error(ErrorCode::UnknownElement, "g_j value is not a magma element");
  }
  for (std::size_t x = 0; x < nx; ++x)
    for (std::size_t y = 0; y < nx; ++y)
      for (std::size_t j = 0; j < ni; ++j)
        if (src.related(g[j][x], x, y) && !dst.related(j, f[x], f[y]))
          return {false, std::array<std::size_t, 3>{x, y, j}};
  return {};
}

}  // namespace ftk
