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
#include <cstdlib>
#include <span>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "ftk/error.hpp"
#include "ftk/subset.hpp"

namespace ftk {

/// Carriers up to this size get their topologies cross-checked by a full
/// 2^n subset scan. Overridden by FTK_EXHAUSTIVE_BOUND.
inline std::size_t exhaustive_bound() {
  if (const char* env = std::getenv("FTK_EXHAUSTIVE_BOUND")) {
    char* end = nullptr;
    const unsigned long v = std::strtoul(env, &end, 10);
    if (end != env && *end == '\0') return std::min<unsigned long>(v, 30);
  }
  return 12;
}

/// A family of subsets of a carrier, kept in canonical order so that equal
/// families compare equal. Whether the family is a topology is a separate
/// question answered by validate_topology.
class FiniteTopology {
 public:
  FiniteTopology() = default;

  FiniteTopology(Carrier carrier, std::vector<Subset> family)
      : carrier_(std::move(carrier)), opens_(std::move(family)) {
    for (Subset s : opens_)
      if (!carrier_.contains(s))
        throw Error(ErrorCode::SchemaError, "open set is not a subset of the carrier");
    std::sort(opens_.begin(), opens_.end(), CanonicalLess{});
    opens_.erase(std::unique(opens_.begin(), opens_.end()), opens_.end());
  }

  const Carrier& carrier() const { return carrier_; }
  const std::vector<Subset>& opens() const { return opens_; }
  std::size_t size() const { return opens_.size(); }

  bool contains(Subset s) const {
    return std::binary_search(opens_.begin(), opens_.end(), s, CanonicalLess{});
  }

  /// Position of an open in canonical order, or npos.
  std::size_t position(Subset s) const {
    auto it = std::lower_bound(opens_.begin(), opens_.end(), s, CanonicalLess{});
    if (it == opens_.end() || *it != s) return npos;
    return static_cast<std::size_t>(it - opens_.begin());
  }

  bool operator==(const FiniteTopology& o) const {
    return carrier_ == o.carrier_ && opens_ == o.opens_;
  }

  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

 private:
  Carrier carrier_;
  std::vector<Subset> opens_;
};

inline bool is_open(const FiniteTopology& t, Subset s) {
  if (!t.carrier().contains(s))
    throw Error(ErrorCode::UnknownElement, "subset is not drawn from the carrier");
  return t.contains(s);
}

/// Checks ∅ and the carrier are present and the family is closed under
/// pairwise union and intersection.
inline Report validate_topology(const FiniteTopology& t) {
  Report r;
  const Carrier& c = t.carrier();
  if (!t.contains(Subset{})) r.add("empty", {});
  if (!t.contains(c.full())) r.add("carrier", {});
  const auto& opens = t.opens();
  for (std::size_t a = 0; a < opens.size(); ++a) {
    for (std::size_t b = a + 1; b < opens.size(); ++b) {
      const Subset u = opens[a] | opens[b];
      const Subset v = opens[a] & opens[b];
      if (!t.contains(u))
        r.add("union", {{"U", c.render(opens[a])}, {"V", c.render(opens[b])},
                        {"missing", c.render(u)}});
      if (!t.contains(v))
        r.add("intersection", {{"U", c.render(opens[a])}, {"V", c.render(opens[b])},
                               {"missing", c.render(v)}});
    }
  }
  return r;
}

/// All unions of members of `basis`, together with ∅.
inline FiniteTopology union_closure(const Carrier& carrier, std::span<const Subset> basis) {
  std::unordered_set<Subset, SubsetHash> seen{Subset{}};
  std::vector<Subset> family{Subset{}};
  std::unordered_set<Subset, SubsetHash> distinct(basis.begin(), basis.end());
  for (Subset b : distinct) {
    const std::size_t n = family.size();
    for (std::size_t k = 0; k < n; ++k) {
      const Subset u = family[k] | b;
      if (seen.insert(u).second) family.push_back(u);
    }
  }
  return FiniteTopology(carrier, std::move(family));
}

/// The family {O : pred(O)} found by scanning every subset of the carrier.
template <class Pred>
FiniteTopology subset_scan(const Carrier& carrier, Pred&& pred) {
  if (carrier.size() > 30)
    throw Error(ErrorCode::CarrierTooLarge, "subset scan limited to 30 points");
  std::vector<Subset> family;
  const std::uint64_t count = std::uint64_t{1} << carrier.size();
  for (std::uint64_t bits = 0; bits < count; ++bits) {
    const Subset s = Subset::from_bits(bits);
    if (pred(s)) family.push_back(s);
  }
  return FiniteTopology(carrier, std::move(family));
}

/// {O : ∀x∈O ∃ basis set B at x with B ⊆ O}, where basis_at(x) yields the
/// candidate neighbourhoods of x.
template <class BasisAt>
FiniteTopology neighbourhood_rule_scan(const Carrier& carrier, BasisAt&& basis_at) {
  std::vector<std::vector<Subset>> at(carrier.size());
  for (std::size_t x = 0; x < carrier.size(); ++x) at[x] = basis_at(x);
  return subset_scan(carrier, [&](Subset o) {
    bool ok = true;
    o.for_each([&](std::size_t x) {
      if (!ok) return;
      ok = std::any_of(at[x].begin(), at[x].end(), [&](Subset b) { return b.subset_of(o); });
    });
    return ok;
  });
}

/// A binary relation on a carrier, stored as up-sets: up(x) = {y : x ≤ y}.
class Preorder {
 public:
  Preorder() = default;
  Preorder(Carrier carrier, std::vector<Subset> up)
      : carrier_(std::move(carrier)), up_(std::move(up)) {
    if (up_.size() != carrier_.size())
      throw Error(ErrorCode::SchemaError, "need one up-set per carrier element");
    for (Subset s : up_)
      if (!carrier_.contains(s))
        throw Error(ErrorCode::SchemaError, "relation leaves the carrier");
  }

  static Preorder from_pairs(Carrier carrier,
                             std::span<const std::pair<std::size_t, std::size_t>> leq) {
    std::vector<Subset> up(carrier.size());
    for (auto [x, y] : leq) {
      carrier.check_index(x);
      carrier.check_index(y);
      up[x] = up[x].with(y);
    }
    return Preorder(std::move(carrier), std::move(up));
  }

  static Preorder discrete(Carrier carrier) {
    std::vector<Subset> up(carrier.size());
    for (std::size_t x = 0; x < up.size(); ++x) up[x] = Subset::singleton(x);
    return Preorder(std::move(carrier), std::move(up));
  }

  const Carrier& carrier() const { return carrier_; }
  Subset up(std::size_t x) const { return up_.at(x); }
  const std::vector<Subset>& up_sets() const { return up_; }
  bool leq(std::size_t x, std::size_t y) const { return up_.at(x).contains(y); }

  std::vector<std::pair<std::size_t, std::size_t>> pairs() const {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (std::size_t x = 0; x < up_.size(); ++x)
      up_[x].for_each([&](std::size_t y) { out.emplace_back(x, y); });
    return out;
  }

  bool operator==(const Preorder&) const = default;

 private:
  Carrier carrier_;
  std::vector<Subset> up_;
};

inline Report check_preorder(const Preorder& p) {
  Report r;
  const Carrier& c = p.carrier();
  for (std::size_t x = 0; x < c.size(); ++x)
    if (!p.leq(x, x)) r.add("reflexive", {{"x", c.label(x)}});
  for (std::size_t x = 0; x < c.size(); ++x)
    p.up(x).for_each([&](std::size_t y) {
      p.up(y).for_each([&](std::size_t z) {
        if (!p.leq(x, z))
          r.add("transitive", {{"x", c.label(x)}, {"y", c.label(y)}, {"z", c.label(z)}});
      });
    });
  return r;
}

inline void require_preorder(const Preorder& p) {
  const Report r = check_preorder(p);
  if (!r.passed())
    throw Error(ErrorCode::NotAPreorder, "relation is not a preorder (" +
                                             r.violations.front().condition + ")",
                r.violations.front().witness);
}

/// Up-closed sets of a preorder.
inline FiniteTopology alexandrov_topology(const Preorder& p) {
  require_preorder(p);
  return union_closure(p.carrier(), p.up_sets());
}

/// x ≤ y iff every open containing x contains y.
inline Preorder specialization_preorder(const FiniteTopology& t) {
  const Report r = validate_topology(t);
  if (!r.passed())
    throw Error(ErrorCode::InvalidTopology,
                "family is not a topology (" + r.violations.front().condition + ")",
                r.violations.front().witness);
  const Carrier& c = t.carrier();
  std::vector<Subset> up(c.size(), c.full());
  for (Subset o : t.opens())
    o.for_each([&](std::size_t x) { up[x] &= o; });
  return Preorder(c, std::move(up));
}

}  // namespace ftk
