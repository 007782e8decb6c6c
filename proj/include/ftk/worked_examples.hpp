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
#include <map>
#include <optional>
#include <vector>

#include "ftk/algebra.hpp"
#include "ftk/error.hpp"
#include "ftk/rational.hpp"
#include "ftk/subset.hpp"

namespace ftk {

// ---------------------------------------------------- monoids with n·a scaling

struct NatMonoidResult {
  Report report;
  /// On pass, N(n,x) = {x + n·a : a ∈ S} at [(n-1)*|B| + x] for n = 1..cap.
  std::vector<Subset> neighbourhoods;
};

/// (i) 0 ∈ S, (ii) a + α(a)·a' ∈ S, (iii) n·a ∈ S for n = 1..cap.
/// alpha[a] is a natural number in 1..cap for each a ∈ S.
inline NatMonoidResult nat_monoid_check(const FiniteMonoid& m, Subset s,
                                        const std::vector<std::optional<std::size_t>>& alpha, std::size_t cap) {
  const Carrier& B = m.elements();
  if (!B.contains(s)) throw Error(ErrorCode::SchemaError, "S leaves the monoid");
  if (alpha.size() != m.size()) throw Error(ErrorCode::TableShape, "alpha must be indexed by monoid elements");
  if (cap == 0) throw Error(ErrorCode::SchemaError, "cap must be at least 1");
  s.for_each([&](std::size_t a) {
    if (!alpha[a] || *alpha[a] < 1 || *alpha[a] > cap)
      throw Error(ErrorCode::SchemaError, "alpha must map S into 1..cap", {{"a", B.label(a)}});
  });

  NatMonoidResult out;
  Report& r = out.report;
  if (!s.contains(m.zero())) r.add("i", {{"zero", m.label(m.zero())}});
  s.for_each([&](std::size_t a) {
    s.for_each([&](std::size_t a2) {
      if (!s.contains(m.plus(a, m.times(*alpha[a], a2))))
        r.add("ii", {{"a", B.label(a)}, {"a'", B.label(a2)}});
    });
  });
  for (std::size_t n = 1; n <= cap; ++n)
    s.for_each([&](std::size_t a) {
      if (!s.contains(m.times(n, a))) r.add("iii", {{"n", std::to_string(n)}, {"a", B.label(a)}});
    });
  if (!r.passed()) return out;

  for (std::size_t n = 1; n <= cap; ++n) {
    Subset sn;
    s.for_each([&](std::size_t a) { sn = sn.with(m.times(n, a)); });
    for (std::size_t x = 0; x < m.size(); ++x) out.neighbourhoods.push_back(m.translate(x, sn));
  }
  return out;
}

// ------------------------------------------------------------ dyadic alphas

namespace detail {

inline Rational pow2_neg(std::size_t n) { return Rational(Integer(1), Integer(1) << n); }

}  // namespace detail

/// Smallest n ≥ 0 with a + 2^{-n}·a' < 1 for every a' ∈ [0,1), that is
/// a + 2^{-n} ≤ 1.
inline std::size_t semiring_alpha(const Rational& a) {
  if (a < 0 || a >= 1)
    throw Error(ErrorCode::OutOfDomain, "a must lie in [0,1)", {{"a", format_rational(a)}});
  std::size_t n = 0;
  while (a + detail::pow2_neg(n) > 1) ++n;
  return n;
}

/// With u = (1/2)^{e_u}: smallest n ≥ 0 with e_u + 2^{-n} < 1.
inline std::size_t sqrt_example_alpha(const Rational& e_u) {
  if (e_u < 0 || e_u >= 1)
    throw Error(ErrorCode::OutOfDomain, "exponent must lie in [0,1)", {{"e_u", format_rational(e_u)}});
  std::size_t n = 0;
  while (e_u + detail::pow2_neg(n) >= 1) ++n;
  return n;
}

// ---------------------------------------------------------- interval sets

struct RationalInterval {
  Rational lower;
  Rational upper;
  bool lower_closed = true;
  bool upper_closed = false;

  bool empty() const { return lower > upper || (lower == upper && !(lower_closed && upper_closed)); }
  bool contains(const Rational& x) const {
    const bool above = lower_closed ? x >= lower : x > lower;
    const bool below = upper_closed ? x <= upper : x < upper;
    return above && below;
  }
  bool operator==(const RationalInterval&) const = default;
};

/// A finite union of intervals kept sorted, disjoint and maximally merged.
class IntervalSet {
 public:
  IntervalSet() = default;

  /// Throws SchemaError when some lower > upper.
  explicit IntervalSet(std::vector<RationalInterval> parts) {
    for (const auto& p : parts)
      if (p.lower > p.upper)
        throw Error(ErrorCode::SchemaError, "interval has lower > upper",
                    {{"lower", format_rational(p.lower)}, {"upper", format_rational(p.upper)}});
    std::erase_if(parts, [](const RationalInterval& p) { return p.empty(); });
    std::sort(parts.begin(), parts.end(), [](const RationalInterval& a, const RationalInterval& b) {
      if (a.lower != b.lower) return a.lower < b.lower;
      return a.lower_closed && !b.lower_closed;
    });
    for (const auto& p : parts) {
      if (!parts_.empty()) {
        RationalInterval& cur = parts_.back();
        const bool joins = p.lower < cur.upper || (p.lower == cur.upper && (cur.upper_closed || p.lower_closed));
        if (joins) {
          if (p.upper > cur.upper) {
            cur.upper = p.upper;
            cur.upper_closed = p.upper_closed;
          } else if (p.upper == cur.upper) {
            cur.upper_closed = cur.upper_closed || p.upper_closed;
          }
          continue;
        }
      }
      parts_.push_back(p);
    }
  }

  const std::vector<RationalInterval>& components() const { return parts_; }
  bool contains(const Rational& x) const {
    return std::any_of(parts_.begin(), parts_.end(), [&](const RationalInterval& p) { return p.contains(x); });
  }
  bool operator==(const IntervalSet&) const = default;

 private:
  std::vector<RationalInterval> parts_;
};

struct SorgenfreyResult {
  bool open = true;
  std::optional<Rational> witness;
};

/// Open in the half-open-interval topology iff every point x of s has some
/// [x, x+ε) ⊆ s. The witness is the first closed upper endpoint.
inline SorgenfreyResult sorgenfrey_is_open(const IntervalSet& s) {
  for (const auto& p : s.components())
    if (p.upper_closed) return {false, p.upper};
  return {};
}

// ------------------------------------------------------------ function space

enum class Membership { Member, NotMember, Inconclusive };

inline const char* to_string(Membership m) {
  switch (m) {
    case Membership::Member: return "member";
    case Membership::NotMember: return "not_member";
    case Membership::Inconclusive: return "inconclusive";
  }
  return "?";
}

struct ShiftCheck {
  std::size_t n = 0;
  Membership membership = Membership::Inconclusive;
  std::optional<std::size_t> alpha;
  /// α(tⁿ∘f) ≤ α(f) + n
  bool bound = false;
  /// α(tⁿ∘f) = α(f) + n
  bool identity = false;
};

struct FunctionSpaceResult {
  Membership membership = Membership::Inconclusive;
  std::optional<std::size_t> alpha;
  /// t(y) ∈ P for every y ∈ P.
  bool invariant = false;
  /// Filled for n = 1..3 when f is a member and the invariance holds.
  std::vector<ShiftCheck> shifts;
};

namespace detail {

struct AlphaSearch {
  Membership membership;
  std::optional<std::size_t> alpha;
};

/// Smallest n with f(x) + tⁿ(y) ∈ P for all x and y ∈ P. A repeated power
/// of t settles non-membership.
inline AlphaSearch search_alpha(const FiniteMonoid& m, const std::vector<std::size_t>& t, Subset p,
                                const std::vector<std::size_t>& f, std::size_t n_max) {
  const std::size_t nb = m.size();
  std::vector<std::size_t> power(nb);
  for (std::size_t x = 0; x < nb; ++x) power[x] = x;
  std::map<std::vector<std::size_t>, std::size_t> seen;
  for (std::size_t n = 0; n <= n_max; ++n) {
    if (seen.count(power)) return {Membership::NotMember, std::nullopt};
    bool ok = true;
    for (std::size_t x = 0; x < nb && ok; ++x)
      p.for_each([&](std::size_t y) {
        if (ok && !p.contains(m.plus(f[x], power[y]))) ok = false;
      });
    if (ok) return {Membership::Member, n};
    seen.emplace(power, n);
    for (auto& v : power) v = t[v];
  }
  return {Membership::Inconclusive, std::nullopt};
}

}  // namespace detail

/// Membership of f : X → X in S = {f : ∃n ∀x ∀y∈P f(x) + tⁿ(y) ∈ P} and
/// the smallest such n, searched up to n_max.
inline FunctionSpaceResult function_space_alpha(const FiniteMonoid& m, const std::vector<std::size_t>& t, Subset p,
                                                const std::vector<std::size_t>& f, std::size_t n_max = 64) {
  const std::size_t nb = m.size();
  const Carrier& X = m.elements();
  if (t.size() != nb || f.size() != nb) throw Error(ErrorCode::TableShape, "t and f must be total on X");
  for (std::size_t x = 0; x < nb; ++x)
    if (t[x] >= nb || f[x] >= nb) throw Error(ErrorCode::NotClosed, "t and f must map X into X");
  if (t[m.zero()] != m.zero())
    throw Error(ErrorCode::NotEndomorphism, "t does not fix zero", {{"x", X.label(m.zero())}});
  for (std::size_t a = 0; a < nb; ++a)
    for (std::size_t b = 0; b < nb; ++b)
      if (t[m.plus(a, b)] != m.plus(t[a], t[b]))
        throw Error(ErrorCode::NotEndomorphism, "t is not additive", {{"a", X.label(a)}, {"b", X.label(b)}});
  if (!X.contains(p)) throw Error(ErrorCode::SchemaError, "P leaves the monoid");
  if (!p.contains(m.zero())) throw Error(ErrorCode::SchemaError, "P must contain zero");

  FunctionSpaceResult out;
  const auto base = detail::search_alpha(m, t, p, f, n_max);
  out.membership = base.membership;
  out.alpha = base.alpha;
  out.invariant = true;
  p.for_each([&](std::size_t y) { out.invariant = out.invariant && p.contains(t[y]); });
  if (!out.invariant || out.membership != Membership::Member) return out;

  std::vector<std::size_t> g = f;
  for (std::size_t n = 1; n <= 3; ++n) {
    for (auto& v : g) v = t[v];
    const auto s = detail::search_alpha(m, t, p, g, n_max);
    ShiftCheck c{n, s.membership, s.alpha, false, false};
    if (s.alpha) {
      c.bound = *s.alpha <= *out.alpha + n;
      c.identity = *s.alpha == *out.alpha + n;
    }
    out.shifts.push_back(c);
  }
  return out;
}

}  // namespace ftk
