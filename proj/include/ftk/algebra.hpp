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
#include <cstddef>
#include <string>
#include <vector>

#include "ftk/error.hpp"
#include "ftk/subset.hpp"

namespace ftk {

/// A finite monoid (B,+,0) given by its addition table.
class FiniteMonoid {
 public:
  FiniteMonoid() = default;

  /// add[a*|B| + b] = a + b. Throws MonoidAxiomFailed on a broken law.
  FiniteMonoid(Carrier elements, std::size_t zero, std::vector<std::size_t> add)
      : elements_(std::move(elements)), zero_(zero), add_(std::move(add)) {
    const std::size_t n = elements_.size();
    if (zero_ >= n) throw Error(ErrorCode::UnknownElement, "zero is not an element");
    if (add_.size() != n * n) throw Error(ErrorCode::TableShape, "addition table must be n×n");
    for (std::size_t v : add_)
      if (v >= n) throw Error(ErrorCode::NotClosed, "addition table entry is not an element");
    for (std::size_t a = 0; a < n; ++a)
      if (plus(zero_, a) != a || plus(a, zero_) != a)
        throw Error(ErrorCode::MonoidAxiomFailed, "zero law fails", {{"a", label(a)}});
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        for (std::size_t c = 0; c < n; ++c)
          if (plus(a, plus(b, c)) != plus(plus(a, b), c))
            throw Error(ErrorCode::MonoidAxiomFailed, "addition is not associative",
                        {{"a", label(a)}, {"b", label(b)}, {"c", label(c)}});
  }

  std::size_t size() const { return elements_.size(); }
  std::size_t zero() const { return zero_; }
  std::size_t plus(std::size_t a, std::size_t b) const { return add_[a * size() + b]; }
  const Carrier& elements() const { return elements_; }
  const std::string& label(std::size_t a) const { return elements_.label(a); }
  const std::vector<std::size_t>& table() const { return add_; }

  /// n·a by repeated addition (0·a = 0).
  std::size_t times(std::size_t n, std::size_t a) const {
    std::size_t acc = zero_;
    for (std::size_t k = 0; k < n; ++k) acc = plus(acc, a);
    return acc;
  }

  /// {x + a : a ∈ s}
  Subset translate(std::size_t x, Subset s) const {
    Subset out;
    s.for_each([&](std::size_t a) { out = out.with(plus(x, a)); });
    return out;
  }

  bool is_commutative() const {
    for (std::size_t a = 0; a < size(); ++a)
      for (std::size_t b = a + 1; b < size(); ++b)
        if (plus(a, b) != plus(b, a)) return false;
    return true;
  }

 private:
  Carrier elements_;
  std::size_t zero_ = 0;
  std::vector<std::size_t> add_;
};

/// ℤ_n with labels "0".."n-1".
inline FiniteMonoid cyclic_monoid(std::size_t n) {
  std::vector<std::size_t> add(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) add[a * n + b] = (a + b) % n;
  return FiniteMonoid(Carrier::numbered(n), 0, std::move(add));
}

/// {0..max} under addition saturated at max.
inline FiniteMonoid saturating_monoid(std::size_t max) {
  const std::size_t n = max + 1;
  std::vector<std::size_t> add(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) add[a * n + b] = std::min(a + b, max);
  return FiniteMonoid(Carrier::numbered(n), 0, std::move(add));
}

/// A finite abelian group: a commutative monoid with negation.
class FiniteGroup {
 public:
  FiniteGroup() = default;

  explicit FiniteGroup(FiniteMonoid m) : monoid_(std::move(m)), neg_(monoid_.size()) {
    if (!monoid_.is_commutative())
      throw Error(ErrorCode::GroupAxiomFailed, "group addition must be commutative");
    for (std::size_t a = 0; a < size(); ++a) {
      bool found = false;
      for (std::size_t b = 0; b < size() && !found; ++b)
        if (monoid_.plus(a, b) == monoid_.zero()) {
          neg_[a] = b;
          found = true;
        }
      if (!found)
        throw Error(ErrorCode::GroupAxiomFailed, "element has no inverse", {{"a", label(a)}});
    }
  }

  /// Checks a supplied negation table against the derived one.
  FiniteGroup(FiniteMonoid m, const std::vector<std::size_t>& neg) : FiniteGroup(std::move(m)) {
    if (neg.size() != size()) throw Error(ErrorCode::TableShape, "negation table must be total");
    for (std::size_t a = 0; a < size(); ++a)
      if (neg[a] != neg_[a])
        throw Error(ErrorCode::GroupAxiomFailed, "negation table is wrong", {{"a", label(a)}});
  }

  const FiniteMonoid& monoid() const { return monoid_; }
  std::size_t size() const { return monoid_.size(); }
  std::size_t zero() const { return monoid_.zero(); }
  std::size_t plus(std::size_t a, std::size_t b) const { return monoid_.plus(a, b); }
  std::size_t neg(std::size_t a) const { return neg_[a]; }
  std::size_t minus(std::size_t a, std::size_t b) const { return plus(a, neg(b)); }
  std::size_t times(std::size_t n, std::size_t a) const { return monoid_.times(n, a); }
  const Carrier& elements() const { return monoid_.elements(); }
  const std::string& label(std::size_t a) const { return monoid_.label(a); }
  const std::vector<std::size_t>& negation() const { return neg_; }

 private:
  FiniteMonoid monoid_;
  std::vector<std::size_t> neg_;
};

inline FiniteGroup cyclic_group(std::size_t n) { return FiniteGroup(cyclic_monoid(n)); }

}  // namespace ftk
