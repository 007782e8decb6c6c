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

#include <bit>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "ftk/error.hpp"

namespace ftk {

/// Largest carrier a Subset can index.
inline constexpr std::size_t kMaxCarrier = 64;

/// A subset of a finite carrier of at most 64 points, stored as a bitmask.
class Subset {
 public:
  constexpr Subset() = default;

  static constexpr Subset from_bits(std::uint64_t bits) {
    Subset s;
    s.bits_ = bits;
    return s;
  }
  static constexpr Subset singleton(std::size_t i) {
    return from_bits(std::uint64_t{1} << i);
  }
  static constexpr Subset full(std::size_t n) {
    return from_bits(n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
  }

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr std::size_t size() const {
    return static_cast<std::size_t>(std::popcount(bits_));
  }
  constexpr bool contains(std::size_t i) const { return (bits_ >> i) & 1U; }
  constexpr bool subset_of(Subset other) const {
    return (bits_ & ~other.bits_) == 0;
  }

  constexpr Subset with(std::size_t i) const {
    return from_bits(bits_ | (std::uint64_t{1} << i));
  }
  constexpr Subset without(std::size_t i) const {
    return from_bits(bits_ & ~(std::uint64_t{1} << i));
  }

  constexpr Subset operator|(Subset o) const { return from_bits(bits_ | o.bits_); }
  constexpr Subset operator&(Subset o) const { return from_bits(bits_ & o.bits_); }
  constexpr Subset operator-(Subset o) const { return from_bits(bits_ & ~o.bits_); }
  constexpr Subset& operator|=(Subset o) { bits_ |= o.bits_; return *this; }
  constexpr Subset& operator&=(Subset o) { bits_ &= o.bits_; return *this; }

  constexpr bool operator==(const Subset&) const = default;

  /// Calls f(i) for every member in increasing order.
  template <class F>
  constexpr void for_each(F&& f) const {
    for (std::uint64_t b = bits_; b != 0; b &= b - 1)
      f(static_cast<std::size_t>(std::countr_zero(b)));
  }

  std::vector<std::size_t> elements() const {
    std::vector<std::size_t> out;
    out.reserve(size());
    for_each([&](std::size_t i) { out.push_back(i); });
    return out;
  }

 private:
  std::uint64_t bits_ = 0;
};

/// Canonical order on subsets: by cardinality, then lexicographically on the
/// sorted member lists.
constexpr bool canonical_less(Subset a, Subset b) {
  if (a.size() != b.size()) return a.size() < b.size();
  const std::uint64_t diff = a.bits() ^ b.bits();
  if (diff == 0) return false;
  return (a.bits() & (diff & (~diff + 1))) != 0;
}

struct CanonicalLess {
  constexpr bool operator()(Subset a, Subset b) const { return canonical_less(a, b); }
};

struct SubsetHash {
  std::size_t operator()(Subset s) const noexcept {
    return std::hash<std::uint64_t>{}(s.bits());
  }
};

/// Finite, non-empty, ordered set of distinct labels.
class Carrier {
 public:
  Carrier() = default;

  explicit Carrier(std::vector<std::string> labels) : labels_(std::move(labels)) {
    if (labels_.empty())
      throw Error(ErrorCode::SchemaError, "carrier must be non-empty");
    if (labels_.size() > kMaxCarrier)
      throw Error(ErrorCode::CarrierTooLarge,
                  "carrier has " + std::to_string(labels_.size()) +
                      " points; at most 64 are supported");
    for (std::size_t i = 0; i < labels_.size(); ++i) {
      if (!index_.emplace(labels_[i], i).second)
        throw Error(ErrorCode::SchemaError, "duplicate label '" + labels_[i] + "'",
                    {{"label", labels_[i]}});
    }
  }

  /// Carrier {"0", ..., "n-1"}.
  static Carrier numbered(std::size_t n, std::size_t first = 0) {
    std::vector<std::string> labels;
    labels.reserve(n);
    for (std::size_t i = 0; i < n; ++i) labels.push_back(std::to_string(first + i));
    return Carrier(std::move(labels));
  }

  std::size_t size() const { return labels_.size(); }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(std::size_t i) const { return labels_.at(i); }

  std::optional<std::size_t> find(std::string_view label) const {
    auto it = index_.find(std::string(label));
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }

  std::size_t index_of(std::string_view label) const {
    if (auto i = find(label)) return *i;
    throw Error(ErrorCode::UnknownElement, "unknown element '" + std::string(label) + "'",
                {{"label", std::string(label)}});
  }

  void check_index(std::size_t i) const {
    if (i >= labels_.size())
      throw Error(ErrorCode::UnknownElement,
                  "element index " + std::to_string(i) + " out of range");
  }

  Subset full() const { return Subset::full(labels_.size()); }
  bool contains(Subset s) const { return s.subset_of(full()); }

  std::vector<std::string> labels_of(Subset s) const {
    std::vector<std::string> out;
    s.for_each([&](std::size_t i) { out.push_back(labels_[i]); });
    return out;
  }

  /// "{a,b}"
  std::string render(Subset s) const {
    std::string out = "{";
    bool first = true;
    s.for_each([&](std::size_t i) {
      if (!first) out += ',';
      out += labels_[i];
      first = false;
    });
    return out + "}";
  }

  Subset subset_of_labels(const std::vector<std::string>& labels) const {
    Subset s;
    for (const auto& l : labels) s = s.with(index_of(l));
    return s;
  }

  bool operator==(const Carrier& o) const { return labels_ == o.labels_; }

 private:
  std::vector<std::string> labels_;
  std::unordered_map<std::string, std::size_t> index_;
};

}  // namespace ftk
