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
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "ftk/error.hpp"

namespace ftk {

/// A finite set with a two-sided unit and a total, not necessarily
/// associative, binary operation. Elements are addressed by their position in
/// the declared order; labels are kept for I/O.
class UnitaryMagma {
 public:
  enum class Kind { Table, CappedMult, CappedAdd, Endomap };

  UnitaryMagma() : UnitaryMagma(from_indices({"1"}, 0, {0}, Kind::Table)) {}

  /// Builds from an index table (row-major, table[i*n+j] = i·j). Validates
  /// closure and the unit laws.
  static UnitaryMagma from_indices(std::vector<std::string> labels, std::size_t unit,
                                   std::vector<std::size_t> table, Kind kind,
                                   std::size_t cap = 0) {
    UnitaryMagma m(std::move(labels), unit, std::move(table), kind, cap);
    m.validate();
    m.associative_ = (kind == Kind::CappedMult || kind == Kind::CappedAdd)
                         ? true
                         : m.scan_associativity();
    return m;
  }

  std::size_t size() const { return labels_.size(); }
  std::size_t unit() const { return unit_; }
  std::size_t op(std::size_t i, std::size_t j) const { return table_[i * size() + j]; }
  bool is_associative() const { return associative_; }
  Kind kind() const { return kind_; }
  /// Saturation bound of a capped magma (0 for table/endomap magmas).
  std::size_t cap() const { return cap_; }

  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(std::size_t i) const { return labels_.at(i); }

  std::optional<std::size_t> find(std::string_view label) const {
    auto it = index_.find(std::string(label));
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }
  std::size_t index_of(std::string_view label) const {
    if (auto i = find(label)) return *i;
    throw Error(ErrorCode::UnknownElement,
                "unknown magma element '" + std::string(label) + "'",
                {{"label", std::string(label)}});
  }

  /// Integer read of an element for the capped families: i+1 for
  /// capped_nat_mult, i for capped_nat_add, nullopt otherwise.
  std::optional<long long> numeric(std::size_t i) const {
    switch (kind_) {
      case Kind::CappedMult: return static_cast<long long>(i) + 1;
      case Kind::CappedAdd: return static_cast<long long>(i);
      default: return std::nullopt;
    }
  }

  bool operator==(const UnitaryMagma& o) const {
    return labels_ == o.labels_ && unit_ == o.unit_ && table_ == o.table_;
  }

 private:
  UnitaryMagma(std::vector<std::string> labels, std::size_t unit,
               std::vector<std::size_t> table, Kind kind, std::size_t cap)
      : labels_(std::move(labels)), unit_(unit), table_(std::move(table)), kind_(kind), cap_(cap) {}

  void validate() {
    const std::size_t n = labels_.size();
    if (n == 0) throw Error(ErrorCode::SchemaError, "magma must be non-empty");
    for (std::size_t i = 0; i < n; ++i)
      if (!index_.emplace(labels_[i], i).second)
        throw Error(ErrorCode::SchemaError, "duplicate magma label '" + labels_[i] + "'",
                    {{"label", labels_[i]}});
    if (unit_ >= n) throw Error(ErrorCode::UnknownElement, "unit is not an element");
    if (table_.size() != n * n)
      throw Error(ErrorCode::TableShape, "operation table must be " + std::to_string(n) +
                                             "x" + std::to_string(n));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (op(i, j) >= n)
          throw Error(ErrorCode::NotClosed, "operation table entry is not an element",
                      {{"i", labels_[i]}, {"j", labels_[j]}});
    for (std::size_t i = 0; i < n; ++i)
      if (op(unit_, i) != i || op(i, unit_) != i)
        throw Error(ErrorCode::UnitLawViolation,
                    "unit law fails at element '" + labels_[i] + "'", {{"i", labels_[i]}});
  }

  bool scan_associativity() const {
    const std::size_t n = size();
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k)
          if (op(i, op(j, k)) != op(op(i, j), k)) return false;
    return true;
  }

  std::vector<std::string> labels_;
  std::unordered_map<std::string, std::size_t> index_;
  std::size_t unit_ = 0;
  std::vector<std::size_t> table_;
  Kind kind_ = Kind::Table;
  std::size_t cap_ = 0;
  bool associative_ = true;
};

/// Magma from a label table; op_table[r][c] is elements[r]·elements[c].
inline UnitaryMagma make_table_magma(const std::vector<std::string>& elements,
                                     const std::string& unit,
                                     const std::vector<std::vector<std::string>>& op_table) {
  const std::size_t n = elements.size();
  if (op_table.size() != n)
    throw Error(ErrorCode::TableShape, "operation table must have one row per element");
  std::unordered_map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < n; ++i) index.emplace(elements[i], i);
  auto unit_it = index.find(unit);
  if (unit_it == index.end())
    throw Error(ErrorCode::UnknownElement, "unit '" + unit + "' is not an element",
                {{"label", unit}});
  std::vector<std::size_t> table(n * n);
  for (std::size_t r = 0; r < n; ++r) {
    if (op_table[r].size() != n)
      throw Error(ErrorCode::TableShape, "operation table row " + std::to_string(r) +
                                             " has the wrong length");
    for (std::size_t c = 0; c < n; ++c) {
      auto it = index.find(op_table[r][c]);
      if (it == index.end())
        throw Error(ErrorCode::NotClosed, "entry '" + op_table[r][c] + "' is not an element",
                    {{"i", elements[r]}, {"j", elements[c]}, {"entry", op_table[r][c]}});
      table[r * n + c] = it->second;
    }
  }
  return UnitaryMagma::from_indices(elements, unit_it->second, std::move(table),
                                    UnitaryMagma::Kind::Table);
}

inline UnitaryMagma trivial_magma() { return UnitaryMagma(); }

/// {1..max} under multiplication saturated at max.
inline UnitaryMagma capped_nat_mult(std::size_t max) {
  if (max < 1) throw Error(ErrorCode::SchemaError, "capped_nat_mult needs max >= 1");
  std::vector<std::string> labels;
  for (std::size_t v = 1; v <= max; ++v) labels.push_back(std::to_string(v));
  std::vector<std::size_t> table(max * max);
  for (std::size_t i = 0; i < max; ++i)
    for (std::size_t j = 0; j < max; ++j)
      table[i * max + j] = std::min((i + 1) * (j + 1), max) - 1;
  return UnitaryMagma::from_indices(std::move(labels), 0, std::move(table),
                                    UnitaryMagma::Kind::CappedMult, max);
}

/// {0..max} under addition saturated at max.
inline UnitaryMagma capped_nat_add(std::size_t max) {
  const std::size_t n = max + 1;
  std::vector<std::string> labels;
  for (std::size_t v = 0; v <= max; ++v) labels.push_back(std::to_string(v));
  std::vector<std::size_t> table(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) table[i * n + j] = std::min(i + j, max);
  return UnitaryMagma::from_indices(std::move(labels), 0, std::move(table),
                                    UnitaryMagma::Kind::CappedAdd, max);
}

/// Magma with m·n = mu_m(n). mu[m][k] is the image of elements[k] under mu_m.
/// The unit laws require mu_1 = id and mu_m(1) = m.
inline UnitaryMagma endomap_magma(const std::vector<std::string>& elements,
                                  const std::string& unit,
                                  const std::vector<std::vector<std::string>>& mu) {
  const std::size_t n = elements.size();
  if (mu.size() != n)
    throw Error(ErrorCode::TableShape, "need one endo-map per element");
  std::unordered_map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < n; ++i) index.emplace(elements[i], i);
  auto unit_it = index.find(unit);
  if (unit_it == index.end())
    throw Error(ErrorCode::UnknownElement, "unit '" + unit + "' is not an element",
                {{"label", unit}});
  const std::size_t u = unit_it->second;
  std::vector<std::size_t> table(n * n);
  for (std::size_t m = 0; m < n; ++m) {
    if (mu[m].size() != n)
      throw Error(ErrorCode::TableShape, "endo-map for '" + elements[m] + "' is not total");
    for (std::size_t k = 0; k < n; ++k) {
      auto it = index.find(mu[m][k]);
      if (it == index.end())
        throw Error(ErrorCode::NotClosed, "image '" + mu[m][k] + "' is not an element",
                    {{"m", elements[m]}, {"n", elements[k]}, {"entry", mu[m][k]}});
      table[m * n + k] = it->second;
    }
  }
  for (std::size_t k = 0; k < n; ++k)
    if (table[u * n + k] != k)
      throw Error(ErrorCode::UnitLawViolation,
                  "mu_" + unit + " is not the identity at '" + elements[k] + "'",
                  {{"i", elements[k]}});
  for (std::size_t m = 0; m < n; ++m)
    if (table[m * n + u] != m)
      throw Error(ErrorCode::UnitLawViolation,
                  "mu_" + elements[m] + " does not send the unit to '" + elements[m] + "'",
                  {{"i", elements[m]}});
  return UnitaryMagma::from_indices(elements, u, std::move(table), UnitaryMagma::Kind::Endomap);
}

}  // namespace ftk
