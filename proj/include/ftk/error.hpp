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

#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace ftk {

enum class ErrorCode {
  // input shape
  ParseError,
  SchemaError,
  UnknownElement,
  TableShape,
  NotClosed,
  CarrierTooLarge,
  MalformedPartialMap,
  MagmaMismatch,
  MissingTopology,
  Usage,
  // checked conditions
  UnitLawViolation,
  AxiomsFailed,
  NotAPreorder,
  InvalidTopology,
  InconsistentTopology,
  ValidationFailed,
  NoWitnessK,
  InvalidPseudometric,
  CapTooSmall,
  GroupAxiomFailed,
  MonoidAxiomFailed,
  ConditionFailed,
  LaxAxiomFailed,
  LinkingFailed,
  DeltaAxiomFailed,
  SubadditivityFailed,
  FamilyConditionFailed,
  ActionLawFailed,
  NotEndomorphism,
  OutOfDomain,
  Internal,
};

constexpr std::string_view to_string(ErrorCode c) {
  switch (c) {
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::SchemaError: return "SchemaError";
    case ErrorCode::UnknownElement: return "UnknownElement";
    case ErrorCode::TableShape: return "TableShape";
    case ErrorCode::NotClosed: return "NotClosed";
    case ErrorCode::CarrierTooLarge: return "CarrierTooLarge";
    case ErrorCode::MalformedPartialMap: return "MalformedPartialMap";
    case ErrorCode::MagmaMismatch: return "MagmaMismatch";
    case ErrorCode::MissingTopology: return "MissingTopology";
    case ErrorCode::Usage: return "Usage";
    case ErrorCode::UnitLawViolation: return "UnitLawViolation";
    case ErrorCode::AxiomsFailed: return "AxiomsFailed";
    case ErrorCode::NotAPreorder: return "NotAPreorder";
    case ErrorCode::InvalidTopology: return "InvalidTopology";
    case ErrorCode::InconsistentTopology: return "InconsistentTopology";
    case ErrorCode::ValidationFailed: return "ValidationFailed";
    case ErrorCode::NoWitnessK: return "NoWitnessK";
    case ErrorCode::InvalidPseudometric: return "InvalidPseudometric";
    case ErrorCode::CapTooSmall: return "CapTooSmall";
    case ErrorCode::GroupAxiomFailed: return "GroupAxiomFailed";
    case ErrorCode::MonoidAxiomFailed: return "MonoidAxiomFailed";
    case ErrorCode::ConditionFailed: return "ConditionFailed";
    case ErrorCode::LaxAxiomFailed: return "LaxAxiomFailed";
    case ErrorCode::LinkingFailed: return "LinkingFailed";
    case ErrorCode::DeltaAxiomFailed: return "DeltaAxiomFailed";
    case ErrorCode::SubadditivityFailed: return "SubadditivityFailed";
    case ErrorCode::FamilyConditionFailed: return "FamilyConditionFailed";
    case ErrorCode::ActionLawFailed: return "ActionLawFailed";
    case ErrorCode::NotEndomorphism: return "NotEndomorphism";
    case ErrorCode::OutOfDomain: return "OutOfDomain";
    case ErrorCode::Internal: return "Internal";
  }
  return "Unknown";
}

/// True for codes that describe malformed input rather than a checked
/// property that turned out false. The CLI maps these to exit status 2.
constexpr bool is_input_error(ErrorCode c) {
  switch (c) {
    case ErrorCode::ParseError:
    case ErrorCode::SchemaError:
    case ErrorCode::UnknownElement:
    case ErrorCode::TableShape:
    case ErrorCode::NotClosed:
    case ErrorCode::CarrierTooLarge:
    case ErrorCode::MalformedPartialMap:
    case ErrorCode::MagmaMismatch:
    case ErrorCode::MissingTopology:
    case ErrorCode::Usage:
    case ErrorCode::Internal:
      return true;
    default:
      return false;
  }
}

/// Named values that pin down where a check failed, e.g. {{"n","2"},{"x","a"}}.
using Witness = std::vector<std::pair<std::string, std::string>>;

inline std::string format_witness(const Witness& w) {
  std::string out;
  for (const auto& [k, v] : w) {
    if (!out.empty()) out += ", ";
    out += k;
    out += '=';
    out += v;
  }
  return out;
}

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message, Witness witness = {})
      : std::runtime_error(std::string(to_string(code)) + ": " + message),
        code_(code),
        message_(message),
        witness_(std::move(witness)) {}

  ErrorCode code() const noexcept { return code_; }
  const std::string& message() const noexcept { return message_; }
  const Witness& witness() const noexcept { return witness_; }

 private:
  ErrorCode code_;
  std::string message_;
  Witness witness_;
};

struct Violation {
  std::string condition;
  Witness witness;

  bool operator==(const Violation&) const = default;
};

/// Outcome of an exhaustive condition scan. Violations appear in scan order,
/// so the first one is the lexicographically first witness.
struct Report {
  std::vector<Violation> violations;

  bool passed() const { return violations.empty(); }

  bool has(std::string_view condition) const {
    for (const auto& v : violations)
      if (v.condition == condition) return true;
    return false;
  }

  void add(std::string condition, Witness w) {
    violations.push_back({std::move(condition), std::move(w)});
  }

  void append(const Report& other) {
    violations.insert(violations.end(), other.violations.begin(),
                      other.violations.end());
  }
};

}  // namespace ftk
