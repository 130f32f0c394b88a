// Copyright 2026 The AHP Engine Authors
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

namespace ahp {

enum class Errc {
  // pcm
  NonSquare,
  NonPositiveEntry,
  ReciprocityViolation,
  BadDiagonal,
  DimensionMismatch,
  EmptyInput,
  MissingPair,
  DuplicatePair,
  OffScaleJudgment,
  UnknownCriterion,
  // eigen
  NoConvergence,
  Inconsistent,
  DimensionOutOfTable,
  // hierarchy
  DuplicateCriterionId,
  EmptyCriterionSet,
  DuplicateAlternative,
  InvalidCriterion,
  // scoring
  ZeroStorage,
  EmptyComposition,
  InvalidComposition,
  EmptyList,
  NonPositiveDensity,
  AlreadyNormalized,
  NotNormalized,
  CriteriaMismatch,
  AlternativeMismatch,
  WeightOutOfRange,
  // io
  ParseError,
  SchemaVersionUnsupported,
  IdReferenceUnknown,
  IoFailure,
  // service
  UnknownSession,
  IncompleteJudgments,
  NoScoreData,
};

constexpr std::string_view to_string(Errc code) noexcept {
  switch (code) {
    case Errc::NonSquare: return "NonSquare";
    case Errc::NonPositiveEntry: return "NonPositiveEntry";
    case Errc::ReciprocityViolation: return "ReciprocityViolation";
    case Errc::BadDiagonal: return "BadDiagonal";
    case Errc::DimensionMismatch: return "DimensionMismatch";
    case Errc::EmptyInput: return "EmptyInput";
    case Errc::MissingPair: return "MissingPair";
    case Errc::DuplicatePair: return "DuplicatePair";
    case Errc::OffScaleJudgment: return "OffScaleJudgment";
    case Errc::UnknownCriterion: return "UnknownCriterion";
    case Errc::NoConvergence: return "NoConvergence";
    case Errc::Inconsistent: return "Inconsistent";
    case Errc::DimensionOutOfTable: return "DimensionOutOfTable";
    case Errc::DuplicateCriterionId: return "DuplicateCriterionId";
    case Errc::EmptyCriterionSet: return "EmptyCriterionSet";
    case Errc::DuplicateAlternative: return "DuplicateAlternative";
    case Errc::InvalidCriterion: return "InvalidCriterion";
    case Errc::ZeroStorage: return "ZeroStorage";
    case Errc::EmptyComposition: return "EmptyComposition";
    case Errc::InvalidComposition: return "InvalidComposition";
    case Errc::EmptyList: return "EmptyList";
    case Errc::NonPositiveDensity: return "NonPositiveDensity";
    case Errc::AlreadyNormalized: return "AlreadyNormalized";
    case Errc::NotNormalized: return "NotNormalized";
    case Errc::CriteriaMismatch: return "CriteriaMismatch";
    case Errc::AlternativeMismatch: return "AlternativeMismatch";
    case Errc::WeightOutOfRange: return "WeightOutOfRange";
    case Errc::ParseError: return "ParseError";
    case Errc::SchemaVersionUnsupported: return "SchemaVersionUnsupported";
    case Errc::IdReferenceUnknown: return "IdReferenceUnknown";
    case Errc::IoFailure: return "IoFailure";
    case Errc::UnknownSession: return "UnknownSession";
    case Errc::IncompleteJudgments: return "IncompleteJudgments";
    case Errc::NoScoreData: return "NoScoreData";
  }
  return "Unknown";
}

/// Every failure raised by the library. The message always starts with the
/// code name so that logs and problem-details responses stay greppable.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& detail)
      : std::runtime_error(std::string(to_string(code)) + ": " + detail),
        code_(code),
        detail_(detail) {}

  Errc code() const noexcept { return code_; }
  const std::string& detail() const noexcept { return detail_; }

 private:
  Errc code_;
  std::string detail_;
};

}  // namespace ahp
