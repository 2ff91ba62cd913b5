// Copyright 2026 The deplocus Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef DEPLOCUS_SURVEY_HPP
#define DEPLOCUS_SURVEY_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "deplocus/invariants.hpp"

namespace deplocus {

/// Parameters of a genericity survey over plane vector fields.
struct SurveyOptions {
  std::uint64_t seed = 0;
  std::uint32_t p = 2;
  std::uint32_t degree = 1;
  std::uint64_t samples = 0;
  /// Resample until some component has an exact degree-`degree` term.
  bool exact_degree = false;
  std::uint32_t degree_cap = kDefaultDegreeCap;
};

/// Aggregated verdict counts. dep_zero + invariant_found + provably_none +
/// capacity_exceeded = samples; capacity_exceeded is reported outside the
/// fixed CSV columns.
struct SurveyRow {
  std::uint64_t seed = 0;
  std::uint32_t p = 0;
  std::uint32_t n = 2;
  std::uint32_t degree = 0;
  std::uint64_t samples = 0;
  std::uint64_t dep_zero = 0;
  std::uint64_t invariant_found = 0;
  std::uint64_t provably_none = 0;
  std::uint64_t div_nonzero = 0;
  std::uint64_t capacity_exceeded = 0;
};

struct SurveySample {
  std::uint64_t index = 0;
  bool div_nonzero = false;
  std::string outcome;
};

/// Samples `samples` plane fields with independent uniform coefficients on
/// every monomial of degree <= `degree`, classifies each, and aggregates.
/// Deterministic for a fixed seed; per-sample capacity failures are recorded,
/// not fatal.
SurveyRow run_survey(const SurveyOptions& options,
                     std::vector<SurveySample>* per_sample = nullptr);

std::string survey_csv_header();
std::string survey_csv_row(const SurveyRow& row);

}  // namespace deplocus

#endif  // DEPLOCUS_SURVEY_HPP
