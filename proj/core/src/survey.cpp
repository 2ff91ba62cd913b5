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

#include "deplocus/survey.hpp"

#include <random>
#include <sstream>

namespace deplocus {

namespace {

// Coefficients are drawn with rng() % p rather than a distribution object:
// mt19937_64 output is pinned by the standard, so the stream (and the CSV)
// is byte-identical across toolchains.
Polynomial random_polynomial(const ContextPtr& ctx, std::uint32_t degree,
                             std::mt19937_64& rng) {
  std::uint32_t p = ctx->p();
  PolyBuilder b(ctx);
  std::vector<std::uint32_t> e(ctx->nvars(), 0);
  while (true) {
    std::uint32_t total = 0;
    for (auto v : e) total += v;
    if (total <= degree)
      b.add(Monomial(e), static_cast<std::uint32_t>(rng() % p));
    std::size_t i = 0;
    while (i < e.size() && e[i] == degree) e[i++] = 0;
    if (i == e.size()) break;
    ++e[i];
  }
  return b.build();
}

}  // namespace

SurveyRow run_survey(const SurveyOptions& options,
                     std::vector<SurveySample>* per_sample) {
  ContextPtr ctx = make_context(options.p, {"x", "y"}, options.degree_cap);
  std::mt19937_64 rng(options.seed);

  SurveyRow row;
  row.seed = options.seed;
  row.p = options.p;
  row.n = 2;
  row.degree = options.degree;
  row.samples = options.samples;

  for (std::uint64_t s = 0; s < options.samples; ++s) {
    VectorField X(ctx, {random_polynomial(ctx, options.degree, rng),
                        random_polynomial(ctx, options.degree, rng)});
    if (options.exact_degree) {
      while (X.degree() != static_cast<int>(options.degree))
        X = VectorField(ctx, {random_polynomial(ctx, options.degree, rng),
                              random_polynomial(ctx, options.degree, rng)});
    }

    SurveySample record{s, !divergence(X).is_zero(), ""};
    if (record.div_nonzero) ++row.div_nonzero;
    try {
      AnalysisReport report = analyze(X);
      switch (report.outcome) {
        case AnalysisReport::Outcome::kFirstIntegralExists:
          ++row.dep_zero;
          record.outcome = "dep_zero";
          break;
        case AnalysisReport::Outcome::kInvariantHypersurface:
          ++row.invariant_found;
          record.outcome = "invariant_found";
          break;
        default:
          ++row.provably_none;
          record.outcome = "provably_none";
          break;
      }
    } catch (const CapacityError&) {
      ++row.capacity_exceeded;
      record.outcome = "capacity_exceeded";
    }
    if (per_sample) per_sample->push_back(std::move(record));
  }
  return row;
}

std::string survey_csv_header() {
  return "seed,p,n,degree,samples,dep_zero,invariant_found,provably_none,"
         "div_nonzero";
}

std::string survey_csv_row(const SurveyRow& row) {
  std::ostringstream os;
  os << row.seed << ',' << row.p << ',' << row.n << ',' << row.degree << ','
     << row.samples << ',' << row.dep_zero << ',' << row.invariant_found << ','
     << row.provably_none << ',' << row.div_nonzero;
  return os.str();
}

}  // namespace deplocus
