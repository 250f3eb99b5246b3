// Copyright 2026 The ofal Authors
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

#pragma once

#include "ofal/adversary.hpp"
#include "ofal/model.hpp"
#include "ofal/online.hpp"
#include "ofal/serialize.hpp"

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace ofal {

struct BoundCheck {
    Rational bound;
    bool pass;

    friend bool operator==(const BoundCheck&, const BoundCheck&) = default;
};

/// Exact ALG/OPT of one run. `ratio_decimal` is for people; comparisons use
/// `ratio` only.
struct RatioReport {
    int k = 0;
    /// Shared capacity; empty when capacities differ between servers.
    std::optional<int> ell;
    std::optional<GeneratorInfo> generator;
    Algorithm algorithm = Algorithm::perm;
    Rational alg_total;
    Rational opt_total;
    CompetitiveRatio ratio = CompetitiveRatio::finite(1);
    std::string ratio_decimal;
    std::optional<BoundCheck> bound;

    friend bool operator==(const RatioReport&, const RatioReport&) = default;
};

void to_json(json& j, const RatioReport& report);
void from_json(const json& j, RatioReport& report);

/// Runs `alg` and the exact offline optimum on the same input. When `bound`
/// is given, the report records whether ratio >= bound.
RatioReport compute_ratio(const Instance& instance, const RequestSequence& sequence, Algorithm alg,
                          std::optional<Rational> bound = std::nullopt,
                          std::optional<GeneratorInfo> generator = std::nullopt);

/// One report per k in [k_from, k_to] on the lower-bound sequence for that
/// parity (lifted when ell > 1), each checked against k + 1 - eps.
/// Rows are computed concurrently and returned in ascending k.
std::vector<RatioReport> sweep(int k_from, int k_to, int ell, const Rational& eps, Algorithm alg);

inline constexpr const char* kDefaultSweepEps = "1/100";

/// CSV header and one row per report; see kCsvHeader for the columns.
inline constexpr const char* kCsvHeader =
    "k,ell,eps,alg,alg_cost_exact,opt_cost_exact,ratio_exact,ratio_decimal,bound_exact,pass";
void write_csv(std::ostream& out, const std::vector<RatioReport>& reports);

struct IncrementCheck {
    std::size_t steps = 0;
    std::optional<std::string> failure;

    bool ok() const noexcept { return !failure.has_value(); }
};

/// Feeds `sequence` through extend_optimal and confirms that each step grows
/// exactly one server's load by one. Loads are recounted from the matchings
/// rather than read from the solver's own counters.
IncrementCheck check_single_increments(const Instance& instance, const RequestSequence& sequence);

struct OracleFailure {
    std::size_t trial;
    Instance instance;
    RequestSequence sequence;
    std::string reason;
};

struct OracleSummary {
    std::size_t trials = 0;
    std::size_t passed = 0;
    std::optional<OracleFailure> first_failure;

    bool ok() const noexcept { return passed == trials; }
};

void to_json(json& j, const OracleSummary& summary);

/// Random instances (equispaced or not, mixed capacities) and sequences with
/// n <= max_n; compares solve_optimal against brute_force_optimal exactly and
/// checks single increments. Throws ValidationError if max_n exceeds the
/// brute-force limit.
OracleSummary oracle_check(std::size_t trials, std::size_t max_n, std::uint64_t seed);

}  // namespace ofal
