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

#include "ofal/model.hpp"
#include "ofal/online.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace ofal {

/// Provenance of a generated sequence, stored next to it on disk.
struct GeneratorInfo {
    std::string kind;  ///< "thm1", "random" or "search"
    int k = 0;
    int ell = 1;
    std::optional<Rational> eps;
    std::optional<std::uint64_t> seed;
    std::optional<Rational> lo;
    std::optional<Rational> hi;

    friend bool operator==(const GeneratorInfo&, const GeneratorInfo&) = default;
};

/// Perturbations for the lower-bound sequences on k equispaced servers:
/// eps_i = (eps/8) * 2^(i-k) for i < k, and eps_k = 1/2.
struct EpsilonSchedule {
    int k;
    Rational eps;
    std::vector<Rational> values;  // values[i-1] holds eps_i

    const Rational& at(int i) const { return values.at(static_cast<std::size_t>(i - 1)); }
};

/// Throws ValidationError unless k >= 2 and eps > 0.
EpsilonSchedule epsilon_schedule(int k, const Rational& eps);

/// Largest eps the lower-bound generators accept.
Rational max_generator_eps();

/// Even-k lower-bound sequence of length k against the permutation algorithm.
/// Requires k even, k >= 2, 0 < eps <= 1/2.
RequestSequence gen_theorem1_even(int k, const Rational& eps);

/// Odd-k lower-bound sequence of length k. Requires k odd, k >= 3, 0 < eps <= 1/2.
RequestSequence gen_theorem1_odd(int k, const Rational& eps);

/// Dispatches on the parity of k.
RequestSequence gen_theorem1(int k, const Rational& eps);

/// Prepends (ell - 1) requests exactly on each server 0, 1, ..., k-1 in
/// ascending order, then appends `base`. Requires |base| <= k and ell >= 1.
RequestSequence lift_sequence(int k, int ell, const RequestSequence& base);

/// n requests on the grid lo + (hi - lo) * m / kRandomGrid, m uniform in
/// [0, kRandomGrid], from a seeded mt19937_64. Requires n <= k*ell, lo < hi.
inline constexpr std::uint64_t kRandomGrid = 1024;
RequestSequence gen_random(int k, int ell, std::size_t n, std::uint64_t seed, const Rational& lo,
                           const Rational& hi);

struct SearchOptions {
    std::size_t budget = 0;       ///< total candidate evaluations
    std::uint64_t seed = 0;
    std::size_t restarts = 4;     ///< independent local searches, run concurrently
    /// Starting point of the first restart; random when empty.
    std::optional<RequestSequence> initial;
    /// Request positions are kept inside [lo, hi]; defaults to [-1, k].
    std::optional<Rational> lo;
    std::optional<Rational> hi;
};

struct SearchResult {
    RequestSequence sequence;
    CompetitiveRatio ratio;
    CompetitiveRatio initial_ratio;
    std::size_t evaluations = 0;
};

/// ALG/OPT of one sequence on the equispaced (k, ell) instance.
CompetitiveRatio evaluate_ratio(const Instance& instance, Algorithm alg, const RequestSequence& sequence);

/// Hill climbing on request positions maximizing ALG/OPT. Empirical only:
/// the result is a witness, never a bound. Deterministic for a fixed seed
/// regardless of scheduling.
SearchResult search_adversary(int k, int ell, Algorithm alg, const SearchOptions& options);

}  // namespace ofal
