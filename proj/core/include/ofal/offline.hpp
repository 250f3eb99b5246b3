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

#include <cstddef>
#include <string>
#include <vector>

namespace ofal {

/// Optimal offline assignment of a processed prefix, kept incrementally.
///
/// `assignment[i]` is the server request i is matched to in the current
/// optimal matching M_i; `usage[s]` counts how often s appears in it.
struct OptimalState {
    Instance instance;
    std::vector<Rational> requests;
    std::vector<ServerIndex> assignment;
    std::vector<int> usage;
    Rational cost = 0;

    explicit OptimalState(Instance inst);

    bool has_free_server() const;
    Matching matching() const;
    RequestSequence sequence() const { return RequestSequence{requests}; }
};

/// A previously matched request moved to another server by an augmentation.
struct Reassignment {
    RequestIndex request;
    ServerIndex from;
    ServerIndex to;
};

struct AugmentationResult {
    OptimalState state;
    /// The one server whose usage count grew by one.
    ServerIndex saturated;
    /// New optimal cost minus previous optimal cost.
    Rational delta;
    /// Server the new request itself is matched to in the new optimum.
    ServerIndex placed;
    std::vector<Reassignment> moves;
};

/// Adds `request` to the prefix and restores optimality by augmenting along a
/// minimum-cost alternating path from the request to a free server.
///
/// Ties between equal-cost paths go to the lowest free server index, except
/// that a free server at exactly the request's position always wins.
/// Throws NoFreeServerError when every server is full.
AugmentationResult extend_optimal(OptimalState state, const Rational& request);

/// One-line text rendering of an augmentation step, 1-based indices:
///   extend r7=81/160 place s2 move r3:s2->s3 saturate s3 delta 319/320 cost 321/320
std::string format_augmentation(const AugmentationResult& result);

struct OptimalAssignment {
    Rational cost;
    Matching matching;
};

inline constexpr std::size_t kDefaultEnumerationLimit = 8;

/// Exhaustive search over all capacity-respecting assignments. Among optimal
/// assignments returns the lexicographically smallest server vector in
/// request order. Throws EnumerationLimitError when n > limit.
OptimalAssignment brute_force_optimal(const Instance& instance, const RequestSequence& sequence,
                                      std::size_t limit = kDefaultEnumerationLimit);

/// Exact min-cost capacitated assignment by successive shortest augmenting
/// paths. Throws InfeasibleError when n exceeds the total capacity.
/// If `log` is non-null one format_augmentation line per request is appended.
OptimalAssignment solve_optimal(const Instance& instance, const RequestSequence& sequence,
                                std::vector<std::string>* log = nullptr);

}  // namespace ofal
