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
#include "ofal/offline.hpp"

#include <memory>
#include <string>
#include <string_view>
#include <vector>

namespace ofal {

enum class Algorithm { perm, greedy };

std::string_view algorithm_name(Algorithm alg);
/// Accepts "perm" or "greedy"; throws ValidationError otherwise.
Algorithm parse_algorithm(std::string_view name);

/// An online assigner: built from an instance, fed one request at a time,
/// irrevocably matching each to a free server.
///
/// Subclasses only choose the server. Capacity bookkeeping and the trace live
/// here so every algorithm is held to the same rules.
class OnlineAssigner {
public:
    explicit OnlineAssigner(Instance instance);
    virtual ~OnlineAssigner() = default;

    OnlineAssigner(const OnlineAssigner&) = default;
    OnlineAssigner& operator=(const OnlineAssigner&) = default;

    virtual std::string_view name() const = 0;

    /// Assigns the next request and returns the chosen server.
    /// Throws NoFreeServerError if every server is full.
    ServerIndex assign(const Rational& request);

    const Instance& instance() const noexcept { return instance_; }
    const Trace& trace() const noexcept { return trace_; }
    int remaining(ServerIndex s) const { return remaining_.at(s); }
    bool is_free(ServerIndex s) const { return remaining_.at(s) > 0; }

protected:
    /// Pick a free server for `request`. Called only when one exists.
    virtual ServerIndex choose(const Rational& request) = 0;

private:
    Instance instance_;
    std::vector<int> remaining_;
    Trace trace_;
};

/// Nearest free server; distance ties go to the lower index.
class GreedyAssigner final : public OnlineAssigner {
public:
    using OnlineAssigner::OnlineAssigner;
    std::string_view name() const override { return "greedy"; }

protected:
    ServerIndex choose(const Rational& request) override;
};

/// The permutation algorithm: keeps an optimal offline assignment of the
/// prefix and sends each request to the server whose usage count grows when
/// that optimum is extended.
class PermutationAssigner final : public OnlineAssigner {
public:
    /// With `cross_check`, each step also re-solves the prefix from scratch
    /// and throws std::logic_error if the incremental optimum drifted.
    explicit PermutationAssigner(Instance instance, bool cross_check = false);

    std::string_view name() const override { return "perm"; }

    const OptimalState& optimal() const noexcept { return optimal_; }
    /// Saturated server of every extend step so far, in order.
    const std::vector<ServerIndex>& saturated() const noexcept { return saturated_; }

protected:
    ServerIndex choose(const Rational& request) override;

private:
    OptimalState optimal_;
    std::vector<ServerIndex> saturated_;
    bool cross_check_;
};

std::unique_ptr<OnlineAssigner> make_assigner(Algorithm alg, const Instance& instance);

/// Runs `alg` over the whole sequence. Throws InfeasibleError up front if the
/// sequence is longer than the total capacity.
Trace run_online(Algorithm alg, const Instance& instance, const RequestSequence& sequence);

}  // namespace ofal
