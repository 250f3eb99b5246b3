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

#include "ofal/online.hpp"

#include "ofal/error.hpp"

#include <optional>
#include <stdexcept>

namespace ofal {

std::string_view algorithm_name(Algorithm alg)
{
    switch (alg) {
    case Algorithm::perm:
        return "perm";
    case Algorithm::greedy:
        return "greedy";
    }
    return "unknown";
}

Algorithm parse_algorithm(std::string_view name)
{
    if (name == "perm")
        return Algorithm::perm;
    if (name == "greedy")
        return Algorithm::greedy;
    throw ValidationError("unknown algorithm '" + std::string(name) + "'");
}

OnlineAssigner::OnlineAssigner(Instance instance)
    : instance_(std::move(instance)), remaining_(instance_.capacities())
{
}

ServerIndex OnlineAssigner::assign(const Rational& request)
{
    bool any_free = false;
    for (int left : remaining_)
        any_free = any_free || left > 0;
    if (!any_free)
        throw NoFreeServerError();

    const ServerIndex s = choose(request);
    if (s >= instance_.size() || remaining_[s] == 0)
        throw std::logic_error(std::string(name()) + " chose a full or unknown server");
    --remaining_[s];
    trace_.append(trace_.size(), s, abs_diff(request, instance_.position(s)));
    return s;
}

ServerIndex GreedyAssigner::choose(const Rational& request)
{
    std::optional<ServerIndex> best;
    Rational best_distance;
    for (ServerIndex s = 0; s < instance().size(); ++s) {
        if (!is_free(s))
            continue;
        Rational d = abs_diff(request, instance().position(s));
        if (!best || d < best_distance) {
            best = s;
            best_distance = std::move(d);
        }
    }
    return *best;
}

PermutationAssigner::PermutationAssigner(Instance instance, bool cross_check)
    : OnlineAssigner(instance), optimal_(std::move(instance)), cross_check_(cross_check)
{
}

ServerIndex PermutationAssigner::choose(const Rational& request)
{
    const std::vector<int> before = optimal_.usage;
    AugmentationResult step = extend_optimal(optimal_, request);

    if (cross_check_) {
        const OptimalState& after = step.state;
        std::size_t grown = 0;
        for (ServerIndex s = 0; s < before.size(); ++s) {
            if (after.usage[s] == before[s] + 1 && s == step.saturated)
                ++grown;
            else if (after.usage[s] != before[s])
                throw std::logic_error("extend step changed usage of a server other than the saturated one");
        }
        if (grown != 1)
            throw std::logic_error("extend step did not grow the saturated server by one");
        const RequestSequence prefix = after.sequence();
        const Rational fresh = prefix.size() <= kDefaultEnumerationLimit
                                   ? brute_force_optimal(instance(), prefix).cost
                                   : solve_optimal(instance(), prefix).cost;
        if (fresh != after.cost || assignment_cost(instance(), prefix, after.matching()) != after.cost)
            throw std::logic_error("incremental optimum drifted from a from-scratch solve");
    }

    optimal_ = std::move(step.state);
    saturated_.push_back(step.saturated);
    return step.saturated;
}

std::unique_ptr<OnlineAssigner> make_assigner(Algorithm alg, const Instance& instance)
{
    switch (alg) {
    case Algorithm::perm:
        return std::make_unique<PermutationAssigner>(instance);
    case Algorithm::greedy:
        return std::make_unique<GreedyAssigner>(instance);
    }
    throw std::logic_error("unhandled algorithm");
}

Trace run_online(Algorithm alg, const Instance& instance, const RequestSequence& sequence)
{
    if (sequence.size() > instance.total_capacity())
        throw InfeasibleError("infeasible: " + std::to_string(sequence.size()) + " requests exceed total capacity " +
                              std::to_string(instance.total_capacity()));
    auto assigner = make_assigner(alg, instance);
    for (const Rational& r : sequence.requests)
        assigner->assign(r);
    return assigner->trace();
}

}  // namespace ofal
