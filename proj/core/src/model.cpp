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

#include "ofal/model.hpp"

#include "ofal/error.hpp"


namespace ofal {

Instance::Instance(std::vector<Rational> servers, std::vector<int> capacities)
    : servers_(std::move(servers)), capacities_(std::move(capacities))
{
    if (servers_.empty())
        throw ValidationError("instance needs at least one server");
    if (servers_.size() != capacities_.size())
        throw ValidationError("instance has " + std::to_string(servers_.size()) + " servers but " +
                              std::to_string(capacities_.size()) + " capacities");
    for (std::size_t s = 0; s < servers_.size(); ++s) {
        if (capacities_[s] < 1)
            throw ValidationError("capacity of server " + std::to_string(s + 1) + " must be positive");
        if (s > 0 && !(servers_[s - 1] < servers_[s]))
            throw ValidationError("server positions must be strictly increasing");
        total_capacity_ += static_cast<std::size_t>(capacities_[s]);
    }
}

bool Instance::is_equispaced() const
{
    for (std::size_t s = 0; s < servers_.size(); ++s)
        if (servers_[s] != Rational(static_cast<long>(s)) || capacities_[s] != capacities_.front())
            return false;
    return true;
}

Instance make_equispaced_instance(int k, int ell)
{
    if (k < 1)
        throw ValidationError("k must be at least 1");
    if (ell < 1)
        throw ValidationError("ell must be at least 1");
    std::vector<Rational> servers;
    servers.reserve(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i)
        servers.emplace_back(i);
    return Instance(std::move(servers), std::vector<int>(static_cast<std::size_t>(k), ell));
}

std::vector<std::string> validate_matching(const Instance& instance, const RequestSequence& sequence,
                                           const Matching& matching)
{
    std::vector<std::string> violations;
    std::vector<int> load(instance.size(), 0);
    std::vector<bool> seen(sequence.size(), false);
    for (const Pair& p : matching.pairs) {
        bool in_range = true;
        if (p.request >= sequence.size()) {
            violations.push_back("unknown request " + std::to_string(p.request + 1));
            in_range = false;
        }
        if (p.server >= instance.size()) {
            violations.push_back("unknown server " + std::to_string(p.server + 1));
            in_range = false;
        }
        if (!in_range)
            continue;
        if (seen[p.request])
            violations.push_back("duplicate request " + std::to_string(p.request + 1));
        seen[p.request] = true;
        if (++load[p.server] == instance.capacity(p.server) + 1)
            violations.push_back("capacity exceeded at server " + std::to_string(p.server + 1));
    }
    return violations;
}

Rational assignment_cost(const Instance& instance, const RequestSequence& sequence, const Matching& matching)
{
    auto violations = validate_matching(instance, sequence, matching);
    if (!violations.empty()) {
        std::string message = "invalid matching:";
        for (const auto& v : violations)
            message += " " + v + ";";
        message.pop_back();
        throw ValidationError(message);
    }
    Rational total = 0;
    for (const Pair& p : matching.pairs)
        total += abs_diff(sequence[p.request], instance.position(p.server));
    return total;
}

void Trace::append(RequestIndex request, ServerIndex server, Rational cost)
{
    total_ += cost;
    steps_.push_back(Step{request, server, std::move(cost)});
}

Matching Trace::matching() const
{
    Matching m;
    m.pairs.reserve(steps_.size());
    for (const Step& step : steps_)
        m.pairs.push_back(Pair{step.request, step.server});
    return m;
}

CompetitiveRatio CompetitiveRatio::of(const Rational& alg, const Rational& opt)
{
    if (opt > 0)
        return CompetitiveRatio(Rational(alg / opt));
    if (alg == 0)
        return CompetitiveRatio(Rational(1));
    return infinite();
}

std::string CompetitiveRatio::str() const
{
    return is_infinite() ? std::string("infinite") : format_rational(*value_);
}

std::string CompetitiveRatio::decimal(int significant) const
{
    return is_infinite() ? std::string("inf") : format_decimal(*value_, significant);
}

}  // namespace ofal
