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

#include "ofal/rational.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace ofal {

// Server and request indices are 0-based everywhere in the library. The JSON
// and CSV encodings shift them to 1-based (see serialize.hpp).
using ServerIndex = std::size_t;
using RequestIndex = std::size_t;

/// Servers on a line with per-server capacities.
///
/// Positions are strictly increasing and every capacity is at least one;
/// the constructor enforces both.
class Instance {
public:
    Instance(std::vector<Rational> servers, std::vector<int> capacities);

    std::size_t size() const noexcept { return servers_.size(); }
    const Rational& position(ServerIndex s) const { return servers_.at(s); }
    int capacity(ServerIndex s) const { return capacities_.at(s); }
    const std::vector<Rational>& servers() const noexcept { return servers_; }
    const std::vector<int>& capacities() const noexcept { return capacities_; }
    std::size_t total_capacity() const noexcept { return total_capacity_; }

    /// True for servers at 0, 1, ..., k-1 with one shared capacity.
    bool is_equispaced() const;

    friend bool operator==(const Instance&, const Instance&) = default;

private:
    std::vector<Rational> servers_;
    std::vector<int> capacities_;
    std::size_t total_capacity_ = 0;
};

/// Servers at 0, 1, ..., k-1, each with capacity `ell`.
Instance make_equispaced_instance(int k, int ell);

struct RequestSequence {
    std::vector<Rational> requests;

    std::size_t size() const noexcept { return requests.size(); }
    bool empty() const noexcept { return requests.empty(); }
    const Rational& operator[](RequestIndex i) const { return requests[i]; }

    friend bool operator==(const RequestSequence&, const RequestSequence&) = default;
};

struct Pair {
    RequestIndex request;
    ServerIndex server;

    friend bool operator==(const Pair&, const Pair&) = default;
};

struct Matching {
    std::vector<Pair> pairs;

    friend bool operator==(const Matching&, const Matching&) = default;
};

/// Returns one message per violated matching invariant; empty means valid.
std::vector<std::string> validate_matching(const Instance& instance, const RequestSequence& sequence,
                                           const Matching& matching);

/// Sum of |r - s| over the pairs. Throws ValidationError if the matching is invalid.
Rational assignment_cost(const Instance& instance, const RequestSequence& sequence, const Matching& matching);

struct Step {
    RequestIndex request;
    ServerIndex server;
    Rational cost;

    friend bool operator==(const Step&, const Step&) = default;
};

/// Per-request costs of an online run and their running total.
class Trace {
public:
    void append(RequestIndex request, ServerIndex server, Rational cost);

    const std::vector<Step>& steps() const noexcept { return steps_; }
    const Rational& total() const noexcept { return total_; }
    std::size_t size() const noexcept { return steps_.size(); }

    /// The trace as a matching (request i paired with its chosen server).
    Matching matching() const;

    friend bool operator==(const Trace&, const Trace&) = default;

private:
    std::vector<Step> steps_;
    Rational total_ = 0;
};

/// ALG/OPT with the conventions for OPT = 0: ratio 1 when ALG = 0 too,
/// infinite otherwise.
class CompetitiveRatio {
public:
    static CompetitiveRatio of(const Rational& alg, const Rational& opt);
    static CompetitiveRatio infinite() { return CompetitiveRatio(std::nullopt); }
    static CompetitiveRatio finite(Rational value) { return CompetitiveRatio(std::move(value)); }

    bool is_infinite() const noexcept { return !value_.has_value(); }
    /// Precondition: !is_infinite().
    const Rational& value() const { return *value_; }

    /// "p/q" or "infinite".
    std::string str() const;
    std::string decimal(int significant = 10) const;

    bool at_least(const Rational& bound) const { return is_infinite() || *value_ >= bound; }

    friend bool operator==(const CompetitiveRatio&, const CompetitiveRatio&) = default;
    friend bool operator<(const CompetitiveRatio& a, const CompetitiveRatio& b)
    {
        if (a.is_infinite())
            return false;
        return b.is_infinite() || *a.value_ < *b.value_;
    }

private:
    explicit CompetitiveRatio(std::optional<Rational> value) : value_(std::move(value)) {}

    std::optional<Rational> value_;
};

}  // namespace ofal
