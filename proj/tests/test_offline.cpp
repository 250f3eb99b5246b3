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

#include "oracle.hpp"

#include "ofal/adversary.hpp"
#include "ofal/error.hpp"
#include "ofal/offline.hpp"

#include <doctest.h>

#include <random>

using namespace ofal;

namespace {

Rational q(const char* text)
{
    return parse_rational(text);
}

RequestSequence seq(std::initializer_list<const char*> items)
{
    RequestSequence s;
    for (const char* item : items)
        s.requests.push_back(q(item));
    return s;
}

// Random instance on a 1/4 grid with mixed capacities, plus a sequence.
std::pair<Instance, RequestSequence> random_case(std::mt19937_64& rng, std::size_t max_n)
{
    const int k = 1 + static_cast<int>(rng() % 4);
    std::vector<Rational> servers;
    std::vector<int> caps;
    Rational pos = Rational(static_cast<long>(rng() % 5), 4);
    for (int s = 0; s < k; ++s) {
        servers.push_back(pos);
        pos += Rational(1 + static_cast<long>(rng() % 6), 4);
        caps.push_back(1 + static_cast<int>(rng() % 3));
    }
    Instance inst(servers, caps);
    const std::size_t n = rng() % (std::min(max_n, inst.total_capacity()) + 1);
    RequestSequence s;
    for (std::size_t i = 0; i < n; ++i)
        s.requests.push_back(Rational(static_cast<long>(rng() % 49) - 8, 8));
    return {std::move(inst), std::move(s)};
}

}  // namespace

TEST_CASE("brute_force_optimal examples")
{
    const auto two = brute_force_optimal(make_equispaced_instance(2, 1), seq({"79/160", "0"}));
    CHECK(two.cost == q("81/160"));
    CHECK(two.matching == Matching{{{0, 1}, {1, 0}}});

    const auto one = brute_force_optimal(Instance({0}, {1}), seq({"5"}));
    CHECK(one.cost == 5);
    CHECK(one.matching == Matching{{{0, 0}}});

    const auto three = brute_force_optimal(make_equispaced_instance(3, 1), seq({"479/320", "81/160", "2"}));
    CHECK(three.cost == q("321/320"));
    CHECK(three.matching == Matching{{{0, 1}, {1, 0}, {2, 2}}});
}

TEST_CASE("brute_force_optimal breaks ties toward the smallest server vector")
{
    // 1/2 is equidistant from both servers; both orders cost 1/2 + 1/2.
    const auto r = brute_force_optimal(make_equispaced_instance(2, 1), seq({"1/2", "1/2"}));
    CHECK(r.cost == 1);
    CHECK(r.matching == Matching{{{0, 0}, {1, 1}}});
}

TEST_CASE("brute_force_optimal limits")
{
    const Instance inst = make_equispaced_instance(3, 3);
    RequestSequence nine;
    for (int i = 0; i < 9; ++i)
        nine.requests.emplace_back(i % 3);
    CHECK_THROWS_AS(brute_force_optimal(inst, nine), EnumerationLimitError);
    CHECK(brute_force_optimal(inst, nine, 9).cost == 0);
    CHECK_THROWS_AS(brute_force_optimal(make_equispaced_instance(1, 1), seq({"0", "1"})), InfeasibleError);
}

TEST_CASE("solve_optimal examples")
{
    CHECK(solve_optimal(make_equispaced_instance(2, 1), seq({"79/160", "0"})).cost == q("81/160"));
    CHECK(solve_optimal(Instance({0}, {1}), seq({"5"})).cost == 5);
    CHECK(solve_optimal(make_equispaced_instance(3, 1), seq({"479/320", "81/160", "2"})).cost == q("321/320"));
    CHECK(solve_optimal(make_equispaced_instance(2, 2), seq({"0", "1", "79/160", "0"})).cost == q("81/160"));

    const auto empty = solve_optimal(make_equispaced_instance(3, 1), RequestSequence{});
    CHECK(empty.cost == 0);
    CHECK(empty.matching.pairs.empty());

    CHECK_THROWS_AS(solve_optimal(make_equispaced_instance(1, 1), seq({"0", "0"})), InfeasibleError);
}

TEST_CASE("extend_optimal on the odd lower-bound prefix")
{
    OptimalState empty(make_equispaced_instance(3, 1));

    auto first = extend_optimal(empty, q("479/320"));
    CHECK(first.saturated == 1);
    CHECK(first.delta == q("159/320"));
    CHECK(first.state.matching() == Matching{{{0, 1}}});
    CHECK(first.state.usage == std::vector<int>{0, 1, 0});

    auto second = extend_optimal(first.state, q("81/160"));
    CHECK(second.saturated == 2);
    CHECK(second.state.matching() == Matching{{{0, 2}, {1, 1}}});
    CHECK(second.state.usage == std::vector<int>{0, 1, 1});
    CHECK(second.placed == 1);
    REQUIRE(second.moves.size() == 1);
    CHECK(second.moves[0].request == 0);
    CHECK(second.moves[0].from == 1);
    CHECK(second.moves[0].to == 2);
    CHECK(second.state.cost == first.state.cost + second.delta);
    CHECK(second.state.cost == brute_force_optimal(make_equispaced_instance(3, 1), seq({"479/320", "81/160"})).cost);
}

TEST_CASE("augmentation log line")
{
    std::vector<std::string> log;
    solve_optimal(make_equispaced_instance(2, 1), seq({"79/160", "0"}), &log);
    REQUIRE(log.size() == 2);
    CHECK(log[0] == "extend r1=79/160 place s1 saturate s1 delta 79/160 cost 79/160");
    CHECK(log[1] == "extend r2=0 place s1 move r1:s1->s2 saturate s2 delta 1/80 cost 81/160");
}

TEST_CASE("extend_optimal prefers a free server at the request's position")
{
    OptimalState state(make_equispaced_instance(3, 1));
    state = extend_optimal(state, q("1/2")).state;  // goes to s1 (tie, lowest index)
    const auto before = state.assignment;
    const auto step = extend_optimal(state, q("1"));
    CHECK(step.saturated == 1);
    CHECK(step.delta == 0);
    CHECK(step.moves.empty());
    CHECK(std::vector<ServerIndex>(step.state.assignment.begin(), step.state.assignment.end() - 1) == before);

    // Exact hit on a free server even when an equal-cost path ends lower.
    OptimalState s2(make_equispaced_instance(2, 1));
    s2 = extend_optimal(s2, q("1/2")).state;  // s1
    const auto hit = extend_optimal(s2, q("1"));
    CHECK(hit.saturated == 1);
    CHECK(hit.delta == 0);
}

TEST_CASE("extend_optimal with every server full")
{
    OptimalState state(make_equispaced_instance(1, 1));
    state = extend_optimal(state, 0).state;
    CHECK_THROWS_AS(extend_optimal(state, 0), NoFreeServerError);
    try {
        extend_optimal(state, 0);
    } catch (const NoFreeServerError& e) {
        CHECK(std::string(e.what()) == "no free server");
    }
}

TEST_CASE("brute force agrees with the naive reference enumerator")
{
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 150; ++trial) {
        auto [inst, s] = random_case(rng, 6);
        CHECK(brute_force_optimal(inst, s).cost == testing::reference_optimum(inst, s));
    }
}

TEST_CASE("property: solver equals brute force, prefix optimality, monotonicity, single increments")
{
    std::mt19937_64 rng(2024);
    for (int trial = 0; trial < 300; ++trial) {
        auto [inst, s] = random_case(rng, 7);
        const OptimalAssignment brute = brute_force_optimal(inst, s);
        const OptimalAssignment solved = solve_optimal(inst, s);
        REQUIRE(solved.cost == brute.cost);
        CHECK(validate_matching(inst, s, solved.matching).empty());
        CHECK(assignment_cost(inst, s, solved.matching) == solved.cost);

        OptimalState state(inst);
        Rational last = 0;
        RequestSequence prefix;
        for (const Rational& r : s.requests) {
            const auto before = state.usage;
            auto step = extend_optimal(std::move(state), r);
            state = std::move(step.state);
            prefix.requests.push_back(r);

            CHECK(state.cost == brute_force_optimal(inst, prefix).cost);
            CHECK(state.cost >= last);
            CHECK(step.delta >= 0);
            last = state.cost;

            int changed = 0;
            for (ServerIndex x = 0; x < inst.size(); ++x) {
                if (state.usage[x] != before[x]) {
                    ++changed;
                    CHECK(x == step.saturated);
                    CHECK(state.usage[x] == before[x] + 1);
                }
                CHECK(state.usage[x] <= inst.capacity(x));
            }
            CHECK(changed == 1);
            CHECK(validate_matching(inst, prefix, state.matching()).empty());
            CHECK(assignment_cost(inst, prefix, state.matching()) == state.cost);
        }
    }
}

TEST_CASE("solver matches brute force on every lower-bound sequence it can enumerate")
{
    for (int k = 2; k <= 7; ++k) {
        const Instance inst = make_equispaced_instance(k, 1);
        const RequestSequence s = gen_theorem1(k, Rational(1, 10));
        CHECK(solve_optimal(inst, s).cost == testing::reference_optimum(inst, s));
    }
}
