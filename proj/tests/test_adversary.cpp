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

#include "ofal/adversary.hpp"
#include "ofal/error.hpp"
#include "ofal/offline.hpp"

#include <doctest.h>

using namespace ofal;

namespace {

Rational q(const char* text)
{
    return parse_rational(text);
}

}  // namespace

TEST_CASE("epsilon_schedule")
{
    const auto four = epsilon_schedule(4, q("1/10"));
    CHECK(four.at(1) == q("1/640"));
    CHECK(four.at(2) == q("1/320"));
    CHECK(four.at(3) == q("1/160"));
    CHECK(four.at(4) == q("1/2"));
    CHECK(epsilon_schedule(3, q("1/10")).at(2) == q("1/160"));

    CHECK_THROWS_AS(epsilon_schedule(1, q("1/10")), ValidationError);
    CHECK_THROWS_AS(epsilon_schedule(4, 0), ValidationError);
    CHECK_THROWS_AS(epsilon_schedule(4, q("-1/10")), ValidationError);
}

TEST_CASE("property: epsilon schedule is strictly increasing below eps/8 < 1/2")
{
    for (int k = 2; k <= 40; ++k) {
        for (const char* eps_text : {"1/100", "1/10", "1/2", "3"}) {
            const Rational eps = q(eps_text);
            const auto e = epsilon_schedule(k, eps);
            REQUIRE(e.values.size() == static_cast<std::size_t>(k));
            CHECK(e.at(1) > 0);
            for (int i = 1; i + 1 < k; ++i)
                CHECK(e.at(i) < e.at(i + 1));
            CHECK(e.at(k - 1) < eps / 8);
            CHECK(eps / 8 < e.at(k));
        }
    }
}

TEST_CASE("gen_theorem1_even")
{
    CHECK(gen_theorem1_even(2, q("1/10")).requests == std::vector<Rational>{q("79/160"), 0});
    CHECK(gen_theorem1_even(4, q("1/10")).requests ==
          std::vector<Rational>{q("3/2") - q("1/640"), q("1/2") + q("1/320"), q("5/2") - q("1/160"), 0});
    for (int k = 2; k <= 20; k += 2)
        CHECK(gen_theorem1_even(k, q("1/100")).requests.back() == 0);

    CHECK_THROWS_AS(gen_theorem1_even(3, q("1/10")), ValidationError);
    CHECK_THROWS_AS(gen_theorem1_even(0, q("1/10")), ValidationError);
    CHECK_THROWS_AS(gen_theorem1_even(2, q("3/4")), ValidationError);
    CHECK_THROWS_AS(gen_theorem1_even(2, 0), ValidationError);
}

TEST_CASE("gen_theorem1_odd")
{
    CHECK(gen_theorem1_odd(3, q("1/10")).requests == std::vector<Rational>{q("479/320"), q("81/160"), 2});
    for (int k = 3; k <= 21; k += 2)
        CHECK(gen_theorem1_odd(k, q("1/100")).requests.back() == k - 1);

    const auto five = gen_theorem1_odd(5, q("1/10")).requests;
    REQUIRE(five.size() == 5);
    // Odd positions step right of the center server s_3 = 2, even ones left.
    CHECK(five[0] > 2);
    CHECK(five[1] < 2);
    CHECK(five[2] > five[0]);
    CHECK(five[3] < five[1]);
    CHECK(five[4] == 4);

    CHECK_THROWS_AS(gen_theorem1_odd(4, q("1/10")), ValidationError);
    CHECK_THROWS_AS(gen_theorem1_odd(1, q("1/10")), ValidationError);
}

TEST_CASE("property: lower-bound sequences have k requests inside (-1/2, k-1/2]")
{
    for (int k = 2; k <= 16; ++k) {
        for (const char* eps_text : {"1/1000", "1/100", "1/2"}) {
            const auto s = gen_theorem1(k, q(eps_text));
            REQUIRE(s.size() == static_cast<std::size_t>(k));
            for (const Rational& r : s.requests) {
                CHECK(r > q("-1/2"));
                CHECK(r <= Rational(k) - q("1/2"));
            }
        }
    }
}

TEST_CASE("lift_sequence")
{
    const RequestSequence base{{q("79/160"), 0}};
    CHECK(lift_sequence(2, 2, base).requests == std::vector<Rational>{0, 1, q("79/160"), 0});
    CHECK(lift_sequence(2, 1, base) == base);

    const auto lifted = lift_sequence(3, 3, gen_theorem1_odd(3, q("1/10")));
    REQUIRE(lifted.size() == 9);
    CHECK(std::vector<Rational>(lifted.requests.begin(), lifted.requests.begin() + 6) ==
          std::vector<Rational>{0, 0, 1, 1, 2, 2});

    CHECK_THROWS_AS(lift_sequence(1, 2, base), ValidationError);
    CHECK_THROWS_AS(lift_sequence(2, 0, base), ValidationError);
}

TEST_CASE("lifted prefix costs nothing offline")
{
    for (int k = 2; k <= 6; ++k)
        for (int ell = 2; ell <= 4; ++ell) {
            const auto prefix = lift_sequence(k, ell, RequestSequence{});
            CHECK(prefix.size() == static_cast<std::size_t>(k * (ell - 1)));
            CHECK(solve_optimal(make_equispaced_instance(k, ell), prefix).cost == 0);
        }
}

TEST_CASE("gen_random")
{
    CHECK(gen_random(3, 2, 0, 1, 0, 2).empty());
    const auto a = gen_random(3, 2, 6, 42, q("-1/2"), q("5/2"));
    const auto b = gen_random(3, 2, 6, 42, q("-1/2"), q("5/2"));
    CHECK(a == b);
    CHECK(a != gen_random(3, 2, 6, 43, q("-1/2"), q("5/2")));
    for (const Rational& r : gen_random(4, 3, 12, 9, q("-1"), q("4")).requests) {
        CHECK(r >= -1);
        CHECK(r <= 4);
    }
    CHECK_THROWS_AS(gen_random(2, 1, 3, 1, 0, 1), ValidationError);
    CHECK_THROWS_AS(gen_random(2, 1, 1, 1, 1, 1), ValidationError);
}

TEST_CASE("search_adversary contracts")
{
    const RequestSequence initial = gen_theorem1_even(2, q("1/10"));
    SearchOptions none;
    none.initial = initial;
    const SearchResult still = search_adversary(2, 1, Algorithm::perm, none);
    CHECK(still.sequence == initial);
    CHECK(still.ratio == CompetitiveRatio::finite(q("239/81")));
    CHECK(still.evaluations == 0);

    SearchOptions some;
    some.initial = gen_random(3, 1, 3, 5, -1, 3);
    some.budget = 400;
    some.seed = 17;
    const SearchResult r1 = search_adversary(3, 1, Algorithm::greedy, some);
    CHECK_FALSE(r1.ratio < r1.initial_ratio);
    CHECK(r1.ratio == evaluate_ratio(make_equispaced_instance(3, 1), Algorithm::greedy, r1.sequence));
    CHECK(r1.evaluations == 400);

    const SearchResult r2 = search_adversary(3, 1, Algorithm::greedy, some);
    CHECK(r2.sequence == r1.sequence);
    CHECK(r2.ratio == r1.ratio);

    for (const Rational& r : r1.sequence.requests) {
        CHECK(r >= -1);
        CHECK(r <= 3);
    }
}
