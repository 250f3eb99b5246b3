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

#include <algorithm>
#include <future>
#include <random>

namespace ofal {

EpsilonSchedule epsilon_schedule(int k, const Rational& eps)
{
    if (k < 2)
        throw ValidationError("epsilon schedule needs k >= 2");
    if (eps <= 0)
        throw ValidationError("epsilon must be positive");
    EpsilonSchedule schedule{k, eps, {}};
    schedule.values.reserve(static_cast<std::size_t>(k));
    const Rational eighth = eps / 8;
    for (int i = 1; i < k; ++i)
        schedule.values.push_back(eighth * pow2(i - k));
    schedule.values.emplace_back(1, 2);
    return schedule;
}

Rational max_generator_eps()
{
    return Rational(1, 2);
}

namespace {

void check_generator_eps(const Rational& eps)
{
    if (eps <= 0 || eps > max_generator_eps())
        throw ValidationError("generator epsilon must lie in (0, 1/2], got " + format_rational(eps));
}

// s_i for the 1-based server index i on the equispaced line.
Rational server_at(int i)
{
    return Rational(i - 1);
}

}  // namespace

RequestSequence gen_theorem1_even(int k, const Rational& eps)
{
    if (k < 2 || k % 2 != 0)
        throw ValidationError("even-k construction needs an even k >= 2, got " + std::to_string(k));
    check_generator_eps(eps);
    const EpsilonSchedule e = epsilon_schedule(k, eps);
    const Rational half(1, 2);

    RequestSequence seq;
    seq.requests.reserve(static_cast<std::size_t>(k));
    for (int j = 1; j <= k / 2; ++j) {
        seq.requests.push_back(server_at(k / 2 + j) - half - e.at(2 * j - 1));
        seq.requests.push_back(server_at(k / 2 - j + 1) - half + e.at(2 * j));
    }
    return seq;
}

RequestSequence gen_theorem1_odd(int k, const Rational& eps)
{
    if (k < 3 || k % 2 == 0)
        throw ValidationError("odd-k construction needs an odd k >= 3, got " + std::to_string(k));
    check_generator_eps(eps);
    const EpsilonSchedule e = epsilon_schedule(k, eps);
    const Rational half(1, 2);

    RequestSequence seq;
    seq.requests.reserve(static_cast<std::size_t>(k));
    const int center = (k - 1) / 2;
    for (int j = 1; j <= (k + 1) / 2; ++j) {
        seq.requests.push_back(server_at(center + j) + half - e.at(2 * j - 1));
        if (j < (k + 1) / 2)
            seq.requests.push_back(server_at(center - j + 1) + half + e.at(2 * j));
    }
    return seq;
}

RequestSequence gen_theorem1(int k, const Rational& eps)
{
    return k % 2 == 0 ? gen_theorem1_even(k, eps) : gen_theorem1_odd(k, eps);
}

RequestSequence lift_sequence(int k, int ell, const RequestSequence& base)
{
    if (k < 1 || ell < 1)
        throw ValidationError("lift needs k >= 1 and ell >= 1");
    if (base.size() > static_cast<std::size_t>(k))
        throw ValidationError("lift base longer than k");
    RequestSequence out;
    out.requests.reserve(static_cast<std::size_t>(k) * static_cast<std::size_t>(ell - 1) + base.size());
    for (int i = 1; i <= k; ++i)
        for (int copy = 1; copy < ell; ++copy)
            out.requests.push_back(server_at(i));
    out.requests.insert(out.requests.end(), base.requests.begin(), base.requests.end());
    return out;
}

namespace {

// Modulo keeps the stream identical across standard libraries, unlike the
// unspecified algorithm behind uniform_int_distribution.
Rational grid_point(std::mt19937_64& rng, const Rational& lo, const Rational& hi)
{
    const std::uint64_t m = rng() % (kRandomGrid + 1);
    return lo + (hi - lo) * Rational(Integer(m), Integer(kRandomGrid));
}

std::uint64_t splitmix64(std::uint64_t x)
{
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

}  // namespace

RequestSequence gen_random(int k, int ell, std::size_t n, std::uint64_t seed, const Rational& lo,
                           const Rational& hi)
{
    if (k < 1 || ell < 1)
        throw ValidationError("random generator needs k >= 1 and ell >= 1");
    if (n > static_cast<std::size_t>(k) * static_cast<std::size_t>(ell))
        throw ValidationError("random generator: n exceeds k*ell");
    if (!(lo < hi))
        throw ValidationError("random generator: lo must be below hi");
    std::mt19937_64 rng(seed);
    RequestSequence seq;
    seq.requests.reserve(n);
    for (std::size_t i = 0; i < n; ++i)
        seq.requests.push_back(grid_point(rng, lo, hi));
    return seq;
}

CompetitiveRatio evaluate_ratio(const Instance& instance, Algorithm alg, const RequestSequence& sequence)
{
    const Trace trace = run_online(alg, instance, sequence);
    const OptimalAssignment opt = solve_optimal(instance, sequence);
    return CompetitiveRatio::of(trace.total(), opt.cost);
}

namespace {

struct Climb {
    RequestSequence best;
    CompetitiveRatio best_ratio = CompetitiveRatio::finite(1);
    CompetitiveRatio start_ratio = CompetitiveRatio::finite(1);
    std::size_t evaluations = 0;
};

Climb climb(const Instance& instance, Algorithm alg, RequestSequence start, std::size_t steps, std::uint64_t seed,
            const Rational& lo, const Rational& hi)
{
    std::mt19937_64 rng(seed);
    Climb out;
    out.start_ratio = evaluate_ratio(instance, alg, start);
    out.best_ratio = out.start_ratio;
    out.best = start;

    RequestSequence current = std::move(start);
    CompetitiveRatio current_ratio = out.best_ratio;
    const std::size_t n = current.size();
    if (n == 0)
        return out;

    for (std::size_t step = 0; step < steps; ++step) {
        RequestSequence candidate = current;
        if (n > 1 && rng() % 4 == 0) {
            std::swap(candidate.requests[rng() % n], candidate.requests[rng() % n]);
        } else {
            Rational& x = candidate.requests[rng() % n];
            const Rational delta = pow2(-static_cast<int>(rng() % 11));
            x = rng() % 2 == 0 ? Rational(x + delta) : Rational(x - delta);
            x = std::clamp(x, lo, hi);
        }
        CompetitiveRatio ratio = evaluate_ratio(instance, alg, candidate);
        ++out.evaluations;
        if (current_ratio < ratio || current_ratio == ratio) {
            if (out.best_ratio < ratio) {
                out.best_ratio = ratio;
                out.best = candidate;
            }
            current = std::move(candidate);
            current_ratio = std::move(ratio);
        }
    }
    return out;
}

}  // namespace

SearchResult search_adversary(int k, int ell, Algorithm alg, const SearchOptions& options)
{
    const Instance instance = make_equispaced_instance(k, ell);
    const Rational lo = options.lo.value_or(Rational(-1));
    const Rational hi = options.hi.value_or(Rational(k));
    if (!(lo < hi))
        throw ValidationError("search range must satisfy lo < hi");
    const std::size_t n = options.initial ? options.initial->size() : instance.total_capacity();
    const std::size_t restarts = std::max<std::size_t>(1, std::min(options.restarts, std::max<std::size_t>(options.budget, 1)));

    std::vector<std::future<Climb>> jobs;
    for (std::size_t t = 0; t < restarts; ++t) {
        const std::uint64_t stream = splitmix64(options.seed ^ splitmix64(t));
        const std::size_t steps = options.budget / restarts + (t < options.budget % restarts ? 1 : 0);
        RequestSequence start;
        if (t == 0 && options.initial) {
            start = *options.initial;
        } else {
            std::mt19937_64 rng(stream);
            for (std::size_t i = 0; i < n; ++i)
                start.requests.push_back(grid_point(rng, lo, hi));
        }
        jobs.push_back(std::async(std::launch::async, climb, std::cref(instance), alg, std::move(start), steps,
                                  splitmix64(stream), std::cref(lo), std::cref(hi)));
    }

    std::vector<Climb> climbs;
    for (auto& job : jobs)
        climbs.push_back(job.get());

    // Restart 0 begins at the initial candidate, so the merged best can
    // never fall below its ratio.
    SearchResult result{climbs.front().best, climbs.front().best_ratio, climbs.front().start_ratio, 0};
    for (const Climb& c : climbs) {
        result.evaluations += c.evaluations;
        if (result.ratio < c.best_ratio ||
            (result.ratio == c.best_ratio && c.best.requests < result.sequence.requests)) {
            result.sequence = c.best;
            result.ratio = c.best_ratio;
        }
    }
    return result;
}

}  // namespace ofal
