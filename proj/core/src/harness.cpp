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

#include "ofal/harness.hpp"

#include "ofal/error.hpp"
#include "ofal/offline.hpp"

#include <future>
#include <random>

namespace ofal {

void to_json(json& j, const RatioReport& report)
{
    j = json{{"k", report.k},
             {"algorithm", algorithm_name(report.algorithm)},
             {"alg_total", report.alg_total},
             {"opt_total", report.opt_total},
             {"ratio", report.ratio.str()},
             {"ratio_decimal", report.ratio_decimal}};
    j["ell"] = report.ell ? json(*report.ell) : json(nullptr);
    j["generator"] = report.generator ? json(*report.generator) : json(nullptr);
    if (report.bound)
        j["bound"] = json{{"target", report.bound->bound}, {"pass", report.bound->pass}};
    else
        j["bound"] = nullptr;
}

void from_json(const json& j, RatioReport& report)
{
    report = RatioReport{};
    report.k = j.at("k").get<int>();
    if (!j.at("ell").is_null())
        report.ell = j.at("ell").get<int>();
    if (!j.at("generator").is_null())
        report.generator = j.at("generator").get<GeneratorInfo>();
    report.algorithm = parse_algorithm(j.at("algorithm").get<std::string>());
    report.alg_total = j.at("alg_total").get<Rational>();
    report.opt_total = j.at("opt_total").get<Rational>();
    const auto ratio = j.at("ratio").get<std::string>();
    report.ratio = ratio == "infinite" ? CompetitiveRatio::infinite() : CompetitiveRatio::finite(parse_rational(ratio));
    report.ratio_decimal = j.at("ratio_decimal").get<std::string>();
    if (!j.at("bound").is_null())
        report.bound = BoundCheck{j.at("bound").at("target").get<Rational>(), j.at("bound").at("pass").get<bool>()};
}

namespace {

std::optional<int> shared_capacity(const Instance& instance)
{
    for (int c : instance.capacities())
        if (c != instance.capacity(0))
            return std::nullopt;
    return instance.capacity(0);
}

}  // namespace

RatioReport compute_ratio(const Instance& instance, const RequestSequence& sequence, Algorithm alg,
                          std::optional<Rational> bound, std::optional<GeneratorInfo> generator)
{
    RatioReport report;
    report.k = static_cast<int>(instance.size());
    report.ell = shared_capacity(instance);
    report.generator = std::move(generator);
    report.algorithm = alg;
    report.alg_total = run_online(alg, instance, sequence).total();
    report.opt_total = solve_optimal(instance, sequence).cost;
    report.ratio = CompetitiveRatio::of(report.alg_total, report.opt_total);
    report.ratio_decimal = report.ratio.decimal();
    if (bound)
        report.bound = BoundCheck{*bound, report.ratio.at_least(*bound)};
    return report;
}

std::vector<RatioReport> sweep(int k_from, int k_to, int ell, const Rational& eps, Algorithm alg)
{
    if (k_from < 2)
        throw ValidationError("sweep needs k_from >= 2");
    if (k_from > k_to)
        throw ValidationError("sweep range is empty (k_from > k_to)");
    if (ell < 1)
        throw ValidationError("sweep needs ell >= 1");

    std::vector<std::future<RatioReport>> rows;
    for (int k = k_from; k <= k_to; ++k) {
        rows.push_back(std::async(std::launch::async, [k, ell, eps, alg] {
            const RequestSequence base = gen_theorem1(k, eps);
            const RequestSequence seq = ell > 1 ? lift_sequence(k, ell, base) : base;
            GeneratorInfo info{"thm1", k, ell, eps, std::nullopt, std::nullopt, std::nullopt};
            return compute_ratio(make_equispaced_instance(k, ell), seq, alg, Rational(k + 1) - eps, info);
        }));
    }
    std::vector<RatioReport> out;
    out.reserve(rows.size());
    for (auto& row : rows)
        out.push_back(row.get());
    return out;
}

void write_csv(std::ostream& out, const std::vector<RatioReport>& reports)
{
    out << kCsvHeader << '\n';
    for (const RatioReport& r : reports) {
        const std::string eps = r.generator && r.generator->eps ? format_rational(*r.generator->eps) : "";
        out << r.k << ',' << (r.ell ? std::to_string(*r.ell) : "") << ',' << eps << ','
            << algorithm_name(r.algorithm) << ',' << format_rational(r.alg_total) << ','
            << format_rational(r.opt_total) << ',' << r.ratio.str() << ',' << r.ratio_decimal << ','
            << (r.bound ? format_rational(r.bound->bound) : "") << ','
            << (r.bound ? (r.bound->pass ? "true" : "false") : "") << '\n';
    }
}

IncrementCheck check_single_increments(const Instance& instance, const RequestSequence& sequence)
{
    IncrementCheck check;
    auto loads = [&](const OptimalState& st) {
        std::vector<int> load(instance.size(), 0);
        for (const Pair& p : st.matching().pairs)
            ++load.at(p.server);
        return load;
    };

    OptimalState state(instance);
    std::vector<int> before = loads(state);
    for (const Rational& r : sequence.requests) {
        AugmentationResult step = extend_optimal(std::move(state), r);
        state = std::move(step.state);
        const std::vector<int> after = loads(state);
        ++check.steps;

        std::size_t grown = 0;
        bool other_change = false;
        for (ServerIndex s = 0; s < after.size(); ++s) {
            if (after[s] == before[s] + 1)
                ++grown;
            else if (after[s] != before[s])
                other_change = true;
        }
        if (grown != 1 || other_change || after[step.saturated] != before[step.saturated] + 1) {
            check.failure = "step " + std::to_string(check.steps) + " (request " + format_rational(r) +
                            ") did not grow exactly one server by one";
            return check;
        }
        before = after;
    }
    return check;
}

void to_json(json& j, const OracleSummary& summary)
{
    j = json{{"trials", summary.trials}, {"passed", summary.passed}, {"ok", summary.ok()}};
    if (summary.first_failure) {
        const OracleFailure& f = *summary.first_failure;
        j["first_failure"] = json{{"trial", f.trial}, {"instance", f.instance}, {"sequence", f.sequence},
                                  {"reason", f.reason}};
    } else {
        j["first_failure"] = nullptr;
    }
}

namespace {

struct Trial {
    Instance instance;
    RequestSequence sequence;
};

// Positions on a 1/8 grid (requests on 1/16) so exact ties, coincident
// request/server positions and midpoints all show up regularly.
Trial random_trial(std::mt19937_64& rng, std::size_t max_n)
{
    const int k = 1 + static_cast<int>(rng() % 4);
    std::vector<Rational> servers;
    std::vector<int> caps;
    const bool equispaced = rng() % 2 == 0;
    Rational pos = Rational(static_cast<long>(rng() % 9) - 4, 8);
    for (int s = 0; s < k; ++s) {
        if (equispaced) {
            servers.emplace_back(s);
        } else {
            servers.push_back(pos);
            pos += Rational(1 + static_cast<long>(rng() % 12), 8);
        }
        caps.push_back(1 + static_cast<int>(rng() % 3));
    }
    Instance instance(std::move(servers), std::move(caps));

    const std::size_t cap = std::min(max_n, instance.total_capacity());
    const std::size_t n = rng() % (cap + 1);
    const Rational lo = instance.servers().front() - 1;
    const Rational span = instance.servers().back() + 1 - lo;
    RequestSequence seq;
    for (std::size_t i = 0; i < n; ++i)
        seq.requests.push_back(lo + span * Rational(Integer(rng() % 65), Integer(64)));
    return Trial{std::move(instance), std::move(seq)};
}

}  // namespace

OracleSummary oracle_check(std::size_t trials, std::size_t max_n, std::uint64_t seed)
{
    if (max_n > kDefaultEnumerationLimit)
        throw ValidationError("oracle max_n " + std::to_string(max_n) + " exceeds the brute-force limit " +
                              std::to_string(kDefaultEnumerationLimit));
    std::mt19937_64 rng(seed);
    OracleSummary summary;
    for (std::size_t t = 0; t < trials; ++t) {
        Trial trial = random_trial(rng, max_n);
        ++summary.trials;

        std::string reason;
        const OptimalAssignment brute = brute_force_optimal(trial.instance, trial.sequence);
        const OptimalAssignment solved = solve_optimal(trial.instance, trial.sequence);
        const auto violations = validate_matching(trial.instance, trial.sequence, solved.matching);
        if (solved.cost != brute.cost) {
            reason = "solver cost " + format_rational(solved.cost) + " != brute force " + format_rational(brute.cost);
        } else if (!violations.empty() || solved.matching.pairs.size() != trial.sequence.size()) {
            reason = "solver returned an invalid or partial matching";
        } else if (assignment_cost(trial.instance, trial.sequence, solved.matching) != solved.cost) {
            reason = "solver cost disagrees with its own matching";
        } else if (const IncrementCheck inc = check_single_increments(trial.instance, trial.sequence); !inc.ok()) {
            reason = *inc.failure;
        }

        if (reason.empty())
            ++summary.passed;
        else if (!summary.first_failure)
            summary.first_failure = OracleFailure{t, trial.instance, trial.sequence, reason};
    }
    return summary;
}

}  // namespace ofal
