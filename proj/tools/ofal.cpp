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

// ofal: command-line front end for generating adversarial sequences, running
// online algorithms and computing exact competitive ratios.
//
// Exit codes: 0 all checks pass, 1 a bound or oracle check failed,
// 2 usage or input error.

#include "ofal/adversary.hpp"
#include "ofal/error.hpp"
#include "ofal/harness.hpp"
#include "ofal/offline.hpp"
#include "ofal/online.hpp"
#include "ofal/serialize.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <string>

using namespace ofal;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;

std::optional<Rational> optional_rational(const std::string& text)
{
    if (text.empty())
        return std::nullopt;
    return parse_rational(text);
}

struct GenArgs {
    std::string kind;
    int k = 0;
    int ell = 1;
    std::string eps;
    std::optional<std::size_t> n;
    std::uint64_t seed = 0;
    std::string lo;
    std::string hi;
    std::string out;
    std::string instance_out;
};

int run_gen(const GenArgs& a)
{
    SequenceFile file;
    GeneratorInfo info;
    info.kind = a.kind;
    info.k = a.k;
    info.ell = a.ell;
    info.eps = optional_rational(a.eps);

    if (a.kind == "thm1") {
        if (!info.eps)
            throw ValidationError("--eps is required for --kind thm1");
        const RequestSequence base = gen_theorem1(a.k, *info.eps);
        file.sequence = a.ell > 1 ? lift_sequence(a.k, a.ell, base) : base;
    } else {
        info.seed = a.seed;
        info.lo = optional_rational(a.lo).value_or(Rational(-1));
        info.hi = optional_rational(a.hi).value_or(Rational(a.k));
        const std::size_t n = a.n.value_or(static_cast<std::size_t>(a.k) * static_cast<std::size_t>(a.ell));
        file.sequence = gen_random(a.k, a.ell, n, a.seed, *info.lo, *info.hi);
    }
    file.generator = info;
    write_json_file(a.out, sequence_file_json(file));
    if (!a.instance_out.empty())
        write_json_file(a.instance_out, json(make_equispaced_instance(a.k, a.ell)));
    std::cout << "wrote " << file.sequence.size() << " requests to " << a.out << '\n';
    return kExitOk;
}

struct RunArgs {
    std::string alg;
    std::string instance;
    std::string seq;
    std::string trace;
    bool log = false;
};

int run_run(const RunArgs& a)
{
    const Algorithm alg = parse_algorithm(a.alg);
    const Instance instance = read_json_file(a.instance).get<Instance>();
    const RequestSequence sequence = parse_sequence_file(read_json_file(a.seq)).sequence;

    if (a.log) {
        std::vector<std::string> lines;
        solve_optimal(instance, sequence, &lines);
        for (const auto& line : lines)
            std::cerr << line << '\n';
    }
    const Trace trace = run_online(alg, instance, sequence);
    if (a.trace.empty()) {
        std::cout << json(trace).dump(2) << '\n';
    } else {
        write_json_file(a.trace, json(trace));
        std::cout << algorithm_name(alg) << " total " << format_rational(trace.total()) << '\n';
    }
    return kExitOk;
}

struct RatioArgs {
    std::string alg;
    std::string seq;
    std::optional<int> k;
    std::optional<int> ell;
    std::string bound;
};

int run_ratio(const RatioArgs& a)
{
    const Algorithm alg = parse_algorithm(a.alg);
    const SequenceFile file = parse_sequence_file(read_json_file(a.seq));
    if (!a.k && !file.generator)
        throw ValidationError("--k is required when the sequence file carries no generator metadata");
    const int k = a.k ? *a.k : file.generator->k;
    const int ell = a.ell.value_or(file.generator ? file.generator->ell : 1);

    const RatioReport report =
        compute_ratio(make_equispaced_instance(k, ell), file.sequence, alg, optional_rational(a.bound), file.generator);
    std::cout << json(report).dump(2) << '\n';
    return report.bound && !report.bound->pass ? kExitCheckFailed : kExitOk;
}

struct SweepArgs {
    std::string alg = "perm";
    int k_from = 2;
    int k_to = 2;
    int ell = 1;
    std::string eps = kDefaultSweepEps;
    std::string csv;
};

int run_sweep(const SweepArgs& a)
{
    const auto rows = sweep(a.k_from, a.k_to, a.ell, parse_rational(a.eps), parse_algorithm(a.alg));
    bool all_pass = true;
    std::cout << std::left << std::setw(4) << "k" << std::setw(5) << "ell" << std::setw(16) << "ratio"
              << std::setw(12) << "bound" << "pass\n";
    for (const RatioReport& row : rows) {
        all_pass = all_pass && row.bound && row.bound->pass;
        std::cout << std::setw(4) << row.k << std::setw(5) << a.ell << std::setw(16) << row.ratio_decimal
                  << std::setw(12) << format_rational(row.bound->bound) << (row.bound->pass ? "yes" : "NO") << '\n';
    }
    if (!a.csv.empty()) {
        std::ofstream out(a.csv);
        if (!out)
            throw ValidationError("cannot write " + a.csv);
        write_csv(out, rows);
    }
    return all_pass ? kExitOk : kExitCheckFailed;
}

struct OracleArgs {
    std::size_t trials = 200;
    std::size_t max_n = 7;
    std::uint64_t seed = 42;
};

int run_oracle(const OracleArgs& a)
{
    const OracleSummary summary = oracle_check(a.trials, a.max_n, a.seed);
    std::cout << json(summary).dump(2) << '\n';
    return summary.ok() ? kExitOk : kExitCheckFailed;
}

struct SearchArgs {
    std::string alg = "perm";
    int k = 2;
    int ell = 1;
    std::size_t budget = 10000;
    std::uint64_t seed = 0;
    std::size_t restarts = 4;
    std::string initial;
    std::string out;
};

int run_search(const SearchArgs& a)
{
    SearchOptions opts;
    opts.budget = a.budget;
    opts.seed = a.seed;
    opts.restarts = a.restarts;
    if (!a.initial.empty())
        opts.initial = parse_sequence_file(read_json_file(a.initial)).sequence;
    const Algorithm alg = parse_algorithm(a.alg);
    const SearchResult found = search_adversary(a.k, a.ell, alg, opts);

    GeneratorInfo info{"search", a.k, a.ell, std::nullopt, a.seed, std::nullopt, std::nullopt};
    json j{{"label", "empirical"},
           {"algorithm", algorithm_name(alg)},
           {"ratio", found.ratio.str()},
           {"ratio_decimal", found.ratio.decimal()},
           {"initial_ratio", found.initial_ratio.str()},
           {"evaluations", found.evaluations},
           {"sequence", sequence_file_json(SequenceFile{found.sequence, info})}};
    if (!a.out.empty())
        write_json_file(a.out, sequence_file_json(SequenceFile{found.sequence, info}));
    std::cout << j.dump(2) << '\n';
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Online facility assignment on a line: exact competitive-ratio experiments"};
    app.require_subcommand(1);

    GenArgs gen;
    auto* gen_cmd = app.add_subcommand("gen", "Generate a request sequence");
    gen_cmd->add_option("--kind", gen.kind, "thm1 or random")->required()->check(CLI::IsMember({"thm1", "random"}));
    gen_cmd->add_option("--k", gen.k, "Number of servers")->required();
    gen_cmd->add_option("--ell", gen.ell, "Capacity of every server")->default_val(1);
    gen_cmd->add_option("--eps", gen.eps, "Perturbation P/Q (thm1)");
    gen_cmd->add_option("--n", gen.n, "Number of requests (random; default k*ell)");
    gen_cmd->add_option("--seed", gen.seed, "Seed (random)");
    gen_cmd->add_option("--lo", gen.lo, "Lower end of the request range (random; default -1)");
    gen_cmd->add_option("--hi", gen.hi, "Upper end of the request range (random; default k)");
    gen_cmd->add_option("--out", gen.out, "Sequence JSON file")->required();
    gen_cmd->add_option("--instance-out", gen.instance_out, "Also write the equispaced instance JSON here");

    RunArgs run;
    auto* run_cmd = app.add_subcommand("run", "Run an online algorithm and print its trace");
    run_cmd->add_option("--alg", run.alg, "perm or greedy")->required();
    run_cmd->add_option("--instance", run.instance, "Instance JSON file")->required();
    run_cmd->add_option("--seq", run.seq, "Sequence JSON file")->required();
    run_cmd->add_option("--trace", run.trace, "Write the trace here instead of standard output");
    run_cmd->add_flag("--log", run.log, "Print the offline augmentation steps on standard error");

    RatioArgs ratio;
    auto* ratio_cmd = app.add_subcommand("ratio", "Exact ALG/OPT for one sequence on the equispaced instance");
    ratio_cmd->add_option("--alg", ratio.alg, "perm or greedy")->required();
    ratio_cmd->add_option("--seq", ratio.seq, "Sequence JSON file")->required();
    ratio_cmd->add_option("--k", ratio.k, "Number of servers (default: from the file's generator metadata)");
    ratio_cmd->add_option("--ell", ratio.ell, "Capacity (default: from metadata, else 1)");
    ratio_cmd->add_option("--bound", ratio.bound, "Check ratio >= P/Q; exit 1 if not");

    SweepArgs sw;
    auto* sweep_cmd = app.add_subcommand("sweep", "Lower-bound sequences for a range of k");
    sweep_cmd->add_option("--alg", sw.alg, "perm or greedy")->default_val("perm");
    sweep_cmd->add_option("--k-from", sw.k_from, "First k")->required();
    sweep_cmd->add_option("--k-to", sw.k_to, "Last k")->required();
    sweep_cmd->add_option("--ell", sw.ell, "Capacity")->default_val(1);
    sweep_cmd->add_option("--eps", sw.eps, "Perturbation P/Q")->default_val(kDefaultSweepEps);
    sweep_cmd->add_option("--csv", sw.csv, "CSV output file");

    OracleArgs oracle;
    auto* oracle_cmd = app.add_subcommand("oracle-check", "Compare the solver against brute force");
    oracle_cmd->add_option("--trials", oracle.trials, "Number of random trials")->required();
    oracle_cmd->add_option("--max-n", oracle.max_n, "Largest sequence length")->required();
    oracle_cmd->add_option("--seed", oracle.seed, "Seed")->required();

    SearchArgs search;
    auto* search_cmd = app.add_subcommand("search", "Hill-climb for a high ALG/OPT sequence (empirical)");
    search_cmd->add_option("--alg", search.alg, "perm or greedy")->default_val("perm");
    search_cmd->add_option("--k", search.k, "Number of servers")->required();
    search_cmd->add_option("--ell", search.ell, "Capacity")->default_val(1);
    search_cmd->add_option("--budget", search.budget, "Candidate evaluations")->default_val(10000);
    search_cmd->add_option("--seed", search.seed, "Seed");
    search_cmd->add_option("--restarts", search.restarts, "Independent restarts")->default_val(4);
    search_cmd->add_option("--initial", search.initial, "Sequence JSON to start from");
    search_cmd->add_option("--out", search.out, "Write the best sequence here");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (*gen_cmd)
            return run_gen(gen);
        if (*run_cmd)
            return run_run(run);
        if (*ratio_cmd)
            return run_ratio(ratio);
        if (*sweep_cmd)
            return run_sweep(sw);
        if (*oracle_cmd)
            return run_oracle(oracle);
        if (*search_cmd)
            return run_search(search);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const json::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}
