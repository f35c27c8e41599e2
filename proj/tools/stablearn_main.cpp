// Copyright 2025 The stablearn Authors
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

#include <iostream>

#include <CLI11.hpp>

#include "stablearn/cli.hpp"

int main(int argc, char **argv) {
    using namespace stablearn::cli;

    CLI::App app{"stablearn: simulate and learn T-doped stabilizer states"};
    app.require_subcommand(1);

    GenOptions gen;
    CLI::App *gen_cmd = app.add_subcommand("gen", "Generate a random doped circuit");
    gen_cmd->add_option("--n", gen.n, "Number of qubits")->required();
    gen_cmd->add_option("--t", gen.t, "Number of T gates");
    gen_cmd->add_option("--seed", gen.seed, "RNG seed");
    gen_cmd->add_option("--out", gen.out_path, "Output circuit file (default stdout)");

    LearnOptions learn;
    CLI::App *learn_cmd = app.add_subcommand("learn", "Learn a description of a circuit's state");
    learn_cmd->add_option("circuit", learn.circuit_path, "Circuit file")->required();
    learn_cmd->add_option("--algorithm", learn.algorithm, "Learning algorithm (1 or 2)");
    learn_cmd->add_option("--seed", learn.seed, "RNG seed");
    learn_cmd->add_option("--shots-M", learn.shots_m, "Shots per membership test");
    learn_cmd->add_option("--shots-N", learn.shots_n, "Shots per expectation estimate");
    learn_cmd->add_option("--budget-group", learn.group_budget, "Group-recovery sample budget");
    learn_cmd->add_option("--budget-bad-gen", learn.bad_gen_budget, "Coset-hunt sample budget");
    learn_cmd->add_option("--budget-pairs", learn.pair_budget, "Two-copy pair budget");
    learn_cmd->add_option("--out", learn.out_path, "Outcome JSON file (default stdout)");
    learn_cmd->add_option("--record", learn.record_path, "Append an experiment record (JSONL)");

    VerifyOptions verify;
    CLI::App *verify_cmd =
        app.add_subcommand("verify", "Check a description against the exact state");
    verify_cmd->add_option("circuit", verify.circuit_path, "Circuit file");
    verify_cmd->add_option("description", verify.description_path, "Description JSON file");
    verify_cmd->add_option("--batch", verify.batch_path,
                           "Manifest with one 'circuit description' pair per line");

    SampleOptions sample;
    CLI::App *sample_cmd = app.add_subcommand("sample", "Draw Bell-measurement samples");
    sample_cmd->add_option("circuit", sample.circuit_path, "Circuit file")->required();
    sample_cmd->add_option("--which", sample.which, "Distribution: xi or xi-tilde");
    sample_cmd->add_option("--count", sample.count, "Number of samples");
    sample_cmd->add_option("--seed", sample.seed, "RNG seed");
    sample_cmd->add_option("--out", sample.out_path, "Output file (default stdout)");

    StatsOptions stats;
    CLI::App *stats_cmd = app.add_subcommand("stats", "Summarize experiment records per t");
    stats_cmd->add_option("records", stats.record_paths, "Record JSONL files")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e);
        return code == 0 ? kExitSuccess : kExitInputError;
    }

    try {
        if (gen_cmd->parsed()) {
            return cmd_gen(gen, std::cout, std::cerr);
        }
        if (learn_cmd->parsed()) {
            return cmd_learn(learn, std::cout, std::cerr);
        }
        if (verify_cmd->parsed()) {
            if (verify.batch_path.empty() &&
                (verify.circuit_path.empty() || verify.description_path.empty())) {
                std::cerr << "verify: need a circuit and a description, or --batch\n";
                return kExitInputError;
            }
            return cmd_verify(verify, std::cout, std::cerr);
        }
        if (sample_cmd->parsed()) {
            return cmd_sample(sample, std::cout, std::cerr);
        }
        if (stats_cmd->parsed()) {
            return cmd_stats(stats, std::cout, std::cerr);
        }
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUnexpected;
    }
    return kExitUnexpected;
}
