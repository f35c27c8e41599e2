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

#include "stablearn/cli.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <fstream>
#include <map>
#include <ostream>
#include <random>
#include <sstream>

#include <json.hpp>

#include "stablearn/errors.hpp"
#include "stablearn/learner.hpp"
#include "stablearn/oracle.hpp"
#include "stablearn/rng.hpp"
#include "stablearn/statevector.hpp"

namespace stablearn::cli {

namespace {

std::string read_file(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw FormatError("cannot open file: " + path);
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

/// Writes to the path when given, to the stream otherwise.
void write_text(const std::string &text, const std::string &path, std::ostream &out) {
    if (path.empty()) {
        out << text;
        return;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f) {
        throw FormatError("cannot open output file: " + path);
    }
    f << text;
    if (!f) {
        throw FormatError("failed writing output file: " + path);
    }
}

nlohmann::json config_to_json(const LearnerConfig &cfg) {
    return nlohmann::json{
        {"n", cfg.n},
        {"t", cfg.t},
        {"membership_shots", cfg.membership_shots},
        {"estimate_shots", cfg.estimate_shots},
        {"group_sample_budget", cfg.group_sample_budget},
        {"bad_gen_sample_budget", cfg.bad_gen_sample_budget},
        {"pair_budget", cfg.pair_budget},
        {"seed", cfg.seed},
    };
}

nlohmann::json resources_to_json(const LearnResources &res) {
    return nlohmann::json{
        {"xi_samples", res.xi_samples},
        {"xi_tilde_samples", res.xi_tilde_samples},
        {"measurement_shots", res.measurement_shots},
        {"elimination_steps", res.elimination_steps},
    };
}

}  // namespace

DopedCircuit random_doped_circuit(size_t n, size_t t, uint64_t seed) {
    if (n == 0) {
        throw DimensionError("random_doped_circuit: need at least one qubit");
    }
    std::mt19937_64 rng(seed);
    DopedCircuit c(n);
    constexpr GateKind kSingle[] = {GateKind::kH, GateKind::kS, GateKind::kSDag, GateKind::kX,
                                    GateKind::kZ};
    constexpr GateKind kTwo[] = {GateKind::kCNOT, GateKind::kCZ};
    const size_t num_kinds = n >= 2 ? 7 : 5;
    for (size_t i = 0; i < 20 * n; ++i) {
        const uint64_t pick = random_below(rng, num_kinds);
        if (pick < 5) {
            c.append(kSingle[pick], static_cast<uint32_t>(random_below(rng, n)));
        } else {
            const uint32_t q0 = static_cast<uint32_t>(random_below(rng, n));
            uint32_t q1 = static_cast<uint32_t>(random_below(rng, n - 1));
            if (q1 >= q0) {
                ++q1;
            }
            c.append(kTwo[pick - 5], q0, q1);
        }
    }
    for (size_t i = 0; i < t; ++i) {
        const size_t pos = random_below(rng, c.gates.size() + 1);
        const Gate g{GateKind::kT, static_cast<uint32_t>(random_below(rng, n)), 0};
        c.gates.insert(c.gates.begin() + static_cast<ptrdiff_t>(pos), g);
    }
    return c;
}

VerifyResult verify_description(const DopedCircuit &circuit, const DopedDescription &desc) {
    const size_t n = circuit.num_qubits;
    if (n > kMaxDenseTableQubits) {
        throw ResourceError("verify_description: circuit exceeds the dense-table qubit cap");
    }
    if (desc.num_qubits != n) {
        return {false, "description is for " + std::to_string(desc.num_qubits) +
                           " qubits, circuit has " + std::to_string(n)};
    }
    const StateVector psi = run_circuit(circuit);

    // Claimed generator phases first: a flipped sign is the most common
    // defect and deserves a named report.
    for (const SignedPauli &g : desc.generators) {
        const double e = pauli_expectation(psi, g.pauli);
        if (std::abs(e - static_cast<double>(g.sign)) > 1e-9) {
            std::ostringstream msg;
            msg << "generator " << to_text(g) << " has true expectation " << e;
            return {false, msg.str()};
        }
    }

    // Every word's expectation must agree with the description exactly once
    // snapped onto the grid of the circuit's own doping level.
    const size_t t_snap = std::max(desc.t, circuit.t_count());
    const auto table = exact_expectation_table(desc);
    const std::vector<double> truth = all_pauli_expectations(psi);
    const double zero_radius = 0.5 * grid_min_gap(t_snap);
    for (uint64_t key = 0; key < truth.size(); ++key) {
        const double e = truth[key];
        std::optional<GridValue> snapped;
        if (std::abs(e) < zero_radius) {
            snapped = GridValue::zero();
        } else {
            snapped = nearest_grid(e, t_snap);
        }
        if (!snapped) {
            return {false, "true expectation " + std::to_string(e) + " of " +
                               unpack_letters(key, n).letters() + " is off-grid"};
        }
        const auto it = table.find(key);
        const GridValue predicted = it == table.end() ? GridValue::zero() : it->second;
        if (!(*snapped == predicted)) {
            return {false, "expectation mismatch at " + unpack_letters(key, n).letters() +
                               ": described " + predicted.str() + ", true " + snapped->str()};
        }
    }

    const double td = trace_distance(reconstruct_density(desc), density_from_state(psi));
    if (!(td < 1e-8)) {
        std::ostringstream msg;
        msg << "trace distance " << td << " exceeds 1e-8";
        return {false, msg.str()};
    }
    return {true, ""};
}

int cmd_gen(const GenOptions &opt, std::ostream &out, std::ostream &err) {
    if (opt.n < 1 || opt.n > kMaxGenQubits || opt.t > kMaxGenTGates) {
        err << "gen: require 1 <= n <= " << kMaxGenQubits << " and t <= " << kMaxGenTGates
            << "\n";
        return kExitInputError;
    }
    const DopedCircuit c = random_doped_circuit(opt.n, opt.t, opt.seed);
    try {
        write_text(serialize_circuit(c), opt.out_path, out);
    } catch (const FormatError &e) {
        err << "gen: " << e.what() << "\n";
        return kExitInputError;
    }
    return kExitSuccess;
}

int cmd_learn(const LearnOptions &opt, std::ostream &out, std::ostream &err) {
    DopedCircuit circuit;
    LearnerConfig cfg;
    try {
        circuit = parse_circuit(read_file(opt.circuit_path));
        if (opt.algorithm != 1 && opt.algorithm != 2) {
            throw FormatError("algorithm must be 1 or 2");
        }
        cfg = LearnerConfig::defaults(circuit.num_qubits, circuit.t_count(), opt.seed);
        if (opt.shots_m) {
            cfg.membership_shots = *opt.shots_m;
        }
        if (opt.shots_n) {
            cfg.estimate_shots = *opt.shots_n;
        }
        if (opt.group_budget) {
            cfg.group_sample_budget = *opt.group_budget;
        }
        if (opt.bad_gen_budget) {
            cfg.bad_gen_sample_budget = *opt.bad_gen_budget;
        }
        if (opt.pair_budget) {
            cfg.pair_budget = *opt.pair_budget;
        }
    } catch (const std::invalid_argument &e) {
        err << "learn: " << e.what() << "\n";
        return kExitInputError;
    } catch (const ResourceError &e) {
        err << "learn: " << e.what() << "\n";
        return kExitInputError;
    }

    const size_t n = circuit.num_qubits;
    const size_t t = circuit.t_count();
    const auto start = std::chrono::steady_clock::now();
    LearnOutcome outcome;
    try {
        QueryModel q(run_circuit(circuit));
        outcome = opt.algorithm == 1 ? learn_algorithm1(q, n, t, cfg)
                                     : learn_algorithm2(q, n, t, cfg);
    } catch (const ResourceError &e) {
        err << "learn: " << e.what() << "\n";
        return kExitInputError;
    } catch (const std::invalid_argument &e) {
        err << "learn: " << e.what() << "\n";
        return kExitInputError;
    }
    const auto wall_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                             std::chrono::steady_clock::now() - start)
                             .count();

    nlohmann::json j{
        {"algorithm", opt.algorithm},
        {"circuit", opt.circuit_path},
        {"config", config_to_json(cfg)},
        {"description", nlohmann::json::parse(description_to_json(outcome.description))},
        {"resources", resources_to_json(outcome.resources)},
        {"status", status_name(outcome.status)},
    };
    try {
        write_text(j.dump(2) + "\n", opt.out_path, out);
    } catch (const FormatError &e) {
        err << "learn: " << e.what() << "\n";
        return kExitInputError;
    }

    if (!opt.record_path.empty()) {
        // Oracle verdict where the dense comparison is feasible; null marks
        // a success that is too wide to check.
        nlohmann::json verdict;
        if (outcome.status != LearnStatus::kSuccess) {
            verdict = "failed";
        } else if (n <= kMaxDenseTableQubits) {
            verdict = verify_description(circuit, outcome.description).exact ? "exact-match"
                                                                             : "mismatch";
        }
        nlohmann::json record = j;
        record["verdict"] = verdict;
        record["wall_ms"] = wall_ms;  // informational; not covered by determinism
        std::ofstream f(opt.record_path, std::ios::binary | std::ios::app);
        if (!f) {
            err << "learn: cannot open record file: " << opt.record_path << "\n";
            return kExitInputError;
        }
        f << record.dump() << "\n";
    }
    return outcome.status == LearnStatus::kSuccess ? kExitSuccess : kExitBudget;
}

int cmd_verify(const VerifyOptions &opt, std::ostream &out, std::ostream &err) {
    const auto verify_pair = [&](const std::string &circuit_path,
                                 const std::string &description_path) {
        const DopedCircuit circuit = parse_circuit(read_file(circuit_path));
        const DopedDescription desc = description_from_json(read_file(description_path));
        return verify_description(circuit, desc);
    };

    if (opt.batch_path.empty()) {
        VerifyResult res;
        try {
            res = verify_pair(opt.circuit_path, opt.description_path);
        } catch (const std::invalid_argument &e) {
            err << "verify: " << e.what() << "\n";
            return kExitInputError;
        } catch (const ResourceError &e) {
            err << "verify: " << e.what() << "\n";
            return kExitInputError;
        }
        if (res.exact) {
            out << "exact-match\n";
            return kExitSuccess;
        }
        out << "mismatch: " << res.detail << "\n";
        return kExitMismatch;
    }

    size_t total = 0;
    size_t matched = 0;
    try {
        std::istringstream lines(read_file(opt.batch_path));
        std::string line;
        while (std::getline(lines, line)) {
            std::istringstream fields(line);
            std::string circuit_path;
            std::string description_path;
            if (!(fields >> circuit_path)) {
                continue;  // blank line
            }
            std::string extra;
            if (!(fields >> description_path) || (fields >> extra)) {
                throw FormatError("batch manifest line needs exactly two paths: " + line);
            }
            ++total;
            const VerifyResult res = verify_pair(circuit_path, description_path);
            if (res.exact) {
                ++matched;
                out << "exact-match " << circuit_path << " " << description_path << "\n";
            } else {
                out << "mismatch " << circuit_path << " " << description_path << ": "
                    << res.detail << "\n";
            }
        }
        if (total == 0) {
            throw FormatError("batch manifest is empty");
        }
    } catch (const std::invalid_argument &e) {
        err << "verify: " << e.what() << "\n";
        return kExitInputError;
    } catch (const ResourceError &e) {
        err << "verify: " << e.what() << "\n";
        return kExitInputError;
    }
    out << "match-rate " << matched << "/" << total << "\n";
    return matched == total ? kExitSuccess : kExitMismatch;
}

int cmd_sample(const SampleOptions &opt, std::ostream &out, std::ostream &err) {
    try {
        const DopedCircuit circuit = parse_circuit(read_file(opt.circuit_path));
        const StateVector psi = run_circuit(circuit);
        PauliDistribution dist;
        if (opt.which == "xi") {
            dist = exact_xi(psi);
        } else if (opt.which == "xi-tilde") {
            dist = exact_xi_tilde(psi, conjugate_state(psi));
        } else {
            throw FormatError("distribution must be xi or xi-tilde, got: " + opt.which);
        }
        std::mt19937_64 rng(opt.seed);
        std::string text;
        for (uint64_t i = 0; i < opt.count; ++i) {
            text += dist.sample(rng).letters();
            text += "\n";
        }
        write_text(text, opt.out_path, out);
    } catch (const std::invalid_argument &e) {
        err << "sample: " << e.what() << "\n";
        return kExitInputError;
    } catch (const ResourceError &e) {
        err << "sample: " << e.what() << "\n";
        return kExitInputError;
    }
    return kExitSuccess;
}

int cmd_stats(const StatsOptions &opt, std::ostream &out, std::ostream &err) {
    struct Row {
        uint64_t xi_samples = 0;
        uint64_t shots = 0;
        bool success = false;
        bool exact = false;
    };
    std::map<uint64_t, std::vector<Row>> by_t;
    try {
        if (opt.record_paths.empty()) {
            throw FormatError("stats: no record files given");
        }
        for (const std::string &path : opt.record_paths) {
            std::istringstream lines(read_file(path));
            std::string line;
            while (std::getline(lines, line)) {
                if (line.find_first_not_of(" \t\r") == std::string::npos) {
                    continue;
                }
                nlohmann::json rec;
                try {
                    rec = nlohmann::json::parse(line);
                    Row row;
                    const uint64_t t = rec.at("config").at("t").get<uint64_t>();
                    row.xi_samples = rec.at("resources").at("xi_samples").get<uint64_t>();
                    row.shots = rec.at("resources").at("measurement_shots").get<uint64_t>();
                    row.success = rec.at("status").get<std::string>() == "success";
                    row.exact = rec.contains("verdict") && rec.at("verdict").is_string() &&
                                rec.at("verdict").get<std::string>() == "exact-match";
                    by_t[t].push_back(row);
                } catch (const nlohmann::json::exception &e) {
                    throw FormatError("stats: bad record line in " + path + ": " + e.what());
                }
            }
        }
        if (by_t.empty()) {
            throw FormatError("stats: record files contain no records");
        }
    } catch (const std::invalid_argument &e) {
        err << e.what() << "\n";
        return kExitInputError;
    }

    const auto median = [](std::vector<uint64_t> v) {
        std::sort(v.begin(), v.end());
        const size_t h = v.size() / 2;
        return v.size() % 2 == 1 ? static_cast<double>(v[h])
                                 : 0.5 * (static_cast<double>(v[h - 1]) + static_cast<double>(v[h]));
    };
    size_t total = 0;
    for (const auto &[t, rows] : by_t) {
        std::vector<uint64_t> xi;
        std::vector<uint64_t> shots;
        size_t successes = 0;
        size_t exacts = 0;
        for (const Row &r : rows) {
            xi.push_back(r.xi_samples);
            shots.push_back(r.shots);
            successes += r.success ? 1 : 0;
            exacts += r.exact ? 1 : 0;
        }
        total += rows.size();
        out << "t=" << t << " runs=" << rows.size() << " success_rate="
            << static_cast<double>(successes) / static_cast<double>(rows.size())
            << " match_rate=" << static_cast<double>(exacts) / static_cast<double>(rows.size())
            << " median_xi_samples=" << median(xi) << " median_shots=" << median(shots) << "\n";
    }
    out << "total runs=" << total << "\n";
    return kExitSuccess;
}

}  // namespace stablearn::cli
