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

#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "stablearn/circuit.hpp"
#include "stablearn/description.hpp"

namespace stablearn::cli {

// Process exit codes shared by all subcommands.
inline constexpr int kExitSuccess = 0;
inline constexpr int kExitUnexpected = 1;
inline constexpr int kExitMismatch = 2;
inline constexpr int kExitBudget = 3;
inline constexpr int kExitInputError = 4;

/// Limits accepted by the circuit generator.
inline constexpr size_t kMaxGenQubits = 12;
inline constexpr size_t kMaxGenTGates = 12;

/// Deterministic random instance: 20n gates drawn uniformly from the
/// Clifford set, then exactly t T gates spliced in at random positions.
DopedCircuit random_doped_circuit(size_t n, size_t t, uint64_t seed);

struct VerifyResult {
    bool exact = false;
    std::string detail;  ///< empty on exact match, names the offender otherwise
};

/// Compares a description against the dense ground truth of the circuit:
/// every one of the 4^n expectations must match as an exact grid value, the
/// claimed generator signs must hold, and the reconstructed density matrix
/// must sit within trace distance 1e-8 of the true state. n <= 10.
VerifyResult verify_description(const DopedCircuit &circuit, const DopedDescription &desc);

struct GenOptions {
    size_t n = 0;
    size_t t = 0;
    uint64_t seed = 1;
    std::string out_path;  ///< empty writes to the stream
};

struct LearnOptions {
    std::string circuit_path;
    int algorithm = 1;
    uint64_t seed = 1;
    std::optional<uint64_t> shots_m;
    std::optional<uint64_t> shots_n;
    std::optional<uint64_t> group_budget;
    std::optional<uint64_t> bad_gen_budget;
    std::optional<uint64_t> pair_budget;
    std::string out_path;     ///< outcome JSON; empty writes to the stream
    std::string record_path;  ///< append-only JSONL experiment log; empty disables
};

struct VerifyOptions {
    std::string circuit_path;
    std::string description_path;
    std::string batch_path;  ///< manifest of "circuit description" lines; overrides the pair
};

struct SampleOptions {
    std::string circuit_path;
    std::string which = "xi";  ///< "xi" or "xi-tilde"
    uint64_t count = 1;
    uint64_t seed = 1;
    std::string out_path;  ///< empty writes to the stream
};

struct StatsOptions {
    std::vector<std::string> record_paths;
};

int cmd_gen(const GenOptions &opt, std::ostream &out, std::ostream &err);
int cmd_learn(const LearnOptions &opt, std::ostream &out, std::ostream &err);
int cmd_verify(const VerifyOptions &opt, std::ostream &out, std::ostream &err);
int cmd_sample(const SampleOptions &opt, std::ostream &out, std::ostream &err);
int cmd_stats(const StatsOptions &opt, std::ostream &out, std::ostream &err);

}  // namespace stablearn::cli
