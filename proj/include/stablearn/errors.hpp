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

#include <stdexcept>
#include <string>

namespace stablearn {

/** Operands of an operation have incompatible sizes. */
struct DimensionError : std::invalid_argument {
    explicit DimensionError(const std::string &msg) : std::invalid_argument(msg) {}
};

/** A text or JSON payload does not parse under the strict grammar. */
struct FormatError : std::invalid_argument {
    explicit FormatError(const std::string &msg) : std::invalid_argument(msg) {}
};

/** A request exceeds a hard size cap (qubit count, grid level, ...). */
struct ResourceError : std::runtime_error {
    explicit ResourceError(const std::string &msg) : std::runtime_error(msg) {}
};

/** A generator set is not an independent commuting family. */
struct InvalidGroupError : std::domain_error {
    explicit InvalidGroupError(const std::string &msg) : std::domain_error(msg) {}
};

/** A tableau or description violates its structural constraints. */
struct StructureError : std::domain_error {
    explicit StructureError(const std::string &msg) : std::domain_error(msg) {}
};

/** A gate kind is not allowed in this context. */
struct UnsupportedGateError : std::invalid_argument {
    explicit UnsupportedGateError(const std::string &msg) : std::invalid_argument(msg) {}
};

/** Two inputs that must describe the same object disagree. */
struct ConsistencyError : std::runtime_error {
    explicit ConsistencyError(const std::string &msg) : std::runtime_error(msg) {}
};

}  // namespace stablearn
