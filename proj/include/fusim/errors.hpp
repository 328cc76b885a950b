// Copyright 2026 The fusim Authors
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

#ifndef FUSIM_ERRORS_HPP
#define FUSIM_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace fusim {

struct SimError : std::runtime_error {
  explicit SimError(const std::string& msg) : std::runtime_error(msg) {}
};

// A gate with a non-Clifford angle reached the tableau backend. The
// dispatcher is expected to route such circuits to the dense backend.
struct NonCliffordOnTableau : SimError {
  explicit NonCliffordOnTableau(const std::string& msg) : SimError(msg) {}
};

// A heralded projection was forced onto a branch of probability zero.
struct ZeroProbabilityBranch : SimError {
  explicit ZeroProbabilityBranch(const std::string& msg) : SimError(msg) {}
};

// Register would exceed the dense backend qubit limit.
struct TooLarge : SimError {
  explicit TooLarge(const std::string& msg) : SimError(msg) {}
};

// Vertex graph is not 2-colorable: the stabilizers cannot be split into two
// local measurement settings and no fidelity lower bound can be formed.
struct OddCycleError : SimError {
  explicit OddCycleError(const std::string& msg) : SimError(msg) {}
};

// A record's measurement setting cannot evaluate the requested observable.
struct SettingMismatch : SimError {
  explicit SettingMismatch(const std::string& msg) : SimError(msg) {}
};

struct ParseError : SimError {
  explicit ParseError(const std::string& msg) : SimError(msg) {}
};

}  // namespace fusim

#endif
