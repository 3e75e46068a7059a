// Copyright 2026 The approachlab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef APPROACHLAB_TOOLS_CLI_HPP_
#define APPROACHLAB_TOOLS_CLI_HPP_

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "approachlab/equivalence.hpp"

namespace approachlab::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitNegative = 2;

// One invocation; args[0] is the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

std::string verdict_to_json(const std::string& instance_name, const std::string& check,
                            const LinearizedInstance& linearized, const EquivalenceVerdict& verdict,
                            std::uint64_t seed);

}  // namespace approachlab::cli

#endif  // APPROACHLAB_TOOLS_CLI_HPP_
