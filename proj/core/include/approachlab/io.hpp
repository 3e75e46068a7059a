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

#ifndef APPROACHLAB_IO_HPP_
#define APPROACHLAB_IO_HPP_

#include <string>
#include <string_view>

#include "approachlab/instances.hpp"

namespace approachlab {

// Instance documents. Rationals are strings in canonical "n" or "n/d" form;
// output is pretty-printed with two-space indentation and a trailing newline,
// so parse followed by serialize is byte-stable for canonical input.
std::string instance_to_json(const RegretInstance& inst);
std::string instance_to_json(const ApproachabilityInstance& inst);
std::string instance_to_json(const AnyInstance& inst);

// Throws ParseError; syntax errors carry "line L, column C".
AnyInstance parse_instance(std::string_view text);

// Whole-file helpers. read_file throws Error when the file cannot be opened.
std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view contents);

}  // namespace approachlab

#endif  // APPROACHLAB_IO_HPP_
