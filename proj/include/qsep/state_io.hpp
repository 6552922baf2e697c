// Copyright 2026 The qsep Authors
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

#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>

#include "qsep/linalg.hpp"

namespace qsep {

/// On-disk state document:
///   { "dim_a": M, "dim_b": N,
///     "matrix": [[[re, im], ...], ...],   // MN rows of MN entries
///     "name": "...", "seed": 7 }          // both optional
/// Doubles are written with round-trip precision.
struct StateFile {
  DensityMatrix state;
  std::optional<std::string> name;
  std::optional<std::uint64_t> seed;
};

std::string serialize_state(const StateFile& file);

/// Throws kParse on malformed JSON or missing/ill-typed fields, kValidation
/// or kDimension if the matrix is not a valid state.
StateFile parse_state(const std::string& text);

StateFile read_state_file(const std::filesystem::path& path);
void write_state_file(const std::filesystem::path& path, const StateFile& file);

}  // namespace qsep
