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

#include "qsep/error.hpp"

namespace qsep {

const char* to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::kDomain: return "domain error";
    case ErrorCode::kDimension: return "dimension error";
    case ErrorCode::kValidation: return "validation error";
    case ErrorCode::kNumerical: return "numerical error";
    case ErrorCode::kSingularFilter: return "singular filter";
    case ErrorCode::kSingularReduction: return "singular reduction";
    case ErrorCode::kIo: return "I/O error";
    case ErrorCode::kParse: return "parse error";
  }
  return "unknown error";
}

}  // namespace qsep
