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

#include <stdexcept>
#include <string>

namespace qsep {

enum class ErrorCode {
  kDomain,             // argument outside the mathematical domain (d < 2, p > 1, ...)
  kDimension,          // shapes inconsistent or too large
  kValidation,         // input fails Hermitian / trace / PSD / norm checks
  kNumerical,          // decomposition failed or produced non-finite output
  kSingularFilter,     // filtered state has vanishing trace
  kSingularReduction,  // FNF whitening of a singular reduction with eps = 0
  kIo,
  kParse,
};

const char* to_string(ErrorCode code) noexcept;

/// Every failure in the library is reported as an Error carrying one of the
/// codes above. The C API maps the code one-to-one onto qsep_status.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace qsep
