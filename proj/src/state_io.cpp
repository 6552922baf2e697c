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

#include "qsep/state_io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "qsep/error.hpp"

namespace qsep {

using nlohmann::json;

std::string serialize_state(const StateFile& file) {
  const ComplexMatrix& x = file.state.matrix();
  json rows = json::array();
  for (Eigen::Index i = 0; i < x.rows(); ++i) {
    json row = json::array();
    for (Eigen::Index j = 0; j < x.cols(); ++j)
      row.push_back({x(i, j).real(), x(i, j).imag()});
    rows.push_back(std::move(row));
  }
  json doc;
  doc["dim_a"] = file.state.dim_a();
  doc["dim_b"] = file.state.dim_b();
  doc["matrix"] = std::move(rows);
  if (file.name) doc["name"] = *file.name;
  if (file.seed) doc["seed"] = *file.seed;
  return doc.dump(1) + "\n";
}

StateFile parse_state(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::kParse, std::string("state file is not valid JSON: ") + e.what());
  }
  try {
    if (!doc.is_object()) throw Error(ErrorCode::kParse, "state file must be a JSON object");
    for (const char* key : {"dim_a", "dim_b", "matrix"}) {
      if (!doc.contains(key)) {
        throw Error(ErrorCode::kParse, std::string("state file lacks field '") + key + "'");
      }
    }
    if (!doc["dim_a"].is_number_integer() || !doc["dim_b"].is_number_integer()) {
      throw Error(ErrorCode::kParse, "dim_a and dim_b must be integers");
    }
    const int m = doc["dim_a"].get<int>();
    const int n = doc["dim_b"].get<int>();
    if (m < 1 || n < 1 || m * n > 4096) {
      throw Error(ErrorCode::kDimension, "state dimensions out of range");
    }
    const int d = m * n;
    const json& rows = doc["matrix"];
    if (!rows.is_array() || static_cast<int>(rows.size()) != d) {
      throw Error(ErrorCode::kParse, "matrix must have dim_a*dim_b rows");
    }
    ComplexMatrix x(d, d);
    for (int i = 0; i < d; ++i) {
      const json& row = rows[i];
      if (!row.is_array() || static_cast<int>(row.size()) != d) {
        throw Error(ErrorCode::kParse, "matrix row " + std::to_string(i) +
                                           " must have dim_a*dim_b entries");
      }
      for (int j = 0; j < d; ++j) {
        const json& z = row[j];
        if (!z.is_array() || z.size() != 2 || !z[0].is_number() || !z[1].is_number()) {
          throw Error(ErrorCode::kParse, "matrix entries must be [re, im] pairs");
        }
        x(i, j) = Complex(z[0].get<double>(), z[1].get<double>());
      }
    }
    StateFile out{DensityMatrix(m, n, std::move(x)), std::nullopt, std::nullopt};
    if (doc.contains("name")) {
      if (!doc["name"].is_string()) throw Error(ErrorCode::kParse, "name must be a string");
      out.name = doc["name"].get<std::string>();
    }
    if (doc.contains("seed")) {
      if (!doc["seed"].is_number_unsigned() && !doc["seed"].is_number_integer()) {
        throw Error(ErrorCode::kParse, "seed must be an integer");
      }
      out.seed = doc["seed"].get<std::uint64_t>();
    }
    return out;
  } catch (const json::exception& e) {
    throw Error(ErrorCode::kParse, std::string("malformed state file: ") + e.what());
  }
}

StateFile read_state_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kIo, "cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_state(buf.str());
}

void write_state_file(const std::filesystem::path& path, const StateFile& file) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::kIo, "cannot write " + path.string());
  out << serialize_state(file);
  if (!out) throw Error(ErrorCode::kIo, "write failed for " + path.string());
}

}  // namespace qsep
