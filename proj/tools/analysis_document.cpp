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

#include "analysis_document.hpp"

#include <charconv>
#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace qsep::cli {
namespace {

using nlohmann::json;

// JSON has no NaN; failed criteria carry null.
json number(double x) {
  if (!std::isfinite(x)) return nullptr;
  return x;
}

double read_number(const json& j) {
  if (j.is_null()) return std::numeric_limits<double>::quiet_NaN();
  return j.get<double>();
}

json criteria_json(const std::vector<CriterionEntry>& items) {
  json out = json::array();
  for (const auto& c : items) {
    out.push_back({{"criterion", c.id},
                   {"value", number(c.value)},
                   {"threshold", number(c.threshold)},
                   {"margin", number(c.margin)},
                   {"entangled", c.entangled},
                   {"status", c.status}});
  }
  return out;
}

json measures_json(const std::vector<MeasureEntry>& items) {
  json out = json::array();
  for (const auto& m : items) {
    out.push_back({{"measure", m.measure},
                   {"kind", m.kind},
                   {"source", m.source},
                   {"value", number(m.value)},
                   {"raw", number(m.raw)},
                   {"swapped", m.swapped}});
  }
  return out;
}

std::vector<CriterionEntry> parse_criteria(const json& arr) {
  std::vector<CriterionEntry> out;
  for (const auto& c : arr) {
    out.push_back(CriterionEntry{c.at("criterion").get<std::string>(),
                                 read_number(c.at("value")),
                                 read_number(c.at("threshold")),
                                 read_number(c.at("margin")),
                                 c.at("entangled").get<bool>(),
                                 c.at("status").get<std::string>()});
  }
  return out;
}

std::vector<MeasureEntry> parse_measures(const json& arr) {
  std::vector<MeasureEntry> out;
  for (const auto& m : arr) {
    out.push_back(MeasureEntry{m.at("measure").get<std::string>(),
                               m.at("kind").get<std::string>(),
                               m.at("source").get<std::string>(),
                               read_number(m.at("value")),
                               read_number(m.at("raw")),
                               m.at("swapped").get<bool>()});
  }
  return out;
}

std::string csv_criteria(const std::string& section,
                         const std::vector<CriterionEntry>& items) {
  std::string out;
  for (const auto& c : items) {
    out += section + "," + c.id + ",,," + format_number(c.value) + "," +
           format_number(c.threshold) + "," + format_number(c.margin) + "," +
           (c.entangled ? "true" : "false") + "," + c.status + "\n";
  }
  return out;
}

std::string csv_measures(const std::string& section,
                         const std::vector<MeasureEntry>& items) {
  std::string out;
  for (const auto& m : items) {
    out += section + "," + m.measure + "," + m.kind + "," + m.source + "," +
           format_number(m.value) + ",,,," + (m.swapped ? "swapped" : "") + "\n";
  }
  return out;
}

void text_criteria(std::ostringstream& os, const std::vector<CriterionEntry>& items) {
  for (const auto& c : items) {
    char line[160];
    if (c.status != "ok") {
      std::snprintf(line, sizeof line, "  %-9s failed: %s\n", c.id.c_str(), c.status.c_str());
    } else {
      std::snprintf(line, sizeof line, "  %-9s value %.12g  threshold %.12g  margin %+.6e  %s\n",
                    c.id.c_str(), c.value, c.threshold, c.margin,
                    c.entangled ? "ENTANGLED" : "undetected");
    }
    os << line;
  }
}

void text_measures(std::ostringstream& os, const std::vector<MeasureEntry>& items) {
  for (const auto& m : items) {
    char line[160];
    std::snprintf(line, sizeof line, "  %-11s %-17s %-15s %.12g%s\n", m.measure.c_str(),
                  m.kind.c_str(), m.source.c_str(), m.value, m.swapped ? "  (A/B swapped)" : "");
    os << line;
  }
}

}  // namespace

std::string format_number(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, res.ptr);
}

std::string to_json(const AnalysisDocument& doc) {
  json j;
  j["state"] = doc.state;
  j["dim_a"] = doc.dim_a;
  j["dim_b"] = doc.dim_b;
  j["criteria"] = criteria_json(doc.criteria);
  j["measures"] = measures_json(doc.measures);
  if (doc.fnf) {
    j["fnf"] = {{"iterations", doc.fnf->iterations},
                {"converged", doc.fnf->converged},
                {"residual", number(doc.fnf->residual)},
                {"criteria", criteria_json(doc.fnf->criteria)},
                {"measures", measures_json(doc.fnf->measures)}};
  }
  j["tool_version"] = doc.tool_version;
  if (doc.timestamp) j["timestamp"] = *doc.timestamp;
  return j.dump(2) + "\n";
}

AnalysisDocument parse_json(const std::string& text) {
  const json j = json::parse(text);
  AnalysisDocument doc;
  doc.state = j.at("state").get<std::string>();
  doc.dim_a = j.at("dim_a").get<int>();
  doc.dim_b = j.at("dim_b").get<int>();
  doc.criteria = parse_criteria(j.at("criteria"));
  doc.measures = parse_measures(j.at("measures"));
  if (j.contains("fnf")) {
    const json& f = j.at("fnf");
    doc.fnf = FnfSummary{f.at("iterations").get<int>(), f.at("converged").get<bool>(),
                         read_number(f.at("residual")), parse_criteria(f.at("criteria")),
                         parse_measures(f.at("measures"))};
  }
  doc.tool_version = j.at("tool_version").get<std::string>();
  if (j.contains("timestamp")) doc.timestamp = j.at("timestamp").get<std::string>();
  return doc;
}

std::string to_csv(const AnalysisDocument& doc) {
  std::string out = "section,item,kind,source,value,threshold,margin,entangled,note\n";
  out += "meta,state,,,,,,," + doc.state + "\n";
  out += "meta,dim_a,,," + std::to_string(doc.dim_a) + ",,,,\n";
  out += "meta,dim_b,,," + std::to_string(doc.dim_b) + ",,,,\n";
  out += csv_criteria("criteria", doc.criteria);
  out += csv_measures("measures", doc.measures);
  if (doc.fnf) {
    out += "fnf,iterations,,," + std::to_string(doc.fnf->iterations) + ",,,,\n";
    out += "fnf,converged,,," + std::string(doc.fnf->converged ? "1" : "0") + ",,,,\n";
    out += "fnf,residual,,," + format_number(doc.fnf->residual) + ",,,,\n";
    out += csv_criteria("fnf_criteria", doc.fnf->criteria);
    out += csv_measures("fnf_measures", doc.fnf->measures);
  }
  out += "meta,tool_version,,,,,,," + doc.tool_version + "\n";
  if (doc.timestamp) out += "meta,timestamp,,,,,,," + *doc.timestamp + "\n";
  return out;
}

std::string to_text(const AnalysisDocument& doc) {
  std::ostringstream os;
  os << "state: " << doc.state << " (" << doc.dim_a << "x" << doc.dim_b << ")\n";
  if (!doc.criteria.empty()) {
    os << "criteria:\n";
    text_criteria(os, doc.criteria);
  }
  if (!doc.measures.empty()) {
    os << "measures:\n";
    text_measures(os, doc.measures);
  }
  if (doc.fnf) {
    char line[160];
    std::snprintf(line, sizeof line,
                  "filter normal form: %s after %d iterations, residual %.3e\n",
                  doc.fnf->converged ? "converged" : "NOT converged", doc.fnf->iterations,
                  doc.fnf->residual);
    os << line;
    if (!doc.fnf->criteria.empty()) {
      os << "criteria (normal form):\n";
      text_criteria(os, doc.fnf->criteria);
    }
    if (!doc.fnf->measures.empty()) {
      os << "measures (normal form):\n";
      text_measures(os, doc.fnf->measures);
    }
  }
  os << "qsep " << doc.tool_version;
  if (doc.timestamp) os << "  " << *doc.timestamp;
  os << "\n";
  return os.str();
}

}  // namespace qsep::cli
