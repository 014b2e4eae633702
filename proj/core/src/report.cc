// Copyright 2026 The Authors.
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

#include "matroidforge/report.h"

#include <algorithm>
#include <sstream>

#include "matroidforge/error.h"

namespace matroidforge {

VerificationReport::VerificationReport(std::string campaign,
                                       nlohmann::json corpus_spec)
    : campaign_(std::move(campaign)), corpus_spec_(std::move(corpus_spec)) {}

std::size_t VerificationReport::checked() const {
  std::size_t n = 0;
  for (const auto& [id, t] : properties_) n += t.checked;
  return n;
}

std::size_t VerificationReport::passed() const {
  std::size_t n = 0;
  for (const auto& [id, t] : properties_) n += t.passed;
  return n;
}

void VerificationReport::record(std::string_view input,
                                std::string_view property, bool ok,
                                std::string witness) {
  PropertyTally& t = properties_[std::string(property)];
  ++t.checked;
  if (ok) {
    ++t.passed;
  } else {
    failures_.push_back(
        {std::string(input), std::string(property), std::move(witness)});
  }
}

void VerificationReport::declare(std::string_view property) {
  properties_.try_emplace(std::string(property));
}

void VerificationReport::merge(const VerificationReport& other) {
  for (const auto& [id, t] : other.properties_) {
    PropertyTally& mine = properties_[id];
    mine.checked += t.checked;
    mine.passed += t.passed;
  }
  failures_.insert(failures_.end(), other.failures_.begin(),
                   other.failures_.end());
  for (const auto& [key, value] : other.details_.items()) {
    if (value.is_number_unsigned() && details_.contains(key) &&
        details_[key].is_number_unsigned()) {
      details_[key] = details_[key].get<std::size_t>() +
                      value.get<std::size_t>();
    } else if (!details_.contains(key)) {
      details_[key] = value;
    }
  }
}

void VerificationReport::count_detail(const std::string& key, std::size_t n) {
  if (!details_.contains(key)) details_[key] = std::size_t{0};
  details_[key] = details_[key].get<std::size_t>() + n;
}

std::string VerificationReport::verdict() const {
  if (!failures_.empty()) return "FAIL";
  return checked() == 0 ? "PASS-vacuous" : "PASS";
}

nlohmann::json VerificationReport::to_json() const {
  std::vector<Failure> sorted = failures_;
  std::sort(sorted.begin(), sorted.end());
  nlohmann::json failures = nlohmann::json::array();
  for (const Failure& f : sorted) {
    failures.push_back(
        {{"input", f.input}, {"property", f.property}, {"witness", f.witness}});
  }
  nlohmann::json properties = nlohmann::json::object();
  for (const auto& [id, t] : properties_) {
    properties[id] = {{"checked", t.checked},
                      {"passed", t.passed},
                      {"failed", t.checked - t.passed}};
  }
  nlohmann::json j = {{"schema", kReportSchema},
                      {"campaign", campaign_},
                      {"corpus_spec", corpus_spec_},
                      {"checked", checked()},
                      {"passed", passed()},
                      {"verdict", verdict()},
                      {"failures", std::move(failures)},
                      {"properties", std::move(properties)},
                      {"details", details_}};
  if (wall_time_) j["wall_time"] = *wall_time_;
  return j;
}

std::string VerificationReport::to_json_text() const {
  return to_json().dump(2) + "\n";
}

std::string VerificationReport::to_text() const {
  std::ostringstream out;
  out << "campaign " << campaign_ << " " << corpus_spec_.dump() << "\n";
  out << "verdict " << verdict() << ": " << passed() << "/" << checked()
      << " checks passed\n";
  for (const auto& [id, t] : properties_) {
    const char* status = t.checked == 0           ? "PASS-vacuous"
                         : t.passed == t.checked ? "PASS"
                                                 : "FAIL";
    out << status << " " << id << " "
        << t.passed << "/" << t.checked << "\n";
  }
  std::vector<Failure> sorted = failures_;
  std::sort(sorted.begin(), sorted.end());
  for (const Failure& f : sorted) {
    out << "failure " << f.property << " on " << f.input;
    if (!f.witness.empty()) out << ": " << f.witness;
    out << "\n";
  }
  if (wall_time_) out << "wall_time " << *wall_time_ << "\n";
  return out.str();
}

VerificationReport VerificationReport::from_json(const nlohmann::json& j) {
  auto fail = [](const std::string& what) {
    return MatroidError(ErrorCode::kParseError, "report: " + what);
  };
  if (!j.is_object() || j.value("schema", 0) != kReportSchema) {
    throw fail("not a schema 1 report");
  }
  try {
    VerificationReport r(j.at("campaign").get<std::string>(),
                         j.at("corpus_spec"));
    for (const auto& [id, t] : j.at("properties").items()) {
      r.properties_[id] = {t.at("checked").get<std::size_t>(),
                           t.at("passed").get<std::size_t>()};
    }
    for (const auto& f : j.at("failures")) {
      r.failures_.push_back({f.at("input").get<std::string>(),
                             f.at("property").get<std::string>(),
                             f.at("witness").get<std::string>()});
    }
    if (j.contains("details")) r.details_ = j["details"];
    if (j.contains("wall_time")) r.wall_time_ = j["wall_time"].get<double>();
    std::size_t failed = 0;
    for (const auto& [id, t] : r.properties_) failed += t.checked - t.passed;
    if (failed != r.failures_.size()) {
      throw fail("failure list does not match the property tallies");
    }
    return r;
  } catch (const nlohmann::json::exception& e) {
    throw fail(e.what());
  }
}

int exit_code_for(const VerificationReport& report) {
  return report.failures().empty() ? 0 : 1;
}

}  // namespace matroidforge
