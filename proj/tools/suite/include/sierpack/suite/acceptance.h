// Copyright 2026 The sierpack Authors
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

// The acceptance suite: twelve cross-checks between the closed forms, the
// constructions and the exact engines. Each check yields a report with a
// pass/fail verdict, measured details and the discrepancies it observed
// between computed and stated values.
//
// Scales: "desk" runs every check at its full size; "quick" shrinks the
// enumerations and sample counts for a fast smoke run.

#ifndef SIERPACK_SUITE_ACCEPTANCE_H_
#define SIERPACK_SUITE_ACCEPTANCE_H_

#include <string>
#include <string_view>
#include <vector>

#include "sierpack/json.h"

namespace sierpack::suite {

enum class Scale { kQuick, kDesk };

// Throws std::invalid_argument for anything but "quick" or "desk".
Scale ParseScale(std::string_view name);
const char* ToString(Scale s);

inline constexpr int kNumCriteria = 12;

struct Discrepancy {
  std::string source;  // citation token of the stated value
  std::string params;
  int stated = 0;
  int computed = 0;
};

struct CriterionReport {
  int id = 0;
  std::string name;
  bool passed = false;
  double seconds = 0;
  std::vector<std::string> failures;
  std::vector<Discrepancy> discrepancies;
  Json details = Json::object();
};

// id in 1..kNumCriteria. Never throws on a failed check; exceptions from
// the library are caught and reported as failures.
CriterionReport RunCriterion(int id, Scale scale);
std::vector<CriterionReport> RunAcceptance(Scale scale);

Json ToJson(const CriterionReport& r);
Json ReportToJson(const std::vector<CriterionReport>& reports, Scale scale);

// "PASS 01 name (1.23s)" or "FAIL 01 name (1.23s): first failure".
std::string SummaryLine(const CriterionReport& r);

}  // namespace sierpack::suite

#endif  // SIERPACK_SUITE_ACCEPTANCE_H_
