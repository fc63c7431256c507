// Copyright (c) 2026, The focusseg Authors
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


// The statistics report: all tables plus the significance tests.

#ifndef FOCUSSEG_REPORT_HPP_
#define FOCUSSEG_REPORT_HPP_

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "focusseg/tables.hpp"

namespace focusseg {

// Test dfs of the reference analysis the bundled corpus replicates.
inline constexpr int kReferenceAnovaDfBetween = 3;
inline constexpr int kReferenceAnovaDfWithin = 96;
inline constexpr int kReferenceTDf = 96;

struct ReportOptions {
  std::optional<std::vector<PauseRecord>> pause_inventory;
  std::size_t excluded_missing_pause = 0;
  // Echoed in the report so a run can be reproduced.
  std::vector<std::pair<std::string, std::string>> config;
  const CueLexicon* lexicon = nullptr;  // replication lexicon when null
};

struct StatsReport {
  std::size_t record_count = 0;
  std::size_t excluded_missing_pause = 0;
  Distributions distributions;
  GroupedMeans by_operation;
  GroupedMeans by_token;
  GroupedMeans by_marking;
  std::optional<AnovaResult> anova;         // pause ~ operation
  std::optional<CorrResult> segments_corr;  // pause vs segments affected
  std::optional<CorrResult> depth_corr;     // pause vs embedding depth
  std::optional<TTestResult> marking_t;     // unmarked vs marked
  std::vector<std::string> notes;
  std::vector<std::pair<std::string, std::string>> config;
};

// Throws DegenerateInput for an empty record set. Tests that cannot be
// computed on the records are left unset with a note.
StatsReport build_report(std::span<const CodedRecord> records, const ReportOptions& options = {});

std::string render_text(const StatsReport& report);
std::string render_json(const StatsReport& report);

}  // namespace focusseg

#endif  // FOCUSSEG_REPORT_HPP_
