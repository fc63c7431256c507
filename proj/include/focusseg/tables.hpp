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


// Count panels and mean-pause tables over coded records.

#ifndef FOCUSSEG_TABLES_HPP_
#define FOCUSSEG_TABLES_HPP_

#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "focusseg/cue_lexicon.hpp"
#include "focusseg/fragment_coder.hpp"
#include "focusseg/pause_detect.hpp"
#include "focusseg/stats.hpp"

namespace focusseg {

struct CellSummary {
  std::size_t count = 0;
  double mean = 0.0;
  std::optional<double> sd;
};

CellSummary summarize(const Moments& m);

// Pause means over a row x column grid. Margins are merged from the
// cells, so they are count-weighted by construction.
class GroupedMeans {
 public:
  GroupedMeans() = default;
  GroupedMeans(std::vector<std::string> rows, std::vector<std::string> cols);

  // Unknown keys are appended to the row / column order.
  void add(const std::string& row, const std::string& col, double value);

  const std::vector<std::string>& rows() const { return rows_; }
  const std::vector<std::string>& cols() const { return cols_; }

  // Absent when no record fell in the cell.
  std::optional<CellSummary> cell(const std::string& row, const std::string& col) const;
  CellSummary row_margin(const std::string& row) const;
  CellSummary col_margin(const std::string& col) const;
  CellSummary grand() const;

 private:
  Moments row_moments(const std::string& row) const;
  std::vector<std::string> rows_;
  std::vector<std::string> cols_;
  std::map<std::pair<std::string, std::string>, Moments> cells_;
};

class CountPanel {
 public:
  CountPanel() = default;
  CountPanel(std::vector<std::string> rows, std::vector<std::string> cols);

  void add(const std::string& row, const std::string& col, std::size_t k = 1);

  const std::vector<std::string>& rows() const { return rows_; }
  const std::vector<std::string>& cols() const { return cols_; }
  std::size_t count(const std::string& row, const std::string& col) const;
  std::size_t row_total(const std::string& row) const;
  std::size_t col_total(const std::string& col) const;
  std::size_t total() const;

 private:
  std::vector<std::string> rows_;
  std::vector<std::string> cols_;
  std::map<std::pair<std::string, std::string>, std::size_t> counts_;
};

// Pause durations binned at 0.1 s, split by position.
struct PauseHistogram {
  std::map<int, std::pair<std::size_t, std::size_t>> bins;  // tenths -> (initial, internal)
  Moments initial;
  Moments internal;
  std::size_t unpositioned = 0;  // pauses without a position label
};

struct Distributions {
  CountPanel operations;  // operation x {marked, unmarked}
  CountPanel tokens;      // initial-token row x {initial, internal}
  PauseHistogram pauses;
  bool pauses_from_records = false;
};

// Row label of a record's opening token: the lexicon's table_row for cue
// phrases ("Ordinal" for ordinal phrases), otherwise Acknowledgment,
// Filled Pause or Unmarked.
std::string token_row(const CodedRecord& record, const CueLexicon& lexicon);

// Token rows in display order: cue rows alphabetically with Ordinal last,
// then Acknowledgment, Filled Pause, Unmarked.
void sort_token_rows(std::vector<std::string>& rows);

// Segment-initial unless the operation is Retain, which continues the
// segment in focus.
bool segment_initial(OpKind kind);

// Three count panels. With a pause inventory the histogram comes from
// its labeled positions; without one, from each record's pause and its
// segment_initial position.
Distributions table_distributions(std::span<const CodedRecord> records,
                                  std::optional<std::span<const PauseRecord>> pause_inventory = {},
                                  const CueLexicon& lexicon = CueLexicon::replication());

GroupedMeans mean_pause_by_operation(std::span<const CodedRecord> records);
GroupedMeans mean_pause_by_token_and_operation(
    std::span<const CodedRecord> records, const CueLexicon& lexicon = CueLexicon::replication());
GroupedMeans marked_unmarked_table(std::span<const CodedRecord> records);

// Row and column keys used by the tables above.
inline constexpr const char* kAllColumn = "ALL";
inline constexpr const char* kMarkedRow = "Marked";
inline constexpr const char* kUnmarkedRow = "Unmarked";

}  // namespace focusseg

#endif  // FOCUSSEG_TABLES_HPP_
