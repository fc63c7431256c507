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


#include "focusseg/tables.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>

namespace focusseg {

namespace {

constexpr const char* kOrdinalRow = "Ordinal";
constexpr const char* kAckRow = "Acknowledgment";
constexpr const char* kFilledRow = "Filled Pause";

void append_unique(std::vector<std::string>& keys, const std::string& key) {
  if (std::find(keys.begin(), keys.end(), key) == keys.end()) keys.push_back(key);
}

std::vector<std::string> op_names() {
  std::vector<std::string> out;
  for (OpKind k : kAllOpKinds) out.emplace_back(to_string(k));
  return out;
}

int row_group(const std::string& row) {
  if (row == kOrdinalRow) return 1;
  if (row == kAckRow) return 2;
  if (row == kFilledRow) return 3;
  if (row == kUnmarkedRow) return 4;
  return 0;
}

std::string lower(const std::string& s) {
  std::string out = s;
  for (char& c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return out;
}

}  // namespace

CellSummary summarize(const Moments& m) { return {m.n, m.mean, m.sd()}; }

GroupedMeans::GroupedMeans(std::vector<std::string> rows, std::vector<std::string> cols)
    : rows_(std::move(rows)), cols_(std::move(cols)) {}

void GroupedMeans::add(const std::string& row, const std::string& col, double value) {
  append_unique(rows_, row);
  append_unique(cols_, col);
  cells_[{row, col}].add(value);
}

std::optional<CellSummary> GroupedMeans::cell(const std::string& row,
                                              const std::string& col) const {
  auto it = cells_.find({row, col});
  if (it == cells_.end() || it->second.n == 0) return std::nullopt;
  return summarize(it->second);
}

Moments GroupedMeans::row_moments(const std::string& row) const {
  Moments m;
  for (const auto& col : cols_) {
    auto it = cells_.find({row, col});
    if (it != cells_.end()) m.merge(it->second);
  }
  return m;
}

CellSummary GroupedMeans::row_margin(const std::string& row) const {
  return summarize(row_moments(row));
}

CellSummary GroupedMeans::col_margin(const std::string& col) const {
  Moments m;
  for (const auto& row : rows_) {
    auto it = cells_.find({row, col});
    if (it != cells_.end()) m.merge(it->second);
  }
  return summarize(m);
}

CellSummary GroupedMeans::grand() const {
  Moments m;
  for (const auto& row : rows_) m.merge(row_moments(row));
  return summarize(m);
}

CountPanel::CountPanel(std::vector<std::string> rows, std::vector<std::string> cols)
    : rows_(std::move(rows)), cols_(std::move(cols)) {}

void CountPanel::add(const std::string& row, const std::string& col, std::size_t k) {
  append_unique(rows_, row);
  append_unique(cols_, col);
  counts_[{row, col}] += k;
}

std::size_t CountPanel::count(const std::string& row, const std::string& col) const {
  auto it = counts_.find({row, col});
  return it == counts_.end() ? 0 : it->second;
}

std::size_t CountPanel::row_total(const std::string& row) const {
  std::size_t n = 0;
  for (const auto& col : cols_) n += count(row, col);
  return n;
}

std::size_t CountPanel::col_total(const std::string& col) const {
  std::size_t n = 0;
  for (const auto& row : rows_) n += count(row, col);
  return n;
}

std::size_t CountPanel::total() const {
  std::size_t n = 0;
  for (const auto& [key, k] : counts_) n += k;
  return n;
}

std::string token_row(const CodedRecord& record, const CueLexicon& lexicon) {
  switch (record.initial_constituent) {
    case InitialConstituent::Unmarked: return kUnmarkedRow;
    case InitialConstituent::Acknowledgment: return kAckRow;
    case InitialConstituent::FilledPause: return kFilledRow;
    case InitialConstituent::CuePhrase: break;
  }
  if (auto entry = lexicon.lookup(record.initial_token)) {
    if (entry->ordinal_rank) return kOrdinalRow;
    if (!entry->table_row.empty()) return entry->table_row;
  }
  return record.initial_token.empty() ? std::string("(cue)") : record.initial_token;
}

void sort_token_rows(std::vector<std::string>& rows) {
  std::stable_sort(rows.begin(), rows.end(), [](const std::string& a, const std::string& b) {
    const int ga = row_group(a);
    const int gb = row_group(b);
    if (ga != gb) return ga < gb;
    return ga == 0 && lower(a) < lower(b);
  });
}

bool segment_initial(OpKind kind) { return kind != OpKind::Retain; }

Distributions table_distributions(std::span<const CodedRecord> records,
                                  std::optional<std::span<const PauseRecord>> pause_inventory,
                                  const CueLexicon& lexicon) {
  Distributions d;
  d.operations = CountPanel(op_names(), {kMarkedRow, kUnmarkedRow});
  d.tokens = CountPanel({}, {"initial", "internal"});

  std::vector<std::string> token_rows;
  for (const CodedRecord& r : records) {
    d.operations.add(std::string(to_string(r.operation.kind)),
                     r.marked ? kMarkedRow : kUnmarkedRow);
    append_unique(token_rows, token_row(r, lexicon));
  }
  sort_token_rows(token_rows);
  d.tokens = CountPanel(token_rows, {"initial", "internal"});
  for (const CodedRecord& r : records) {
    d.tokens.add(token_row(r, lexicon), segment_initial(r.operation.kind) ? "initial" : "internal");
  }

  auto bin_of = [](double seconds) { return static_cast<int>(std::lround(round_to_tenth(seconds) * 10.0)); };
  auto place = [&](double seconds, bool initial) {
    auto& slot = d.pauses.bins[bin_of(seconds)];
    if (initial) {
      ++slot.first;
      d.pauses.initial.add(seconds);
    } else {
      ++slot.second;
      d.pauses.internal.add(seconds);
    }
  };
  if (pause_inventory) {
    for (const PauseRecord& p : *pause_inventory) {
      if (!p.position) {
        ++d.pauses.unpositioned;
        continue;
      }
      place(p.reported_duration_s, *p.position == PausePosition::FragmentInitial);
    }
  } else {
    d.pauses_from_records = true;
    for (const CodedRecord& r : records) place(r.pause_before_s, segment_initial(r.operation.kind));
  }
  return d;
}

GroupedMeans mean_pause_by_operation(std::span<const CodedRecord> records) {
  GroupedMeans g(op_names(), {kAllColumn});
  for (const CodedRecord& r : records) {
    g.add(std::string(to_string(r.operation.kind)), kAllColumn, r.pause_before_s);
  }
  return g;
}

GroupedMeans mean_pause_by_token_and_operation(std::span<const CodedRecord> records,
                                               const CueLexicon& lexicon) {
  std::vector<std::string> rows;
  for (const CodedRecord& r : records) append_unique(rows, token_row(r, lexicon));
  sort_token_rows(rows);
  GroupedMeans g(rows, op_names());
  for (const CodedRecord& r : records) {
    g.add(token_row(r, lexicon), std::string(to_string(r.operation.kind)), r.pause_before_s);
  }
  return g;
}

GroupedMeans marked_unmarked_table(std::span<const CodedRecord> records) {
  GroupedMeans g({kMarkedRow, kUnmarkedRow}, op_names());
  for (const CodedRecord& r : records) {
    g.add(r.marked ? kMarkedRow : kUnmarkedRow, std::string(to_string(r.operation.kind)),
          r.pause_before_s);
  }
  return g;
}

}  // namespace focusseg
