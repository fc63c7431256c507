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


#include "corpus.hpp"

#include <deque>
#include <map>
#include <stdexcept>
#include <string>

#include "focusseg/focus_engine.hpp"
#include "reference.hpp"

namespace focusseg::checks {

std::string_view surface_for_row(std::string_view row) {
  static const std::map<std::string_view, std::string_view> kSurfaces{
      {"And", "and"},        {"But", "but"},     {"Now", "now"},
      {"Oh", "oh"},          {"So", "so"},       {"Well", "well"},
      {"Y'know", "you know"}, {"Ordinal", "first"}, {"Acknowledgment", "ok"},
      {"Filled Pause", "um"}, {"Unmarked", ""},
  };
  auto it = kSurfaces.find(row);
  if (it == kSurfaces.end()) throw std::invalid_argument("unknown token row");
  return it->second;
}

namespace {

InitialConstituent constituent_for_row(std::string_view row) {
  if (row == "Unmarked") return InitialConstituent::Unmarked;
  if (row == "Acknowledgment") return InitialConstituent::Acknowledgment;
  if (row == "Filled Pause") return InitialConstituent::FilledPause;
  return InitialConstituent::CuePhrase;
}

FocusingOperation op_of(OpKind k) {
  switch (k) {
    case OpKind::Initiate: return FocusingOperation::initiate();
    case OpKind::Retain: return FocusingOperation::retain();
    case OpKind::Return: return FocusingOperation::return_to(1);
    case OpKind::Replace: return FocusingOperation::replace(1);
  }
  return FocusingOperation::retain();
}

}  // namespace

std::vector<CodedRecord> build_replication_corpus() {
  std::map<OpKind, std::deque<const reference::TokenCell*>> queue;
  for (const auto& cell : reference::kTokenCells) {
    for (std::size_t i = 0; i < cell.count; ++i) queue[cell.op].push_back(&cell);
  }

  std::vector<OpKind> order{OpKind::Initiate};
  for (int block = 0; block < 11; ++block) {
    for (OpKind k : {OpKind::Initiate, OpKind::Initiate, OpKind::Replace, OpKind::Retain,
                     OpKind::Retain, OpKind::Retain, OpKind::Retain, OpKind::Retain,
                     OpKind::Return}) {
      order.push_back(k);
    }
  }

  std::vector<TraceStep> trace;
  std::vector<const reference::TokenCell*> cells;
  for (std::size_t i = 0; i < order.size(); ++i) {
    auto& q = queue[order[i]];
    if (q.empty()) throw std::logic_error("corpus order does not match the cell counts");
    cells.push_back(q.front());
    q.pop_front();
    trace.push_back({op_of(order[i]), static_cast<int>(i), "segment " + std::to_string(i)});
  }
  for (const auto& [op, q] : queue) {
    if (!q.empty()) throw std::logic_error("corpus order leaves cells unused");
  }

  const TreeBuild tree = build_tree(trace);
  std::vector<CodedRecord> out;
  for (std::size_t i = 0; i < trace.size(); ++i) {
    const auto& cell = *cells[i];
    CodedRecord r;
    r.fragment_index = i;
    r.pause_before_s = cell.mean;
    r.initial_constituent = constituent_for_row(cell.row);
    r.initial_token = std::string(surface_for_row(cell.row));
    r.operation = trace[i].op;
    r.embedding_depth = tree.tree.depth(*tree.active_space[i]);
    r.segments_affected = tree.segments_affected[i];
    r.prior_function = DiscourseFunction::Topical;
    r.subsequent_function = DiscourseFunction::Topical;
    r.turn_position = i == 0 || r.initial_constituent == InitialConstituent::Acknowledgment
                          ? TurnPosition::Initiating
                          : TurnPosition::Continuing;
    r.marked = is_marked(r.initial_constituent);
    out.push_back(std::move(r));
  }
  return out;
}

std::vector<PauseRecord> build_pause_inventory() {
  std::vector<PauseRecord> out;
  double clock = 1.0;
  auto emit = [&](int tenths, PausePosition pos) {
    PauseRecord p;
    p.start_s = clock;
    p.raw_duration_s = tenths / 10.0;
    p.reported_duration_s = tenths / 10.0;
    p.position = pos;
    out.push_back(p);
    clock += p.raw_duration_s + 1.5;
  };
  for (const auto& bin : reference::kPauseBins) {
    for (std::size_t i = 0; i < bin.initial; ++i) emit(bin.tenths, PausePosition::FragmentInitial);
    for (std::size_t i = 0; i < bin.internal; ++i) emit(bin.tenths, PausePosition::FragmentInternal);
  }
  return out;
}

}  // namespace focusseg::checks
