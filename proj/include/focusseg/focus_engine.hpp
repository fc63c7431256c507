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

// Focus-space stack and the four focusing operations.
//
// Every operation decomposes into stack primitives:
//   Initiate  one push
//   Retain    no push, no pop
//   Return    one or more pops
//   Replace   one or more pops followed by one push
// An operation may pop several spaces but never pushes more than one.

#ifndef FOCUSSEG_FOCUS_ENGINE_HPP_
#define FOCUSSEG_FOCUS_ENGINE_HPP_

#include <array>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace focusseg {

enum class OpKind : std::uint8_t { Initiate, Retain, Return, Replace };

inline constexpr std::array<OpKind, 4> kAllOpKinds = {
    OpKind::Initiate, OpKind::Retain, OpKind::Return, OpKind::Replace};

std::string_view to_string(OpKind kind);
// Throws MalformedOperation on an unknown name.
OpKind op_kind_from_string(std::string_view name);

// Small value set of operation kinds.
class OpSet {
 public:
  constexpr OpSet() = default;
  constexpr OpSet(std::initializer_list<OpKind> kinds) {
    for (OpKind k : kinds) insert(k);
  }
  constexpr void insert(OpKind k) { bits_ |= bit(k); }
  constexpr bool contains(OpKind k) const { return (bits_ & bit(k)) != 0; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr std::size_t size() const {
    std::size_t n = 0;
    for (OpKind k : kAllOpKinds) n += contains(k) ? 1 : 0;
    return n;
  }
  std::vector<OpKind> kinds() const;
  friend constexpr bool operator==(OpSet, OpSet) = default;

 private:
  static constexpr std::uint8_t bit(OpKind k) {
    return static_cast<std::uint8_t>(1u << static_cast<unsigned>(k));
  }
  std::uint8_t bits_ = 0;
};

struct FocusingOperation {
  OpKind kind = OpKind::Retain;
  int pop_count = 0;

  static FocusingOperation initiate() { return {OpKind::Initiate, 0}; }
  static FocusingOperation retain() { return {OpKind::Retain, 0}; }
  static FocusingOperation return_to(int pops) { return {OpKind::Return, pops}; }
  static FocusingOperation replace(int pops) { return {OpKind::Replace, pops}; }

  bool pushes() const { return kind == OpKind::Initiate || kind == OpKind::Replace; }

  // Throws MalformedOperation when pop_count does not fit the kind.
  void validate() const;

  friend bool operator==(const FocusingOperation&, const FocusingOperation&) = default;
};

// Number of segments opened or closed: pops plus pushes.
int segments_affected(const FocusingOperation& op);

struct FocusSpace {
  int id = 0;
  std::string dsp_label;
  int opened_at = 0;
  std::optional<int> closed_at;

  friend bool operator==(const FocusSpace&, const FocusSpace&) = default;
};

struct HistoryEntry {
  FocusingOperation op;
  int fragment_index = 0;
  std::vector<int> popped;     // ids, in pop order (former top first)
  std::optional<int> pushed;   // id of the new space
  std::optional<int> top_after;  // Retain records the retained space here

  friend bool operator==(const HistoryEntry&, const HistoryEntry&) = default;
};

// Immutable-by-convention stack state; apply() returns the successor.
class FocusStack {
 public:
  FocusStack() = default;

  [[nodiscard]] FocusStack apply(const FocusingOperation& op, int fragment_index,
                                 std::string dsp_label = {}) const;

  std::size_t depth() const { return open_.size(); }
  bool empty() const { return open_.empty(); }
  // Top of stack, or nullptr when empty.
  const FocusSpace* top() const { return open_.empty() ? nullptr : &open_.back(); }
  // Open spaces, bottom first.
  std::span<const FocusSpace> open_spaces() const { return open_; }
  const std::vector<FocusSpace>& closed_spaces() const { return closed_; }
  const std::vector<HistoryEntry>& history() const { return history_; }

  friend bool operator==(const FocusStack&, const FocusStack&) = default;

 private:
  std::vector<FocusSpace> open_;
  std::vector<FocusSpace> closed_;
  std::vector<HistoryEntry> history_;
  int next_id_ = 1;
};

struct TraceStep {
  FocusingOperation op;
  int fragment_index = 0;
  std::string dsp_label;

  friend bool operator==(const TraceStep&, const TraceStep&) = default;
};

struct TreeBuild;

class LinguisticTree {
 public:
  // Nodes in push order; ids are 1..n.
  const std::vector<FocusSpace>& nodes() const { return nodes_; }
  std::optional<int> parent(int id) const;
  // Embedding depth at push, 1 for top-level segments.
  int depth(int id) const;
  std::vector<int> children(int id) const;
  std::vector<int> roots() const;
  const FocusSpace& node(int id) const;
  std::size_t size() const { return nodes_.size(); }

  // One segment per line, two spaces of indent per level below the top.
  std::string render_indented() const;

 private:
  friend TreeBuild build_tree(std::span<const TraceStep> trace);
  std::vector<FocusSpace> nodes_;
  std::map<int, int> parent_;
  std::map<int, int> depth_;
};

struct TreeBuild {
  LinguisticTree tree;
  // Per trace step: segments opened or closed by that step.
  std::vector<int> segments_affected;
  // Per trace step: the space on top after the step (absent if the stack
  // emptied), i.e. the segment the fragment belongs to.
  std::vector<std::optional<int>> active_space;
  // Per trace step: stack depth after the step.
  std::vector<int> depth_after;
  // Spaces still open at the end of the trace, bottom first.
  std::vector<int> residual_open;
  FocusStack final_stack;
};

// Replays the trace from an empty stack. The first step must be an
// Initiate. Engine errors are rethrown tagged with the step index.
TreeBuild build_tree(std::span<const TraceStep> trace);

}  // namespace focusseg

#endif  // FOCUSSEG_FOCUS_ENGINE_HPP_
