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

#include "focusseg/focus_engine.hpp"

#include <algorithm>
#include <sstream>

#include "focusseg/errors.hpp"

namespace focusseg {

std::string_view to_string(OpKind kind) {
  switch (kind) {
    case OpKind::Initiate: return "Initiate";
    case OpKind::Retain: return "Retain";
    case OpKind::Return: return "Return";
    case OpKind::Replace: return "Replace";
  }
  return "?";
}

OpKind op_kind_from_string(std::string_view name) {
  for (OpKind k : kAllOpKinds) {
    if (to_string(k) == name) return k;
  }
  throw MalformedOperation("unknown focusing operation '" + std::string(name) + "'");
}

std::vector<OpKind> OpSet::kinds() const {
  std::vector<OpKind> out;
  for (OpKind k : kAllOpKinds) {
    if (contains(k)) out.push_back(k);
  }
  return out;
}

void FocusingOperation::validate() const {
  switch (kind) {
    case OpKind::Initiate:
    case OpKind::Retain:
      if (pop_count != 0) {
        throw MalformedOperation(std::string(to_string(kind)) +
                                 " takes no pops, got " + std::to_string(pop_count));
      }
      return;
    case OpKind::Return:
    case OpKind::Replace:
      if (pop_count < 1) {
        throw MalformedOperation(std::string(to_string(kind)) +
                                 " needs at least one pop, got " +
                                 std::to_string(pop_count));
      }
      return;
  }
  throw MalformedOperation("invalid operation kind");
}

int segments_affected(const FocusingOperation& op) {
  op.validate();
  return op.pop_count + (op.pushes() ? 1 : 0);
}

FocusStack FocusStack::apply(const FocusingOperation& op, int fragment_index,
                             std::string dsp_label) const {
  op.validate();
  if ((op.kind == OpKind::Retain || op.kind == OpKind::Return) && open_.empty()) {
    throw EmptyStackError(std::string(to_string(op.kind)) + " on an empty focus stack");
  }
  if (static_cast<std::size_t>(op.pop_count) > open_.size()) {
    throw UnderflowError(std::to_string(op.pop_count) + " pops requested with depth " +
                         std::to_string(open_.size()));
  }
  if (!open_.empty() && fragment_index <= open_.back().opened_at && op.pop_count > 0) {
    // closed_at must come strictly after opened_at
    throw MalformedOperation("fragment index " + std::to_string(fragment_index) +
                             " does not follow the opening of space " +
                             std::to_string(open_.back().id));
  }

  FocusStack next = *this;
  HistoryEntry entry{op, fragment_index, {}, std::nullopt, std::nullopt};

  for (int i = 0; i < op.pop_count; ++i) {
    FocusSpace space = std::move(next.open_.back());
    next.open_.pop_back();
    space.closed_at = fragment_index;
    entry.popped.push_back(space.id);
    next.closed_.push_back(std::move(space));
  }
  if (op.pushes()) {
    FocusSpace space{next.next_id_++, std::move(dsp_label), fragment_index, std::nullopt};
    entry.pushed = space.id;
    next.open_.push_back(std::move(space));
  }
  if (!next.open_.empty()) entry.top_after = next.open_.back().id;
  next.history_.push_back(std::move(entry));
  return next;
}

std::optional<int> LinguisticTree::parent(int id) const {
  auto it = parent_.find(id);
  if (it == parent_.end()) return std::nullopt;
  return it->second;
}

int LinguisticTree::depth(int id) const {
  auto it = depth_.find(id);
  if (it == depth_.end()) throw Error("unknown segment id " + std::to_string(id));
  return it->second;
}

const FocusSpace& LinguisticTree::node(int id) const {
  if (id < 1 || static_cast<std::size_t>(id) > nodes_.size()) {
    throw Error("unknown segment id " + std::to_string(id));
  }
  return nodes_[static_cast<std::size_t>(id - 1)];
}

std::vector<int> LinguisticTree::children(int id) const {
  std::vector<int> out;
  for (const auto& n : nodes_) {
    auto p = parent(n.id);
    if (p && *p == id) out.push_back(n.id);
  }
  return out;
}

std::vector<int> LinguisticTree::roots() const {
  std::vector<int> out;
  for (const auto& n : nodes_) {
    if (!parent(n.id)) out.push_back(n.id);
  }
  return out;
}

std::string LinguisticTree::render_indented() const {
  std::ostringstream os;
  // depth-first in push order; children are already sorted by opened_at
  std::vector<int> stack;
  auto roots_ = roots();
  for (auto it = roots_.rbegin(); it != roots_.rend(); ++it) stack.push_back(*it);
  while (!stack.empty()) {
    int id = stack.back();
    stack.pop_back();
    const FocusSpace& n = node(id);
    os << std::string(static_cast<std::size_t>(2 * (depth(id) - 1)), ' ') << "FS" << n.id
       << " [" << n.opened_at << "-";
    if (n.closed_at) os << *n.closed_at;
    os << ")";
    if (!n.dsp_label.empty()) os << " " << n.dsp_label;
    os << "\n";
    auto kids = children(id);
    for (auto k = kids.rbegin(); k != kids.rend(); ++k) stack.push_back(*k);
  }
  return os.str();
}

TreeBuild build_tree(std::span<const TraceStep> trace) {
  TreeBuild out;
  if (trace.empty()) return out;
  if (trace.front().op.kind != OpKind::Initiate) {
    MalformedOperation e("trace must begin with Initiate, got " +
                         std::string(to_string(trace.front().op.kind)));
    e.set_trace_index(0);
    throw e;
  }

  FocusStack stack;
  LinguisticTree& tree = out.tree;
  for (std::size_t i = 0; i < trace.size(); ++i) {
    const TraceStep& step = trace[i];
    try {
      stack = stack.apply(step.op, step.fragment_index, step.dsp_label);
    } catch (StackError& e) {
      e.set_trace_index(i);
      throw;
    }
    const HistoryEntry& h = stack.history().back();
    if (h.pushed) {
      // the parent is whatever sat directly beneath the new space
      auto open = stack.open_spaces();
      const FocusSpace& pushed = open.back();
      tree.nodes_.push_back(pushed);
      if (open.size() > 1) tree.parent_[pushed.id] = open[open.size() - 2].id;
      tree.depth_[pushed.id] = static_cast<int>(open.size());
    }
    for (int id : h.popped) {
      tree.nodes_[static_cast<std::size_t>(id - 1)].closed_at = step.fragment_index;
    }
    out.segments_affected.push_back(segments_affected(step.op));
    out.active_space.push_back(h.top_after);
    out.depth_after.push_back(static_cast<int>(stack.depth()));
  }
  for (const auto& s : stack.open_spaces()) out.residual_open.push_back(s.id);
  out.final_stack = std::move(stack);
  return out;
}

}  // namespace focusseg
