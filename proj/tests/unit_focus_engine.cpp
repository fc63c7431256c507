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


#include <random>
#include <vector>

#include "doctest.h"
#include "focusseg/errors.hpp"
#include "focusseg/focus_engine.hpp"
#include "oracles.hpp"

using namespace focusseg;

namespace {

std::vector<TraceStep> steps(std::initializer_list<FocusingOperation> ops) {
  std::vector<TraceStep> out;
  int i = 0;
  for (const auto& op : ops) out.push_back({op, i++, {}});
  return out;
}

const auto I = FocusingOperation::initiate();
const auto K = FocusingOperation::retain();
FocusingOperation R(int n) { return FocusingOperation::return_to(n); }
FocusingOperation X(int n) { return FocusingOperation::replace(n); }

}  // namespace

TEST_SUITE("focus_engine") {

TEST_CASE("initiate pushes on top of the current space") {
  FocusStack s = FocusStack{}.apply(I, 0, "a");
  s = s.apply(I, 1, "b");
  REQUIRE(s.depth() == 2);
  CHECK(s.top()->id == 2);
  CHECK(s.open_spaces()[0].id == 1);
  CHECK(s.top()->dsp_label == "b");
}

TEST_CASE("retain keeps depth and top") {
  FocusStack s = FocusStack{}.apply(I, 0);
  FocusStack t = s.apply(K, 1);
  CHECK(t.depth() == 1);
  CHECK(t.top()->id == s.top()->id);
  REQUIRE(t.history().size() == 2);
  CHECK(t.history().back().top_after == 1);
  CHECK(t.history().back().popped.empty());
  CHECK_FALSE(t.history().back().pushed);
}

TEST_CASE("replace two pops both and pushes one") {
  FocusStack s = FocusStack{}.apply(I, 0).apply(I, 1).apply(X(2), 2);
  REQUIRE(s.depth() == 1);
  CHECK(s.top()->id == 3);
  REQUIRE(s.closed_spaces().size() == 2);
  CHECK(s.closed_spaces()[0].id == 2);  // former top goes first
  CHECK(s.closed_spaces()[1].id == 1);
  for (const auto& c : s.closed_spaces()) CHECK(c.closed_at == 2);
  CHECK(s.history().back().popped == std::vector<int>{2, 1});
}

TEST_CASE("return exposes an older space") {
  FocusStack s = FocusStack{}.apply(I, 0).apply(I, 1).apply(R(1), 2);
  CHECK(s.depth() == 1);
  CHECK(s.top()->id == 1);
  CHECK(s.closed_spaces().front().closed_at == 2);
}

TEST_CASE("stack errors") {
  FocusStack empty;
  CHECK_THROWS_AS((void)empty.apply(K, 0), EmptyStackError);
  CHECK_THROWS_AS((void)empty.apply(R(1), 0), EmptyStackError);
  CHECK_THROWS_AS((void)empty.apply(X(1), 0), UnderflowError);
  FocusStack one = empty.apply(I, 0);
  CHECK_THROWS_AS((void)one.apply(R(2), 1), UnderflowError);
  CHECK_THROWS_AS((void)one.apply(X(2), 1), UnderflowError);
  CHECK_THROWS_AS((void)one.apply({OpKind::Initiate, 1}, 1), MalformedOperation);
  CHECK_THROWS_AS((void)one.apply({OpKind::Retain, 2}, 1), MalformedOperation);
  CHECK_THROWS_AS((void)one.apply({OpKind::Return, 0}, 1), MalformedOperation);
  CHECK_THROWS_AS((void)one.apply({OpKind::Replace, -1}, 1), MalformedOperation);
  // a space cannot close at the fragment that opened it
  CHECK_THROWS_AS((void)one.apply(X(1), 0), MalformedOperation);
  // underflow is a stack error too
  CHECK_THROWS_AS((void)one.apply(R(3), 1), StackError);
}

TEST_CASE("apply leaves its input untouched and is deterministic") {
  FocusStack s = FocusStack{}.apply(I, 0).apply(I, 1);
  const FocusStack before = s;
  FocusStack a = s.apply(X(1), 2, "z");
  FocusStack b = s.apply(X(1), 2, "z");
  CHECK(s == before);
  CHECK(a == b);
}

TEST_CASE("segments affected counts primitives") {
  CHECK(segments_affected(K) == 0);
  CHECK(segments_affected(I) == 1);
  CHECK(segments_affected(R(1)) == 1);
  CHECK(segments_affected(R(3)) == 3);
  CHECK(segments_affected(X(3)) == 4);
  CHECK_THROWS_AS(segments_affected({OpKind::Return, 0}), MalformedOperation);
}

TEST_CASE("operation names round-trip") {
  for (OpKind k : kAllOpKinds) CHECK(op_kind_from_string(to_string(k)) == k);
  CHECK_THROWS_AS(op_kind_from_string("Push"), MalformedOperation);
}

TEST_CASE("opset") {
  OpSet s{OpKind::Retain, OpKind::Return};
  CHECK(s.size() == 2);
  CHECK(s.contains(OpKind::Return));
  CHECK_FALSE(s.contains(OpKind::Initiate));
  CHECK(s.kinds() == std::vector<OpKind>{OpKind::Retain, OpKind::Return});
  CHECK(OpSet{}.empty());
}

TEST_CASE("three initiates nest three deep") {
  const auto trace = steps({I, I, I});
  const TreeBuild b = build_tree(trace);
  REQUIRE(b.tree.size() == 3);
  CHECK(b.tree.depth(1) == 1);
  CHECK(b.tree.depth(2) == 2);
  CHECK(b.tree.depth(3) == 3);
  CHECK(b.tree.parent(2) == 1);
  CHECK(b.tree.parent(3) == 2);
  CHECK_FALSE(b.tree.parent(1));
  CHECK(b.tree.render_indented() == "FS1 [0-)\n  FS2 [1-)\n    FS3 [2-)\n");
  CHECK(b.residual_open == std::vector<int>{1, 2, 3});
}

TEST_CASE("single initiate is one root") {
  const TreeBuild b = build_tree(steps({I}));
  CHECK(b.tree.size() == 1);
  CHECK(b.tree.roots() == std::vector<int>{1});
  CHECK(b.tree.depth(1) == 1);
  CHECK(b.tree.render_indented() == "FS1 [0-)\n");
}

TEST_CASE("replace then return gives siblings under the root") {
  const TreeBuild b = build_tree(steps({I, I, X(1), R(1)}));
  REQUIRE(b.tree.size() == 3);
  CHECK(b.tree.children(1) == std::vector<int>{2, 3});
  CHECK(b.depth_after == std::vector<int>{1, 2, 2, 1});
  CHECK(b.segments_affected == std::vector<int>{1, 1, 2, 1});
  CHECK(b.active_space.back() == 1);
  CHECK(b.tree.node(2).closed_at == 2);
  CHECK(b.tree.node(3).closed_at == 3);
  CHECK_FALSE(b.tree.node(1).closed_at);
  CHECK(b.residual_open == std::vector<int>{1});
}

TEST_CASE("empty trace gives an empty tree") {
  const TreeBuild b = build_tree({});
  CHECK(b.tree.size() == 0);
  CHECK(b.depth_after.empty());
}

TEST_CASE("build_tree tags engine errors with the step") {
  SUBCASE("first step must initiate") {
    const auto trace = steps({K});
    try {
      (void)build_tree(trace);
      FAIL("expected an error");
    } catch (const MalformedOperation& e) {
      CHECK(e.trace_index() == 0);
    }
  }
  SUBCASE("underflow later on") {
    const auto trace = steps({I, I, R(1), R(2)});
    try {
      (void)build_tree(trace);
      FAIL("expected an error");
    } catch (const UnderflowError& e) {
      CHECK(e.trace_index() == 3);
      CHECK(std::string(e.what()).find("trace index 3") != std::string::npos);
    }
  }
}

TEST_CASE("a fragment after the stack empties has no active space") {
  const TreeBuild b = build_tree(steps({I, R(1)}));
  CHECK(b.depth_after.back() == 0);
  CHECK_FALSE(b.active_space.back());
  CHECK(b.residual_open.empty());
}

TEST_CASE("random traces match the naive replay") {
  std::mt19937_64 rng(20260314);
  for (int n = 0; n < 500; ++n) {
    const auto ops = checks::random_trace(rng, 1 + n % 40);
    std::vector<TraceStep> trace;
    for (std::size_t i = 0; i < ops.size(); ++i) trace.push_back({ops[i], static_cast<int>(i), {}});
    const TreeBuild b = build_tree(trace);
    const checks::NaiveReplay naive = checks::naive_replay(ops);
    REQUIRE(naive.ok);
    CHECK(b.depth_after == naive.depth_after);
    REQUIRE(b.tree.size() == static_cast<std::size_t>(naive.pushes));
    CHECK(static_cast<int>(b.final_stack.depth()) == naive.pushes - naive.pops);
    for (int id = 1; id <= naive.pushes; ++id) {
      const auto k = static_cast<std::size_t>(id - 1);
      CHECK(b.tree.depth(id) == naive.push_depth[k]);
      CHECK(b.tree.parent(id).value_or(0) == naive.push_parent[k]);
    }
    // each space closes at most once, and only the residual ones stay open
    std::size_t open = 0;
    for (const auto& node : b.tree.nodes()) {
      if (!node.closed_at) {
        ++open;
      } else {
        CHECK(*node.closed_at > node.opened_at);
      }
    }
    CHECK(open == b.residual_open.size());
    CHECK(b.final_stack.closed_spaces().size() == static_cast<std::size_t>(naive.pops));
  }
}

}  // TEST_SUITE
