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


#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "focusseg/cue_lexicon.hpp"
#include "focusseg/errors.hpp"

using namespace focusseg;

namespace {

const CueLexicon& lex() { return CueLexicon::replication(); }

OpSet ops_of(std::string_view surface) {
  auto e = lex().lookup(surface);
  REQUIRE(e);
  return e->candidate_ops;
}

CueContext initial_context(std::vector<Accent> accents, bool coordination = false,
                           bool own_phrase = false) {
  CueContext c;
  c.utterance_initial = true;
  c.coordination = coordination;
  c.own_intonational_phrase = own_phrase;
  c.accents = std::move(accents);
  return c;
}

}  // namespace

TEST_SUITE("cue_lexicon") {

TEST_CASE("marker to operation mapping") {
  using K = OpKind;
  CHECK(ops_of("and") == OpSet{K::Retain, K::Return});
  CHECK(ops_of("but") == OpSet{K::Retain, K::Replace, K::Return});
  CHECK(ops_of("i mean") == OpSet{K::Initiate, K::Retain});
  CHECK(ops_of("so") == OpSet{K::Return, K::Replace});
  CHECK(ops_of("because") == OpSet{K::Initiate});
  CHECK(ops_of("now") == OpSet{K::Replace});
  CHECK(ops_of("well") == OpSet{K::Replace});
  CHECK(ops_of("you know") == OpSet{K::Retain, K::Initiate});
  CHECK(ops_of("to begin with") == OpSet{K::Initiate});
  CHECK(ops_of("finally") == OpSet{K::Replace});
}

TEST_CASE("lookup examples") {
  auto now = lex().lookup("now");
  REQUIRE(now);
  CHECK(now->token_class == LexicalClass::Cue);
  CHECK_FALSE(now->ordinal_rank);
  CHECK_FALSE(lex().lookup("the"));
  CHECK_FALSE(lex().lookup(""));

  auto tbw = lex().lookup("to begin with");
  REQUIRE(tbw);
  CHECK(tbw->ordinal_rank == OrdinalRank::First);
  for (const char* s : {"in the first place", "first of all", "first", "firstly"}) {
    auto e = lex().lookup(s);
    REQUIRE_MESSAGE(e, s);
    CHECK(e->ordinal_rank == OrdinalRank::First);
    CHECK(e->table_row == "Ordinal");
  }
  for (const char* s : {"secondly", "second", "thirdly", "finally", "lastly"}) {
    auto e = lex().lookup(s);
    REQUIRE_MESSAGE(e, s);
    CHECK(e->ordinal_rank == OrdinalRank::Subsequent);
    CHECK(e->candidate_ops == OpSet{OpKind::Replace});
  }
}

TEST_CASE("aliases and normalization") {
  CHECK(CueLexicon::normalize("  Y'know,  ") == "yknow");
  CHECK(CueLexicon::normalize("First  of\tALL!") == "first of all");
  CHECK(lex().lookup("yknow")->surface == "you know");
  CHECK(lex().lookup("Y'know")->surface == "you know");
  CHECK(lex().lookup("So,")->surface == "so");
  CHECK(lex().lookup("Uh-huh")->token_class == LexicalClass::Acknowledgment);
}

TEST_CASE("token classes outside the cue inventory") {
  for (const char* s : {"ok", "sure", "uh-huh", "good"}) {
    auto e = lex().lookup(s);
    REQUIRE_MESSAGE(e, s);
    CHECK(e->token_class == LexicalClass::Acknowledgment);
  }
  for (const char* s : {"um", "uh"}) {
    auto e = lex().lookup(s);
    REQUIRE_MESSAGE(e, s);
    CHECK(e->token_class == LexicalClass::FilledPause);
  }
  auto oh = lex().lookup("oh");
  REQUIRE(oh);
  CHECK(oh->corpus_derived);
  CHECK(oh->candidate_ops == OpSet{OpKind::Retain});
}

TEST_CASE("every entry has candidates, ordinals carry a rank") {
  for (const auto& e : lex().entries()) {
    CHECK_MESSAGE(!e.candidate_ops.empty(), e.surface);
    if (e.table_row == "Ordinal") CHECK_MESSAGE(e.ordinal_rank.has_value(), e.surface);
  }
}

TEST_CASE("longest match prefers the multi-word entry") {
  const std::vector<std::string> words{"first", "of", "all", "go", "left"};
  auto m = lex().longest_match(words, 0);
  REQUIRE(m);
  CHECK(m->entry.surface == "first of all");
  CHECK(m->length == 3);
  CHECK_FALSE(lex().longest_match(words, 3));

  const std::vector<std::string> yk{"you", "know", "it"};
  auto y = lex().longest_match(yk, 0);
  REQUIRE(y);
  CHECK(y->length == 2);
  CHECK(y->entry.surface == "you know");
}

TEST_CASE("cascade: coordinated and is not a cue") {
  const auto a = *lex().lookup("and");
  auto j = judge_cue_use(a, initial_context({Accent::Deaccented}, true));
  CHECK_FALSE(j.is_cue);
  CHECK(j.rule_fired == CueRule::ConjunctionTest);
}

TEST_CASE("cascade: mid-utterance now is not a cue") {
  const auto now = *lex().lookup("now");
  CueContext c = initial_context({Accent::Deaccented});
  c.utterance_initial = false;
  auto j = judge_cue_use(now, c);
  CHECK_FALSE(j.is_cue);
  CHECK(j.rule_fired == CueRule::Position);
}

TEST_CASE("cascade: deaccented initial now is a cue") {
  const auto now = *lex().lookup("now");
  auto j = judge_cue_use(now, initial_context({Accent::Deaccented}));
  CHECK(j.is_cue);
  CHECK(j.rule_fired == CueRule::Intonation);
}

TEST_CASE("cascade: L* and own phrase count as cue intonation") {
  const auto so = *lex().lookup("so");
  CHECK(judge_cue_use(so, initial_context({Accent::Lstar})).rule_fired == CueRule::Intonation);
  CHECK(judge_cue_use(so, initial_context({Accent::Hstar}, false, true)).is_cue);
  const auto fa = *lex().lookup("first of all");
  CHECK(judge_cue_use(fa, initial_context({Accent::Lstar, Accent::Deaccented, Accent::Lstar}))
            .is_cue);
}

TEST_CASE("cascade defaults") {
  const auto now = *lex().lookup("now");
  auto j = judge_cue_use(now, initial_context({Accent::Hstar}));
  CHECK(j.is_cue);
  CHECK(j.rule_fired == CueRule::None);

  const auto but = *lex().lookup("but");
  auto k = judge_cue_use(but, initial_context({Accent::Hstar}));
  CHECK_FALSE(k.is_cue);
  CHECK(k.rule_fired == CueRule::None);
}

TEST_CASE("non-initial candidates are never cues") {
  for (const auto& e : lex().entries()) {
    if (e.token_class != LexicalClass::Cue) continue;
    for (Accent a : {Accent::Hstar, Accent::Lstar, Accent::Deaccented, Accent::Unmarked}) {
      CueContext c = initial_context({a}, false, true);
      c.utterance_initial = false;
      CHECK_FALSE(judge_cue_use(e, c).is_cue);
    }
  }
}

TEST_CASE("missing annotations are reported") {
  const auto a = *lex().lookup("and");
  CueContext c;
  CHECK_THROWS_AS(judge_cue_use(a, c), MissingAnnotation);
  c.utterance_initial = true;
  CHECK_THROWS_AS(judge_cue_use(a, c), MissingAnnotation);  // coordination unset
  c.coordination = false;
  CHECK_THROWS_AS(judge_cue_use(a, c), MissingAnnotation);
  c.own_intonational_phrase = false;
  CHECK_THROWS_AS(judge_cue_use(a, c), MissingAnnotation);  // no accents
  c.accents = {Accent::Deaccented};
  CHECK(judge_cue_use(a, c).is_cue);
}

TEST_CASE("lexicon file parsing") {
  std::istringstream good(
      "# comment\n"
      "\n"
      R"({"schema_version": 1, "surface": "Anyway", "gloss": "topic shift", "candidate_ops": ["Replace"], "class": "cue"})"
      "\n");
  CueLexicon l = CueLexicon::from_jsonl(good);
  REQUIRE(l.entries().size() == 1);
  CHECK(l.lookup("anyway")->candidate_ops == OpSet{OpKind::Replace});

  auto line_of = [](const std::string& text) -> std::size_t {
    std::istringstream in(text);
    try {
      (void)CueLexicon::from_jsonl(in);
    } catch (const SchemaError& e) {
      return e.line();
    }
    return 0;
  };
  const std::string ok_line =
      R"({"schema_version": 1, "surface": "so", "candidate_ops": ["Return"], "class": "cue"})";
  CHECK(line_of(ok_line + "\n{not json\n") == 2);
  CHECK(line_of(R"({"schema_version": 1, "surface": "so", "candidate_ops": [], "class": "cue"})") == 1);
  CHECK(line_of(R"({"schema_version": 1, "surface": "so", "candidate_ops": ["Jump"], "class": "cue"})") == 1);
  CHECK(line_of(R"({"schema_version": 1, "surface": "x", "candidate_ops": ["Initiate"], "class": "cue", "table_row": "Ordinal"})") == 1);
  CHECK(line_of(ok_line + "\n" + ok_line + "\n") == 2);  // duplicate surface
  CHECK_THROWS_AS(CueLexicon::load_file("/nonexistent/lexicon.jsonl"), IoError);
}

}  // TEST_SUITE
