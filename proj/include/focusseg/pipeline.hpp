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


// Transcript to coded records in one call.

#ifndef FOCUSSEG_PIPELINE_HPP_
#define FOCUSSEG_PIPELINE_HPP_

#include <optional>
#include <span>
#include <vector>

#include "focusseg/cue_lexicon.hpp"
#include "focusseg/fragment_coder.hpp"
#include "focusseg/op_classifier.hpp"

namespace focusseg {

struct PipelineResult {
  std::vector<SpeechFragment> fragments;
  // Unset when the operations came from a supplied trace.
  std::optional<Segmentation> segmentation;
  std::vector<TraceStep> trace;
  TreeBuild tree;
  std::vector<CodedRecord> records;
};

// Fragments the transcript, classifies each fragment (or takes the
// supplied trace, one step per fragment) and codes the result.
PipelineResult run_pipeline(std::span<const AnnotatedToken> transcript,
                            std::span<const PauseRecord> pauses = {},
                            const CueLexicon& lexicon = CueLexicon::replication(),
                            const ClassifierConfig& config = ClassifierConfig::defaults(),
                            std::optional<std::span<const TraceStep>> trace = std::nullopt);

}  // namespace focusseg

#endif  // FOCUSSEG_PIPELINE_HPP_
