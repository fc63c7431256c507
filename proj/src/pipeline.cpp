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


#include "focusseg/pipeline.hpp"

#include <string>

#include "focusseg/errors.hpp"

namespace focusseg {

PipelineResult run_pipeline(std::span<const AnnotatedToken> transcript,
                            std::span<const PauseRecord> pauses, const CueLexicon& lexicon,
                            const ClassifierConfig& config,
                            std::optional<std::span<const TraceStep>> trace) {
  PipelineResult out;
  out.fragments = fragmentize(transcript, pauses, lexicon);
  if (trace) {
    if (trace->size() != out.fragments.size()) {
      throw LengthMismatch("trace has " + std::to_string(trace->size()) + " steps for " +
                           std::to_string(out.fragments.size()) + " fragments");
    }
    out.trace.assign(trace->begin(), trace->end());
    out.tree = build_tree(out.trace);
  } else {
    out.segmentation = segment_discourse(out.fragments, config);
    out.trace = out.segmentation->trace;
    out.tree = out.segmentation->tree;
  }
  out.records = code(out.fragments, out.trace, out.tree, function_labels(out.fragments),
                     turn_positions(out.fragments));
  return out;
}

}  // namespace focusseg
