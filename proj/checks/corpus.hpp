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


// The bundled replication corpus, rebuilt from the published cell means.

#ifndef FOCUSSEG_CHECKS_CORPUS_HPP_
#define FOCUSSEG_CHECKS_CORPUS_HPP_

#include <string_view>
#include <vector>

#include "focusseg/fragment_coder.hpp"
#include "focusseg/pause_detect.hpp"

namespace focusseg::checks {

// Each token x operation cell contributes `count` records whose pause is
// the cell mean. Records are ordered so the operation sequence is a valid
// stack trace: one Initiate, then eleven blocks of
//   Initiate, Initiate, Replace(1), Retain x5, Return(1).
std::vector<CodedRecord> build_replication_corpus();

// One record per published pause-histogram entry, positions labeled.
std::vector<PauseRecord> build_pause_inventory();

// Normalized opening form used for a token row ("" for Unmarked).
std::string_view surface_for_row(std::string_view row);

}  // namespace focusseg::checks

#endif  // FOCUSSEG_CHECKS_CORPUS_HPP_
