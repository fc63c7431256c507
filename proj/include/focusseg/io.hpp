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


// JSON Lines readers and writers for every file the pipeline exchanges.
//
// Each line holds one object with "schema_version": 1. Blank lines and
// lines starting with '#' are skipped. Readers throw SchemaError with the
// 1-based line number.

#ifndef FOCUSSEG_IO_HPP_
#define FOCUSSEG_IO_HPP_

#include <istream>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "focusseg/fragment_coder.hpp"
#include "focusseg/op_classifier.hpp"
#include "focusseg/pause_detect.hpp"

namespace focusseg {

inline constexpr int kSchemaVersion = 1;

// Transcript: one AnnotatedToken per line.
//   surface (required), speaker, accent, boundary, phonation, pitch_range,
//   pause_before_s, flags [..], start_s, end_s, topic, prior_function,
//   subsequent_function
std::vector<AnnotatedToken> read_transcript(std::istream& in);
void write_transcript(std::ostream& out, std::span<const AnnotatedToken> tokens);

std::vector<PauseRecord> read_pauses(std::istream& in);
void write_pauses(std::ostream& out, std::span<const PauseRecord> pauses);

// {"index", "kind", "pops"}; an optional "label" carries the segment label.
std::vector<TraceStep> read_trace(std::istream& in);
void write_trace(std::ostream& out, std::span<const TraceStep> trace);

// pause_before_s may be null; such records are kept (as 0.0) only when
// "no_pause" is true and otherwise excluded and counted.
struct CodedRecordSet {
  std::vector<CodedRecord> records;
  std::size_t excluded_missing_pause = 0;
};
CodedRecordSet read_coded(std::istream& in);
void write_coded(std::ostream& out, std::span<const CodedRecord> records);
// Spreadsheet mirror: fragment_index then the coded fields.
void write_coded_tsv(std::ostream& out, std::span<const CodedRecord> records);

// One line per classified fragment.
void write_audit(std::ostream& out, std::span<const Classification> classifications,
                 std::span<const SpeechFragment> fragments);

// File helpers; throw IoError when the file cannot be opened.
std::vector<AnnotatedToken> read_transcript_file(const std::string& path);
std::vector<PauseRecord> read_pauses_file(const std::string& path);
CodedRecordSet read_coded_file(const std::string& path);

}  // namespace focusseg

#endif  // FOCUSSEG_IO_HPP_
