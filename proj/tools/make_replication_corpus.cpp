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


// Writes the bundled replication corpus and pause inventory.
//
//   make_replication_corpus <data-dir>

#include <fstream>
#include <iostream>
#include <string>

#include "corpus.hpp"
#include "focusseg/io.hpp"

int main(int argc, char** argv) {
  if (argc != 2) {
    std::cerr << "usage: make_replication_corpus <data-dir>\n";
    return 2;
  }
  const std::string dir = argv[1];
  std::ofstream corpus(dir + "/replication_corpus.jsonl");
  std::ofstream pauses(dir + "/replication_pauses.jsonl");
  if (!corpus || !pauses) {
    std::cerr << "cannot write into " << dir << "\n";
    return 1;
  }
  corpus << "# replication corpus: each token x operation cell holds `count` records at the cell mean\n";
  focusseg::write_coded(corpus, focusseg::checks::build_replication_corpus());
  pauses << "# unfilled pause inventory, one record per histogram entry\n";
  focusseg::write_pauses(pauses, focusseg::checks::build_pause_inventory());
  return 0;
}
