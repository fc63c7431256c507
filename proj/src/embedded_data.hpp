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

// Data files compiled into the library (generated from data/ at build time).

#ifndef FOCUSSEG_EMBEDDED_DATA_HPP_
#define FOCUSSEG_EMBEDDED_DATA_HPP_

#include <string_view>

namespace focusseg::embedded {

std::string_view replication_lexicon();
std::string_view default_weights();

}  // namespace focusseg::embedded

#endif  // FOCUSSEG_EMBEDDED_DATA_HPP_
