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

// Prosodic and lexical annotations carried by transcript tokens.

#ifndef FOCUSSEG_ANNOTATION_HPP_
#define FOCUSSEG_ANNOTATION_HPP_

#include <array>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <string>
#include <string_view>
#include <utility>

#include "focusseg/errors.hpp"

namespace focusseg {

enum class Accent : std::uint8_t { Hstar, Lstar, Deaccented, Unmarked };
enum class Boundary : std::uint8_t { None, Fall, ContinuationRise };
enum class Phonation : std::uint8_t { Normal, Creaky };
enum class PitchRange : std::uint8_t { Normal, Expanded, Reduced };

enum class TokenFlag : std::uint8_t {
  Coordination,
  NonpronominalRepetition,
  OwnIntonationalPhrase,
  TurnInitial,
  UtteranceInitial,
  Pronominal,
  RelativeClause,
  LexicalClosure,
  Prompt,
};

// Discourse function of the speech immediately before or after a fragment.
enum class DiscourseFunction : std::uint8_t {
  CuePhrase,
  Acknowledgment,
  Closure,
  FilledPause,
  Repair,
  Topical,
};

enum class TurnPosition : std::uint8_t { Initiating, Continuing };

namespace detail {

template <typename E, std::size_t N>
using NameTable = std::array<std::pair<E, std::string_view>, N>;

inline constexpr NameTable<Accent, 4> kAccentNames{{
    {Accent::Hstar, "Hstar"},
    {Accent::Lstar, "Lstar"},
    {Accent::Deaccented, "deaccented"},
    {Accent::Unmarked, "unmarked"},
}};
inline constexpr NameTable<Boundary, 3> kBoundaryNames{{
    {Boundary::None, "none"},
    {Boundary::Fall, "fall"},
    {Boundary::ContinuationRise, "continuation_rise"},
}};
inline constexpr NameTable<Phonation, 2> kPhonationNames{{
    {Phonation::Normal, "normal"},
    {Phonation::Creaky, "creaky"},
}};
inline constexpr NameTable<PitchRange, 3> kPitchRangeNames{{
    {PitchRange::Normal, "normal"},
    {PitchRange::Expanded, "expanded"},
    {PitchRange::Reduced, "reduced"},
}};
inline constexpr NameTable<TokenFlag, 9> kTokenFlagNames{{
    {TokenFlag::Coordination, "coordination"},
    {TokenFlag::NonpronominalRepetition, "nonpronominal_repetition"},
    {TokenFlag::OwnIntonationalPhrase, "own_intonational_phrase"},
    {TokenFlag::TurnInitial, "turn_initial"},
    {TokenFlag::UtteranceInitial, "utterance_initial"},
    {TokenFlag::Pronominal, "pronominal"},
    {TokenFlag::RelativeClause, "relative_clause"},
    {TokenFlag::LexicalClosure, "lexical_closure"},
    {TokenFlag::Prompt, "prompt"},
}};
inline constexpr NameTable<DiscourseFunction, 6> kFunctionNames{{
    {DiscourseFunction::CuePhrase, "cue_phrase"},
    {DiscourseFunction::Acknowledgment, "acknowledgment"},
    {DiscourseFunction::Closure, "closure"},
    {DiscourseFunction::FilledPause, "filled_pause"},
    {DiscourseFunction::Repair, "repair"},
    {DiscourseFunction::Topical, "topical"},
}};
inline constexpr NameTable<TurnPosition, 2> kTurnNames{{
    {TurnPosition::Initiating, "initiating"},
    {TurnPosition::Continuing, "continuing"},
}};

template <typename E, std::size_t N>
constexpr std::string_view name_of(const NameTable<E, N>& table, E value) {
  for (const auto& [v, n] : table) {
    if (v == value) return n;
  }
  return "?";
}

template <typename E, std::size_t N>
std::optional<E> parse_name(const NameTable<E, N>& table, std::string_view name) {
  for (const auto& [v, n] : table) {
    if (n == name) return v;
  }
  return std::nullopt;
}

}  // namespace detail

inline std::string_view to_string(Accent v) { return detail::name_of(detail::kAccentNames, v); }
inline std::string_view to_string(Boundary v) { return detail::name_of(detail::kBoundaryNames, v); }
inline std::string_view to_string(Phonation v) { return detail::name_of(detail::kPhonationNames, v); }
inline std::string_view to_string(PitchRange v) { return detail::name_of(detail::kPitchRangeNames, v); }
inline std::string_view to_string(TokenFlag v) { return detail::name_of(detail::kTokenFlagNames, v); }
inline std::string_view to_string(DiscourseFunction v) { return detail::name_of(detail::kFunctionNames, v); }
inline std::string_view to_string(TurnPosition v) { return detail::name_of(detail::kTurnNames, v); }

// Parse helpers throw SchemaError naming the offending field.
template <typename E>
E parse_enum(std::string_view name, std::string_view field);

#define FOCUSSEG_PARSE_ENUM(Type, table)                                         \
  template <>                                                                    \
  inline Type parse_enum<Type>(std::string_view name, std::string_view field) {  \
    if (auto v = detail::parse_name(detail::table, name)) return *v;             \
    throw SchemaError("bad value '" + std::string(name) + "' for " +             \
                      std::string(field));                                       \
  }
FOCUSSEG_PARSE_ENUM(Accent, kAccentNames)
FOCUSSEG_PARSE_ENUM(Boundary, kBoundaryNames)
FOCUSSEG_PARSE_ENUM(Phonation, kPhonationNames)
FOCUSSEG_PARSE_ENUM(PitchRange, kPitchRangeNames)
FOCUSSEG_PARSE_ENUM(TokenFlag, kTokenFlagNames)
FOCUSSEG_PARSE_ENUM(DiscourseFunction, kFunctionNames)
FOCUSSEG_PARSE_ENUM(TurnPosition, kTurnNames)
#undef FOCUSSEG_PARSE_ENUM

class TokenFlags {
 public:
  constexpr TokenFlags() = default;
  constexpr TokenFlags(std::initializer_list<TokenFlag> flags) {
    for (TokenFlag f : flags) set(f);
  }
  constexpr void set(TokenFlag f) { bits_ |= bit(f); }
  constexpr bool has(TokenFlag f) const { return (bits_ & bit(f)) != 0; }
  constexpr bool empty() const { return bits_ == 0; }
  friend constexpr bool operator==(TokenFlags, TokenFlags) = default;

 private:
  static constexpr std::uint16_t bit(TokenFlag f) {
    return static_cast<std::uint16_t>(1u << static_cast<unsigned>(f));
  }
  std::uint16_t bits_ = 0;
};

}  // namespace focusseg

#endif  // FOCUSSEG_ANNOTATION_HPP_
