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


// Published replication targets for the directions-dialogue corpus.

#ifndef FOCUSSEG_CHECKS_REFERENCE_HPP_
#define FOCUSSEG_CHECKS_REFERENCE_HPP_

#include <array>
#include <cstddef>
#include <string_view>

#include "focusseg/focus_engine.hpp"

namespace focusseg::reference {

// Token x operation cell: mean pause preceding `count` fragments.
struct TokenCell {
  std::string_view row;
  OpKind op;
  double mean;
  std::size_t count;
};

inline constexpr std::array<TokenCell, 24> kTokenCells{{
    {"And", OpKind::Initiate, 0.43, 3},
    {"And", OpKind::Retain, 0.25, 2},
    {"And", OpKind::Return, 0.25, 2},
    {"But", OpKind::Retain, 0.70, 1},
    {"But", OpKind::Return, 0.00, 1},
    {"But", OpKind::Replace, 0.10, 1},
    {"Now", OpKind::Replace, 0.55, 2},
    {"Oh", OpKind::Retain, 0.00, 2},
    {"So", OpKind::Retain, 0.15, 2},
    {"So", OpKind::Return, 0.15, 2},
    {"So", OpKind::Replace, 0.05, 1},
    {"Well", OpKind::Replace, 0.20, 2},
    {"Y'know", OpKind::Initiate, 0.40, 2},
    {"Ordinal", OpKind::Initiate, 0.40, 1},
    {"Acknowledgment", OpKind::Initiate, 0.10, 1},
    {"Acknowledgment", OpKind::Retain, 0.20, 7},
    {"Acknowledgment", OpKind::Replace, 0.90, 1},
    {"Filled Pause", OpKind::Initiate, 0.23, 6},
    {"Filled Pause", OpKind::Retain, 0.05, 4},
    {"Filled Pause", OpKind::Return, 0.00, 1},
    {"Unmarked", OpKind::Initiate, 0.35, 10},
    {"Unmarked", OpKind::Retain, 0.23, 37},
    {"Unmarked", OpKind::Return, 0.40, 5},
    {"Unmarked", OpKind::Replace, 1.15, 4},
}};

// Row margins (ALL column) of the token x operation table.
struct RowMargin {
  std::string_view row;
  double mean;
  std::size_t count;
};

inline constexpr std::array<RowMargin, 11> kTokenRowMargins{{
    {"And", 0.33, 7},
    {"But", 0.27, 3},
    {"Now", 0.55, 2},
    {"Oh", 0.00, 2},
    {"So", 0.13, 5},
    {"Well", 0.20, 2},
    {"Y'know", 0.40, 2},
    {"Ordinal", 0.40, 1},
    {"Acknowledgment", 0.27, 9},
    {"Filled Pause", 0.14, 11},
    {"Unmarked", 0.33, 56},
}};

// Column margins as printed in the token x operation table.
struct OpMargin {
  OpKind op;
  double mean;
  std::size_t count;
};

inline constexpr std::array<OpMargin, 4> kTokenColumnMargins{{
    {OpKind::Initiate, 0.32, 23},
    {OpKind::Retain, 0.21, 55},
    {OpKind::Return, 0.26, 11},
    {OpKind::Replace, 0.65, 11},
}};
inline constexpr double kGrandMean = 0.29;

// Mean pause by operation, with standard deviations.
struct OperationMean {
  OpKind op;
  std::size_t count;
  double mean;
  double sd;
};

inline constexpr std::array<OperationMean, 4> kOperationMeans{{
    {OpKind::Initiate, 23, 0.3217, 0.2173},
    {OpKind::Retain, 55, 0.2091, 0.1818},
    {OpKind::Return, 11, 0.2545, 0.2505},
    {OpKind::Replace, 11, 0.6500, 0.6727},
}};

// Marked / unmarked counts per operation.
struct MarkingCount {
  OpKind op;
  std::size_t marked;
  std::size_t unmarked;
};

inline constexpr std::array<MarkingCount, 4> kMarkingCounts{{
    {OpKind::Initiate, 13, 10},
    {OpKind::Retain, 18, 37},
    {OpKind::Return, 6, 5},
    {OpKind::Replace, 7, 4},
}};

// Marked / unmarked mean pause per operation.
struct MarkingMean {
  OpKind op;
  double marked;
  double unmarked;
};

inline constexpr std::array<MarkingMean, 4> kMarkingMeans{{
    {OpKind::Initiate, 0.30, 0.35},
    {OpKind::Retain, 0.17, 0.23},
    {OpKind::Return, 0.13, 0.40},
    {OpKind::Replace, 0.36, 1.15},
}};
inline constexpr double kMarkedMean = 0.24;
inline constexpr std::size_t kMarkedCount = 44;
inline constexpr double kMarkedSd = 0.24;
inline constexpr double kUnmarkedMean = 0.33;
inline constexpr std::size_t kUnmarkedCount = 56;
inline constexpr double kUnmarkedSd = 0.36;

// Token counts by segment position as published. They total 99 against
// 100 coded fragments and disagree with the token x operation cells for
// "And" and "Oh".
struct TokenPosition {
  std::string_view row;
  std::size_t initial;
  std::size_t internal;
};

inline constexpr std::array<TokenPosition, 11> kTokenPositions{{
    {"And", 3, 4},
    {"But", 2, 1},
    {"Now", 2, 0},
    {"Oh", 2, 0},
    {"So", 3, 2},
    {"Well", 2, 0},
    {"Y'know", 2, 0},
    {"Ordinal", 1, 0},
    {"Acknowledgment", 2, 7},
    {"Filled Pause", 7, 4},
    {"Unmarked", 19, 37},
}};

// Unfilled pause inventory: reported duration in tenths -> counts.
struct PauseBin {
  int tenths;
  std::size_t initial;
  std::size_t internal;
};

inline constexpr std::array<PauseBin, 12> kPauseBins{{
    {0, 5, 15},
    {1, 6, 11},
    {2, 3, 15},
    {3, 4, 5},
    {4, 11, 5},
    {5, 1, 5},
    {6, 3, 4},
    {7, 4, 2},
    {8, 1, 0},
    {9, 1, 0},
    {17, 1, 0},
    {20, 1, 0},
}};
inline constexpr double kInitialPauseAverage = 0.422;
inline constexpr double kInternalPauseAverage = 0.224;

// Published test statistics; the per-record data behind them is not
// available, so only their dfs and directions are replicable.
inline constexpr double kAnovaF = 7.31;
inline constexpr int kAnovaDfBetween = 3;
inline constexpr int kAnovaDfWithin = 96;
inline constexpr double kSegmentsR = 0.357;
inline constexpr double kDepthF = 0.1861;
inline constexpr int kDepthDfWithin = 98;
inline constexpr double kMarkingT = 1.58;
inline constexpr int kMarkingTDf = 96;
inline constexpr double kMarkingP = 0.12;

}  // namespace focusseg::reference

#endif  // FOCUSSEG_CHECKS_REFERENCE_HPP_
