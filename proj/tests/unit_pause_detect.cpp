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


#include <cmath>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "focusseg/errors.hpp"
#include "focusseg/pause_detect.hpp"
#include "focusseg/wav.hpp"
#include "oracles.hpp"

using namespace focusseg;
using checks::Piece;

namespace {

std::vector<PauseRecord> pauses_in(const PcmAudio& a,
                                   std::optional<std::span<const WordSpan>> spans = std::nullopt) {
  return detect_pauses(frame_energy(a), spans);
}

PcmAudio wav_round_trip(const PcmAudio& a) {
  std::stringstream buf;
  write_wav(buf, a);
  return read_wav(buf);
}

std::string le16(int v) {
  std::string s(2, '\0');
  s[0] = static_cast<char>(v & 0xff);
  s[1] = static_cast<char>((v >> 8) & 0xff);
  return s;
}
std::string le32(long v) { return le16(static_cast<int>(v & 0xffff)) + le16(static_cast<int>(v >> 16)); }

// Minimal RIFF header with the given format fields and no samples.
std::string header(int format, int channels, int rate, int bits) {
  std::string fmt = le16(format) + le16(channels) + le32(rate) +
                    le32(static_cast<long>(rate) * channels * bits / 8) +
                    le16(channels * bits / 8) + le16(bits);
  std::string body = "WAVE" + std::string("fmt ") + le32(16) + fmt + "data" + le32(0);
  return "RIFF" + le32(static_cast<long>(body.size())) + body;
}

}  // namespace

TEST_SUITE("pause_detect") {

TEST_CASE("rounding to the nearest tenth, ties up") {
  CHECK(round_to_tenth(0.18) == doctest::Approx(0.2));
  CHECK(round_to_tenth(0.42) == doctest::Approx(0.4));
  CHECK(round_to_tenth(0.05) == doctest::Approx(0.1));
  CHECK(round_to_tenth(0.15) == doctest::Approx(0.2));
  CHECK(round_to_tenth(0.25) == doctest::Approx(0.3));
  CHECK(round_to_tenth(0.04) == doctest::Approx(0.0));
  CHECK(round_to_tenth(2.0) == doctest::Approx(2.0));
}

TEST_CASE("digital silence gives zero-energy frames") {
  PcmAudio a;
  a.samples.assign(16000, 0.0);
  const auto f = frame_energy(a);
  CHECK(f.energies.size() == 100);
  for (double e : f.energies) CHECK(e == 0.0);
}

TEST_CASE("frame count rounds up for a partial frame") {
  PcmAudio a;
  a.samples.assign(16050, 0.01);
  CHECK(frame_energy(a).energies.size() == 101);
}

TEST_CASE("a stationary sine has flat frame energy") {
  PcmAudio a;
  for (int i = 0; i < 16000; ++i) {
    a.samples.push_back(0.99 * std::sin(2 * std::numbers::pi * 500.0 * i / 16000.0));
  }
  const auto f = frame_energy(a);
  const double expected = 0.99 / std::sqrt(2.0);
  for (double e : f.energies) CHECK(e == doctest::Approx(expected).epsilon(0.01));
}

TEST_CASE("frame energies match a sample-by-sample oracle") {
  const PcmAudio a = checks::synth_audio({{true, 0.3}, {false, 0.2}, {true, 0.257}});
  const auto f = frame_energy(a);
  const auto oracle = checks::oracle_frame_rms(a, 10.0, 10.0);
  REQUIRE(f.energies.size() == oracle.size());
  for (std::size_t i = 0; i < oracle.size(); ++i) {
    CHECK(f.energies[i] == doctest::Approx(oracle[i]).epsilon(1e-6));
  }
}

TEST_CASE("format checks") {
  PcmAudio stereo;
  stereo.channels = 2;
  stereo.samples.assign(200, 0.0);
  CHECK_THROWS_AS(frame_energy(stereo), UnsupportedFormat);
  PcmAudio slow;
  slow.sample_rate = 4000;
  slow.samples.assign(200, 0.0);
  CHECK_THROWS_AS(frame_energy(slow), UnsupportedFormat);
}

TEST_CASE("one inserted silence is one pause") {
  const PcmAudio a = checks::synth_audio({{true, 0.5}, {false, 0.42}, {true, 0.5}});
  const auto p = pauses_in(a);
  REQUIRE(p.size() == 1);
  CHECK(p[0].reported_duration_s == doctest::Approx(0.4));
  CHECK(p[0].start_s == doctest::Approx(0.5).epsilon(0.03));
  CHECK_FALSE(p[0].suspect);
  CHECK_FALSE(p[0].position);
}

TEST_CASE("continuous tone has no pauses") {
  CHECK(pauses_in(checks::synth_audio({{true, 2.0}})).empty());
}

TEST_CASE("silence at the edges of a recording is not a pause") {
  CHECK(pauses_in(checks::synth_audio({{false, 0.5}, {true, 1.0}, {false, 0.5}})).empty());
}

TEST_CASE("k inserted silences give k ordered disjoint pauses") {
  const std::vector<double> gaps{0.18, 0.42, 0.90, 2.0, 0.3};
  std::vector<Piece> pieces{{true, 0.4}};
  for (double g : gaps) {
    pieces.push_back({false, g});
    pieces.push_back({true, 0.4});
  }
  const PcmAudio a = checks::synth_audio(pieces);
  const auto p = pauses_in(a);
  REQUIRE(p.size() == gaps.size());
  for (std::size_t i = 0; i < gaps.size(); ++i) {
    CHECK(std::abs(p[i].raw_duration_s - gaps[i]) <= 0.05);
    CHECK(p[i].reported_duration_s == doctest::Approx(round_to_tenth(gaps[i])));
    if (i > 0) CHECK(p[i].start_s >= p[i - 1].end_s());
  }
}

TEST_CASE("uniform gain does not move the pauses") {
  const PcmAudio a = checks::synth_audio({{true, 0.4}, {false, 0.18}, {true, 0.4}, {false, 0.9}, {true, 0.4}});
  const auto base = pauses_in(a);
  for (double db : {-12.0, -6.0, 6.0, 12.0}) {
    CHECK(pauses_in(checks::apply_gain(a, db)) == base);
  }
}

TEST_CASE("plosive closure inside a word span is dropped") {
  const PcmAudio a = checks::synth_audio(
      {{true, 0.5}, {false, 0.06}, {true, 0.4}, {false, 0.3}, {true, 0.5}});
  const std::vector<WordSpan> spans{{0.3, 0.7}, {1.26, 1.7}};
  const auto with = pauses_in(a, spans);
  REQUIRE(with.size() == 1);
  CHECK(with[0].reported_duration_s == doctest::Approx(0.3));

  const auto without = pauses_in(a);
  REQUIRE(without.size() == 2);
  CHECK(without[0].suspect);
  CHECK_FALSE(without[1].suspect);
}

TEST_CASE("silences shorter than the minimum are ignored") {
  const PcmAudio a = checks::synth_audio({{true, 0.5}, {false, 0.03}, {true, 0.5}});
  CHECK(pauses_in(a).empty());
}

TEST_CASE("the threshold tracks the noise floor") {
  const PcmAudio a = checks::synth_audio({{true, 0.5}, {false, 0.5}, {true, 0.5}});
  const double t0 = silence_threshold_db(frame_energy(a));
  const double t12 = silence_threshold_db(frame_energy(checks::apply_gain(a, 12.0)));
  CHECK(t12 - t0 == doctest::Approx(12.0).epsilon(0.01));
}

TEST_CASE("wav round trip") {
  const PcmAudio a = checks::synth_audio({{true, 0.1}, {false, 0.05}});
  const PcmAudio b = wav_round_trip(a);
  CHECK(b.sample_rate == a.sample_rate);
  CHECK(b.channels == 1);
  REQUIRE(b.samples.size() == a.samples.size());
  for (std::size_t i = 0; i < a.samples.size(); ++i) {
    CHECK(std::abs(b.samples[i] - a.samples[i]) <= 1.0 / 32768.0);
  }
}

TEST_CASE("wav writer clips") {
  PcmAudio a;
  a.samples = {2.0, -2.0};
  const PcmAudio b = wav_round_trip(a);
  CHECK(b.samples[0] == doctest::Approx(32767.0 / 32768.0));
  CHECK(b.samples[1] == doctest::Approx(-1.0));
}

TEST_CASE("wav reader rejects what it cannot read") {
  auto read = [](const std::string& bytes) {
    std::istringstream in(bytes);
    return read_wav(in);
  };
  CHECK_THROWS_AS(read(""), UnsupportedFormat);
  CHECK_THROWS_AS(read("RIFF...."), UnsupportedFormat);
  CHECK_THROWS_AS(read(header(1, 2, 16000, 16)), UnsupportedFormat);
  CHECK_THROWS_AS(read(header(1, 1, 16000, 8)), UnsupportedFormat);
  CHECK_THROWS_AS(read(header(3, 1, 16000, 32)), UnsupportedFormat);
  CHECK_NOTHROW(read(header(1, 1, 16000, 16)));
  CHECK_THROWS_AS(read_wav_file("/nonexistent/file.wav"), IoError);
}

}  // TEST_SUITE
