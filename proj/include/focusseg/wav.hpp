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

// RIFF WAVE reading and writing, 16-bit linear PCM only.

#ifndef FOCUSSEG_WAV_HPP_
#define FOCUSSEG_WAV_HPP_

#include <istream>
#include <ostream>
#include <string>
#include <vector>

namespace focusseg {

struct PcmAudio {
  int sample_rate = 16000;
  int channels = 1;
  std::vector<double> samples;  // interleaved, scaled to [-1, 1)

  double duration_s() const {
    return channels > 0 && sample_rate > 0
               ? static_cast<double>(samples.size()) / channels / sample_rate
               : 0.0;
  }
};

// Throws UnsupportedFormat for anything that is not 16-bit PCM mono
// (stereo is rejected, never downmixed) and IoError when the file cannot
// be opened.
PcmAudio read_wav(std::istream& in);
PcmAudio read_wav_file(const std::string& path);

// Samples are clipped to the 16-bit range.
void write_wav(std::ostream& out, const PcmAudio& audio);
void write_wav_file(const std::string& path, const PcmAudio& audio);

}  // namespace focusseg

#endif  // FOCUSSEG_WAV_HPP_
