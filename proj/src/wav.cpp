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

#include "focusseg/wav.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <fstream>

#include "focusseg/errors.hpp"

namespace focusseg {

namespace {

std::uint32_t read_u32(std::istream& in) {
  std::array<unsigned char, 4> b{};
  if (!in.read(reinterpret_cast<char*>(b.data()), 4)) {
    throw UnsupportedFormat("truncated RIFF header");
  }
  return b[0] | (b[1] << 8) | (b[2] << 16) | (static_cast<std::uint32_t>(b[3]) << 24);
}

std::uint16_t read_u16(std::istream& in) {
  std::array<unsigned char, 2> b{};
  if (!in.read(reinterpret_cast<char*>(b.data()), 2)) {
    throw UnsupportedFormat("truncated RIFF header");
  }
  return static_cast<std::uint16_t>(b[0] | (b[1] << 8));
}

std::string read_tag(std::istream& in) {
  std::string tag(4, '\0');
  if (!in.read(tag.data(), 4)) throw UnsupportedFormat("truncated RIFF header");
  return tag;
}

void write_u32(std::ostream& out, std::uint32_t v) {
  const char b[4] = {static_cast<char>(v & 0xff), static_cast<char>((v >> 8) & 0xff),
                     static_cast<char>((v >> 16) & 0xff), static_cast<char>((v >> 24) & 0xff)};
  out.write(b, 4);
}

void write_u16(std::ostream& out, std::uint16_t v) {
  const char b[2] = {static_cast<char>(v & 0xff), static_cast<char>((v >> 8) & 0xff)};
  out.write(b, 2);
}

}  // namespace

PcmAudio read_wav(std::istream& in) {
  if (read_tag(in) != "RIFF") throw UnsupportedFormat("not a RIFF file");
  read_u32(in);
  if (read_tag(in) != "WAVE") throw UnsupportedFormat("not a WAVE file");

  PcmAudio audio;
  bool have_fmt = false;
  while (true) {
    std::string tag;
    try {
      tag = read_tag(in);
    } catch (const UnsupportedFormat&) {
      throw UnsupportedFormat("no data chunk");
    }
    const std::uint32_t size = read_u32(in);
    if (tag == "fmt ") {
      if (size < 16) throw UnsupportedFormat("short fmt chunk");
      const std::uint16_t format = read_u16(in);
      const std::uint16_t channels = read_u16(in);
      const std::uint32_t rate = read_u32(in);
      read_u32(in);  // byte rate
      read_u16(in);  // block align
      const std::uint16_t bits = read_u16(in);
      in.ignore(static_cast<std::streamsize>(size - 16 + (size & 1)));
      if (format != 1) {
        throw UnsupportedFormat("only linear PCM is supported (format " +
                                std::to_string(format) + ")");
      }
      if (bits != 16) {
        throw UnsupportedFormat("16-bit samples required, got " + std::to_string(bits));
      }
      if (channels != 1) {
        throw UnsupportedFormat("mono required, got " + std::to_string(channels) +
                                " channels");
      }
      audio.channels = 1;
      audio.sample_rate = static_cast<int>(rate);
      have_fmt = true;
    } else if (tag == "data") {
      if (!have_fmt) throw UnsupportedFormat("data chunk before fmt chunk");
      // read in blocks: streamed files may declare an oversized chunk
      std::size_t remaining = size / 2;
      std::vector<char> raw(2 * 4096);
      while (remaining > 0 && in) {
        const std::size_t want = std::min<std::size_t>(remaining, 4096);
        in.read(raw.data(), static_cast<std::streamsize>(want * 2));
        const auto got = static_cast<std::size_t>(in.gcount()) / 2;
        for (std::size_t i = 0; i < got; ++i) {
          const auto lo = static_cast<unsigned char>(raw[2 * i]);
          const auto hi = static_cast<unsigned char>(raw[2 * i + 1]);
          const auto v = static_cast<std::int16_t>(lo | (hi << 8));
          audio.samples.push_back(v / 32768.0);
        }
        remaining -= got;
        if (got < want) break;
      }
      return audio;
    } else {
      in.ignore(static_cast<std::streamsize>(size + (size & 1)));
      if (!in) throw UnsupportedFormat("truncated chunk '" + tag + "'");
    }
  }
}

PcmAudio read_wav_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path + "'");
  return read_wav(in);
}

void write_wav(std::ostream& out, const PcmAudio& audio) {
  const auto data_bytes = static_cast<std::uint32_t>(audio.samples.size() * 2);
  const auto channels = static_cast<std::uint16_t>(audio.channels);
  const auto rate = static_cast<std::uint32_t>(audio.sample_rate);
  out.write("RIFF", 4);
  write_u32(out, 36 + data_bytes);
  out.write("WAVE", 4);
  out.write("fmt ", 4);
  write_u32(out, 16);
  write_u16(out, 1);
  write_u16(out, channels);
  write_u32(out, rate);
  write_u32(out, rate * channels * 2);
  write_u16(out, static_cast<std::uint16_t>(channels * 2));
  write_u16(out, 16);
  out.write("data", 4);
  write_u32(out, data_bytes);
  for (double s : audio.samples) {
    const double scaled = std::round(s * 32768.0);
    const auto v = static_cast<std::int16_t>(std::clamp(scaled, -32768.0, 32767.0));
    write_u16(out, static_cast<std::uint16_t>(v));
  }
}

void write_wav_file(const std::string& path, const PcmAudio& audio) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write '" + path + "'");
  write_wav(out, audio);
  if (!out) throw IoError("write failed for '" + path + "'");
}

}  // namespace focusseg
