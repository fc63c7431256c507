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

#ifndef FOCUSSEG_ERRORS_HPP_
#define FOCUSSEG_ERRORS_HPP_

#include <optional>
#include <stdexcept>
#include <string>

namespace focusseg {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Stack errors can be tagged with the trace position that produced them.
class StackError : public Error {
 public:
  explicit StackError(const std::string& msg) : Error(msg), message_(msg) {}

  void set_trace_index(std::size_t index) {
    trace_index_ = index;
    message_ = "trace index " + std::to_string(index) + ": " +
               std::string(Error::what());
  }
  std::optional<std::size_t> trace_index() const { return trace_index_; }
  const char* what() const noexcept override { return message_.c_str(); }

 private:
  std::optional<std::size_t> trace_index_;
  std::string message_;
};

class UnderflowError : public StackError {
 public:
  using StackError::StackError;
};

class EmptyStackError : public StackError {
 public:
  using StackError::StackError;
};

class MalformedOperation : public StackError {
 public:
  using StackError::StackError;
};

class MissingAnnotation : public Error {
 public:
  using Error::Error;
};

class UnsupportedFormat : public Error {
 public:
  using Error::Error;
};

class EmptyTranscript : public Error {
 public:
  using Error::Error;
};

class MisalignedPause : public Error {
 public:
  using Error::Error;
};

class LengthMismatch : public Error {
 public:
  using Error::Error;
};

class ZeroVariance : public Error {
 public:
  using Error::Error;
};

class DegenerateInput : public Error {
 public:
  using Error::Error;
};

class IoError : public Error {
 public:
  using Error::Error;
};

// Input that parses but violates a file schema. `line` is 1-based; 0 when
// the problem is not tied to one line.
class SchemaError : public Error {
 public:
  SchemaError(const std::string& msg, std::size_t line = 0)
      : Error(line ? "line " + std::to_string(line) + ": " + msg : msg),
        line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

}  // namespace focusseg

#endif  // FOCUSSEG_ERRORS_HPP_
