// Copyright 2026 The d2t Authors.
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

#ifndef D2T_ERROR_H_
#define D2T_ERROR_H_

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>

namespace d2t {

// Base class for every error raised by the toolkit.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Bad caller-supplied data (empty strings, misaligned sequences, ...).
class InputError : public Error {
 public:
  using Error::Error;
};

// A malformed record in a line-oriented file. Carries the 1-based line.
class ParseError : public Error {
 public:
  ParseError(const std::string &what, std::size_t line)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

// Two records claim the same key.
class ConflictError : public Error {
 public:
  using Error::Error;
};

class MissingTemplateError : public Error {
 public:
  explicit MissingTemplateError(const std::string &predicate)
      : Error("no template for predicate '" + predicate + "'"),
        predicate_(predicate) {}
  // Variant raised while realizing a sequence; `index` is the triple's
  // position in the input.
  MissingTemplateError(const std::string &predicate, std::size_t index)
      : Error("no template for predicate '" + predicate + "' (triple " +
              std::to_string(index) + ")"),
        predicate_(predicate),
        index_(index) {}
  const std::string &predicate() const { return predicate_; }
  std::optional<std::size_t> index() const { return index_; }

 private:
  std::string predicate_;
  std::optional<std::size_t> index_;
};

// Token sequence longer than the model accepts.
class LengthError : public Error {
 public:
  LengthError(std::size_t length, std::size_t limit)
      : Error("sequence of length " + std::to_string(length) +
              " exceeds limit " + std::to_string(limit)),
        length_(length),
        limit_(limit) {}
  std::size_t length() const { return length_; }
  std::size_t limit() const { return limit_; }

 private:
  std::size_t length_;
  std::size_t limit_;
};

// Precondition of an internal contract was violated by the caller.
class ContractError : public Error {
 public:
  using Error::Error;
};

// A requested feature needs a backend that is not configured.
class CapabilityError : public Error {
 public:
  using Error::Error;
};

// Reading files, checkpoints or talking to external processes failed.
class IoError : public Error {
 public:
  using Error::Error;
};

// A failure inside one named stage of a multi-stage process (corpus
// building, generation). what() reads "<stage>: <message>".
class StageError : public Error {
 public:
  StageError(std::string stage, const std::string &message)
      : Error(stage + ": " + message), stage_(std::move(stage)), message_(message) {}
  const std::string &stage() const { return stage_; }
  const std::string &message() const { return message_; }

 private:
  std::string stage_;
  std::string message_;
};

}  // namespace d2t

#endif  // D2T_ERROR_H_
