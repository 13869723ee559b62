// Copyright 2026 The lexdiv Authors.
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

#ifndef LEXDIV_ERRORS_HPP_
#define LEXDIV_ERRORS_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace lexdiv {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class IoError : public Error {
 public:
  using Error::Error;
};

// Invalid byte sequence in an input file; carries the 1-based line number.
class DecodeError : public Error {
 public:
  DecodeError(const std::string& what, std::size_t line_number)
      : Error(what), line_number_(line_number) {}
  std::size_t line_number() const { return line_number_; }

 private:
  std::size_t line_number_;
};

class EmptyCorpusError : public Error {
 public:
  using Error::Error;
};

// Requested split sizes exceed the available sentence pairs.
class SizeError : public Error {
 public:
  SizeError(const std::string& what, std::size_t available)
      : Error(what), available_(available) {}
  std::size_t available() const { return available_; }

 private:
  std::size_t available_;
};

// A metric has no defined value on this input (e.g. Yule's I when every
// type is a singleton, or MTLD with factor count zero). Never encoded as
// NaN or a sentinel; callers that tolerate it catch this type.
class UndefinedResultError : public Error {
 public:
  using Error::Error;
};

class DomainError : public Error {
 public:
  using Error::Error;
};

}  // namespace lexdiv

#endif  // LEXDIV_ERRORS_HPP_
