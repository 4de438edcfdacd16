// Copyright 2026 The qradar Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef QRADAR_ERRORS_H
#define QRADAR_ERRORS_H

#include <stdexcept>
#include <string>

namespace qradar {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/// An argument is outside the domain of the operation (zero vector, p >= 1, negative power, ...).
class DegenerateInput : public Error {
   public:
    using Error::Error;
};

/// Subsystem dimensions or matrix shapes do not line up.
class DimensionMismatch : public Error {
   public:
    using Error::Error;
};

/// A numerical invariant failed beyond roundoff (non-Hermitian input, negative eigenvalue, metric out of range).
class NumericalDomain : public Error {
   public:
    using Error::Error;
};

/// Malformed scenario document. Carries the 1-based line number (0 when unknown) and the offending key.
class ParseError : public Error {
   public:
    ParseError(const std::string &message, int line, std::string field = {})
        : Error(line > 0 ? "line " + std::to_string(line) + ": " + message : message),
          line_(line),
          field_(std::move(field)) {
    }
    int line() const {
        return line_;
    }
    const std::string &field() const {
        return field_;
    }

   private:
    int line_;
    std::string field_;
};

/// Scenario is well-formed but violates a constraint. Names the field.
class ValidationError : public Error {
   public:
    ValidationError(std::string field, const std::string &message)
        : Error(field + ": " + message), field_(std::move(field)) {
    }
    const std::string &field() const {
        return field_;
    }

   private:
    std::string field_;
};

}  // namespace qradar

#endif
