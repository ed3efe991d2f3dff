// Copyright 2026 The cablegrip Authors.
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

#ifndef CABLEGRIP_ERRORS_H_
#define CABLEGRIP_ERRORS_H_

#include <stdexcept>
#include <string>
#include <utility>

namespace cablegrip {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A joint value (or servo command) lies outside its configured range.
class OutOfRangeError : public Error {
 public:
  OutOfRangeError(std::string joint, const std::string& what)
      : Error(what), joint_(std::move(joint)) {}
  const std::string& joint() const { return joint_; }

 private:
  std::string joint_;
};

// Orientation decomposition hit the roll/pitch gimbal alignment.
class SingularOrientationError : public Error {
 public:
  using Error::Error;
};

// Orientation is representable but not within the joint limits.
class InfeasibleOrientationError : public Error {
 public:
  InfeasibleOrientationError(std::string joint, const std::string& what)
      : Error(what), joint_(std::move(joint)) {}
  const std::string& joint() const { return joint_; }

 private:
  std::string joint_;
};

// Inconsistent mechanical configuration (bad params, bad cable route).
class ConfigurationError : public Error {
 public:
  using Error::Error;
};

// A scene or task document failed schema or invariant checks. `record`
// names the offending entry, e.g. "components[3] (ram_2)".
class ValidationError : public Error {
 public:
  ValidationError(std::string record, const std::string& what)
      : Error(record + ": " + what), record_(std::move(record)) {}
  const std::string& record() const { return record_; }

 private:
  std::string record_;
};

// Unknown component/body id.
class LookupError : public Error {
 public:
  using Error::Error;
};

class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace cablegrip

#endif  // CABLEGRIP_ERRORS_H_
