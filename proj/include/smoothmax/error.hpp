// Copyright 2026 The smoothmax Authors
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

#ifndef SMOOTHMAX_ERROR_HPP_
#define SMOOTHMAX_ERROR_HPP_

#include <stdexcept>
#include <string>

namespace smoothmax {

enum class ErrorKind {
  kInvalidArgument,  // violated precondition on an argument
  kDomain,           // input outside the mathematical domain of an operation
  kNumerical,        // evaluation under/overflowed or failed to converge
  kCertification,    // a result could not be certified
  kRange,            // input too large for the available precision budget
  kIo,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void Fail(ErrorKind kind, const std::string& what) {
  throw Error(kind, what);
}

inline void Require(bool cond, const std::string& what) {
  if (!cond) Fail(ErrorKind::kInvalidArgument, what);
}

}  // namespace smoothmax

#endif  // SMOOTHMAX_ERROR_HPP_
