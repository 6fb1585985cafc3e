// Copyright 2026 The ratescore Authors
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

#ifndef RATESCORE_ERRORS_H_
#define RATESCORE_ERRORS_H_

#include <stdexcept>
#include <string>

namespace ratescore {

// Malformed or unreadable input: missing files, parse failures, bad tags.
// The command-line tool maps this to exit code 2.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Inputs that parse but violate a contract: out-of-range parameters,
// zero-variance data, degenerate labels. Exit code 3.
class ValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace ratescore

#endif  // RATESCORE_ERRORS_H_
