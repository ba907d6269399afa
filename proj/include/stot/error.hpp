// Copyright 2026 The Authors.
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

#ifndef STOT_ERROR_H_
#define STOT_ERROR_H_

#include <stdexcept>
#include <string>

namespace stot {

// Bad user input (malformed files, out-of-range parameters). The CLI maps
// this to exit code 2. Programming errors (illegal moves, broken
// preconditions) use std::logic_error instead.
class InputError : public std::runtime_error {
 public:
  explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace stot

#endif  // STOT_ERROR_H_
