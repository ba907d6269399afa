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

#ifndef STOT_TESTS_TEST_UTIL_H_
#define STOT_TESTS_TEST_UTIL_H_

#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace stot::testing {

struct CheckFailure {
  std::string message;
};

#define STOT_CHECK(cond)                                                    \
  do {                                                                      \
    if (!(cond)) {                                                          \
      std::ostringstream oss_;                                              \
      oss_ << __FILE__ << ":" << __LINE__ << ": CHECK failed: " << #cond;   \
      throw stot::testing::CheckFailure{oss_.str()};                        \
    }                                                                       \
  } while (false)

#define STOT_CHECK_EQ(a, b)                                                 \
  do {                                                                      \
    if (!((a) == (b))) {                                                    \
      std::ostringstream oss_;                                              \
      oss_ << __FILE__ << ":" << __LINE__ << ": CHECK_EQ failed: " << #a    \
           << " vs " << #b;                                                 \
      throw stot::testing::CheckFailure{oss_.str()};                        \
    }                                                                       \
  } while (false)

#define STOT_CHECK_THROWS(expr, exception_type)                             \
  do {                                                                      \
    bool caught_ = false;                                                   \
    try {                                                                   \
      (void)(expr);                                                         \
    } catch (const exception_type&) {                                       \
      caught_ = true;                                                       \
    }                                                                       \
    if (!caught_) {                                                         \
      std::ostringstream oss_;                                              \
      oss_ << __FILE__ << ":" << __LINE__ << ": expected " << #exception_type \
           << " from " << #expr;                                            \
      throw stot::testing::CheckFailure{oss_.str()};                        \
    }                                                                       \
  } while (false)

// Runs the named test functions, printing one line each; returns the number
// of failures (the process exit code).
inline int RunAll(
    const std::vector<std::pair<std::string, std::function<void()>>>& tests) {
  int failures = 0;
  for (const auto& [name, fn] : tests) {
    try {
      fn();
      std::cout << "[ OK ] " << name << "\n";
    } catch (const CheckFailure& f) {
      std::cout << "[FAIL] " << name << ": " << f.message << "\n";
      ++failures;
    } catch (const std::exception& e) {
      std::cout << "[FAIL] " << name << ": unexpected exception: " << e.what()
                << "\n";
      ++failures;
    }
  }
  if (failures == 0) {
    std::cout << "all " << tests.size() << " tests passed\n";
  }
  return failures;
}

}  // namespace stot::testing

#endif  // STOT_TESTS_TEST_UTIL_H_
