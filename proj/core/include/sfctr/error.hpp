/*
 * Copyright (c) 2026, the sfctr authors.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <cstdint>
#include <sstream>
#include <stdexcept>
#include <string>

namespace sfctr {

/// Invalid configuration (bad flag values, capacity below the probed
/// working-set requirement, missing data file, ...). Rejected at startup.
class ConfigError : public std::runtime_error {
 public:
  explicit ConfigError(const std::string& msg) : std::runtime_error(msg) {}
};

/// Malformed input data (e.g. a bad line in a Criteo TSV file).
class DataError : public std::runtime_error {
 public:
  explicit DataError(const std::string& msg) : std::runtime_error(msg) {}
};

/// A broken internal invariant. These fire from SFCTR_CHECK and indicate a
/// bug in the caller or in the simulator itself, never a recoverable
/// condition. Always on, independent of NDEBUG, so tests can rely on them.
class LogicError : public std::logic_error {
 public:
  explicit LogicError(const std::string& msg) : std::logic_error(msg) {}
};

/// A run that aborted mid-stream. Carries the failing step index.
class RunError : public std::runtime_error {
 public:
  RunError(std::int64_t step, const std::string& msg)
      : std::runtime_error("step " + std::to_string(step) + ": " + msg), step_(step) {}
  std::int64_t step() const { return step_; }

 private:
  std::int64_t step_;
};

namespace detail {
[[noreturn]] inline void check_failed(const char* expr, const char* file, int line,
                                      const std::string& msg) {
  std::ostringstream os;
  os << "check failed: " << expr << " at " << file << ":" << line;
  if (!msg.empty()) os << " (" << msg << ")";
  throw LogicError(os.str());
}
}  // namespace detail

}  // namespace sfctr

#define SFCTR_CHECK(cond)                                                 \
  do {                                                                    \
    if (!(cond)) ::sfctr::detail::check_failed(#cond, __FILE__, __LINE__, ""); \
  } while (0)

#define SFCTR_CHECK_MSG(cond, msg)                                      \
  do {                                                                  \
    if (!(cond)) {                                                      \
      std::ostringstream os_;                                           \
      os_ << msg;                                                       \
      ::sfctr::detail::check_failed(#cond, __FILE__, __LINE__, os_.str()); \
    }                                                                   \
  } while (0)
