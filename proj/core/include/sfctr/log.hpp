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

#include <sstream>
#include <string>

namespace sfctr {

enum class LogLevel : int { kOff = 0, kWarn = 1, kInfo = 2, kDebug = 3 };

/// Verbosity comes from the SFCTR_LOG environment variable:
/// "off"/"0", "warn"/"1", "info"/"2", "debug"/"3". Default is warn.
LogLevel log_level();

void log_message(LogLevel level, const std::string& msg);

inline bool log_enabled(LogLevel level) {
  return static_cast<int>(level) <= static_cast<int>(log_level());
}

}  // namespace sfctr

#define SFCTR_LOG_AT(level, stream_expr)              \
  do {                                                \
    if (::sfctr::log_enabled(level)) {                \
      std::ostringstream os_;                         \
      os_ << stream_expr;                             \
      ::sfctr::log_message(level, os_.str());         \
    }                                                 \
  } while (0)

#define SFCTR_WARN(stream_expr) SFCTR_LOG_AT(::sfctr::LogLevel::kWarn, stream_expr)
#define SFCTR_INFO(stream_expr) SFCTR_LOG_AT(::sfctr::LogLevel::kInfo, stream_expr)
#define SFCTR_DEBUG(stream_expr) SFCTR_LOG_AT(::sfctr::LogLevel::kDebug, stream_expr)
