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

#include "sfctr/log.hpp"

#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <mutex>

namespace sfctr {

namespace {

LogLevel parse_level(const char* value) {
  if (value == nullptr) return LogLevel::kWarn;
  if (std::strcmp(value, "off") == 0 || std::strcmp(value, "0") == 0) return LogLevel::kOff;
  if (std::strcmp(value, "warn") == 0 || std::strcmp(value, "1") == 0) return LogLevel::kWarn;
  if (std::strcmp(value, "info") == 0 || std::strcmp(value, "2") == 0) return LogLevel::kInfo;
  if (std::strcmp(value, "debug") == 0 || std::strcmp(value, "3") == 0) return LogLevel::kDebug;
  return LogLevel::kWarn;
}

const char* level_tag(LogLevel level) {
  switch (level) {
    case LogLevel::kWarn:
      return "W";
    case LogLevel::kInfo:
      return "I";
    case LogLevel::kDebug:
      return "D";
    default:
      return "?";
  }
}

std::mutex g_log_mutex;

}  // namespace

LogLevel log_level() {
  static const LogLevel level = parse_level(std::getenv("SFCTR_LOG"));
  return level;
}

void log_message(LogLevel level, const std::string& msg) {
  std::lock_guard<std::mutex> lock(g_log_mutex);
  std::fprintf(stderr, "[sfctr %s] %s\n", level_tag(level), msg.c_str());
}

}  // namespace sfctr
