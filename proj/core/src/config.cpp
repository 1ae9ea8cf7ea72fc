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

#include "sfctr/config.hpp"

#include <fstream>
#include <sstream>

#include "sfctr/error.hpp"

namespace sfctr {

const char* to_string(Strategy s) {
  switch (s) {
    case Strategy::kHost:
      return "host";
    case Strategy::kPrefetch:
      return "prefetch";
    case Strategy::kCache:
      return "cache";
  }
  return "?";
}

const char* to_string(RunMode m) {
  return m == RunMode::kPipelined ? "pipelined" : "sequential";
}

Strategy strategy_from_string(const std::string& s) {
  if (s == "host") return Strategy::kHost;
  if (s == "prefetch") return Strategy::kPrefetch;
  if (s == "cache") return Strategy::kCache;
  throw ConfigError("unknown strategy '" + s + "' (expected host, prefetch or cache)");
}

RunMode run_mode_from_string(const std::string& s) {
  if (s == "pipelined") return RunMode::kPipelined;
  if (s == "sequential") return RunMode::kSequential;
  throw ConfigError("unknown mode '" + s + "' (expected pipelined or sequential)");
}

void SimConfig::validate() const {
  auto require = [](bool ok, const std::string& msg) {
    if (!ok) throw ConfigError(msg);
  };
  require(num_workers > 0, "workers must be positive");
  require(embedding_dim > 0, "dim must be positive");
  require(num_fields > 0, "fields must be positive");
  require(batch_size_per_worker > 0, "batch-size must be positive");
  require(vocabulary_size > 0, "vocab must be positive");
  require(cache_capacity > 0, "cache-capacity must be positive");
  require(lookahead_depth > 0, "lookahead must be positive");
  require(hidden_dim > 0, "hidden must be positive");
  require(learning_rate > 0, "lr must be positive");
  require(adam_beta1 > 0 && adam_beta1 < 1, "beta1 must be in (0,1)");
  require(adam_beta2 > 0 && adam_beta2 < 1, "beta2 must be in (0,1)");
  require(adam_epsilon > 0, "epsilon must be positive");
  require(zipf_exponent >= 0, "zipf exponent must be non-negative");
  require(vocabulary_size >= static_cast<std::uint64_t>(num_fields),
          "vocab must be at least the number of fields (fields use disjoint vocabulary shards)");
  if (data_source == DataSource::kCriteo) {
    require(!criteo_path.empty(), "criteo data source needs a file path");
    require(num_fields == 26, "criteo format has 26 categorical fields; set fields=26");
  }
}

namespace {

std::uint64_t parse_u64(const std::string& key, const std::string& value) {
  try {
    size_t pos = 0;
    if (!value.empty() && value[0] == '-') throw std::invalid_argument("negative");
    std::uint64_t v = std::stoull(value, &pos);
    if (pos != value.size()) throw std::invalid_argument("trailing");
    return v;
  } catch (const std::exception&) {
    throw ConfigError("config key '" + key + "': cannot parse '" + value + "' as an integer");
  }
}

int parse_int(const std::string& key, const std::string& value) {
  std::uint64_t v = parse_u64(key, value);
  if (v > static_cast<std::uint64_t>(1) << 30) {
    throw ConfigError("config key '" + key + "': value '" + value + "' out of range");
  }
  return static_cast<int>(v);
}

double parse_double(const std::string& key, const std::string& value) {
  try {
    size_t pos = 0;
    double v = std::stod(value, &pos);
    if (pos != value.size()) throw std::invalid_argument("trailing");
    return v;
  } catch (const std::exception&) {
    throw ConfigError("config key '" + key + "': cannot parse '" + value + "' as a number");
  }
}

}  // namespace

void apply_config_entry(SimConfig& cfg, const std::string& key, const std::string& value) {
  if (key == "workers") {
    cfg.num_workers = parse_int(key, value);
  } else if (key == "dim") {
    cfg.embedding_dim = parse_int(key, value);
  } else if (key == "fields") {
    cfg.num_fields = parse_int(key, value);
  } else if (key == "batch_size") {
    cfg.batch_size_per_worker = parse_int(key, value);
  } else if (key == "vocab") {
    cfg.vocabulary_size = parse_u64(key, value);
  } else if (key == "cache_capacity") {
    cfg.cache_capacity = parse_u64(key, value);
  } else if (key == "lookahead") {
    cfg.lookahead_depth = parse_int(key, value);
  } else if (key == "strategy") {
    cfg.strategy = strategy_from_string(value);
  } else if (key == "seed") {
    cfg.seed = parse_u64(key, value);
  } else if (key == "lr") {
    cfg.learning_rate = parse_double(key, value);
  } else if (key == "beta1") {
    cfg.adam_beta1 = parse_double(key, value);
  } else if (key == "beta2") {
    cfg.adam_beta2 = parse_double(key, value);
  } else if (key == "epsilon") {
    cfg.adam_epsilon = parse_double(key, value);
  } else if (key == "zipf") {
    cfg.zipf_exponent = parse_double(key, value);
  } else if (key == "hidden") {
    cfg.hidden_dim = parse_int(key, value);
  } else if (key == "data") {
    if (value == "synthetic") {
      cfg.data_source = DataSource::kSynthetic;
      cfg.criteo_path.clear();
    } else if (value.rfind("criteo:", 0) == 0) {
      cfg.data_source = DataSource::kCriteo;
      cfg.criteo_path = value.substr(7);
    } else {
      throw ConfigError("config key 'data': expected 'synthetic' or 'criteo:<path>'");
    }
  } else {
    throw ConfigError("unknown config key '" + key + "'");
  }
}

SimConfig load_config_file(const std::string& path, SimConfig base) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file: " + path);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    auto last = line.find_last_not_of(" \t\r");
    std::string trimmed = line.substr(first, last - first + 1);
    auto eq = trimmed.find('=');
    if (eq == std::string::npos) {
      throw ConfigError(path + ":" + std::to_string(lineno) + ": expected key=value");
    }
    auto strip = [](std::string s) {
      auto b = s.find_first_not_of(" \t");
      auto e = s.find_last_not_of(" \t");
      if (b == std::string::npos) return std::string();
      return s.substr(b, e - b + 1);
    };
    apply_config_entry(base, strip(trimmed.substr(0, eq)), strip(trimmed.substr(eq + 1)));
  }
  return base;
}

}  // namespace sfctr
