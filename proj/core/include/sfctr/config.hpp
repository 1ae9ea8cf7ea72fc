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
#include <string>

namespace sfctr {

/// Where working parameters live during training.
///   host:     every step reads embeddings from host memory and updates them there.
///   prefetch: next-batch parameters are copied to the device ahead of time with
///             no consistency guarantee (updates of the previous batch can be lost).
///   cache:    per-worker device cache buffers with lookahead-aware eviction.
enum class Strategy { kHost, kPrefetch, kCache };

enum class RunMode { kPipelined, kSequential };

enum class DataSource { kSynthetic, kCriteo };

const char* to_string(Strategy s);
const char* to_string(RunMode m);
Strategy strategy_from_string(const std::string& s);
RunMode run_mode_from_string(const std::string& s);

/// Full description of a run. Immutable once validated; everything a run
/// produces is a pure function of this struct (plus wall-clock timing).
struct SimConfig {
  // Topology and shapes. The global batch has num_workers * batch_size_per_worker rows.
  int num_workers = 4;
  int embedding_dim = 16;
  int num_fields = 26;
  int batch_size_per_worker = 256;
  std::uint64_t vocabulary_size = 100000;

  // Cache behaviour (strategy == kCache).
  std::uint64_t cache_capacity = 8192;  // slots per worker
  int lookahead_depth = 1;              // global batches the manager inspects

  Strategy strategy = Strategy::kCache;
  std::uint64_t seed = 7;

  // Optimizer.
  double learning_rate = 1e-3;
  double adam_beta1 = 0.9;
  double adam_beta2 = 0.999;
  double adam_epsilon = 1e-8;

  // Synthetic data.
  double zipf_exponent = 1.2;

  // Model.
  int hidden_dim = 64;

  // Data source.
  DataSource data_source = DataSource::kSynthetic;
  std::string criteo_path;

  int global_batch_rows() const { return num_workers * batch_size_per_worker; }
  std::int64_t features_per_batch() const {
    return static_cast<std::int64_t>(global_batch_rows()) * num_fields;
  }

  /// Throws ConfigError on any violated invariant that does not need data
  /// (positivity, vocabulary >= fields, criteo field count). The cache
  /// capacity precondition is data-dependent and checked by the pipeline
  /// against a probe of the actual batch stream.
  void validate() const;
};

/// Loads key=value lines ('#' comments and blank lines allowed) over the
/// defaults in `base`. Unknown keys and unparsable values are ConfigErrors.
SimConfig load_config_file(const std::string& path, SimConfig base = {});

/// Applies one key=value assignment (the config file grammar) to `cfg`.
void apply_config_entry(SimConfig& cfg, const std::string& key, const std::string& value);

}  // namespace sfctr
