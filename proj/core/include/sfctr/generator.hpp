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
#include <vector>

#include "sfctr/batch.hpp"
#include "sfctr/config.hpp"

namespace sfctr {

/// Synthetic click-log generator. Each field draws features from a Zipf
/// distribution over its own contiguous vocabulary shard (fields never
/// collide), and labels come from a fixed logistic ground truth over hidden
/// per-feature weights, so that training loss can genuinely decrease.
///
/// generate(step) is a pure function of (config.seed, step, shapes): the same
/// step always yields the same batch, regardless of worker count, as long as
/// the global batch shape matches.
class SyntheticGenerator {
 public:
  explicit SyntheticGenerator(const SimConfig& config);

  RawBatch generate(std::int64_t step) const;

  /// [shard_start, shard_start + shard_size) of one field's vocabulary.
  std::uint64_t shard_start(int field) const { return shard_starts_[field]; }
  std::uint64_t shard_size(int field) const {
    return shard_starts_[field + 1] - shard_starts_[field];
  }

  /// Hidden ground-truth weight of one feature (the label model).
  static double truth_weight(std::uint64_t seed, FeatureId feature);

 private:
  std::uint64_t sample_rank(double unit, int field) const;

  SimConfig config_;
  std::vector<std::uint64_t> shard_starts_;  // num_fields + 1 entries
  // One cumulative Zipf table per distinct shard size (there are at most two).
  std::vector<std::vector<double>> cdf_by_field_;
};

/// Deterministic initial embedding state of a feature: uniform in
/// [-0.01, 0.01] per coordinate, keyed by (seed, feature) so the values do
/// not depend on first-touch order.
std::vector<double> initial_embedding(std::uint64_t seed, FeatureId feature, int dim);

}  // namespace sfctr
