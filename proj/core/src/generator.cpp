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

#include "sfctr/generator.hpp"

#include <algorithm>
#include <cmath>

#include "sfctr/rng.hpp"

namespace sfctr {

namespace {
// Scale of the hidden logistic ground truth. Normalized by sqrt(fields) so
// the label signal strength does not depend on the field count.
constexpr double kTruthScale = 2.5;
}  // namespace

SyntheticGenerator::SyntheticGenerator(const SimConfig& config) : config_(config) {
  const int fields = config.num_fields;
  const std::uint64_t vocab = config.vocabulary_size;
  SFCTR_CHECK_MSG(vocab >= static_cast<std::uint64_t>(fields),
                  "vocabulary smaller than field count");

  // Partition the vocabulary evenly across fields; the first (vocab % fields)
  // shards are one id larger.
  shard_starts_.resize(fields + 1);
  const std::uint64_t base = vocab / fields;
  const std::uint64_t rem = vocab % fields;
  shard_starts_[0] = 0;
  for (int f = 0; f < fields; ++f) {
    shard_starts_[f + 1] = shard_starts_[f] + base + (static_cast<std::uint64_t>(f) < rem ? 1 : 0);
  }

  // Cumulative Zipf tables. Shard sizes take at most two distinct values, so
  // identical tables are shared.
  cdf_by_field_.resize(fields);
  std::vector<double> cdf_base, cdf_big;
  auto build = [&](std::uint64_t k) {
    std::vector<double> cdf(k);
    double total = 0;
    for (std::uint64_t i = 0; i < k; ++i) {
      total += std::pow(static_cast<double>(i + 1), -config.zipf_exponent);
      cdf[i] = total;
    }
    for (auto& v : cdf) v /= total;
    return cdf;
  };
  for (int f = 0; f < fields; ++f) {
    const std::uint64_t k = shard_size(f);
    std::vector<double>& shared = (k == base) ? cdf_base : cdf_big;
    if (shared.empty()) shared = build(k);
    cdf_by_field_[f] = shared;
  }
}

std::uint64_t SyntheticGenerator::sample_rank(double unit, int field) const {
  const auto& cdf = cdf_by_field_[field];
  auto it = std::upper_bound(cdf.begin(), cdf.end(), unit);
  if (it == cdf.end()) --it;
  return static_cast<std::uint64_t>(it - cdf.begin());
}

double SyntheticGenerator::truth_weight(std::uint64_t seed, FeatureId feature) {
  Rng rng(derive_seed(seed, "truth", feature.value));
  return rng.next_uniform(-1.0, 1.0);
}

RawBatch SyntheticGenerator::generate(std::int64_t step) const {
  const int rows = config_.global_batch_rows();
  const int fields = config_.num_fields;

  RawBatch batch;
  batch.rows = rows;
  batch.fields = fields;
  batch.features.resize(static_cast<std::size_t>(rows) * fields);
  batch.labels.resize(rows);

  Rng rng(derive_seed(config_.seed, "batch", static_cast<std::uint64_t>(step)));
  const double truth_scale = kTruthScale / std::sqrt(static_cast<double>(fields));

  std::size_t idx = 0;
  for (int r = 0; r < rows; ++r) {
    double logit = 0;
    for (int f = 0; f < fields; ++f) {
      const std::uint64_t rank = sample_rank(rng.next_unit(), f);
      const FeatureId feature{shard_starts_[f] + rank};
      batch.features[idx++] = feature;
      logit += truth_weight(config_.seed, feature);
    }
    const double p = 1.0 / (1.0 + std::exp(-truth_scale * logit));
    batch.labels[r] = rng.next_bernoulli(p) ? 1 : 0;
  }
  return batch;
}

std::vector<double> initial_embedding(std::uint64_t seed, FeatureId feature, int dim) {
  Rng rng(derive_seed(seed, "embed", feature.value));
  std::vector<double> values(dim);
  for (auto& v : values) v = rng.next_uniform(-0.01, 0.01);
  return values;
}

}  // namespace sfctr
