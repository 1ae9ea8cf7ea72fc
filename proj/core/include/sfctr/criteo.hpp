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
#include <vector>

#include "sfctr/batch.hpp"
#include "sfctr/config.hpp"

namespace sfctr {

/// Reader for Criteo-format click logs: tab-separated lines of
///   label \t <13 numeric columns> \t <26 categorical hex tokens>
/// Numeric columns are ignored. Categorical tokens are hashed into the
/// configured vocabulary (stable 64-bit FNV-1a, then modulo vocab); an empty
/// token maps to the reserved FeatureId 0. Batches wrap around at the end of
/// the file.
///
/// The whole file is parsed up front (desk-scale datasets), so malformed
/// lines fail at construction with their line number.
class CriteoReader {
 public:
  static constexpr int kNumericColumns = 13;
  static constexpr int kCategoricalColumns = 26;

  CriteoReader(const std::string& path, const SimConfig& config);

  RawBatch read_batch(std::int64_t step) const;

  std::int64_t row_count() const { return static_cast<std::int64_t>(labels_.size()); }

  /// The hash a categorical token maps to, before the modulo. Exposed so the
  /// hashed-id rule is testable as stated.
  static std::uint64_t token_hash(const std::string& token);

 private:
  int fields_;
  std::uint64_t vocab_;
  int global_rows_;
  std::vector<FeatureId> features_;  // row-major, row_count x 26
  std::vector<std::uint8_t> labels_;
};

}  // namespace sfctr
