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

#include "sfctr/error.hpp"
#include "sfctr/types.hpp"

namespace sfctr {

/// A global batch of training instances before deduplication: rows x fields
/// categorical features plus one binary click label per row.
struct RawBatch {
  int rows = 0;
  int fields = 0;
  std::vector<FeatureId> features;  // rows * fields, row-major
  std::vector<std::uint8_t> labels;  // rows, each 0 or 1

  FeatureId at(int row, int field) const {
    return features[static_cast<std::size_t>(row) * fields + field];
  }
};

/// Contiguous run of global-batch rows assigned to one worker.
struct RowRange {
  int begin = 0;
  int end = 0;
  int size() const { return end - begin; }
};

/// Result of the virtual-sparse-id transform: the batch's unique features in
/// first-appearance order plus per-instance pointers into that list. Row i,
/// field f of the original batch is global_ids[virtual_ids[i*fields+f]].
struct DedupBatch {
  int rows = 0;
  int fields = 0;
  std::vector<FeatureId> global_ids;
  std::vector<VirtualId> virtual_ids;  // rows * fields, row-major
  std::vector<std::uint8_t> labels;
  std::vector<RowRange> worker_row_ranges;

  std::int64_t unique_count() const { return static_cast<std::int64_t>(global_ids.size()); }
  std::int64_t raw_count() const { return static_cast<std::int64_t>(rows) * fields; }

  VirtualId virtual_at(int row, int field) const {
    return virtual_ids[static_cast<std::size_t>(row) * fields + field];
  }
};

}  // namespace sfctr
