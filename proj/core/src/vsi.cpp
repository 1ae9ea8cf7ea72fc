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

#include "sfctr/vsi.hpp"

#include <unordered_map>

namespace sfctr {

DedupBatch virtual_sparse_id(const RawBatch& batch, int num_workers) {
  SFCTR_CHECK_MSG(batch.rows > 0 && batch.fields > 0, "empty batch");
  SFCTR_CHECK_MSG(batch.features.size() ==
                      static_cast<std::size_t>(batch.rows) * batch.fields,
                  "feature matrix shape mismatch");
  SFCTR_CHECK_MSG(batch.labels.size() == static_cast<std::size_t>(batch.rows),
                  "label count mismatch");
  SFCTR_CHECK_MSG(num_workers > 0 && batch.rows % num_workers == 0,
                  "rows must split evenly across workers");

  DedupBatch out;
  out.rows = batch.rows;
  out.fields = batch.fields;
  out.labels = batch.labels;
  out.virtual_ids.resize(batch.features.size());

  std::unordered_map<FeatureId, std::uint64_t> first_seen;
  first_seen.reserve(batch.features.size());
  for (std::size_t i = 0; i < batch.features.size(); ++i) {
    const FeatureId f = batch.features[i];
    auto [it, inserted] = first_seen.try_emplace(f, out.global_ids.size());
    if (inserted) out.global_ids.push_back(f);
    out.virtual_ids[i] = VirtualId{it->second};
  }

  const int per_worker = batch.rows / num_workers;
  out.worker_row_ranges.reserve(num_workers);
  for (int w = 0; w < num_workers; ++w) {
    out.worker_row_ranges.push_back({w * per_worker, (w + 1) * per_worker});
  }
  return out;
}

}  // namespace sfctr
