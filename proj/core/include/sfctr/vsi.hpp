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

#include "sfctr/batch.hpp"

namespace sfctr {

/// Virtual-sparse-id deduplication. Collapses the batch's duplicate feature
/// ids into a unique list ordered by first appearance and rewrites every
/// instance entry as an index into that list. Labels pass through unchanged;
/// rows are split contiguously and evenly across `num_workers`.
///
/// Pure function: identical input always yields identical output.
DedupBatch virtual_sparse_id(const RawBatch& batch, int num_workers);

}  // namespace sfctr
