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

#include "sfctr/host_store.hpp"

#include "sfctr/generator.hpp"

namespace sfctr {

HostStore::HostStore(std::uint64_t seed, int dim) : seed_(seed), dim_(dim) {}

ParamEntry& HostStore::get_or_init(FeatureId f) {
  auto it = table_.find(f);
  if (it != table_.end()) return it->second;
  ParamEntry entry(dim_);
  const std::vector<double> init = initial_embedding(seed_, f, dim_);
  auto emb = entry.embedding(dim_);
  for (int i = 0; i < dim_; ++i) emb[i] = init[i];
  return table_.emplace(f, std::move(entry)).first->second;
}

const ParamEntry& HostStore::peek(FeatureId f) const {
  auto it = table_.find(f);
  SFCTR_CHECK_MSG(it != table_.end(), "feature " << f << " is not host-resident");
  return it->second;
}

ParamEntry HostStore::take(FeatureId f) {
  ParamEntry entry = std::move(get_or_init(f));
  table_.erase(f);
  return entry;
}

void HostStore::put(FeatureId f, ParamEntry entry) {
  auto [it, inserted] = table_.emplace(f, std::move(entry));
  SFCTR_CHECK_MSG(inserted, "feature " << f << " already host-resident (conservation violated)");
}

std::map<std::uint64_t, ParamEntry> HostStore::snapshot_sorted() const {
  std::map<std::uint64_t, ParamEntry> out;
  for (const auto& [f, entry] : table_) out.emplace(f.value, entry);
  return out;
}

}  // namespace sfctr
