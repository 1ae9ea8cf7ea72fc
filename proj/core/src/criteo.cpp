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

#include "sfctr/criteo.hpp"

#include <fstream>

#include "sfctr/rng.hpp"

namespace sfctr {

std::uint64_t CriteoReader::token_hash(const std::string& token) { return fnv1a64(token); }

CriteoReader::CriteoReader(const std::string& path, const SimConfig& config)
    : fields_(config.num_fields),
      vocab_(config.vocabulary_size),
      global_rows_(config.global_batch_rows()) {
  if (fields_ != kCategoricalColumns) {
    throw ConfigError("criteo format has 26 categorical fields; fields=" +
                      std::to_string(fields_) + " was configured");
  }
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open criteo file: " + path);

  const int expected_cols = 1 + kNumericColumns + kCategoricalColumns;
  std::string line;
  std::int64_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;

    // Split on tabs, keeping empty cells (missing values are legal).
    std::vector<std::string> cols;
    cols.reserve(expected_cols);
    std::size_t start = 0;
    while (true) {
      std::size_t tab = line.find('\t', start);
      if (tab == std::string::npos) {
        cols.push_back(line.substr(start));
        break;
      }
      cols.push_back(line.substr(start, tab - start));
      start = tab + 1;
    }
    if (static_cast<int>(cols.size()) != expected_cols) {
      throw DataError(path + ":" + std::to_string(lineno) + ": expected " +
                      std::to_string(expected_cols) + " tab-separated columns, got " +
                      std::to_string(cols.size()));
    }
    if (cols[0] != "0" && cols[0] != "1") {
      throw DataError(path + ":" + std::to_string(lineno) + ": label must be 0 or 1, got '" +
                      cols[0] + "'");
    }
    labels_.push_back(cols[0] == "1" ? 1 : 0);
    for (int f = 0; f < kCategoricalColumns; ++f) {
      const std::string& token = cols[1 + kNumericColumns + f];
      if (token.empty()) {
        features_.push_back(FeatureId{0});
      } else {
        features_.push_back(FeatureId{token_hash(token) % vocab_});
      }
    }
  }
  if (labels_.empty()) throw DataError(path + ": no data rows");
}

RawBatch CriteoReader::read_batch(std::int64_t step) const {
  RawBatch batch;
  batch.rows = global_rows_;
  batch.fields = fields_;
  batch.features.resize(static_cast<std::size_t>(global_rows_) * fields_);
  batch.labels.resize(global_rows_);

  const std::int64_t total = row_count();
  std::int64_t src = (step * global_rows_) % total;
  for (int r = 0; r < global_rows_; ++r) {
    batch.labels[r] = labels_[src];
    const std::size_t from = static_cast<std::size_t>(src) * fields_;
    const std::size_t to = static_cast<std::size_t>(r) * fields_;
    for (int f = 0; f < fields_; ++f) batch.features[to + f] = features_[from + f];
    src = (src + 1) % total;
  }
  return batch;
}

}  // namespace sfctr
