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

#include <atomic>
#include <cstdint>

namespace sfctr {

/// Byte counters for the three traffic channels plus the eviction count.
/// Counters are monotone non-decreasing; additions may come from concurrent
/// stages and commute exactly (integer adds).
class TransferLedger {
 public:
  TransferLedger() = default;

  TransferLedger(const TransferLedger& other)
      : host_to_worker_(other.host_to_worker_bytes()),
        worker_to_host_(other.worker_to_host_bytes()),
        interworker_(other.interworker_bytes()),
        swap_events_(other.swap_events()) {}

  void add_host_to_worker(std::int64_t bytes) {
    host_to_worker_.fetch_add(bytes, std::memory_order_relaxed);
  }
  void add_worker_to_host(std::int64_t bytes) {
    worker_to_host_.fetch_add(bytes, std::memory_order_relaxed);
  }
  void add_interworker(std::int64_t bytes) {
    interworker_.fetch_add(bytes, std::memory_order_relaxed);
  }
  void add_swap_events(std::int64_t count) {
    swap_events_.fetch_add(count, std::memory_order_relaxed);
  }

  std::int64_t host_to_worker_bytes() const {
    return host_to_worker_.load(std::memory_order_relaxed);
  }
  std::int64_t worker_to_host_bytes() const {
    return worker_to_host_.load(std::memory_order_relaxed);
  }
  std::int64_t interworker_bytes() const { return interworker_.load(std::memory_order_relaxed); }
  std::int64_t swap_events() const { return swap_events_.load(std::memory_order_relaxed); }

 private:
  std::atomic<std::int64_t> host_to_worker_{0};
  std::atomic<std::int64_t> worker_to_host_{0};
  std::atomic<std::int64_t> interworker_{0};
  std::atomic<std::int64_t> swap_events_{0};
};

}  // namespace sfctr
