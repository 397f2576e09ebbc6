// Copyright 2026 The viperkit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef VIPERKIT_PIPELINE_PARALLEL_H_
#define VIPERKIT_PIPELINE_PARALLEL_H_

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <thread>
#include <type_traits>
#include <vector>

namespace viperkit::pipeline {

// fn(items[i]) for every i on up to `workers` threads. Results keep input
// order, so output never depends on scheduling. The first exception (by
// index) is rethrown after all workers finish.
template <typename T, typename Fn>
auto ParallelMap(const std::vector<T>& items, int workers, Fn fn)
    -> std::vector<std::invoke_result_t<Fn&, const T&>> {
  using R = std::invoke_result_t<Fn&, const T&>;
  std::vector<R> results(items.size());
  std::vector<std::exception_ptr> errors(items.size());
  std::atomic<std::size_t> next{0};
  auto run = [&]() {
    for (std::size_t i = next++; i < items.size(); i = next++) {
      try {
        results[i] = fn(items[i]);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  std::size_t n = std::min<std::size_t>(std::max(workers, 1), std::max<std::size_t>(items.size(), 1));
  if (n <= 1) {
    run();
  } else {
    std::vector<std::jthread> pool;
    for (std::size_t t = 0; t < n; ++t) pool.emplace_back(run);
  }
  for (const std::exception_ptr& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return results;
}

}  // namespace viperkit::pipeline

#endif  // VIPERKIT_PIPELINE_PARALLEL_H_
