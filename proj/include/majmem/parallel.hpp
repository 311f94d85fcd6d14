// Copyright 2026 The majmem Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef MAJMEM_PARALLEL_HPP
#define MAJMEM_PARALLEL_HPP

#include <cstddef>
#include <exception>
#include <functional>
#include <mutex>

namespace majmem {

/// Thread count to hand to an OpenMP region: `requested` if positive,
/// otherwise the runtime default.
int resolve_workers(int requested);

/// Exceptions must not cross an OpenMP region boundary. Tasks report here and
/// the lowest task index wins, so the rethrown error does not depend on timing.
class TaskErrors {
   public:
    void record(size_t index, std::exception_ptr e);
    /// Rethrows the recorded exception, if any.
    void rethrow() const;

   private:
    mutable std::mutex mu_;
    size_t index_ = static_cast<size_t>(-1);
    std::exception_ptr error_;
};

/// Runs body(i) for i in [0, n) on `workers` threads with dynamic scheduling.
void parallel_for(size_t n, int workers, const std::function<void(size_t)> &body);

}  // namespace majmem

#endif
