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

#include "majmem/parallel.hpp"

#include <omp.h>

using namespace majmem;

int majmem::resolve_workers(int requested) {
    return requested > 0 ? requested : omp_get_max_threads();
}

void TaskErrors::record(size_t index, std::exception_ptr e) {
    std::lock_guard<std::mutex> lock(mu_);
    if (!error_ || index < index_) {
        index_ = index;
        error_ = std::move(e);
    }
}

void TaskErrors::rethrow() const {
    std::lock_guard<std::mutex> lock(mu_);
    if (error_) {
        std::rethrow_exception(error_);
    }
}

void majmem::parallel_for(size_t n, int workers, const std::function<void(size_t)> &body) {
    TaskErrors errors;
    const long long count = static_cast<long long>(n);
#pragma omp parallel for schedule(dynamic, 1) num_threads(resolve_workers(workers))
    for (long long i = 0; i < count; i++) {
        try {
            body(static_cast<size_t>(i));
        } catch (...) {
            errors.record(static_cast<size_t>(i), std::current_exception());
        }
    }
    errors.rethrow();
}
