// Copyright 2026 The ftlab authors
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

#pragma once

#include <atomic>
#include <exception>
#include <functional>
#include <mutex>
#include <thread>
#include <vector>

namespace ftlab {

using ProgressFn = std::function<void(uint64_t done, uint64_t total)>;

/// Outcome of one shot: clean, logical failure, or abort.
enum class ShotOutcome : int { ok = 0, failure = 1, abort = 2 };

struct ShotTallies {
    uint64_t failures = 0;
    uint64_t aborts = 0;
};

/// Deterministic worker pool over shot indices. Workers claim contiguous
/// chunks; per-shot randomness must come from the global shot index, so the
/// tallies are identical for any worker count or scheduling order.
/// `make_worker` is invoked once per thread to set up worker-local state.
inline ShotTallies run_shot_pool(
    uint64_t shots, int workers, const ProgressFn& progress,
    const std::function<std::function<ShotOutcome(uint64_t)>()>& make_worker) {
    ShotTallies total;
    workers = workers < 1 ? 1 : workers;
    std::atomic<uint64_t> next{0};
    std::atomic<uint64_t> done{0};
    const uint64_t chunk =
        std::max<uint64_t>(1, std::min<uint64_t>(4096, shots / (4 * uint64_t(workers)) + 1));
    std::mutex merge_mutex;
    std::exception_ptr first_error;

    auto body = [&]() {
        auto shot_fn = make_worker();
        uint64_t failures = 0, aborts = 0;
        try {
            for (;;) {
                uint64_t begin = next.fetch_add(chunk);
                if (begin >= shots) {
                    break;
                }
                uint64_t end = std::min(shots, begin + chunk);
                for (uint64_t shot = begin; shot < end; shot++) {
                    switch (shot_fn(shot)) {
                        case ShotOutcome::ok: break;
                        case ShotOutcome::failure: failures++; break;
                        case ShotOutcome::abort: aborts++; break;
                    }
                }
                done.fetch_add(end - begin);
                if (progress) {
                    std::lock_guard<std::mutex> lock(merge_mutex);
                    progress(done.load(), shots);
                }
            }
        } catch (...) {
            std::lock_guard<std::mutex> lock(merge_mutex);
            if (!first_error) {
                first_error = std::current_exception();
            }
        }
        std::lock_guard<std::mutex> lock(merge_mutex);
        total.failures += failures;
        total.aborts += aborts;
    };

    if (workers == 1) {
        body();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(workers);
        for (int w = 0; w < workers; w++) {
            pool.emplace_back(body);
        }
        for (auto& t : pool) {
            t.join();
        }
    }
    if (first_error) {
        std::rethrow_exception(first_error);
    }
    return total;
}

}  // namespace ftlab
