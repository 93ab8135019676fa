/*
* Copyright (C) 2026 The rdlab authors
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

#ifndef RDLAB_PARALLEL_HPP
#define RDLAB_PARALLEL_HPP

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <thread>
#include <vector>

namespace rdlab
{

/// Number of workers for `jobs` (0 means hardware concurrency, at least 1).
inline unsigned resolve_jobs(unsigned jobs)
{
    if (jobs == 0) {
        jobs = std::thread::hardware_concurrency();
    }
    return jobs == 0 ? 1 : jobs;
}

/**
 * Runs fn(i) for i in [0, count) on up to `jobs` threads. Results must be
 * written to per-index slots. If any call throws, the exception of the
 * lowest failing index is rethrown after all workers finish.
 */
template <class Fn>
void parallel_for(std::size_t count, unsigned jobs, Fn&& fn)
{
    std::vector<std::exception_ptr> errors(count);
    const unsigned workers = std::min<std::size_t>(resolve_jobs(jobs), count == 0 ? 1 : count);
    if (workers <= 1) {
        for (std::size_t i = 0; i < count; ++i) {
            try {
                fn(i);
            }
            catch (...) {
                errors[i] = std::current_exception();
            }
        }
    }
    else {
        std::atomic<std::size_t> next{0};
        std::vector<std::thread> pool;
        pool.reserve(workers);
        for (unsigned w = 0; w < workers; ++w) {
            pool.emplace_back([&] {
                for (std::size_t i = next++; i < count; i = next++) {
                    try {
                        fn(i);
                    }
                    catch (...) {
                        errors[i] = std::current_exception();
                    }
                }
            });
        }
        for (auto& t : pool) {
            t.join();
        }
    }
    for (auto& e : errors) {
        if (e) {
            std::rethrow_exception(e);
        }
    }
}

} // namespace rdlab

#endif // RDLAB_PARALLEL_HPP
