// Copyright 2026 The gqca Authors
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

#include <cstdint>
#include <cstdlib>
#include <functional>
#include <string>
#include <thread>
#include <vector>

namespace gqca {

/// Worker cap: min(GQCA_THREADS, hardware concurrency), at least 1.
inline unsigned worker_count() {
    unsigned hw = std::thread::hardware_concurrency();
    if (hw == 0) {
        hw = 1;
    }
    if (const char *env = std::getenv("GQCA_THREADS")) {
        long v = std::atol(env);
        if (v >= 1 && static_cast<unsigned>(v) < hw) {
            hw = static_cast<unsigned>(v);
        }
        if (v >= 1 && static_cast<unsigned>(v) > hw) {
            hw = static_cast<unsigned>(v);
        }
    }
    return hw;
}

/// Runs body(begin, end) over [0, total) split into contiguous chunks, one
/// per worker. Chunks are disjoint, so the result is independent of the
/// partitioning as long as the body writes only inside its range.
inline void parallel_chunks(uint64_t total, const std::function<void(uint64_t, uint64_t)> &body) {
    unsigned workers = worker_count();
    if (workers <= 1 || total < (uint64_t{1} << 16)) {
        body(0, total);
        return;
    }
    std::vector<std::thread> pool;
    uint64_t chunk = (total + workers - 1) / workers;
    for (unsigned w = 0; w < workers; ++w) {
        uint64_t b = w * chunk;
        uint64_t e = std::min(total, b + chunk);
        if (b >= e) {
            break;
        }
        pool.emplace_back([&body, b, e] { body(b, e); });
    }
    for (auto &t : pool) {
        t.join();
    }
}

/// FNV-1a 64-bit; used for golden-file integrity stamps in the manifest.
inline uint64_t fnv1a64(const std::string &data) {
    uint64_t h = 14695981039346656037ull;
    for (unsigned char c : data) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

}  // namespace gqca
