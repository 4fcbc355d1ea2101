// Copyright 2026 The prequant developers
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
#include <cstdint>
#include <thread>
#include <vector>

namespace prequant {

// Work is always cut into fixed-size blocks; workers pull whole blocks.
// Anything accumulated per block and combined in block order is therefore
// bit-identical for every worker count.
inline constexpr std::int64_t kSampleBlock = 4096;

inline std::int64_t block_count(std::int64_t total, std::int64_t block = kSampleBlock) {
    return (total + block - 1) / block;
}

/// Runs fn(block_index, begin, end) over [0, total) cut into fixed blocks,
/// using up to `threads` workers. Blocks are disjoint, so fn may write to
/// per-block slots without synchronization.
template <typename Fn>
void for_each_block(std::int64_t total, int threads, Fn&& fn,
                    std::int64_t block = kSampleBlock) {
    const std::int64_t blocks = block_count(total, block);
    if (threads <= 1 || blocks <= 1) {
        for (std::int64_t b = 0; b < blocks; ++b) {
            fn(b, b * block, std::min(total, (b + 1) * block));
        }
        return;
    }
    std::atomic<std::int64_t> next{0};
    auto worker = [&] {
        for (;;) {
            std::int64_t b = next.fetch_add(1);
            if (b >= blocks) {
                return;
            }
            fn(b, b * block, std::min(total, (b + 1) * block));
        }
    };
    std::vector<std::thread> pool;
    int n_workers = static_cast<int>(std::min<std::int64_t>(threads, blocks));
    pool.reserve(static_cast<std::size_t>(n_workers));
    for (int t = 0; t < n_workers; ++t) {
        pool.emplace_back(worker);
    }
    for (auto& th : pool) {
        th.join();
    }
}

/// Compensated (Kahan) accumulator; used wherever sums must not depend on
/// partition order beyond the fixed block structure.
struct KahanSum {
    double sum = 0.0;
    double comp = 0.0;

    void add(double x) {
        double y = x - comp;
        double t = sum + y;
        comp = (t - sum) - y;
        sum = t;
    }
};

}  // namespace prequant
