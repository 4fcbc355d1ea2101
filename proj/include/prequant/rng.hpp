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

#include <cmath>
#include <complex>
#include <cstdint>
#include <random>
#include <string_view>

namespace prequant {

// All randomness in the library flows through streams derived from a single
// seed. A stream is identified by (seed, stream index) or (seed, name), so
// sampling can be partitioned across workers and still produce results that
// are independent of the worker count.

inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

/// Seed for the `stream`-th substream of `seed`.
inline std::uint64_t derive_stream(std::uint64_t seed, std::uint64_t stream) {
    return splitmix64(splitmix64(seed) ^ splitmix64(stream + 0x51ed2701cc1ad82bULL));
}

/// Seed for a named sub-experiment of `seed` (FNV-1a over the name).
inline std::uint64_t derive_seed(std::uint64_t seed, std::string_view name) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : name) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return derive_stream(seed, h);
}

/// Deterministic Gaussian stream. Uniform deviates come from mt19937_64 and
/// normal pairs from an explicit Box-Muller transform, so the draw sequence
/// is fixed by the seed alone (no distribution-object state).
class GaussianStream {
  public:
    explicit GaussianStream(std::uint64_t stream_seed) : engine_(stream_seed) {}

    /// Uniform in (0, 1].
    double next_uniform() {
        return 1.0 - (engine_() >> 11) * 0x1.0p-53;
    }

    /// Standard normal pair via Box-Muller.
    std::pair<double, double> next_normal_pair() {
        double u1 = next_uniform();
        double u2 = next_uniform();
        double r = std::sqrt(-2.0 * std::log(u1));
        double theta = 2.0 * M_PI * u2;
        return {r * std::cos(theta), r * std::sin(theta)};
    }

    /// Standard circularly-symmetric complex normal: E|z|^2 = 1, E[z^2] = 0.
    std::complex<double> next_circular() {
        auto [x, y] = next_normal_pair();
        return {x * M_SQRT1_2, y * M_SQRT1_2};
    }

  private:
    std::mt19937_64 engine_;
};

}  // namespace prequant
