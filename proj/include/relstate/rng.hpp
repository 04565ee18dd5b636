// Copyright 2026 The relstate authors
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

#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "relstate/errors.hpp"

namespace relstate {

/// Reproducible sampling source. The generator is std::mt19937_64, whose
/// output sequence is pinned by the C++ standard, and uniforms are derived
/// by the 53-bit mantissa map u = (x >> 11) * 2^-53 rather than through a
/// distribution object, so records are identical across standard libraries
/// and platforms for the same seed.
class SampleRng {
  public:
    explicit SampleRng(std::uint64_t seed) : seed_(seed), gen_(seed) {}

    std::uint64_t seed() const noexcept { return seed_; }

    /// Uniform double in [0, 1).
    double uniform01() {
        return static_cast<double>(gen_() >> 11) * 0x1.0p-53;
    }

    /// Index drawn proportionally to the (nonnegative) weights; weights are
    /// normalized internally by their sum. Inverse-CDF walk over the weight
    /// array, so results depend only on the uniform stream.
    std::size_t categorical(const std::vector<double>& weights) {
        double total = 0.0;
        for (double w : weights) {
            if (w < 0.0) {
                throw ContractError("categorical: negative weight");
            }
            total += w;
        }
        if (total <= 0.0) {
            throw ContractError("categorical: all weights are zero");
        }
        const double r = uniform01() * total;
        double cumulative = 0.0;
        std::size_t last_positive = 0;
        for (std::size_t i = 0; i < weights.size(); ++i) {
            if (weights[i] > 0.0) {
                cumulative += weights[i];
                last_positive = i;
                if (r < cumulative) {
                    return i;
                }
            }
        }
        // r landed on the rounding tail; return the last contributing index.
        return last_positive;
    }

  private:
    std::uint64_t seed_;
    std::mt19937_64 gen_;
};

} // namespace relstate
