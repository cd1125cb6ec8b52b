// Copyright 2026 The kdq Authors
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

#include "kdq/core_types.hpp"

namespace kdq {

/// Counter-based generator: draw n of stream s is splitmix64(seed, s, n).
/// Output depends only on (seed, stream, counter), never on thread timing
/// or the platform's standard library.
class CounterRng {
  public:
    CounterRng(std::uint64_t seed, std::uint64_t stream);

    std::uint64_t next_u64();
    double uniform();  ///< in (0, 1)
    double normal();   ///< standard normal, Box-Muller
    int uniform_int(int lo, int hi);  ///< inclusive range

  private:
    std::uint64_t key_;
    std::uint64_t counter_ = 0;
    bool has_spare_ = false;
    double spare_ = 0.0;
};

/// Normalized complex Gaussian vector.
PureState haar_state(int d, CounterRng& rng);

/// QR of a complex Gaussian matrix with the phase of R's diagonal divided out.
ComplexMatrix haar_unitary(int d, CounterRng& rng);

}  // namespace kdq
