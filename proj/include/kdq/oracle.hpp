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
#include <optional>
#include <string>
#include <vector>

#include "kdq/core_types.hpp"
#include "kdq/kd_core.hpp"

namespace kdq {

inline constexpr int kOracleDefaultMaxD = 8;
inline constexpr int kOracleHardMaxD = 10;

struct FeasibleEntry {
    SupportPair support;
    PureState representative;
    int null_space_dim = 0;
};

struct OracleCatalog {
    int d = 0;
    std::string unitary_id;
    std::vector<FeasibleEntry> feasible;  ///< ascending (mask(s_a), mask(s_b))
    double elapsed_seconds = 0.0;
};

/// 64-bit FNV-1a over d and the IEEE bytes of every entry, as 16 hex digits.
std::string unitary_digest(const TransitionMatrix& u);

/// Bit j of the mask is set iff j is in the set.
std::uint32_t index_mask(const IndexSet& set);
IndexSet mask_indices(std::uint32_t mask, int d);

/// Runs construct_classical_state on every nonempty support pair, skipping
/// windows with an all-zero row or column. Throws LimitError when
/// d > max_d and no override is given, and always when d > 10.
/// workers = 0 uses the hardware concurrency. The result does not depend
/// on the worker count.
OracleCatalog brute_force_catalog(const TransitionMatrix& u, const Tolerances& tol,
                                  int max_d = kOracleDefaultMaxD,
                                  bool allow_override = false, unsigned workers = 0);

struct SoundnessViolation {
    int summand = 0;
    int trial = 0;
    PureState state;
};

struct SoundnessReport {
    bool skipped = false;
    std::string notice;
    int summands = 1;
    int trials_run = 0;
    int fired = 0;         ///< states with at least one Nonclassical witness
    int nonclassical = 0;  ///< states classify reports as nonclassical
    std::optional<SoundnessViolation> violation;
};

/// Samples Haar-random states (stream = trial index) and checks that every
/// fired witness agrees with classify. A decomposable U is skipped unless
/// `split` is set, in which case each direct summand is swept on its own.
/// Stops at the first violation.
SoundnessReport witness_soundness_sweep(const TransitionMatrix& u, int trials,
                                        std::uint64_t seed, const Tolerances& tol,
                                        bool split = false);

}  // namespace kdq
