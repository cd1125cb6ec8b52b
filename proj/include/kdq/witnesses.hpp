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

#include <string>
#include <utility>
#include <vector>

#include "kdq/core_types.hpp"
#include "kdq/kd_core.hpp"

namespace kdq {

// One-directional nonclassicality certificates built from zero counts and
// support sizes. A witness never claims that a state is classical.

enum class Implies { Nonclassical, BoundOnly };

struct WitnessVerdict {
    std::string name;
    bool fired = false;
    Implies implies = Implies::Nonclassical;
};

struct WitnessReport {
    int d = 0;
    int n_zeros = 0;
    int s_full = 0;
    int z_r = 0;
    int z_c = 0;
    int n_a = 0;
    int n_b = 0;
    std::vector<WitnessVerdict> verdicts;
    bool nonclassical_certified = false;
};

/// Entries with modulus <= eps_zero.
int count_zeros(const TransitionMatrix& u, const Tolerances& tol);

/// (z_r, z_c): the largest zero count over any two rows / any two columns.
/// Both are 0 when d < 2.
std::pair<int, int> two_line_zeros(const TransitionMatrix& u, const Tolerances& tol);

/// Least number of zeros a window with s blocks forces on U. This is
/// s(2s - 1) when both supports are proper subsets; a full support makes
/// every block a single line, giving d(s - 1) instead.
int zero_count_lower_bound(int s, int d, int n_a, int n_b);

/// For every classical state in `states`, checks that the zero count of U
/// is at least zero_count_lower_bound for the window's block count.
/// Nonclassical states are skipped. Throws InvalidInput for decomposable U.
bool theorem4_bound_check(const TransitionMatrix& u,
                          const std::vector<PureState>& states,
                          const Tolerances& tol);

/// Evaluates W1 (two blocks), W2 (one branch per s = 2..d/2), W3 (no
/// zeros), W4 (three halves bound) and W5 (two-line zero counts) in that
/// order. Throws InvalidInput when U is decomposable; split it first.
WitnessReport nonclassicality_witness(const TransitionMatrix& u,
                                      const PureState& psi,
                                      const Tolerances& tol);

const char* to_string(Implies implies);

}  // namespace kdq
