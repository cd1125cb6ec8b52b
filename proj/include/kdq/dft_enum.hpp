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

#include <utility>
#include <vector>

#include "kdq/core_types.hpp"
#include "kdq/kd_core.hpp"

namespace kdq {

// Classical states of the discrete Fourier transform. For every factorization
// d = d1 d2 and offsets j0 < d2, k0 < d1 the state
//   e^{i alpha}/sqrt(d1) sum_{j'} e^{2 pi i j' k0 / d1} |a_{j0 + j' d2}>
// is classical, and these exhaust the classical states up to global phase.

struct DftClassicalParams {
    int d = 1;
    int d1 = 1;
    int d2 = 1;
    int j0 = 0;
    int k0 = 0;
    double alpha = 0.0;

    /// Throws InvalidInput unless d1 d2 = d and the offsets are in range.
    void validate() const;
};

struct SupportLattice {
    IndexSet s_a;
    IndexSet s_b;
    int big_d1 = 0;  ///< gcd of consecutive gaps in S_A; d for a singleton
    int big_d2 = 0;  ///< gcd of consecutive gaps in S_B; d for a singleton
};

/// U(j, k) = e^{2 pi i jk/d} / sqrt(d). Throws InvalidInput for d < 1.
TransitionMatrix dft_matrix(int d);

/// (d1, d) / d1 for every divisor d1 of d, ascending in d1.
std::vector<std::pair<int, int>> divisor_pairs(int d);

PureState make_state(const DftClassicalParams& p);

/// Expected B-basis coefficients of make_state(p):
///   e^{i(alpha - 2 pi j0 k0 / d)}/sqrt(d2) e^{-2 pi i j0 k' / d2} at k0 + k' d1.
ComplexVector expected_b_coefficients(const DftClassicalParams& p);

/// U^dagger psi agrees with expected_b_coefficients within 1e-10.
bool check_b_expansion(const DftClassicalParams& p, const Tolerances& tol);

struct DftClassicalState {
    DftClassicalParams params;
    PureState state;
};

/// All d * tau(d) states with alpha = 0, ordered by (d1, j0, k0). Each is
/// verified with classify and mub_corollary_check; a failure throws
/// ConsistencyError.
std::vector<DftClassicalState> enumerate_classical(int d, const Tolerances& tol);

/// Support gcd structure of a classical DFT state. Throws InvalidInput if
/// U is not the DFT or psi is nonclassical, and ConsistencyError when the
/// lattice relations fail.
SupportLattice support_lattice_check(const TransitionMatrix& u, const PureState& psi,
                                     const Tolerances& tol);

/// max |U(j, k)|.
double mub_m_ab(const TransitionMatrix& u, const Tolerances& tol);

}  // namespace kdq
