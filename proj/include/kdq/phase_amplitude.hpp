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

// Feasibility of a classical state with prescribed supports.
//
// A state is KD classical with supports (S_A, S_B) iff there are phases
// alpha_j, beta_k with theta_jk = alpha_j + beta_k (mod 2 pi) on every
// nonzero window entry, and positive amplitudes A_j, B_k with
//   psi = sum_j A_j e^{i alpha_j} |a_j> = sum_k B_k e^{-i beta_k} |b_k>.
// The phases are found on a spanning forest of the window graph; the
// amplitudes are the Perron vectors of V^t V on each window component, where
// V = |U| restricted to the window.

#include <map>
#include <optional>
#include <string>
#include <variant>

#include "kdq/core_types.hpp"
#include "kdq/kd_core.hpp"

namespace kdq {

struct PhaseAssignment {
    std::map<int, double> alpha;  ///< over S_A, in [0, 2 pi)
    std::map<int, double> beta;   ///< over S_B, in [0, 2 pi)
};

/// Closed walk rows[0] - cols[0] - rows[1] - cols[1] - ... - rows[0] whose
/// alternating phase sum is not a multiple of 2 pi. A four-cycle has
/// rows = {j1, j2}, cols = {k1, k2}.
struct PhaseCycleViolation {
    IndexSet rows;
    IndexSet cols;
    double defect = 0.0;  ///< circular distance of the alternating sum from 0
};

struct AmplitudeSolution {
    RealVector a_vec;  ///< aligned with S_A
    RealVector b_vec;  ///< aligned with S_B
};

enum class RefutationKind {
    PhaseCycleViolation,
    NoPositiveAmplitude,
    OffSupportLeak,
    InconsistentSupport,  ///< window row/column without a nonzero entry
    VerificationFailed,   ///< constructed state failed re-classification
};

enum class Side { A, B };

struct Refutation {
    RefutationKind kind;
    std::optional<PhaseCycleViolation> cycle;
    int index = -1;  ///< offending basis index, when there is one
    Side side = Side::A;
    std::string detail;
};

struct AmplitudeOutcome {
    std::optional<AmplitudeSolution> solution;
    std::optional<Refutation> refutation;
    int null_space_dim = 0;          ///< of the full real homogeneous system
    bool tolerance_warning = false;  ///< a singular value sits near the cutoff
};

struct FeasibilityResult {
    bool feasible = false;
    std::optional<PhaseAssignment> phases;
    std::optional<AmplitudeSolution> amplitudes;
    std::optional<PureState> state;
    std::optional<Refutation> refutation;
    int null_space_dim = 0;
    bool tolerance_warning = false;
};

/// Gauge-fixes alpha = 0 at the smallest row of every window component and
/// propagates along a spanning forest; every window edge is then re-checked.
/// Throws InvalidInput when a window row or column has no nonzero entry.
std::variant<PhaseAssignment, PhaseCycleViolation> solve_phases(
    const TransitionMatrix& u, const SupportPair& sp, const Tolerances& tol);

/// Direct check of theta_{j1k1} - theta_{j2k1} - theta_{j1k2} + theta_{j2k2}
/// = 0 (mod 2 pi) on every window four-cycle with nonzero corners.
bool four_cycle_check(const TransitionMatrix& u, const SupportPair& sp,
                      const Tolerances& tol);

AmplitudeOutcome solve_amplitudes(const TransitionMatrix& u,
                                  const SupportPair& sp,
                                  const PhaseAssignment& phases,
                                  const Tolerances& tol);

FeasibilityResult construct_classical_state(const TransitionMatrix& u,
                                            const SupportPair& sp,
                                            const Tolerances& tol);

struct ClassicalDecomposition {
    SupportPair support;
    PhaseAssignment phases;
    AmplitudeSolution amplitudes;
};

/// Reads off supports, phases alpha_j = arg <a_j|psi>, beta_k = arg <psi|b_k>
/// and amplitudes of a classical state, asserting the phase and amplitude
/// relations. Throws InvalidInput for a nonclassical state and
/// ConsistencyError if a relation fails.
ClassicalDecomposition decompose_classical_state(const TransitionMatrix& u,
                                                 const PureState& psi,
                                                 const Tolerances& tol);

/// For a mutually unbiased pair: equal amplitudes on each support and
/// n_A * n_B == d. Throws InvalidInput if U is not unbiased.
bool mub_corollary_check(const TransitionMatrix& u, const PureState& psi,
                         const Tolerances& tol);

const char* to_string(RefutationKind kind);

}  // namespace kdq
