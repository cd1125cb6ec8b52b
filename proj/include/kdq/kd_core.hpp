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

namespace kdq {

/// Kirkwood-Dirac table Q(j, k) = <a_j|psi><psi|b_k><b_k|a_j>.
struct KDTable {
    int d = 0;
    ComplexMatrix q;

    RealVector row_marginals() const;  ///< sum_k Q(j, k), real part
    RealVector col_marginals() const;  ///< sum_j Q(j, k), real part
};

struct SupportPair {
    IndexSet s_a;
    IndexSet s_b;

    int n_a() const { return static_cast<int>(s_a.size()); }
    int n_b() const { return static_cast<int>(s_b.size()); }

    friend bool operator==(const SupportPair&, const SupportPair&) = default;
};

struct ClassicalityReport {
    bool classical = false;
    double min_real = 0.0;
    double max_abs_imag = 0.0;
    std::vector<std::pair<int, int>> offending_cells;  ///< sorted (j, k)
    SupportPair support;
};

/// B-basis coefficients <b_k|psi> = sum_j conj(U(j, k)) psi[j].
ComplexVector b_coefficients(const TransitionMatrix& u, const PureState& psi);

KDTable kd_table(const TransitionMatrix& u, const PureState& psi);

SupportPair supports(const TransitionMatrix& u, const PureState& psi,
                     const Tolerances& tol);

ClassicalityReport classify(const TransitionMatrix& u, const PureState& psi,
                            const Tolerances& tol);

/// Basis rephasing |a_j> -> e^{i xi_j}|a_j>, |b_k> -> e^{i eta_k}|b_k>:
/// U'(j, k) = e^{-i xi_j} U(j, k) e^{i eta_k}.
TransitionMatrix gauge_rotate(const TransitionMatrix& u,
                              const std::vector<double>& xi,
                              const std::vector<double>& eta);

/// Coefficients of the same physical state in the rephased A basis,
/// psi'[j] = e^{-i xi_j} psi[j].
PureState gauge_rotate_state(const PureState& psi,
                             const std::vector<double>& xi);

}  // namespace kdq
