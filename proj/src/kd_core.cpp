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
#include "kdq/kd_core.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace kdq {

namespace {

void require_same_dim(const TransitionMatrix& u, const PureState& psi) {
    if (u.dim() != psi.dim()) {
        throw DimensionError("state dimension does not match the matrix");
    }
}

}  // namespace

RealVector KDTable::row_marginals() const { return q.rowwise().sum().real(); }

RealVector KDTable::col_marginals() const {
    return q.colwise().sum().real().transpose();
}

ComplexVector b_coefficients(const TransitionMatrix& u, const PureState& psi) {
    require_same_dim(u, psi);
    return u.matrix().adjoint() * psi.coeffs();
}

KDTable kd_table(const TransitionMatrix& u, const PureState& psi) {
    const ComplexVector phi = b_coefficients(u, psi);
    const int d = u.dim();
    KDTable t{d, ComplexMatrix(d, d)};
    for (int j = 0; j < d; ++j) {
        for (int k = 0; k < d; ++k) {
            t.q(j, k) = psi[j] * std::conj(phi(k)) * std::conj(u(j, k));
        }
    }
    return t;
}

SupportPair supports(const TransitionMatrix& u, const PureState& psi,
                     const Tolerances& tol) {
    const ComplexVector phi = b_coefficients(u, psi);
    SupportPair sp;
    for (int j = 0; j < psi.dim(); ++j) {
        if (std::abs(psi[j]) > tol.eps_zero) sp.s_a.push_back(j);
    }
    for (int k = 0; k < phi.size(); ++k) {
        if (std::abs(phi(k)) > tol.eps_zero) sp.s_b.push_back(k);
    }
    return sp;
}

ClassicalityReport classify(const TransitionMatrix& u, const PureState& psi,
                            const Tolerances& tol) {
    const KDTable t = kd_table(u, psi);
    ClassicalityReport r;
    r.min_real = std::numeric_limits<double>::infinity();
    for (int j = 0; j < t.d; ++j) {
        for (int k = 0; k < t.d; ++k) {
            const Complex q = t.q(j, k);
            r.min_real = std::min(r.min_real, q.real());
            r.max_abs_imag = std::max(r.max_abs_imag, std::abs(q.imag()));
            if (q.real() < -tol.eps_zero || std::abs(q.imag()) > tol.eps_zero) {
                r.offending_cells.emplace_back(j, k);
            }
        }
    }
    r.classical = r.offending_cells.empty();
    r.support = supports(u, psi, tol);
    return r;
}

TransitionMatrix gauge_rotate(const TransitionMatrix& u,
                              const std::vector<double>& xi,
                              const std::vector<double>& eta) {
    const int d = u.dim();
    if (static_cast<int>(xi.size()) != d || static_cast<int>(eta.size()) != d) {
        throw DimensionError("gauge_rotate: phase vectors must have length d");
    }
    ComplexMatrix out(d, d);
    for (int j = 0; j < d; ++j) {
        for (int k = 0; k < d; ++k) {
            out(j, k) = std::polar(1.0, -xi[j]) * u(j, k) * std::polar(1.0, eta[k]);
        }
    }
    return TransitionMatrix(std::move(out));
}

PureState gauge_rotate_state(const PureState& psi,
                             const std::vector<double>& xi) {
    if (static_cast<int>(xi.size()) != psi.dim()) {
        throw DimensionError("gauge_rotate_state: phase vector must have length d");
    }
    ComplexVector out(psi.dim());
    for (int j = 0; j < psi.dim(); ++j) {
        out(j) = std::polar(1.0, -xi[j]) * psi[j];
    }
    return PureState(std::move(out));
}

}  // namespace kdq
