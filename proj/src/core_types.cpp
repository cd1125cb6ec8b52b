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
#include "kdq/core_types.hpp"

#include <algorithm>
#include <cmath>

namespace kdq {

void Tolerances::validate() const {
    for (double v : {eps_zero, eps_angle, eps_unitary, eps_eig}) {
        if (!(v > 0.0 && v < 1e-3)) {
            throw InvalidInput("tolerances must lie in (0, 1e-3)");
        }
    }
}

double normalize_phase(double angle) {
    double r = std::fmod(angle, kTwoPi);
    if (r < 0.0) r += kTwoPi;
    // fmod of a tiny negative value can round back up to exactly 2*pi
    if (r >= kTwoPi) r = 0.0;
    return r;
}

double circular_distance(double a, double b) {
    const double diff = std::abs(normalize_phase(a) - normalize_phase(b));
    return std::min(diff, kTwoPi - diff);
}

std::optional<Polar> entry_polar(Complex z, const Tolerances& tol) {
    const double r = std::abs(z);
    if (r <= tol.eps_zero) return std::nullopt;
    return Polar{r, normalize_phase(std::arg(z))};
}

bool all_finite(const ComplexMatrix& m) {
    return m.real().allFinite() && m.imag().allFinite();
}

bool all_finite(const ComplexVector& v) {
    return v.real().allFinite() && v.imag().allFinite();
}

bool check_unitary(const ComplexMatrix& u, const Tolerances& tol) {
    if (u.rows() != u.cols()) {
        throw DimensionError("check_unitary: matrix is not square");
    }
    if (!all_finite(u)) return false;
    const ComplexMatrix defect =
        u.adjoint() * u - ComplexMatrix::Identity(u.rows(), u.cols());
    return defect.cwiseAbs().maxCoeff() <= tol.eps_unitary;
}

TransitionMatrix::TransitionMatrix(ComplexMatrix u, const Tolerances& tol)
    : u_(std::move(u)) {
    if (u_.rows() == 0 || u_.rows() != u_.cols()) {
        throw DimensionError("transition matrix must be square and nonempty");
    }
    if (!all_finite(u_)) {
        throw InvalidInput("transition matrix has non-finite entries");
    }
    if (!check_unitary(u_, tol)) {
        throw InvalidInput("transition matrix is not unitary");
    }
}

PureState::PureState(ComplexVector coeffs, double norm_tol)
    : c_(std::move(coeffs)) {
    if (c_.size() == 0) throw DimensionError("state has no coefficients");
    if (!all_finite(c_)) throw InvalidInput("state has non-finite entries");
    if (std::abs(c_.norm() - 1.0) > norm_tol) {
        throw InvalidInput("state is not normalized");
    }
}

PureState PureState::normalized(const ComplexVector& v) {
    const double n = v.norm();
    if (!(n > 0.0) || !std::isfinite(n)) {
        throw InvalidInput("cannot normalize a zero or non-finite vector");
    }
    return PureState(v / n);
}

int numerical_rank(const ComplexMatrix& m, double eps_zero) {
    if (m.rows() == 0 || m.cols() == 0) return 0;
    Eigen::JacobiSVD<ComplexMatrix> svd(m);
    const auto& sv = svd.singularValues();
    const double threshold = std::max(eps_zero * sv(0), eps_zero);
    int rank = 0;
    for (Eigen::Index i = 0; i < sv.size(); ++i) {
        if (sv(i) > threshold) ++rank;
    }
    return rank;
}

ComplexMatrix submatrix(const ComplexMatrix& m, const IndexSet& rows,
                        const IndexSet& cols) {
    ComplexMatrix out(rows.size(), cols.size());
    for (std::size_t r = 0; r < rows.size(); ++r) {
        for (std::size_t c = 0; c < cols.size(); ++c) {
            out(r, c) = m(rows[r], cols[c]);
        }
    }
    return out;
}

IndexSet complement(const IndexSet& set, int d) {
    IndexSet out;
    out.reserve(d);
    for (int i = 0; i < d; ++i) {
        if (!std::binary_search(set.begin(), set.end(), i)) out.push_back(i);
    }
    return out;
}

IndexSet full_range(int d) {
    IndexSet out(d);
    for (int i = 0; i < d; ++i) out[i] = i;
    return out;
}

}  // namespace kdq
