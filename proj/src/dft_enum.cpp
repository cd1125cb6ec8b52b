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
#include "kdq/dft_enum.hpp"

#include <cmath>
#include <numeric>
#include <string>

#include "kdq/phase_amplitude.hpp"

namespace kdq {

namespace {

// e^{2 pi i num / den} with the exponent reduced first, so large d keeps
// full precision.
Complex root_of_unity(long long num, long long den) {
    long long r = num % den;
    if (r < 0) r += den;
    return std::polar(1.0, kTwoPi * static_cast<double>(r) / static_cast<double>(den));
}

int gap_gcd(const IndexSet& set, int d) {
    if (set.size() < 2) return d;
    int g = 0;
    for (std::size_t i = 1; i < set.size(); ++i) g = std::gcd(g, set[i] - set[i - 1]);
    return g;
}

bool is_progression(const IndexSet& set, int step) {
    for (std::size_t i = 1; i < set.size(); ++i) {
        if (set[i] - set[i - 1] != step) return false;
    }
    return true;
}

}  // namespace

void DftClassicalParams::validate() const {
    if (d < 1 || d1 < 1 || d2 < 1 || d1 * d2 != d || j0 < 0 || j0 >= d2 || k0 < 0 ||
        k0 >= d1 || !std::isfinite(alpha)) {
        throw InvalidInput("invalid DFT classical-state parameters");
    }
}

TransitionMatrix dft_matrix(int d) {
    if (d < 1) throw InvalidInput("dft_matrix: d must be positive");
    ComplexMatrix u(d, d);
    const double scale = 1.0 / std::sqrt(static_cast<double>(d));
    for (int j = 0; j < d; ++j) {
        for (int k = 0; k < d; ++k) u(j, k) = scale * root_of_unity(1LL * j * k, d);
    }
    return TransitionMatrix(std::move(u));
}

std::vector<std::pair<int, int>> divisor_pairs(int d) {
    std::vector<std::pair<int, int>> out;
    for (int d1 = 1; d1 <= d; ++d1) {
        if (d % d1 == 0) out.emplace_back(d1, d / d1);
    }
    return out;
}

PureState make_state(const DftClassicalParams& p) {
    p.validate();
    ComplexVector c = ComplexVector::Zero(p.d);
    const double scale = 1.0 / std::sqrt(static_cast<double>(p.d1));
    const Complex global = std::polar(1.0, p.alpha);
    for (int jp = 0; jp < p.d1; ++jp) {
        c(p.j0 + jp * p.d2) = global * scale * root_of_unity(1LL * jp * p.k0, p.d1);
    }
    return PureState::normalized(c);
}

ComplexVector expected_b_coefficients(const DftClassicalParams& p) {
    p.validate();
    ComplexVector c = ComplexVector::Zero(p.d);
    const double scale = 1.0 / std::sqrt(static_cast<double>(p.d2));
    const Complex global =
        std::polar(1.0, p.alpha) * root_of_unity(-1LL * p.j0 * p.k0, p.d);
    for (int kp = 0; kp < p.d2; ++kp) {
        c(p.k0 + kp * p.d1) = global * scale * root_of_unity(-1LL * p.j0 * kp, p.d2);
    }
    return c;
}

bool check_b_expansion(const DftClassicalParams& p, const Tolerances&) {
    const ComplexVector phi = b_coefficients(dft_matrix(p.d), make_state(p));
    return (phi - expected_b_coefficients(p)).cwiseAbs().maxCoeff() <= 1e-10;
}

std::vector<DftClassicalState> enumerate_classical(int d, const Tolerances& tol) {
    const TransitionMatrix u = dft_matrix(d);
    std::vector<DftClassicalState> out;
    for (const auto& [d1, d2] : divisor_pairs(d)) {
        for (int j0 = 0; j0 < d2; ++j0) {
            for (int k0 = 0; k0 < d1; ++k0) {
                DftClassicalParams p{d, d1, d2, j0, k0, 0.0};
                PureState psi = make_state(p);
                if (!classify(u, psi, tol).classical || !mub_corollary_check(u, psi, tol)) {
                    throw ConsistencyError("enumerated DFT state failed verification at d1=" +
                                           std::to_string(d1) + ", j0=" + std::to_string(j0) +
                                           ", k0=" + std::to_string(k0));
                }
                out.push_back({p, std::move(psi)});
            }
        }
    }
    return out;
}

SupportLattice support_lattice_check(const TransitionMatrix& u, const PureState& psi,
                                     const Tolerances& tol) {
    const int d = u.dim();
    if ((u.matrix() - dft_matrix(d).matrix()).cwiseAbs().maxCoeff() > tol.eps_unitary) {
        throw InvalidInput("support_lattice_check: U is not the DFT matrix");
    }
    const ClassicalityReport rep = classify(u, psi, tol);
    if (!rep.classical) throw InvalidInput("support_lattice_check: state is nonclassical");

    SupportLattice lat;
    lat.s_a = rep.support.s_a;
    lat.s_b = rep.support.s_b;
    lat.big_d1 = gap_gcd(lat.s_a, d);
    lat.big_d2 = gap_gcd(lat.s_b, d);
    const int n_a = rep.support.n_a();
    const int n_b = rep.support.n_b();
    if ((1LL * lat.big_d1 * lat.big_d2) % d != 0) {
        throw ConsistencyError("d does not divide D1 * D2");
    }
    if (1LL * n_a * n_b != d) throw ConsistencyError("n_A * n_B != d");
    // n_A = d1 and n_B = d2: S_A steps by d2, S_B steps by d1.
    if (!is_progression(lat.s_a, n_b) || !is_progression(lat.s_b, n_a) ||
        lat.s_a.front() >= n_b || lat.s_b.front() >= n_a) {
        throw ConsistencyError("supports are not the expected arithmetic progressions");
    }
    if (lat.big_d2 % n_a != 0 || lat.big_d1 % n_b != 0) {
        throw ConsistencyError("divisibility d1 | D2, d2 | D1 fails");
    }
    return lat;
}

double mub_m_ab(const TransitionMatrix& u, const Tolerances&) {
    return u.matrix().cwiseAbs().maxCoeff();
}

}  // namespace kdq
