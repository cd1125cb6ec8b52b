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
#include "kdq/witnesses.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <tuple>

#include "kdq/block_structure.hpp"

namespace kdq {

const char* to_string(Implies implies) {
    return implies == Implies::Nonclassical ? "Nonclassical" : "BoundOnly";
}

int count_zeros(const TransitionMatrix& u, const Tolerances& tol) {
    return static_cast<int>(
        (u.matrix().cwiseAbs().array() <= tol.eps_zero).count());
}

std::pair<int, int> two_line_zeros(const TransitionMatrix& u, const Tolerances& tol) {
    const int d = u.dim();
    if (d < 2) return {0, 0};
    const Eigen::ArrayXXi zero =
        (u.matrix().cwiseAbs().array() <= tol.eps_zero).cast<int>();
    const Eigen::VectorXi per_row = zero.rowwise().sum();
    const Eigen::VectorXi per_col = zero.colwise().sum().transpose();
    int z_r = 0;
    int z_c = 0;
    for (int a = 0; a < d; ++a) {
        for (int b = a + 1; b < d; ++b) {
            z_r = std::max(z_r, per_row(a) + per_row(b));
            z_c = std::max(z_c, per_col(a) + per_col(b));
        }
    }
    return {z_r, z_c};
}

int zero_count_lower_bound(int s, int d, int n_a, int n_b) {
    if (s < 2) return 0;
    if (n_a >= d || n_b >= d) return d * (s - 1);
    return s * (2 * s - 1);
}

bool theorem4_bound_check(const TransitionMatrix& u,
                          const std::vector<PureState>& states,
                          const Tolerances& tol) {
    if (!is_indecomposable(u, tol)) {
        throw InvalidInput("theorem4_bound_check: U is decomposable");
    }
    const int n = count_zeros(u, tol);
    for (const PureState& psi : states) {
        const ClassicalityReport rep = classify(u, psi, tol);
        if (!rep.classical) continue;
        const CanonicalForm cf = canonical_form(u, rep.support, tol);
        if (n < zero_count_lower_bound(cf.s(), u.dim(), rep.support.n_a(),
                                       rep.support.n_b())) {
            return false;
        }
    }
    return true;
}

WitnessReport nonclassicality_witness(const TransitionMatrix& u,
                                      const PureState& psi,
                                      const Tolerances& tol) {
    if (psi.dim() != u.dim()) throw DimensionError("state and matrix sizes differ");
    const BlockDecomposition full = decompose(u, tol);
    if (full.s() != 1) {
        throw InvalidInput("U is decomposable into " + std::to_string(full.s()) +
                           " blocks; split it into direct summands first");
    }
    WitnessReport rep;
    const int d = u.dim();
    const SupportPair sp = supports(u, psi, tol);
    rep.d = d;
    rep.s_full = full.s();
    rep.n_zeros = count_zeros(u, tol);
    std::tie(rep.z_r, rep.z_c) = two_line_zeros(u, tol);
    rep.n_a = sp.n_a();
    rep.n_b = sp.n_b();
    const int total = rep.n_a + rep.n_b;
    const auto bound = [&](int s) { return zero_count_lower_bound(s, d, rep.n_a, rep.n_b); };

    auto add = [&](std::string name, bool fired, Implies implies) {
        rep.verdicts.push_back({std::move(name), fired, implies});
    };
    add("W1", rep.n_zeros < bound(2) && total > d + 1, Implies::Nonclassical);
    for (int s = 2; 2 * s <= d; ++s) {
        add("W2[s=" + std::to_string(s) + "]",
            rep.n_zeros < bound(s) && total > d + s - 1, Implies::Nonclassical);
    }
    add("W3", rep.n_zeros == 0 && total > d + 1, Implies::Nonclassical);
    const bool basis_state = rep.n_a == 1 || rep.n_b == 1;
    add("W4", !basis_state && 2 * total > 3 * d, Implies::Nonclassical);
    const bool single_block = std::max(rep.n_a, rep.n_b) > std::max(rep.z_r, rep.z_c);
    add("W5[s=1]", single_block, Implies::BoundOnly);
    add("W5", single_block && total > d + 1, Implies::Nonclassical);

    rep.nonclassical_certified =
        std::any_of(rep.verdicts.begin(), rep.verdicts.end(), [](const WitnessVerdict& v) {
            return v.fired && v.implies == Implies::Nonclassical;
        });
    return rep;
}

}  // namespace kdq
