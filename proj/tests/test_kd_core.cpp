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
#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "kdq/dft_enum.hpp"
#include "kdq/kd_core.hpp"
#include "kdq/random.hpp"

namespace kdq {
namespace {

ComplexVector vec(std::initializer_list<Complex> xs) {
    ComplexVector v(static_cast<Eigen::Index>(xs.size()));
    Eigen::Index i = 0;
    for (Complex x : xs) v(i++) = x;
    return v;
}

const double kR2 = 1.0 / std::sqrt(2.0);

TEST(KdTable, IdentityBasisState) {
    const TransitionMatrix u(ComplexMatrix::Identity(2, 2));
    const KDTable t = kd_table(u, PureState(vec({1.0, 0.0})));
    EXPECT_EQ(t.q(0, 0), Complex(1.0, 0.0));
    EXPECT_EQ(t.q(0, 1), Complex(0.0, 0.0));
    EXPECT_EQ(t.q(1, 0), Complex(0.0, 0.0));
    EXPECT_EQ(t.q(1, 1), Complex(0.0, 0.0));
}

TEST(KdTable, Dft2OnFirstBVector) {
    const KDTable t = kd_table(dft_matrix(2), PureState(vec({kR2, kR2})));
    EXPECT_NEAR(std::abs(t.q(0, 0) - 0.5), 0.0, 1e-15);
    EXPECT_NEAR(std::abs(t.q(1, 0) - 0.5), 0.0, 1e-15);
    EXPECT_NEAR(std::abs(t.q(0, 1)), 0.0, 1e-15);
    EXPECT_NEAR(std::abs(t.q(1, 1)), 0.0, 1e-15);
}

// Reference values from tests/oracles/window_lp.py (direct summation).
TEST(KdTable, Dft3FrozenValues) {
    const KDTable t = kd_table(dft_matrix(3), PureState(vec({kR2, kR2, 0.0})));
    const Complex expected[3][3] = {
        {{0.33333333333333337, 0.0},
         {0.08333333333333337, 0.14433756729740646},
         {0.083333333333333259, -0.14433756729740641}},
        {{0.33333333333333337, 0.0},
         {0.083333333333333356, -0.14433756729740646},
         {0.083333333333333259, 0.14433756729740641}},
        {{0.0, 0.0}, {0.0, 0.0}, {0.0, 0.0}}};
    for (int j = 0; j < 3; ++j) {
        for (int k = 0; k < 3; ++k) {
            EXPECT_NEAR(std::abs(t.q(j, k) - expected[j][k]), 0.0, 1e-14) << j << "," << k;
        }
    }
    EXPECT_FALSE(classify(dft_matrix(3), PureState(vec({kR2, kR2, 0.0})), {}).classical);
}

TEST(KdTable, MarginalInvariants) {
    CounterRng rng(11, 0);
    for (int trial = 0; trial < 50; ++trial) {
        const int d = 2 + trial % 6;
        const TransitionMatrix u(haar_unitary(d, rng));
        const PureState psi = haar_state(d, rng);
        const KDTable t = kd_table(u, psi);
        const ComplexVector phi = b_coefficients(u, psi);
        EXPECT_NEAR(std::abs(t.q.sum() - 1.0), 0.0, 1e-10);
        for (int j = 0; j < d; ++j) {
            EXPECT_NEAR(t.row_marginals()(j), std::norm(psi[j]), 1e-10);
            EXPECT_NEAR(t.col_marginals()(j), std::norm(phi(j)), 1e-10);
        }
    }
}

TEST(Supports, Examples) {
    const Tolerances tol;
    const TransitionMatrix id(ComplexMatrix::Identity(3, 3));
    SupportPair sp = supports(id, PureState(vec({0.0, 1.0, 0.0})), tol);
    EXPECT_EQ(sp.s_a, (IndexSet{1}));
    EXPECT_EQ(sp.s_b, (IndexSet{1}));

    sp = supports(dft_matrix(4), PureState(vec({kR2, 0.0, kR2, 0.0})), tol);
    EXPECT_EQ(sp.s_a, (IndexSet{0, 2}));
    EXPECT_EQ(sp.s_b, (IndexSet{0, 2}));

    sp = supports(dft_matrix(3), PureState(vec({1.0, 0.0, 0.0})), tol);
    EXPECT_EQ(sp.s_a, (IndexSet{0}));
    EXPECT_EQ(sp.s_b, (IndexSet{0, 1, 2}));
}

TEST(Classify, Examples) {
    const Tolerances tol;
    EXPECT_TRUE(classify(dft_matrix(4), PureState(vec({kR2, 0.0, kR2, 0.0})), tol).classical);
    CounterRng rng(3, 0);
    for (int d = 2; d <= 6; ++d) {
        const TransitionMatrix u(haar_unitary(d, rng));
        for (int j = 0; j < d; ++j) {
            ComplexVector e = ComplexVector::Zero(d);
            e(j) = 1.0;
            EXPECT_TRUE(classify(u, PureState(e), tol).classical);
        }
    }
    const ClassicalityReport r = classify(dft_matrix(3), PureState(vec({kR2, kR2, 0.0})), tol);
    EXPECT_FALSE(r.classical);
    ASSERT_FALSE(r.offending_cells.empty());
    EXPECT_TRUE(std::is_sorted(r.offending_cells.begin(), r.offending_cells.end()));
    EXPECT_GT(r.max_abs_imag, 0.1);
}

TEST(Classify, DimensionMismatch) {
    EXPECT_THROW(classify(dft_matrix(3), PureState(vec({1.0, 0.0})), {}), DimensionError);
}

TEST(GaugeRotate, Examples) {
    const TransitionMatrix u = dft_matrix(2);
    const TransitionMatrix same = gauge_rotate(u, {0.0, 0.0}, {0.0, 0.0});
    EXPECT_EQ(same.matrix(), u.matrix());
    const TransitionMatrix neg = gauge_rotate(u, {std::numbers::pi, 0.0}, {0.0, 0.0});
    EXPECT_NEAR(std::abs(neg(0, 0) + u(0, 0)), 0.0, 1e-15);
    EXPECT_NEAR(std::abs(neg(0, 1) + u(0, 1)), 0.0, 1e-15);
    EXPECT_EQ(neg(1, 0), u(1, 0));
}

TEST(GaugeRotate, TableInvariant) {
    CounterRng rng(5, 0);
    const TransitionMatrix u = dft_matrix(4);
    const PureState psi(vec({kR2, 0.0, kR2, 0.0}));
    for (int t = 0; t < 20; ++t) {
        std::vector<double> xi(4);
        std::vector<double> eta(4);
        for (int j = 0; j < 4; ++j) {
            xi[j] = kTwoPi * rng.uniform();
            eta[j] = kTwoPi * rng.uniform();
        }
        const TransitionMatrix ug = gauge_rotate(u, xi, eta);
        const PureState pg = gauge_rotate_state(psi, xi);
        EXPECT_LE((kd_table(ug, pg).q - kd_table(u, psi).q).cwiseAbs().maxCoeff(), 1e-14);
        EXPECT_TRUE(classify(ug, pg, {}).classical);
    }
    EXPECT_THROW(gauge_rotate(u, {0.0}, {0.0, 0.0, 0.0, 0.0}), DimensionError);
}

}  // namespace
}  // namespace kdq
