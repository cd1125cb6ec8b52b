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

#include "kdq/block_structure.hpp"
#include "kdq/dft_enum.hpp"
#include "kdq/oracle.hpp"
#include "kdq/phase_amplitude.hpp"
#include "kdq/random.hpp"
#include "support/generators.hpp"

namespace kdq {
namespace {

constexpr double kPi = std::numbers::pi;

double overlap(const PureState& a, const PureState& b) {
    return std::abs(a.coeffs().dot(b.coeffs()));
}

// Rows 0..2 x columns 0..2 carry a single six-cycle and no four-cycle; the
// phase on (0, 0) makes the cycle inconsistent.
TransitionMatrix six_cycle_unitary(double phase) {
    ComplexMatrix top = ComplexMatrix::Zero(3, 3);
    top(0, 0) = std::polar(0.4, phase);
    top(0, 1) = 0.4;
    top(1, 1) = 0.4;
    top(1, 2) = 0.4;
    top(2, 2) = 0.4;
    top(2, 0) = 0.4;
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(ComplexMatrix::Identity(3, 3) -
                                                    top.adjoint() * top);
    const ComplexMatrix bottom = es.operatorSqrt();
    ComplexMatrix cols(6, 3);
    cols << top, bottom;
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> cs(ComplexMatrix::Identity(6, 6) -
                                                    cols * cols.adjoint());
    ComplexMatrix u(6, 6);
    u << cols, cs.eigenvectors().rightCols(3);
    return TransitionMatrix(u);
}

TEST(SolvePhases, Dft2FourCycle) {
    const auto res = solve_phases(dft_matrix(2), {{0, 1}, {0, 1}}, {});
    ASSERT_TRUE(std::holds_alternative<PhaseCycleViolation>(res));
    const auto& v = std::get<PhaseCycleViolation>(res);
    EXPECT_EQ(v.rows, (IndexSet{0, 1}));
    EXPECT_EQ(v.cols, (IndexSet{0, 1}));
    EXPECT_NEAR(v.defect, kPi, 1e-12);
    EXPECT_FALSE(four_cycle_check(dft_matrix(2), {{0, 1}, {0, 1}}, {}));
}

TEST(SolvePhases, Dft3FourCycle) {
    const auto res = solve_phases(dft_matrix(3), {{0, 1}, {0, 1}}, {});
    ASSERT_TRUE(std::holds_alternative<PhaseCycleViolation>(res));
    EXPECT_NEAR(std::get<PhaseCycleViolation>(res).defect, 2.0 * kPi / 3.0, 1e-12);
}

TEST(SolvePhases, Dft4LatticeWindow) {
    const auto res = solve_phases(dft_matrix(4), {{0, 2}, {0, 2}}, {});
    ASSERT_TRUE(std::holds_alternative<PhaseAssignment>(res));
    const auto& pa = std::get<PhaseAssignment>(res);
    EXPECT_DOUBLE_EQ(pa.alpha.at(0), 0.0);
    EXPECT_TRUE(four_cycle_check(dft_matrix(4), {{0, 2}, {0, 2}}, {}));
}

TEST(SolvePhases, SixCycleMissedByFourCycles) {
    const TransitionMatrix u = six_cycle_unitary(0.7);
    const SupportPair sp{{0, 1, 2}, {0, 1, 2}};
    EXPECT_TRUE(four_cycle_check(u, sp, {}));
    const auto res = solve_phases(u, sp, {});
    ASSERT_TRUE(std::holds_alternative<PhaseCycleViolation>(res));
    const auto& v = std::get<PhaseCycleViolation>(res);
    EXPECT_EQ(v.rows.size(), 3U);
    EXPECT_EQ(v.cols.size(), 3U);
    EXPECT_NEAR(v.defect, 0.7, 1e-12);

    const TransitionMatrix flat = six_cycle_unitary(0.0);
    EXPECT_TRUE(std::holds_alternative<PhaseAssignment>(solve_phases(flat, sp, {})));
}

TEST(SolvePhases, InconsistentWindowThrows) {
    const TransitionMatrix id(ComplexMatrix::Identity(3, 3));
    EXPECT_THROW(solve_phases(id, {{0, 1}, {0}}, {}), InvalidInput);
}

TEST(SolvePhases, AgreesWithFourCyclesOnDenseWindows) {
    CounterRng rng(37, 0);
    for (int t = 0; t < 300; ++t) {
        const int d = 2 + t % 5;
        const ComplexMatrix base =
            t % 2 == 0 ? haar_unitary(d, rng) : dft_matrix(d).matrix();
        const TransitionMatrix u = gauge_rotate(TransitionMatrix(base),
                                                testing::random_phases(d, rng),
                                                testing::random_phases(d, rng));
        const auto sa = mask_indices(rng.uniform_int(1, (1 << d) - 1), d);
        const auto sb = mask_indices(rng.uniform_int(1, (1 << d) - 1), d);
        const SupportPair sp{sa, sb};
        EXPECT_EQ(std::holds_alternative<PhaseAssignment>(solve_phases(u, sp, {})),
                  four_cycle_check(u, sp, {}));
    }
}

TEST(SolveAmplitudes, Examples) {
    const Tolerances tol;
    {
        const TransitionMatrix u = dft_matrix(4);
        const SupportPair sp{{0, 2}, {0, 2}};
        const auto pa = std::get<PhaseAssignment>(solve_phases(u, sp, tol));
        const AmplitudeOutcome out = solve_amplitudes(u, sp, pa, tol);
        ASSERT_TRUE(out.solution);
        const double r = 1.0 / std::sqrt(2.0);
        EXPECT_NEAR(out.solution->a_vec(0), r, 1e-12);
        EXPECT_NEAR(out.solution->a_vec(1), r, 1e-12);
        EXPECT_NEAR(out.solution->b_vec(0), r, 1e-12);
        EXPECT_NEAR(out.solution->b_vec(1), r, 1e-12);
    }
    {
        const TransitionMatrix u(ComplexMatrix::Identity(2, 2));
        const SupportPair sp{{0}, {0}};
        const auto pa = std::get<PhaseAssignment>(solve_phases(u, sp, tol));
        const AmplitudeOutcome out = solve_amplitudes(u, sp, pa, tol);
        ASSERT_TRUE(out.solution);
        EXPECT_NEAR(out.solution->a_vec(0), 1.0, 1e-12);
        EXPECT_NEAR(out.solution->b_vec(0), 1.0, 1e-12);
    }
    {
        const TransitionMatrix u = dft_matrix(4);
        const SupportPair sp{{0, 1, 2, 3}, {0}};
        const auto pa = std::get<PhaseAssignment>(solve_phases(u, sp, tol));
        const AmplitudeOutcome out = solve_amplitudes(u, sp, pa, tol);
        ASSERT_TRUE(out.solution);
        for (int j = 0; j < 4; ++j) EXPECT_NEAR(out.solution->a_vec(j), 0.5, 1e-12);
        EXPECT_NEAR(out.solution->b_vec(0), 1.0, 1e-12);
        EXPECT_EQ(out.null_space_dim, 1);
    }
}

TEST(SolveAmplitudes, NoPerronRootAtOne) {
    const TransitionMatrix u = dft_matrix(3);
    const SupportPair sp{{0}, {0, 1}};
    const auto pa = std::get<PhaseAssignment>(solve_phases(u, sp, {}));
    const AmplitudeOutcome out = solve_amplitudes(u, sp, pa, {});
    EXPECT_FALSE(out.solution);
    ASSERT_TRUE(out.refutation);
    EXPECT_EQ(out.refutation->kind, RefutationKind::NoPositiveAmplitude);
    EXPECT_EQ(out.null_space_dim, 0);
}

TEST(Construct, Examples) {
    const Tolerances tol;
    const FeasibilityResult dft4 = construct_classical_state(dft_matrix(4), {{0, 2}, {0, 2}}, tol);
    ASSERT_TRUE(dft4.feasible);
    const double r = 1.0 / std::sqrt(2.0);
    ComplexVector expect(4);
    expect << r, 0.0, r, 0.0;
    EXPECT_NEAR(overlap(*dft4.state, PureState(expect)), 1.0, 1e-12);

    const FeasibilityResult dft3 = construct_classical_state(dft_matrix(3), {{0, 1}, {0, 1}}, tol);
    EXPECT_FALSE(dft3.feasible);
    ASSERT_TRUE(dft3.refutation);
    EXPECT_EQ(dft3.refutation->kind, RefutationKind::PhaseCycleViolation);
    ASSERT_TRUE(dft3.refutation->cycle);

    const TransitionMatrix id(ComplexMatrix::Identity(3, 3));
    const FeasibilityResult diag = construct_classical_state(id, {{0, 1}, {0, 1}}, tol);
    ASSERT_TRUE(diag.feasible);
    EXPECT_EQ(diag.null_space_dim, 2);
    EXPECT_NEAR(std::abs(diag.state->coeffs()(0)), r, 1e-12);

    const FeasibilityResult bad = construct_classical_state(id, {{0, 1}, {0}}, tol);
    ASSERT_TRUE(bad.refutation);
    EXPECT_EQ(bad.refutation->kind, RefutationKind::InconsistentSupport);
    EXPECT_EQ(bad.refutation->index, 1);

    EXPECT_THROW(construct_classical_state(id, {{}, {0}}, tol), InvalidInput);
}

TEST(Construct, PlantedStatesRecovered) {
    CounterRng rng(41, 0);
    for (int t = 0; t < 40; ++t) {
        const auto pb = testing::random_planted(1 + t % 3, 12, rng);
        const FeasibilityResult res = construct_classical_state(pb.u, pb.support, {});
        ASSERT_TRUE(res.feasible) << "trial " << t;
        if (res.null_space_dim == 1) {
            EXPECT_NEAR(overlap(*res.state, pb.state), 1.0, 1e-8);
        }
    }
}

TEST(Decompose, BasisStateUnderDft4) {
    ComplexVector e = ComplexVector::Zero(4);
    e(1) = 1.0;
    const ClassicalDecomposition cd = decompose_classical_state(dft_matrix(4), PureState(e), {});
    EXPECT_EQ(cd.support.s_a, (IndexSet{1}));
    EXPECT_EQ(cd.support.s_b, (IndexSet{0, 1, 2, 3}));
    // <psi|b_k> = U(1, k), so beta_k equals theta_1k
    for (int k = 0; k < 4; ++k) {
        EXPECT_LE(circular_distance(cd.phases.beta.at(k), kTwoPi * k / 4.0), 1e-12);
    }
}

TEST(Decompose, LatticeStatePhases) {
    const DftClassicalParams p{6, 2, 3, 1, 1, 0.0};
    const ClassicalDecomposition cd = decompose_classical_state(dft_matrix(6), make_state(p), {});
    EXPECT_EQ(cd.support.s_a, (IndexSet{1, 4}));
    EXPECT_LE(circular_distance(cd.phases.alpha.at(1), 0.0), 1e-12);
    EXPECT_LE(circular_distance(cd.phases.alpha.at(4), kPi), 1e-12);
}

TEST(Decompose, RejectsNonclassical) {
    const double r = 1.0 / std::sqrt(2.0);
    ComplexVector v(3);
    v << r, r, 0.0;
    EXPECT_THROW(decompose_classical_state(dft_matrix(3), PureState(v), {}), InvalidInput);
}

TEST(Decompose, RoundTripOnConstructedStates) {
    const TransitionMatrix u = dft_matrix(6);
    for (const auto& [sa, sb] : std::vector<std::pair<IndexSet, IndexSet>>{
             {{0, 3}, {0, 2, 4}}, {{1, 3, 5}, {1, 4}}, {{2}, {0, 1, 2, 3, 4, 5}}}) {
        const FeasibilityResult res = construct_classical_state(u, {sa, sb}, {});
        ASSERT_TRUE(res.feasible);
        const ClassicalDecomposition cd = decompose_classical_state(u, *res.state, {});
        EXPECT_EQ(cd.support.s_a, sa);
        EXPECT_EQ(cd.support.s_b, sb);
    }
}

TEST(MubCheck, Examples) {
    const double r = 1.0 / std::sqrt(2.0);
    ComplexVector v(4);
    v << r, 0.0, r, 0.0;
    EXPECT_TRUE(mub_corollary_check(dft_matrix(4), PureState(v), {}));
    ComplexVector e = ComplexVector::Zero(5);
    e(3) = 1.0;
    EXPECT_TRUE(mub_corollary_check(dft_matrix(5), PureState(e), {}));
    const TransitionMatrix id(ComplexMatrix::Identity(2, 2));
    EXPECT_THROW(mub_corollary_check(id, PureState(ComplexVector::Unit(2, 0)), {}),
                 InvalidInput);
}

}  // namespace
}  // namespace kdq
