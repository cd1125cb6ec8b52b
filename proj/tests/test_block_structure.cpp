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
#include <numeric>

#include "kdq/block_structure.hpp"
#include "kdq/dft_enum.hpp"
#include "kdq/random.hpp"
#include "support/generators.hpp"

namespace kdq {
namespace {

using testing::direct_sum;

// Independent component search: repeated breadth-first sweeps over rows
// and columns, used to cross-check the union-find implementation.
std::vector<std::pair<IndexSet, IndexSet>> reference_components(const ComplexMatrix& m) {
    const int d = static_cast<int>(m.rows());
    std::vector<int> row_label(d, -1);
    std::vector<int> col_label(d, -1);
    std::vector<std::pair<IndexSet, IndexSet>> out;
    for (int start = 0; start < d; ++start) {
        if (row_label[start] >= 0) continue;
        const int id = static_cast<int>(out.size());
        row_label[start] = id;
        bool grew = true;
        while (grew) {
            grew = false;
            for (int j = 0; j < d; ++j) {
                for (int k = 0; k < d; ++k) {
                    if (std::abs(m(j, k)) <= 1e-10) continue;
                    if (row_label[j] == id && col_label[k] < 0) {
                        col_label[k] = id;
                        grew = true;
                    } else if (col_label[k] == id && row_label[j] < 0) {
                        row_label[j] = id;
                        grew = true;
                    }
                }
            }
        }
        out.emplace_back();
        for (int j = 0; j < d; ++j) {
            if (row_label[j] == id) out.back().first.push_back(j);
            if (col_label[j] == id) out.back().second.push_back(j);
        }
    }
    return out;
}

TEST(Decompose, DftIsSingleBlock) {
    EXPECT_EQ(decompose(dft_matrix(4), {}).s(), 1);
    EXPECT_TRUE(is_indecomposable(dft_matrix(4), {}));
}

TEST(Decompose, DirectSum) {
    const TransitionMatrix u(direct_sum(dft_matrix(2).matrix(), dft_matrix(3).matrix()));
    const BlockDecomposition b = decompose(u, {});
    ASSERT_EQ(b.s(), 2);
    EXPECT_EQ(b.blocks[0].rows, (IndexSet{0, 1}));
    EXPECT_EQ(b.blocks[0].cols, (IndexSet{0, 1}));
    EXPECT_EQ(b.blocks[1].rows, (IndexSet{2, 3, 4}));
    EXPECT_EQ(b.blocks[1].cols, (IndexSet{2, 3, 4}));
    EXPECT_EQ(b.row_perm, (IndexSet{0, 1, 2, 3, 4}));
    EXPECT_FALSE(is_indecomposable(u, {}));
}

TEST(Decompose, PermutedDirectSumsMatchReference) {
    CounterRng rng(17, 0);
    const ComplexMatrix base = direct_sum(dft_matrix(2).matrix(), dft_matrix(3).matrix());
    for (int t = 0; t < 30; ++t) {
        const auto rp = testing::random_permutation(5, rng);
        const auto cp = testing::random_permutation(5, rng);
        const TransitionMatrix u(testing::permute(base, rp, cp));
        const BlockDecomposition b = decompose(u, {});
        const auto ref = reference_components(u.matrix());
        ASSERT_EQ(b.s(), 2);
        ASSERT_EQ(ref.size(), 2U);
        for (int i = 0; i < 2; ++i) {
            EXPECT_EQ(b.blocks[i].rows, ref[i].first);
            EXPECT_EQ(b.blocks[i].cols, ref[i].second);
        }
    }
}

TEST(Decompose, BlocksAreSeparatedAndConnected) {
    CounterRng rng(19, 0);
    for (int t = 0; t < 40; ++t) {
        const int d = 3 + t % 4;
        const TransitionMatrix u(testing::givens_unitary(d, 2, rng));
        const BlockDecomposition b = decompose(u, {});
        const auto ref = reference_components(u.matrix());
        ASSERT_EQ(b.blocks.size(), ref.size());
        for (std::size_t i = 0; i < ref.size(); ++i) {
            EXPECT_EQ(b.blocks[i].rows, ref[i].first);
            EXPECT_EQ(b.blocks[i].cols, ref[i].second);
        }
        for (const auto& ds : direct_summands(u, {})) {
            EXPECT_EQ(ds.indices.rows.size(), ds.indices.cols.size());
        }
    }
}

TEST(Decompose, RejectsBadIndexSets) {
    const TransitionMatrix u = dft_matrix(3);
    EXPECT_THROW(decompose(u, {}, {0}, {}), InvalidInput);
    EXPECT_THROW(decompose(u, {1, 0}, {0}, {}), InvalidInput);
    EXPECT_THROW(decompose(u, {0, 0}, {0}, {}), InvalidInput);
    EXPECT_THROW(decompose(u, {0}, {3}, {}), InvalidInput);
}

TEST(CanonicalForm, DftWindow) {
    const TransitionMatrix u = dft_matrix(4);
    const CanonicalForm cf = canonical_form(u, {{0, 2}, {0, 2}}, {});
    ASSERT_EQ(cf.s(), 1);
    EXPECT_EQ(cf.c_blocks[0], submatrix(u.matrix(), {1, 3}, {0, 2}));
    EXPECT_EQ(cf.r_blocks[0], submatrix(u.matrix(), {0, 2}, {1, 3}));
    const Theorem3Report r = theorem3_check(cf, 4, {});
    EXPECT_TRUE(r.all_ok());
    EXPECT_EQ(r.rank_c[0], 1);
}

TEST(CanonicalForm, IdentityBasisState) {
    const TransitionMatrix u(ComplexMatrix::Identity(3, 3));
    const CanonicalForm cf = canonical_form(u, {{0}, {0}}, {});
    ASSERT_EQ(cf.s(), 1);
    EXPECT_EQ(cf.c_blocks[0].rows(), 2);
    EXPECT_EQ(cf.c_blocks[0].cols(), 1);
    EXPECT_EQ(cf.r_blocks[0].rows(), 1);
    EXPECT_EQ(cf.r_blocks[0].cols(), 2);
    EXPECT_TRUE(cf.c_blocks[0].isZero());
    EXPECT_TRUE(theorem3_check(cf, 3, {}).all_ok());
}

TEST(CanonicalForm, RealCompletionRank) {
    // first row (1/sqrt2, 1/sqrt2, 0, 0), completed to an orthogonal matrix
    const double r = 1.0 / std::sqrt(2.0);
    ComplexMatrix m(4, 4);
    m << r, r, 0, 0,
         r, -r, 0, 0,
         0, 0, 1, 0,
         0, 0, 0, 1;
    // mix the lower rows so the matrix has no block structure beyond row 0
    CounterRng rng(23, 0);
    RealMatrix q = RealMatrix::Identity(4, 4);
    q.bottomRightCorner(3, 3) = testing::random_orthogonal(3, rng);
    const TransitionMatrix u(q.cast<Complex>() * m);
    const CanonicalForm cf = canonical_form(u, {{0}, {0, 1}}, {});
    EXPECT_EQ(numerical_rank(cf.c_blocks[0], 1e-10), 1);
    EXPECT_TRUE(theorem3_check(cf, 4, {}).rank_ok[0]);
}

TEST(CanonicalForm, InconsistentSupportRejected) {
    const TransitionMatrix u(ComplexMatrix::Identity(3, 3));
    EXPECT_THROW(canonical_form(u, {{0, 1}, {0}}, {}), InvalidInput);
}

TEST(CanonicalForm, PlantedBlocksRecovered) {
    CounterRng rng(29, 0);
    for (int t = 0; t < 30; ++t) {
        const int s = 2 + t % 3;
        const auto pb = testing::random_planted(s, 14, rng);
        ASSERT_TRUE(classify(pb.u, pb.state, {}).classical);
        const CanonicalForm cf = canonical_form(pb.u, pb.support, {});
        EXPECT_EQ(cf.s(), s);
        EXPECT_TRUE(theorem3_check(cf, pb.u.dim(), {}).all_ok());
    }
}

}  // namespace
}  // namespace kdq
