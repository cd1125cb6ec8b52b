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

#include <vector>

#include "kdq/core_types.hpp"
#include "kdq/kd_core.hpp"

namespace kdq {

struct Block {
    IndexSet rows;
    IndexSet cols;

    friend bool operator==(const Block&, const Block&) = default;
};

/// Connected components of the bipartite graph rows x cols with an edge at
/// every entry of modulus > eps_zero.
///
/// Blocks are ordered by their smallest row; blocks without rows (isolated
/// columns) come last, ordered by their smallest column. row_perm lists the
/// block rows in block order followed by the rows outside the window, so
/// row_perm/col_perm bring the window into block-diagonal form.
struct BlockDecomposition {
    std::vector<Block> blocks;
    std::vector<int> row_perm;
    std::vector<int> col_perm;

    int s() const { return static_cast<int>(blocks.size()); }
};

BlockDecomposition decompose(const TransitionMatrix& u, const IndexSet& rows,
                             const IndexSet& cols, const Tolerances& tol);

/// Decomposition over the full index range; s() == 1 iff U is
/// indecomposable.
BlockDecomposition decompose(const TransitionMatrix& u, const Tolerances& tol);

bool is_indecomposable(const TransitionMatrix& u, const Tolerances& tol);

/// One direct summand of a decomposable transition matrix together with the
/// original indices of its rows and columns.
struct DirectSummand {
    Block indices;
    TransitionMatrix u;
};

/// Splits U into its indecomposable direct summands. Every block of a
/// unitary is square, and each summand is itself unitary.
std::vector<DirectSummand> direct_summands(const TransitionMatrix& u,
                                           const Tolerances& tol);

/// Window structure of a classical state: maximal nonnegative diagonal
/// blocks on S_A x S_B, with C_j (rows outside S_A, block columns) and R_j
/// (block rows, columns outside S_B).
struct CanonicalForm {
    int d = 0;
    SupportPair support;
    BlockDecomposition decomposition;
    std::vector<ComplexMatrix> c_blocks;
    std::vector<ComplexMatrix> r_blocks;

    int s() const { return decomposition.s(); }
};

/// Throws InvalidInput on empty supports or on a window row/column without
/// any nonzero entry (not a valid support pair of any state).
CanonicalForm canonical_form(const TransitionMatrix& u, const SupportPair& sp,
                             const Tolerances& tol);

struct Theorem3Report {
    std::vector<bool> rank_ok;  ///< per block: both rank relations hold
    std::vector<int> rank_c;
    std::vector<int> rank_r;
    bool bound_support = false;  ///< n_A + n_B <= d + s
    bool bound_s = false;        ///< s <= d / 2

    bool all_ok() const;
};

/// rank(C_j) == cols_j - 1 and rank(R_j) == rows_j - 1 per block, plus the
/// two global bounds.
Theorem3Report theorem3_check(const CanonicalForm& cf, int d,
                              const Tolerances& tol);

}  // namespace kdq
