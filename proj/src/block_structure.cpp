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
#include "kdq/block_structure.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <string>

namespace kdq {

namespace {

class UnionFind {
  public:
    explicit UnionFind(int n) : parent_(n) {
        std::iota(parent_.begin(), parent_.end(), 0);
    }

    int find(int x) {
        while (parent_[x] != x) {
            parent_[x] = parent_[parent_[x]];
            x = parent_[x];
        }
        return x;
    }

    void unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a != b) parent_[std::max(a, b)] = std::min(a, b);
    }

  private:
    std::vector<int> parent_;
};

void check_index_set(const IndexSet& set, int d, const char* what) {
    if (set.empty()) {
        throw InvalidInput(std::string(what) + " index set is empty");
    }
    for (std::size_t i = 0; i < set.size(); ++i) {
        if (set[i] < 0 || set[i] >= d || (i > 0 && set[i] <= set[i - 1])) {
            throw InvalidInput(std::string(what) +
                               " index set must be sorted, unique and in [0, d)");
        }
    }
}

}  // namespace

BlockDecomposition decompose(const TransitionMatrix& u, const IndexSet& rows,
                             const IndexSet& cols, const Tolerances& tol) {
    const int d = u.dim();
    check_index_set(rows, d, "row");
    check_index_set(cols, d, "column");

    // nodes: rows first, then columns
    const int nr = static_cast<int>(rows.size());
    const int nc = static_cast<int>(cols.size());
    UnionFind uf(nr + nc);
    for (int r = 0; r < nr; ++r) {
        for (int c = 0; c < nc; ++c) {
            if (std::abs(u(rows[r], cols[c])) > tol.eps_zero) uf.unite(r, nr + c);
        }
    }

    // Roots are minimal node ids, so walking nodes in order visits the
    // components in the documented block order.
    std::map<int, int> block_of_root;
    BlockDecomposition out;
    for (int n = 0; n < nr + nc; ++n) {
        const int root = uf.find(n);
        auto [it, inserted] =
            block_of_root.try_emplace(root, static_cast<int>(out.blocks.size()));
        if (inserted) out.blocks.emplace_back();
        Block& b = out.blocks[it->second];
        if (n < nr) {
            b.rows.push_back(rows[n]);
        } else {
            b.cols.push_back(cols[n - nr]);
        }
    }

    for (const Block& b : out.blocks) {
        out.row_perm.insert(out.row_perm.end(), b.rows.begin(), b.rows.end());
        out.col_perm.insert(out.col_perm.end(), b.cols.begin(), b.cols.end());
    }
    for (int i : complement(rows, d)) out.row_perm.push_back(i);
    for (int i : complement(cols, d)) out.col_perm.push_back(i);
    return out;
}

BlockDecomposition decompose(const TransitionMatrix& u, const Tolerances& tol) {
    const IndexSet all = full_range(u.dim());
    return decompose(u, all, all, tol);
}

bool is_indecomposable(const TransitionMatrix& u, const Tolerances& tol) {
    return decompose(u, tol).s() == 1;
}

std::vector<DirectSummand> direct_summands(const TransitionMatrix& u,
                                           const Tolerances& tol) {
    std::vector<DirectSummand> out;
    for (Block& b : decompose(u, tol).blocks) {
        if (b.rows.size() != b.cols.size()) {
            throw ConsistencyError("direct summand of a unitary is not square");
        }
        ComplexMatrix sub = submatrix(u.matrix(), b.rows, b.cols);
        out.push_back({std::move(b), TransitionMatrix(std::move(sub))});
    }
    return out;
}

CanonicalForm canonical_form(const TransitionMatrix& u, const SupportPair& sp,
                             const Tolerances& tol) {
    const int d = u.dim();
    CanonicalForm cf;
    cf.d = d;
    cf.support = sp;
    cf.decomposition = decompose(u, sp.s_a, sp.s_b, tol);
    for (const Block& b : cf.decomposition.blocks) {
        if (b.rows.empty() || b.cols.empty()) {
            throw InvalidInput(
                "inconsistent support: a window row or column has no nonzero entry");
        }
    }
    const IndexSet off_rows = complement(sp.s_a, d);
    const IndexSet off_cols = complement(sp.s_b, d);
    for (const Block& b : cf.decomposition.blocks) {
        cf.c_blocks.push_back(submatrix(u.matrix(), off_rows, b.cols));
        cf.r_blocks.push_back(submatrix(u.matrix(), b.rows, off_cols));
    }
    return cf;
}

bool Theorem3Report::all_ok() const {
    return bound_support && bound_s &&
           std::all_of(rank_ok.begin(), rank_ok.end(), [](bool b) { return b; });
}

Theorem3Report theorem3_check(const CanonicalForm& cf, int d,
                              const Tolerances& tol) {
    Theorem3Report rep;
    const auto& blocks = cf.decomposition.blocks;
    for (std::size_t i = 0; i < blocks.size(); ++i) {
        const int rc = numerical_rank(cf.c_blocks[i], tol.eps_zero);
        const int rr = numerical_rank(cf.r_blocks[i], tol.eps_zero);
        rep.rank_c.push_back(rc);
        rep.rank_r.push_back(rr);
        rep.rank_ok.push_back(rc == static_cast<int>(blocks[i].cols.size()) - 1 &&
                              rr == static_cast<int>(blocks[i].rows.size()) - 1);
    }
    const int s = cf.s();
    rep.bound_support = cf.support.n_a() + cf.support.n_b() <= d + s;
    rep.bound_s = 2 * s <= d;
    return rep;
}

}  // namespace kdq
