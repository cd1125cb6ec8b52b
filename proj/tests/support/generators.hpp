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

// Random instance generators shared by the unit and acceptance tests.

#include <optional>
#include <vector>

#include "kdq/core_types.hpp"
#include "kdq/kd_core.hpp"
#include "kdq/random.hpp"
#include "kdq/vector_clusters.hpp"

namespace kdq::testing {

struct BlockShape {
    int p = 1;      ///< window rows
    int q = 1;      ///< window columns
    int extra = 0;  ///< private rows outside the window, at least q - 1
};

/// Indecomposable unitary with a planted classical state whose window
/// splits into the given blocks. Rows and columns are shuffled and the
/// bases rephased at random.
struct PlantedBlockUnitary {
    TransitionMatrix u;
    PureState state;
    SupportPair support;
    int s = 0;
};

/// Returns nullopt when the shapes leave no room for a completion
/// (sum q >= d) or the result happens to be decomposable.
std::optional<PlantedBlockUnitary> planted_block_unitary(
    const std::vector<BlockShape>& shapes, int global_extra, CounterRng& rng,
    bool shuffle = true);

/// Random shapes with s blocks; both supports stay proper subsets.
PlantedBlockUnitary random_planted(int s, int max_d, CounterRng& rng);

/// s blocks of shape 2 x 1 plus one spare row: d = 2s + 1 and exactly
/// s(2s - 1) zeros.
PlantedBlockUnitary minimal_planted(int s, CounterRng& rng);

/// Product of random complex Givens rotations; usually has zero entries.
ComplexMatrix givens_unitary(int d, int rotations, CounterRng& rng);

RealMatrix random_orthogonal(int n, CounterRng& rng);

std::vector<int> random_permutation(int n, CounterRng& rng);

ComplexMatrix permute(const ComplexMatrix& m, const std::vector<int>& rows,
                      const std::vector<int>& cols);

ComplexMatrix direct_sum(const ComplexMatrix& a, const ComplexMatrix& b);

std::vector<double> random_phases(int n, CounterRng& rng);

struct ClusterInstance {
    std::vector<ComplexVector> vectors;
    std::vector<IndexSet> clusters;  ///< sorted by smallest member
    std::vector<ClusterKind> kinds;
};

/// Simplex sets {e_1..e_r, -(sum e)/sqrt(r)} (possibly partial), antipodal
/// pairs and singletons in mutually orthogonal subspaces, rotated by a
/// random unitary and shuffled.
ClusterInstance cluster_instance(CounterRng& rng);

}  // namespace kdq::testing
