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

namespace kdq {

// Families of unit vectors whose pairwise inner products lie in [-1, 0]
// split uniquely into mutually orthogonal clusters:
//   A  a single vector,
//   B  an antipodal pair v, -v,
//   C  two or more vectors with inner products in (-1, 0], spanning a
//      space of dimension |C| or |C| - 1.

enum class ClusterKind { A, B, C };

struct Cluster {
    IndexSet members;
    ClusterKind kind;
    int rank = 0;  ///< numerical rank of the cluster's Gram submatrix
};

struct ClusterDecomposition {
    std::vector<Cluster> clusters;  ///< ordered by smallest member
    ComplexMatrix gram;             ///< gram(j, k) = <v_j|v_k>
    std::vector<double> norms;      ///< input norms before normalization
};

/// Pair (j, k) whose inner product breaks the [-1, 0] condition.
class FamilyViolation : public InvalidInput {
  public:
    FamilyViolation(int j, int k, Complex value);
    int j;
    int k;
    Complex value;
};

/// Gram matrix of a unit-norm family (|norm - 1| <= 1e-10). Throws
/// FamilyViolation when an off-diagonal entry has |imag| > eps_zero or a
/// real part outside [-1 - eps_zero, eps_zero].
ComplexMatrix validate_family(const std::vector<ComplexVector>& vs,
                              const Tolerances& tol);

/// Normalizes the input, validates it, and returns the connected components
/// of the graph with edges where |<v_j|v_k>| > eps_zero.
ClusterDecomposition cluster(const std::vector<ComplexVector>& vs,
                             const Tolerances& tol);

/// Every C cluster has |members| == rank or rank + 1.
bool check_dimension_law(const ClusterDecomposition& cd, const Tolerances& tol);

/// Rank of a Hermitian Gram matrix: eigenvalues above eps_zero * max eigenvalue.
int gram_rank(const ComplexMatrix& gram, double eps_zero);

}  // namespace kdq
