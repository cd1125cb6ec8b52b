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
#include "kdq/vector_clusters.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace kdq {

namespace {

std::string describe(int j, int k, Complex v) {
    return "pair (" + std::to_string(j) + ", " + std::to_string(k) +
           ") has inner product " + std::to_string(v.real()) + " + " +
           std::to_string(v.imag()) + "i outside [-1, 0]";
}

}  // namespace

FamilyViolation::FamilyViolation(int j_, int k_, Complex value_)
    : InvalidInput(describe(j_, k_, value_)), j(j_), k(k_), value(value_) {}

ComplexMatrix validate_family(const std::vector<ComplexVector>& vs,
                              const Tolerances& tol) {
    const int n = static_cast<int>(vs.size());
    if (n == 0) throw InvalidInput("empty vector family");
    const Eigen::Index dim = vs.front().size();
    for (const auto& v : vs) {
        if (v.size() != dim) throw DimensionError("vectors differ in length");
        if (!all_finite(v)) throw InvalidInput("vector has non-finite entries");
        if (std::abs(v.norm() - 1.0) > 1e-10) {
            throw InvalidInput("family member is not a unit vector");
        }
    }
    ComplexMatrix gram(n, n);
    for (int j = 0; j < n; ++j) {
        for (int k = 0; k < n; ++k) gram(j, k) = vs[j].dot(vs[k]);  // conj-linear in first
    }
    for (int j = 0; j < n; ++j) {
        for (int k = j + 1; k < n; ++k) {
            const Complex g = gram(j, k);
            if (std::abs(g.imag()) > tol.eps_zero || g.real() > tol.eps_zero ||
                g.real() < -1.0 - tol.eps_zero) {
                throw FamilyViolation(j, k, g);
            }
        }
    }
    return gram;
}

int gram_rank(const ComplexMatrix& gram, double eps_zero) {
    if (gram.size() == 0) return 0;
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(gram, Eigen::EigenvaluesOnly);
    const auto& ev = es.eigenvalues();
    const double top = ev.maxCoeff();
    if (!(top > 0.0)) return 0;
    int rank = 0;
    for (Eigen::Index i = 0; i < ev.size(); ++i) {
        if (ev(i) > eps_zero * top) ++rank;
    }
    return rank;
}

ClusterDecomposition cluster(const std::vector<ComplexVector>& vs,
                             const Tolerances& tol) {
    ClusterDecomposition cd;
    std::vector<ComplexVector> unit;
    unit.reserve(vs.size());
    for (const auto& v : vs) {
        const double n = v.norm();
        if (!(n > 0.0)) throw InvalidInput("zero vector in family");
        cd.norms.push_back(n);
        unit.push_back(v / n);
    }
    cd.gram = validate_family(unit, tol);

    const int n = static_cast<int>(unit.size());
    std::vector<int> label(n, -1);
    for (int start = 0; start < n; ++start) {
        if (label[start] >= 0) continue;
        const int id = static_cast<int>(cd.clusters.size());
        Cluster c{{}, ClusterKind::A, 0};
        std::vector<int> stack{start};
        label[start] = id;
        while (!stack.empty()) {
            const int j = stack.back();
            stack.pop_back();
            c.members.push_back(j);
            for (int k = 0; k < n; ++k) {
                if (label[k] < 0 && std::abs(cd.gram(j, k)) > tol.eps_zero) {
                    label[k] = id;
                    stack.push_back(k);
                }
            }
        }
        std::sort(c.members.begin(), c.members.end());

        bool has_antipodal = false;
        for (std::size_t a = 0; a < c.members.size(); ++a) {
            for (std::size_t b = a + 1; b < c.members.size(); ++b) {
                if (cd.gram(c.members[a], c.members[b]).real() <= -1.0 + tol.eps_zero) {
                    has_antipodal = true;
                }
            }
        }
        if (c.members.size() == 1) {
            c.kind = ClusterKind::A;
        } else if (c.members.size() == 2 && has_antipodal) {
            c.kind = ClusterKind::B;
        } else if (has_antipodal) {
            // An antipodal pair is orthogonal to every other member of a
            // valid family, so it can never sit inside a larger component.
            throw InvalidInput("antipodal pair inside a larger cluster");
        } else {
            c.kind = ClusterKind::C;
        }
        c.rank = gram_rank(submatrix(cd.gram, c.members, c.members), tol.eps_zero);
        cd.clusters.push_back(std::move(c));
    }
    return cd;
}

bool check_dimension_law(const ClusterDecomposition& cd, const Tolerances& tol) {
    for (const Cluster& c : cd.clusters) {
        if (c.kind != ClusterKind::C) continue;
        const int rank =
            gram_rank(submatrix(cd.gram, c.members, c.members), tol.eps_zero);
        const int size = static_cast<int>(c.members.size());
        if (size != rank && size != rank + 1) return false;
    }
    return true;
}

}  // namespace kdq
