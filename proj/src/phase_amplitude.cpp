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
#include "kdq/phase_amplitude.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <string>

#include "kdq/block_structure.hpp"

namespace kdq {

namespace {

double theta(const TransitionMatrix& u, int j, int k) {
    return normalize_phase(std::arg(u(j, k)));
}

bool nonzero(const TransitionMatrix& u, int j, int k, const Tolerances& tol) {
    return std::abs(u(j, k)) > tol.eps_zero;
}

std::optional<Refutation> inconsistent_support(const TransitionMatrix& u,
                                               const SupportPair& sp,
                                               const Tolerances& tol) {
    for (int j : sp.s_a) {
        if (std::none_of(sp.s_b.begin(), sp.s_b.end(),
                         [&](int k) { return nonzero(u, j, k, tol); })) {
            return Refutation{RefutationKind::InconsistentSupport, std::nullopt, j,
                              Side::A, "row has no nonzero entry in the window"};
        }
    }
    for (int k : sp.s_b) {
        if (std::none_of(sp.s_a.begin(), sp.s_a.end(),
                         [&](int j) { return nonzero(u, j, k, tol); })) {
            return Refutation{RefutationKind::InconsistentSupport, std::nullopt, k,
                              Side::B, "column has no nonzero entry in the window"};
        }
    }
    return std::nullopt;
}

/// Alternating sum theta(r0,c0) - theta(r1,c0) + theta(r1,c1) - ... around
/// the closed walk, as a circular distance from 0.
double cycle_defect(const TransitionMatrix& u, const IndexSet& rows,
                    const IndexSet& cols) {
    const std::size_t m = rows.size();
    double sum = 0.0;
    for (std::size_t i = 0; i < m; ++i) {
        sum += theta(u, rows[i], cols[i]);
        sum -= theta(u, rows[(i + 1) % m], cols[i]);
    }
    return circular_distance(sum, 0.0);
}

// Window graph nodes: row r of S_A is node r, column c of S_B is n_a + c.
struct Forest {
    std::vector<int> parent;  // -1 at roots
    std::vector<int> depth;
};

}  // namespace

const char* to_string(RefutationKind kind) {
    switch (kind) {
        case RefutationKind::PhaseCycleViolation: return "PhaseCycleViolation";
        case RefutationKind::NoPositiveAmplitude: return "NoPositiveAmplitude";
        case RefutationKind::OffSupportLeak: return "OffSupportLeak";
        case RefutationKind::InconsistentSupport: return "InconsistentSupport";
        case RefutationKind::VerificationFailed: return "VerificationFailed";
    }
    return "unknown";
}

std::variant<PhaseAssignment, PhaseCycleViolation> solve_phases(
    const TransitionMatrix& u, const SupportPair& sp, const Tolerances& tol) {
    if (sp.s_a.empty() || sp.s_b.empty()) {
        throw InvalidInput("solve_phases: empty support");
    }
    if (auto bad = inconsistent_support(u, sp, tol)) {
        throw InvalidInput("inconsistent support: index " +
                           std::to_string(bad->index) + " " + bad->detail);
    }
    const int na = sp.n_a();
    const int nb = sp.n_b();
    std::vector<double> angle(na + nb, 0.0);
    Forest forest{std::vector<int>(na + nb, -2), std::vector<int>(na + nb, 0)};

    // Rows are scanned in ascending order, so each BFS root is the smallest
    // row of its component.
    for (int root = 0; root < na; ++root) {
        if (forest.parent[root] != -2) continue;
        forest.parent[root] = -1;
        angle[root] = 0.0;
        std::deque<int> queue{root};
        while (!queue.empty()) {
            const int node = queue.front();
            queue.pop_front();
            if (node < na) {
                const int j = sp.s_a[node];
                for (int c = 0; c < nb; ++c) {
                    const int k = sp.s_b[c];
                    if (forest.parent[na + c] != -2 || !nonzero(u, j, k, tol)) continue;
                    forest.parent[na + c] = node;
                    forest.depth[na + c] = forest.depth[node] + 1;
                    angle[na + c] = normalize_phase(theta(u, j, k) - angle[node]);
                    queue.push_back(na + c);
                }
            } else {
                const int k = sp.s_b[node - na];
                for (int r = 0; r < na; ++r) {
                    const int j = sp.s_a[r];
                    if (forest.parent[r] != -2 || !nonzero(u, j, k, tol)) continue;
                    forest.parent[r] = node;
                    forest.depth[r] = forest.depth[node] + 1;
                    angle[r] = normalize_phase(theta(u, j, k) - angle[node]);
                    queue.push_back(r);
                }
            }
        }
    }

    for (int r = 0; r < na; ++r) {
        for (int c = 0; c < nb; ++c) {
            const int j = sp.s_a[r];
            const int k = sp.s_b[c];
            if (!nonzero(u, j, k, tol)) continue;
            if (circular_distance(theta(u, j, k), angle[r] + angle[na + c]) <=
                tol.eps_angle) {
                continue;
            }
            // Prefer a four-cycle through the failing edge.
            for (int r2 = 0; r2 < na; ++r2) {
                for (int c2 = 0; c2 < nb; ++c2) {
                    if (r2 == r || c2 == c) continue;
                    const int j2 = sp.s_a[r2];
                    const int k2 = sp.s_b[c2];
                    if (!nonzero(u, j2, k, tol) || !nonzero(u, j, k2, tol) ||
                        !nonzero(u, j2, k2, tol)) {
                        continue;
                    }
                    IndexSet rows{std::min(j, j2), std::max(j, j2)};
                    IndexSet cols{std::min(k, k2), std::max(k, k2)};
                    const double defect = cycle_defect(u, rows, cols);
                    if (defect > tol.eps_angle) {
                        return PhaseCycleViolation{rows, cols, defect};
                    }
                }
            }
            // Otherwise close the tree paths from both endpoints.
            std::vector<int> from_row{r};
            std::vector<int> from_col{na + c};
            int x = r;
            int y = na + c;
            while (x != y) {
                if (forest.depth[x] >= forest.depth[y]) {
                    x = forest.parent[x];
                    from_row.push_back(x);
                } else {
                    y = forest.parent[y];
                    from_col.push_back(y);
                }
            }
            from_col.pop_back();  // meeting node already in from_row
            std::vector<int> walk = from_row;
            walk.insert(walk.end(), from_col.rbegin(), from_col.rend());
            PhaseCycleViolation v;
            for (std::size_t i = 0; i < walk.size(); ++i) {
                const int node = walk[i];
                if (i % 2 == 0) {
                    v.rows.push_back(sp.s_a[node]);
                } else {
                    v.cols.push_back(sp.s_b[node - na]);
                }
            }
            v.defect = cycle_defect(u, v.rows, v.cols);
            return v;
        }
    }

    PhaseAssignment pa;
    for (int r = 0; r < na; ++r) pa.alpha[sp.s_a[r]] = angle[r];
    for (int c = 0; c < nb; ++c) pa.beta[sp.s_b[c]] = angle[na + c];
    return pa;
}

bool four_cycle_check(const TransitionMatrix& u, const SupportPair& sp,
                      const Tolerances& tol) {
    for (std::size_t a = 0; a < sp.s_a.size(); ++a) {
        for (std::size_t b = a + 1; b < sp.s_a.size(); ++b) {
            const int j1 = sp.s_a[a];
            const int j2 = sp.s_a[b];
            for (std::size_t p = 0; p < sp.s_b.size(); ++p) {
                for (std::size_t q = p + 1; q < sp.s_b.size(); ++q) {
                    const int k1 = sp.s_b[p];
                    const int k2 = sp.s_b[q];
                    if (!nonzero(u, j1, k1, tol) || !nonzero(u, j1, k2, tol) ||
                        !nonzero(u, j2, k1, tol) || !nonzero(u, j2, k2, tol)) {
                        continue;
                    }
                    const double sum = theta(u, j1, k1) - theta(u, j2, k1) -
                                       theta(u, j1, k2) + theta(u, j2, k2);
                    if (circular_distance(sum, 0.0) > tol.eps_angle) return false;
                }
            }
        }
    }
    return true;
}

AmplitudeOutcome solve_amplitudes(const TransitionMatrix& u,
                                  const SupportPair& sp,
                                  const PhaseAssignment& phases,
                                  const Tolerances& tol) {
    const int d = u.dim();
    const int na = sp.n_a();
    const int nb = sp.n_b();
    const IndexSet off_a = complement(sp.s_a, d);
    const IndexSet off_b = complement(sp.s_b, d);

    // Real homogeneous system over z = (a, b):
    //   a - V b = 0, b - V^t a = 0, and vanishing off-support coefficients
    //   on both basis sides (real and imaginary parts).
    const int n_eq = na + nb + 2 * static_cast<int>(off_a.size()) +
                     2 * static_cast<int>(off_b.size());
    RealMatrix system = RealMatrix::Zero(n_eq, na + nb);
    for (int r = 0; r < na; ++r) {
        system(r, r) = 1.0;
        for (int c = 0; c < nb; ++c) {
            system(r, na + c) = -std::abs(u(sp.s_a[r], sp.s_b[c]));
        }
    }
    for (int c = 0; c < nb; ++c) {
        system(na + c, na + c) = 1.0;
        for (int r = 0; r < na; ++r) {
            system(na + c, r) = -std::abs(u(sp.s_a[r], sp.s_b[c]));
        }
    }
    int eq = na + nb;
    for (int j : off_a) {
        for (int c = 0; c < nb; ++c) {
            const int k = sp.s_b[c];
            const Complex w = std::polar(1.0, -phases.beta.at(k)) * u(j, k);
            system(eq, na + c) = w.real();
            system(eq + 1, na + c) = w.imag();
        }
        eq += 2;
    }
    for (int k : off_b) {
        for (int r = 0; r < na; ++r) {
            const int j = sp.s_a[r];
            const Complex w = std::polar(1.0, phases.alpha.at(j)) * std::conj(u(j, k));
            system(eq, r) = w.real();
            system(eq + 1, r) = w.imag();
        }
        eq += 2;
    }

    AmplitudeOutcome out;
    {
        Eigen::BDCSVD<RealMatrix> svd(system);
        const auto& sv = svd.singularValues();
        const double cutoff = tol.eps_eig;
        int rank = 0;
        for (Eigen::Index i = 0; i < sv.size(); ++i) {
            if (sv(i) > cutoff) ++rank;
            if (sv(i) > cutoff / 10.0 && sv(i) < cutoff * 10.0) {
                out.tolerance_warning = true;
            }
        }
        out.null_space_dim = na + nb - rank;
    }

    // The system decouples over window components: columns of C (and rows
    // of R) belonging to different components are orthogonal, so the
    // off-support conditions hold per component. Within a component V^t V
    // is irreducible, and its only positive eigenvector is the Perron one.
    const BlockDecomposition comps = decompose(u, sp.s_a, sp.s_b, tol);
    const double weight = 1.0 / std::sqrt(static_cast<double>(comps.s()));
    RealVector a_vec = RealVector::Zero(na);
    RealVector b_vec = RealVector::Zero(nb);
    for (const Block& blk : comps.blocks) {
        RealMatrix v(blk.rows.size(), blk.cols.size());
        for (std::size_t r = 0; r < blk.rows.size(); ++r) {
            for (std::size_t c = 0; c < blk.cols.size(); ++c) {
                v(r, c) = std::abs(u(blk.rows[r], blk.cols[c]));
            }
        }
        Eigen::SelfAdjointEigenSolver<RealMatrix> es(v.transpose() * v);
        const Eigen::Index top = es.eigenvalues().size() - 1;
        const double lambda = es.eigenvalues()(top);
        if (std::abs(lambda - 1.0) > tol.eps_eig) {
            out.refutation = Refutation{
                RefutationKind::NoPositiveAmplitude, std::nullopt, blk.rows.front(),
                Side::A,
                "Perron root of V^t V is " + std::to_string(lambda) + ", not 1"};
            return out;
        }
        RealVector x = es.eigenvectors().col(top);
        if (x.sum() < 0.0) x = -x;
        if (x.minCoeff() <= tol.eps_zero) {
            out.refutation = Refutation{RefutationKind::NoPositiveAmplitude,
                                        std::nullopt, blk.rows.front(), Side::A,
                                        "eigenvector for eigenvalue 1 is not positive"};
            return out;
        }
        const RealVector a_blk = v * x;
        const double scale = weight / a_blk.norm();
        for (std::size_t c = 0; c < blk.cols.size(); ++c) {
            const auto pos = std::lower_bound(sp.s_b.begin(), sp.s_b.end(), blk.cols[c]) -
                             sp.s_b.begin();
            b_vec(pos) = x(c) * scale;
        }
        for (std::size_t r = 0; r < blk.rows.size(); ++r) {
            const auto pos = std::lower_bound(sp.s_a.begin(), sp.s_a.end(), blk.rows[r]) -
                             sp.s_a.begin();
            a_vec(pos) = a_blk(r) * scale;
        }
    }

    RealVector z(na + nb);
    z << a_vec, b_vec;
    const RealVector residual = system * z;
    for (int e = 0; e < n_eq; ++e) {
        if (std::abs(residual(e)) <= tol.eps_eig) continue;
        if (e < na + nb) {
            out.refutation = Refutation{RefutationKind::NoPositiveAmplitude,
                                        std::nullopt, -1, Side::A,
                                        "fixed-point equations not satisfied"};
        } else {
            const int k = (e - na - nb) / 2;
            const bool a_side = k < static_cast<int>(off_a.size());
            const int index =
                a_side ? off_a[k] : off_b[k - static_cast<int>(off_a.size())];
            out.refutation = Refutation{RefutationKind::OffSupportLeak, std::nullopt,
                                        index, a_side ? Side::A : Side::B,
                                        "coefficient outside the support is nonzero"};
        }
        return out;
    }
    out.solution = AmplitudeSolution{std::move(a_vec), std::move(b_vec)};
    return out;
}

FeasibilityResult construct_classical_state(const TransitionMatrix& u,
                                            const SupportPair& sp,
                                            const Tolerances& tol) {
    // validates the index sets
    (void)decompose(u, sp.s_a, sp.s_b, tol);

    FeasibilityResult res;
    if (auto bad = inconsistent_support(u, sp, tol)) {
        res.refutation = std::move(bad);
        return res;
    }
    auto phases = solve_phases(u, sp, tol);
    if (auto* v = std::get_if<PhaseCycleViolation>(&phases)) {
        res.refutation = Refutation{RefutationKind::PhaseCycleViolation, *v, -1,
                                    Side::A, "phase cycle condition fails"};
        return res;
    }
    res.phases = std::get<PhaseAssignment>(std::move(phases));

    AmplitudeOutcome amp = solve_amplitudes(u, sp, *res.phases, tol);
    res.null_space_dim = amp.null_space_dim;
    res.tolerance_warning = amp.tolerance_warning;
    if (!amp.solution) {
        res.refutation = std::move(amp.refutation);
        return res;
    }
    res.amplitudes = std::move(amp.solution);

    ComplexVector coeffs = ComplexVector::Zero(u.dim());
    for (int r = 0; r < sp.n_a(); ++r) {
        const int j = sp.s_a[r];
        coeffs(j) = std::polar(res.amplitudes->a_vec(r), res.phases->alpha.at(j));
    }
    PureState psi = PureState::normalized(coeffs);
    const ClassicalityReport check = classify(u, psi, tol);
    if (!check.classical || !(check.support == sp)) {
        res.refutation = Refutation{RefutationKind::VerificationFailed, std::nullopt,
                                    -1, Side::A,
                                    check.classical ? "support mismatch"
                                                    : "constructed state is nonclassical"};
        return res;
    }
    res.state = std::move(psi);
    res.feasible = true;
    return res;
}

ClassicalDecomposition decompose_classical_state(const TransitionMatrix& u,
                                                 const PureState& psi,
                                                 const Tolerances& tol) {
    const ClassicalityReport rep = classify(u, psi, tol);
    if (!rep.classical) {
        throw InvalidInput("decompose_classical_state: state is not KD classical");
    }
    const ComplexVector phi = b_coefficients(u, psi);
    ClassicalDecomposition out;
    out.support = rep.support;
    const SupportPair& sp = out.support;
    out.amplitudes.a_vec.resize(sp.n_a());
    out.amplitudes.b_vec.resize(sp.n_b());
    for (int r = 0; r < sp.n_a(); ++r) {
        const int j = sp.s_a[r];
        out.phases.alpha[j] = normalize_phase(std::arg(psi[j]));
        out.amplitudes.a_vec(r) = std::abs(psi[j]);
    }
    for (int c = 0; c < sp.n_b(); ++c) {
        const int k = sp.s_b[c];
        // <psi|b_k> = conj(<b_k|psi>)
        out.phases.beta[k] = normalize_phase(-std::arg(phi(k)));
        out.amplitudes.b_vec(c) = std::abs(phi(k));
    }

    for (int j : sp.s_a) {
        for (int k : sp.s_b) {
            if (!nonzero(u, j, k, tol)) continue;
            if (circular_distance(theta(u, j, k),
                                  out.phases.alpha[j] + out.phases.beta[k]) >
                tol.eps_angle) {
                throw ConsistencyError("phase relation fails at (" + std::to_string(j) +
                                       ", " + std::to_string(k) + ")");
            }
        }
    }
    RealMatrix v(sp.n_a(), sp.n_b());
    for (int r = 0; r < sp.n_a(); ++r) {
        for (int c = 0; c < sp.n_b(); ++c) v(r, c) = std::abs(u(sp.s_a[r], sp.s_b[c]));
    }
    const double err_a = (v * out.amplitudes.b_vec - out.amplitudes.a_vec).cwiseAbs().maxCoeff();
    const double err_b =
        (v.transpose() * out.amplitudes.a_vec - out.amplitudes.b_vec).cwiseAbs().maxCoeff();
    if (err_a > 1e-8 || err_b > 1e-8) {
        throw ConsistencyError("amplitude relations A = V B, B = V^t A fail");
    }
    return out;
}

bool mub_corollary_check(const TransitionMatrix& u, const PureState& psi,
                         const Tolerances& tol) {
    const int d = u.dim();
    const double target = 1.0 / std::sqrt(static_cast<double>(d));
    if ((u.matrix().cwiseAbs().array() - target).abs().maxCoeff() > tol.eps_zero) {
        throw InvalidInput("mub_corollary_check: bases are not mutually unbiased");
    }
    const ClassicalDecomposition cd = decompose_classical_state(u, psi, tol);
    const auto spread = [](const RealVector& x) { return x.maxCoeff() - x.minCoeff(); };
    return spread(cd.amplitudes.a_vec) <= 1e-8 && spread(cd.amplitudes.b_vec) <= 1e-8 &&
           cd.support.n_a() * cd.support.n_b() == d;
}

}  // namespace kdq
