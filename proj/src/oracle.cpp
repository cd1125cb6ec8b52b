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
#include "kdq/oracle.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <exception>
#include <mutex>
#include <thread>

#include "kdq/block_structure.hpp"
#include "kdq/phase_amplitude.hpp"
#include "kdq/random.hpp"
#include "kdq/witnesses.hpp"

namespace kdq {

namespace {

void fnv_mix(std::uint64_t& h, const void* data, std::size_t n) {
    const auto* p = static_cast<const unsigned char*>(data);
    for (std::size_t i = 0; i < n; ++i) {
        h ^= p[i];
        h *= 0x100000001b3ULL;
    }
}

// Rows and columns of the window, each with at least one nonzero entry.
bool window_consistent(const Eigen::Array<bool, Eigen::Dynamic, Eigen::Dynamic>& nz,
                       std::uint32_t ma, std::uint32_t mb, int d) {
    for (int j = 0; j < d; ++j) {
        if (!(ma >> j & 1U)) continue;
        bool any = false;
        for (int k = 0; k < d && !any; ++k) any = (mb >> k & 1U) && nz(j, k);
        if (!any) return false;
    }
    for (int k = 0; k < d; ++k) {
        if (!(mb >> k & 1U)) continue;
        bool any = false;
        for (int j = 0; j < d && !any; ++j) any = (ma >> j & 1U) && nz(j, k);
        if (!any) return false;
    }
    return true;
}

}  // namespace

std::string unitary_digest(const TransitionMatrix& u) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    const std::int64_t d = u.dim();
    fnv_mix(h, &d, sizeof d);
    for (int j = 0; j < u.dim(); ++j) {
        for (int k = 0; k < u.dim(); ++k) {
            const double parts[2] = {u(j, k).real(), u(j, k).imag()};
            fnv_mix(h, parts, sizeof parts);
        }
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

std::uint32_t index_mask(const IndexSet& set) {
    std::uint32_t m = 0;
    for (int j : set) m |= 1U << j;
    return m;
}

IndexSet mask_indices(std::uint32_t mask, int d) {
    IndexSet out;
    for (int j = 0; j < d; ++j) {
        if (mask >> j & 1U) out.push_back(j);
    }
    return out;
}

OracleCatalog brute_force_catalog(const TransitionMatrix& u, const Tolerances& tol,
                                  int max_d, bool allow_override, unsigned workers) {
    const int d = u.dim();
    if (d > kOracleHardMaxD) {
        throw LimitError("brute-force search is limited to d <= 10, got d = " +
                         std::to_string(d));
    }
    if (d > max_d && !allow_override) {
        throw LimitError("d = " + std::to_string(d) + " exceeds max_d = " +
                         std::to_string(max_d) + "; pass an override to search anyway");
    }
    const auto start = std::chrono::steady_clock::now();
    const Eigen::Array<bool, Eigen::Dynamic, Eigen::Dynamic> nz =
        u.matrix().cwiseAbs().array() > tol.eps_zero;
    const std::uint32_t n_masks = 1U << d;

    // Work unit: one A-side mask. Results land in a slot per mask and are
    // concatenated in mask order afterwards.
    std::vector<std::vector<FeasibleEntry>> slots(n_masks);
    std::atomic<std::uint32_t> next{1};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto work = [&] {
        try {
            for (std::uint32_t ma = next++; ma < n_masks; ma = next++) {
                const IndexSet s_a = mask_indices(ma, d);
                for (std::uint32_t mb = 1; mb < n_masks; ++mb) {
                    if (!window_consistent(nz, ma, mb, d)) continue;
                    SupportPair sp{s_a, mask_indices(mb, d)};
                    FeasibilityResult res = construct_classical_state(u, sp, tol);
                    if (!res.feasible) continue;
                    slots[ma].push_back({std::move(sp), std::move(*res.state),
                                         res.null_space_dim});
                }
            }
        } catch (...) {
            std::lock_guard<std::mutex> lock(failure_mutex);
            if (!failure) failure = std::current_exception();
            next = n_masks;
        }
    };
    unsigned n_workers = workers != 0 ? workers : std::thread::hardware_concurrency();
    n_workers = std::clamp(n_workers, 1U, 64U);
    if (n_workers == 1) {
        work();
    } else {
        std::vector<std::thread> pool;
        for (unsigned w = 0; w < n_workers; ++w) pool.emplace_back(work);
        for (auto& t : pool) t.join();
    }
    if (failure) std::rethrow_exception(failure);

    OracleCatalog cat;
    cat.d = d;
    cat.unitary_id = unitary_digest(u);
    for (auto& slot : slots) {
        for (auto& e : slot) cat.feasible.push_back(std::move(e));
    }
    cat.elapsed_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return cat;
}

SoundnessReport witness_soundness_sweep(const TransitionMatrix& u, int trials,
                                        std::uint64_t seed, const Tolerances& tol,
                                        bool split) {
    if (trials < 0) throw InvalidInput("trials must be nonnegative");
    SoundnessReport rep;
    std::vector<TransitionMatrix> parts;
    if (is_indecomposable(u, tol)) {
        parts.push_back(u);
    } else if (!split) {
        rep.skipped = true;
        rep.summands = decompose(u, tol).s();
        rep.notice = "decomposable: U splits into " + std::to_string(rep.summands) +
                     " blocks; sweep skipped";
        return rep;
    } else {
        for (DirectSummand& ds : direct_summands(u, tol)) parts.push_back(std::move(ds.u));
        rep.notice = "decomposable: swept " + std::to_string(parts.size()) +
                     " direct summands separately";
    }
    rep.summands = static_cast<int>(parts.size());
    for (std::size_t p = 0; p < parts.size(); ++p) {
        for (int t = 0; t < trials; ++t) {
            CounterRng rng(seed, (static_cast<std::uint64_t>(p) << 32) |
                                     static_cast<std::uint32_t>(t));
            PureState psi = haar_state(parts[p].dim(), rng);
            const WitnessReport w = nonclassicality_witness(parts[p], psi, tol);
            const bool classical = classify(parts[p], psi, tol).classical;
            ++rep.trials_run;
            if (w.nonclassical_certified) ++rep.fired;
            if (!classical) ++rep.nonclassical;
            if (w.nonclassical_certified && classical) {
                rep.violation = SoundnessViolation{static_cast<int>(p), t, std::move(psi)};
                return rep;
            }
        }
    }
    return rep;
}

}  // namespace kdq
