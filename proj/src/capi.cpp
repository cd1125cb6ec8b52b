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
#include "kdq/kdq.h"

#include <cmath>
#include <cstdlib>
#include <cstring>
#include <new>
#include <optional>
#include <string>

#include "kdq/block_structure.hpp"
#include "kdq/dft_enum.hpp"
#include "kdq/oracle.hpp"
#include "kdq/phase_amplitude.hpp"
#include "kdq/report.hpp"
#include "kdq/vector_clusters.hpp"
#include "kdq/witnesses.hpp"

struct kdq_matrix {
    kdq::TransitionMatrix u;
};

struct kdq_vector {
    kdq::PureState psi;
};

namespace {

thread_local std::string g_last_error;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

kdq_status fail(kdq_status code, const std::string& what) {
    g_last_error = what;
    return code;
}

template <typename F>
kdq_status guarded(F&& f) {
    try {
        g_last_error.clear();
        f();
        return KDQ_OK;
    } catch (const UsageError& e) {
        return fail(KDQ_ERR_USAGE, e.what());
    } catch (const kdq::LimitError& e) {
        return fail(KDQ_ERR_USAGE, e.what());
    } catch (const kdq::InvalidInput& e) {
        return fail(KDQ_ERR_DATA, e.what());
    } catch (const kdq::DimensionError& e) {
        return fail(KDQ_ERR_DATA, e.what());
    } catch (const kdq::ConsistencyError& e) {
        return fail(KDQ_ERR_INTERNAL, std::string("consistency failure: ") + e.what());
    } catch (const std::bad_alloc&) {
        return fail(KDQ_ERR_INTERNAL, "out of memory");
    } catch (const std::exception& e) {
        return fail(KDQ_ERR_INTERNAL, e.what());
    }
}

void require(bool ok, const char* what) {
    if (!ok) throw UsageError(what);
}

kdq::Tolerances tolerances(const kdq_tolerances* tol) {
    kdq::Tolerances t;
    if (tol != nullptr) {
        t.eps_zero = tol->eps_zero;
        t.eps_angle = tol->eps_angle;
        t.eps_unitary = tol->eps_unitary;
        t.eps_eig = tol->eps_eig;
    }
    try {
        t.validate();
    } catch (const kdq::InvalidInput& e) {
        throw UsageError(e.what());
    }
    return t;
}

kdq::IndexSet index_set(const int* idx, int n) {
    require(n >= 0 && (idx != nullptr || n == 0), "index list pointer is NULL");
    return kdq::IndexSet(idx, idx + n);
}

void emit(const kdq::report::Json& j, char** out) {
    const std::string text = kdq::report::dump(j);
    char* buf = static_cast<char*>(std::malloc(text.size() + 1));
    if (buf == nullptr) throw std::bad_alloc();
    std::memcpy(buf, text.c_str(), text.size() + 1);
    *out = buf;
}

kdq::ComplexVector interleaved(int n, const double* re_im) {
    kdq::ComplexVector v(n);
    for (int i = 0; i < n; ++i) v(i) = kdq::Complex(re_im[2 * i], re_im[2 * i + 1]);
    return v;
}

void check_dims(const kdq_matrix* m, const kdq_vector* v) {
    require(m != nullptr && v != nullptr, "NULL handle");
    if (m->u.dim() != v->psi.dim()) {
        throw kdq::DimensionError("state dimension " + std::to_string(v->psi.dim()) +
                                  " differs from matrix dimension " +
                                  std::to_string(m->u.dim()));
    }
}

}  // namespace

extern "C" {

const char* kdq_version(void) { return "1.0.0"; }

const char* kdq_last_error(void) { return g_last_error.c_str(); }

void kdq_string_free(char* s) { std::free(s); }

void kdq_tolerances_default(kdq_tolerances* tol) {
    if (tol == nullptr) return;
    const kdq::Tolerances t;
    *tol = {t.eps_zero, t.eps_angle, t.eps_unitary, t.eps_eig};
}

kdq_status kdq_matrix_from_json(const char* text, const kdq_tolerances* tol,
                                kdq_matrix** out) {
    return guarded([&] {
        require(text != nullptr && out != nullptr, "NULL argument");
        const kdq::Tolerances t = tolerances(tol);
        *out = new kdq_matrix{kdq::TransitionMatrix(kdq::report::parse_matrix(text), t)};
    });
}

kdq_status kdq_matrix_from_array(int d, const double* re_im, const kdq_tolerances* tol,
                                 kdq_matrix** out) {
    return guarded([&] {
        require(d >= 1 && re_im != nullptr && out != nullptr, "bad argument");
        const kdq::Tolerances t = tolerances(tol);
        kdq::ComplexMatrix m(d, d);
        for (int j = 0; j < d; ++j) {
            for (int k = 0; k < d; ++k) {
                const double* p = re_im + 2 * (static_cast<std::size_t>(j) * d + k);
                m(j, k) = kdq::Complex(p[0], p[1]);
            }
        }
        *out = new kdq_matrix{kdq::TransitionMatrix(std::move(m), t)};
    });
}

kdq_status kdq_matrix_dft(int d, kdq_matrix** out) {
    return guarded([&] {
        require(d >= 1 && out != nullptr, "d must be positive");
        *out = new kdq_matrix{kdq::dft_matrix(d)};
    });
}

int kdq_matrix_dim(const kdq_matrix* m) { return m == nullptr ? 0 : m->u.dim(); }

kdq_status kdq_matrix_entry(const kdq_matrix* m, int j, int k, double* re, double* im) {
    return guarded([&] {
        require(m != nullptr && re != nullptr && im != nullptr, "NULL argument");
        require(j >= 0 && k >= 0 && j < m->u.dim() && k < m->u.dim(), "index out of range");
        *re = m->u(j, k).real();
        *im = m->u(j, k).imag();
    });
}

void kdq_matrix_free(kdq_matrix* m) { delete m; }

kdq_status kdq_vector_from_json(const char* text, kdq_vector** out) {
    return guarded([&] {
        require(text != nullptr && out != nullptr, "NULL argument");
        *out = new kdq_vector{kdq::report::parse_state(text)};
    });
}

kdq_status kdq_vector_from_array(int d, const double* re_im, kdq_vector** out) {
    return guarded([&] {
        require(d >= 1 && re_im != nullptr && out != nullptr, "bad argument");
        const kdq::ComplexVector c = interleaved(d, re_im);
        if (!kdq::all_finite(c)) throw kdq::InvalidInput("state has non-finite entries");
        if (std::abs(c.norm() - 1.0) > 1e-8) {
            throw kdq::InvalidInput("state is not normalized (|norm - 1| > 1e-8)");
        }
        *out = new kdq_vector{kdq::PureState::normalized(c)};
    });
}

int kdq_vector_dim(const kdq_vector* v) { return v == nullptr ? 0 : v->psi.dim(); }

kdq_status kdq_vector_entry(const kdq_vector* v, int j, double* re, double* im) {
    return guarded([&] {
        require(v != nullptr && re != nullptr && im != nullptr, "NULL argument");
        require(j >= 0 && j < v->psi.dim(), "index out of range");
        *re = v->psi[j].real();
        *im = v->psi[j].imag();
    });
}

void kdq_vector_free(kdq_vector* v) { delete v; }

kdq_status kdq_classify(const kdq_matrix* m, const kdq_vector* v,
                        const kdq_tolerances* tol, int* classical, int* n_a, int* n_b) {
    return guarded([&] {
        check_dims(m, v);
        const kdq::ClassicalityReport r = kdq::classify(m->u, v->psi, tolerances(tol));
        if (classical != nullptr) *classical = r.classical ? 1 : 0;
        if (n_a != nullptr) *n_a = r.support.n_a();
        if (n_b != nullptr) *n_b = r.support.n_b();
    });
}

kdq_status kdq_count_zeros(const kdq_matrix* m, const kdq_tolerances* tol, int* n_zeros) {
    return guarded([&] {
        require(m != nullptr && n_zeros != nullptr, "NULL argument");
        *n_zeros = kdq::count_zeros(m->u, tolerances(tol));
    });
}

kdq_status kdq_block_count(const kdq_matrix* m, const kdq_tolerances* tol, int* s) {
    return guarded([&] {
        require(m != nullptr && s != nullptr, "NULL argument");
        *s = kdq::decompose(m->u, tolerances(tol)).s();
    });
}

kdq_status kdq_table_json(const kdq_matrix* m, const kdq_vector* v, char** out) {
    return guarded([&] {
        check_dims(m, v);
        require(out != nullptr, "NULL output");
        emit(kdq::report::to_json(kdq::kd_table(m->u, v->psi)), out);
    });
}

kdq_status kdq_classify_json(const kdq_matrix* m, const kdq_vector* v,
                             const kdq_tolerances* tol, char** out) {
    return guarded([&] {
        check_dims(m, v);
        require(out != nullptr, "NULL output");
        emit(kdq::report::to_json(kdq::classify(m->u, v->psi, tolerances(tol))), out);
    });
}

kdq_status kdq_blocks_json(const kdq_matrix* m, const kdq_vector* v, const int* sa,
                           int na, const int* sb, int nb, const kdq_tolerances* tol,
                           char** out) {
    return guarded([&] {
        require(m != nullptr && out != nullptr, "NULL argument");
        const kdq::Tolerances t = tolerances(tol);
        const kdq::BlockDecomposition full = kdq::decompose(m->u, t);
        kdq::report::Json j = {{"d", m->u.dim()},
                               {"full", kdq::report::to_json(full)},
                               {"window", nullptr}};
        std::optional<kdq::SupportPair> sp;
        if (sa != nullptr || sb != nullptr) {
            require(sa != nullptr && sb != nullptr, "give both index lists or neither");
            sp = kdq::SupportPair{index_set(sa, na), index_set(sb, nb)};
        } else if (v != nullptr) {
            check_dims(m, v);
            sp = kdq::supports(m->u, v->psi, t);
        }
        if (sp) {
            const kdq::CanonicalForm cf = kdq::canonical_form(m->u, *sp, t);
            kdq::report::Json w = kdq::report::to_json(cf.decomposition);
            w["support_a"] = sp->s_a;
            w["support_b"] = sp->s_b;
            kdq::report::Json shapes_c = kdq::report::Json::array();
            kdq::report::Json shapes_r = kdq::report::Json::array();
            for (std::size_t i = 0; i < cf.c_blocks.size(); ++i) {
                shapes_c.push_back({cf.c_blocks[i].rows(), cf.c_blocks[i].cols()});
                shapes_r.push_back({cf.r_blocks[i].rows(), cf.r_blocks[i].cols()});
            }
            w["c_block_shapes"] = std::move(shapes_c);
            w["r_block_shapes"] = std::move(shapes_r);
            w["theorem3"] = kdq::report::to_json(kdq::theorem3_check(cf, m->u.dim(), t));
            j["window"] = std::move(w);
        }
        emit(j, out);
    });
}

kdq_status kdq_cluster_json(const char* vectors_json, const kdq_tolerances* tol,
                            char** out) {
    return guarded([&] {
        require(vectors_json != nullptr && out != nullptr, "NULL argument");
        const kdq::Tolerances t = tolerances(tol);
        const kdq::ClusterDecomposition cd =
            kdq::cluster(kdq::report::parse_vectors(vectors_json), t);
        emit(kdq::report::to_json(cd, kdq::check_dimension_law(cd, t)), out);
    });
}

kdq_status kdq_witness_json(const kdq_matrix* m, const kdq_vector* v,
                            const kdq_tolerances* tol, char** out) {
    return guarded([&] {
        check_dims(m, v);
        require(out != nullptr, "NULL output");
        emit(kdq::report::to_json(
                 kdq::nonclassicality_witness(m->u, v->psi, tolerances(tol))),
             out);
    });
}

kdq_status kdq_oracle_json(const kdq_matrix* m, const kdq_tolerances* tol, int max_d,
                           int allow_override, int trials, uint64_t seed, int split,
                           char** out, double* elapsed_seconds) {
    return guarded([&] {
        require(m != nullptr && out != nullptr, "NULL argument");
        require(max_d >= 1 && trials >= 0, "max_d must be positive and trials nonnegative");
        const kdq::Tolerances t = tolerances(tol);
        const kdq::OracleCatalog cat =
            kdq::brute_force_catalog(m->u, t, max_d, allow_override != 0);
        kdq::report::Json j = kdq::report::to_json(cat);
        j["soundness"] = nullptr;
        if (trials > 0) {
            const kdq::SoundnessReport rep =
                kdq::witness_soundness_sweep(m->u, trials, seed, t, split != 0);
            j["soundness"] = kdq::report::to_json(rep);
            if (rep.violation) {
                throw kdq::ConsistencyError("a witness fired on a classical state");
            }
        }
        if (elapsed_seconds != nullptr) *elapsed_seconds = cat.elapsed_seconds;
        emit(j, out);
    });
}

kdq_status kdq_verify_json(const kdq_matrix* m, const int* sa, int na, const int* sb,
                           int nb, const kdq_tolerances* tol, char** out) {
    return guarded([&] {
        require(m != nullptr && out != nullptr, "NULL argument");
        const kdq::SupportPair sp{index_set(sa, na), index_set(sb, nb)};
        const kdq::FeasibilityResult res =
            kdq::construct_classical_state(m->u, sp, tolerances(tol));
        emit(kdq::report::to_json(res, sp), out);
    });
}

kdq_status kdq_dft_enum_json(int d, const kdq_tolerances* tol, char** out) {
    return guarded([&] {
        require(d >= 1 && out != nullptr, "d must be positive");
        const kdq::Tolerances t = tolerances(tol);
        const kdq::TransitionMatrix u = kdq::dft_matrix(d);
        kdq::report::Json records = kdq::report::Json::array();
        for (const kdq::DftClassicalState& s : kdq::enumerate_classical(d, t)) {
            const bool ok = kdq::classify(u, s.state, t).classical;
            if (!ok) throw kdq::ConsistencyError("enumerated state is nonclassical");
            records.push_back(kdq::report::to_json(s, ok));
        }
        emit(records, out);
    });
}

}  // extern "C"
