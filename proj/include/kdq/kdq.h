/*
 * Copyright 2026 The kdq Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */
#ifndef KDQ_KDQ_H
#define KDQ_KDQ_H

/*
 * C interface to the Kirkwood-Dirac quasiprobability library.
 *
 * Every call returns a kdq_status. On failure, kdq_last_error() describes
 * the problem; the text is per thread and valid until the next call on that
 * thread. Strings handed out through char** parameters are owned by the
 * caller and released with kdq_string_free. Complex arrays are interleaved
 * (re, im) pairs; matrices are row-major.
 */

#include <stdint.h>

#if defined(KDQ_BUILDING_LIBRARY)
#define KDQ_API __attribute__((visibility("default")))
#else
#define KDQ_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

/* Values double as the command-line exit codes. */
typedef enum kdq_status {
    KDQ_OK = 0,
    KDQ_ERR_USAGE = 64,        /* bad argument, or a size limit exceeded */
    KDQ_ERR_DATA = 65,         /* malformed or invalid input data */
    KDQ_ERR_INTERNAL = 70,     /* a relation that must hold failed */
    KDQ_ERR_CANT_CREATE = 73   /* output could not be written */
} kdq_status;

typedef struct kdq_matrix kdq_matrix; /* validated unitary transition matrix */
typedef struct kdq_vector kdq_vector; /* unit-norm state, A-basis coefficients */

typedef struct kdq_tolerances {
    double eps_zero;
    double eps_angle;
    double eps_unitary;
    double eps_eig;
} kdq_tolerances;

KDQ_API const char* kdq_version(void);
KDQ_API const char* kdq_last_error(void);
KDQ_API void kdq_string_free(char* s);

/* Library defaults: 1e-10, 1e-8, 1e-8, 1e-8. */
KDQ_API void kdq_tolerances_default(kdq_tolerances* tol);

/* Matrices. A NULL tolerance pointer means the defaults. */
KDQ_API kdq_status kdq_matrix_from_json(const char* text, const kdq_tolerances* tol,
                                        kdq_matrix** out);
KDQ_API kdq_status kdq_matrix_from_array(int d, const double* re_im,
                                         const kdq_tolerances* tol, kdq_matrix** out);
KDQ_API kdq_status kdq_matrix_dft(int d, kdq_matrix** out);
KDQ_API int kdq_matrix_dim(const kdq_matrix* m);
KDQ_API kdq_status kdq_matrix_entry(const kdq_matrix* m, int j, int k, double* re,
                                    double* im);
KDQ_API void kdq_matrix_free(kdq_matrix* m);

/* States must have unit norm within 1e-8; they are renormalized. */
KDQ_API kdq_status kdq_vector_from_json(const char* text, kdq_vector** out);
KDQ_API kdq_status kdq_vector_from_array(int d, const double* re_im, kdq_vector** out);
KDQ_API int kdq_vector_dim(const kdq_vector* v);
KDQ_API kdq_status kdq_vector_entry(const kdq_vector* v, int j, double* re, double* im);
KDQ_API void kdq_vector_free(kdq_vector* v);

/* Typed queries. */
KDQ_API kdq_status kdq_classify(const kdq_matrix* m, const kdq_vector* v,
                                const kdq_tolerances* tol, int* classical, int* n_a,
                                int* n_b);
KDQ_API kdq_status kdq_count_zeros(const kdq_matrix* m, const kdq_tolerances* tol,
                                   int* n_zeros);
KDQ_API kdq_status kdq_block_count(const kdq_matrix* m, const kdq_tolerances* tol,
                                   int* s);

/* JSON reports. */
KDQ_API kdq_status kdq_table_json(const kdq_matrix* m, const kdq_vector* v, char** out);
KDQ_API kdq_status kdq_classify_json(const kdq_matrix* m, const kdq_vector* v,
                                     const kdq_tolerances* tol, char** out);
/* Window precedence: explicit index lists, then the support of v, then the
 * whole matrix. sa/sb and v may be NULL. */
KDQ_API kdq_status kdq_blocks_json(const kdq_matrix* m, const kdq_vector* v,
                                   const int* sa, int na, const int* sb, int nb,
                                   const kdq_tolerances* tol, char** out);
KDQ_API kdq_status kdq_cluster_json(const char* vectors_json, const kdq_tolerances* tol,
                                    char** out);
KDQ_API kdq_status kdq_witness_json(const kdq_matrix* m, const kdq_vector* v,
                                    const kdq_tolerances* tol, char** out);
/* trials > 0 adds a witness soundness sweep seeded with `seed`; `split`
 * sweeps the direct summands of a decomposable matrix. elapsed_seconds may
 * be NULL. */
KDQ_API kdq_status kdq_oracle_json(const kdq_matrix* m, const kdq_tolerances* tol,
                                   int max_d, int allow_override, int trials,
                                   uint64_t seed, int split, char** out,
                                   double* elapsed_seconds);
KDQ_API kdq_status kdq_verify_json(const kdq_matrix* m, const int* sa, int na,
                                   const int* sb, int nb, const kdq_tolerances* tol,
                                   char** out);
KDQ_API kdq_status kdq_dft_enum_json(int d, const kdq_tolerances* tol, char** out);

#ifdef __cplusplus
}
#endif

#endif /* KDQ_KDQ_H */
