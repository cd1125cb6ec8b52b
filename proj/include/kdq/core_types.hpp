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

#include <complex>
#include <numbers>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace kdq {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using RealMatrix = Eigen::MatrixXd;
using RealVector = Eigen::VectorXd;

/// Sorted, duplicate-free list of 0-based basis indices.
using IndexSet = std::vector<int>;

inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

// ---------------------------------------------------------------------------
// Errors
// ---------------------------------------------------------------------------

class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Shape or length mismatch.
class DimensionError : public Error {
  public:
    using Error::Error;
};

/// Input violates a documented precondition (non-unitary matrix,
/// non-normalized state, empty index set, bad tolerance, ...).
class InvalidInput : public Error {
  public:
    using Error::Error;
};

/// A request exceeds a hard size limit (oracle dimension cap).
class LimitError : public Error {
  public:
    using Error::Error;
};

/// A relation that holds as a theorem failed numerically. Signals an
/// implementation bug or a mis-set tolerance.
class ConsistencyError : public Error {
  public:
    using Error::Error;
};

// ---------------------------------------------------------------------------
// Tolerances
// ---------------------------------------------------------------------------

struct Tolerances {
    double eps_zero = 1e-10;    ///< |z| <= eps_zero counts as an exact zero
    double eps_angle = 1e-8;    ///< phase congruence slack, radians
    double eps_unitary = 1e-8;  ///< max-norm slack on U^dagger U - I
    double eps_eig = 1e-8;      ///< eigenvalue-1 / residual slack for amplitudes

    /// Throws InvalidInput unless every field lies in (0, 1e-3).
    void validate() const;
};

// ---------------------------------------------------------------------------
// Phases
// ---------------------------------------------------------------------------

/// Maps any real angle into [0, 2*pi).
double normalize_phase(double angle);

/// min(|a - b|, 2*pi - |a - b|) after normalization.
double circular_distance(double a, double b);

struct Polar {
    double modulus;
    double phase;  ///< in [0, 2*pi)
};

/// Polar form of z, or nullopt when |z| <= eps_zero.
std::optional<Polar> entry_polar(Complex z, const Tolerances& tol);

// ---------------------------------------------------------------------------
// Validated domain values
// ---------------------------------------------------------------------------

bool all_finite(const ComplexMatrix& m);
bool all_finite(const ComplexVector& v);

/// True iff max |(U^dagger U - I)_{jk}| <= eps_unitary. Throws
/// DimensionError for non-square input.
bool check_unitary(const ComplexMatrix& u, const Tolerances& tol);

/// Unitary matrix with U(j, k) = <a_j|b_k>, the representation of a basis
/// pair. Construction validates shape, finiteness and unitarity.
class TransitionMatrix {
  public:
    TransitionMatrix(ComplexMatrix u, const Tolerances& tol = {});

    int dim() const { return static_cast<int>(u_.rows()); }
    const ComplexMatrix& matrix() const { return u_; }
    Complex operator()(int j, int k) const { return u_(j, k); }

  private:
    ComplexMatrix u_;
};

/// Unit-norm coefficient vector of a pure state in the A basis,
/// psi[j] = <a_j|psi>.
class PureState {
  public:
    /// Validates finiteness and |norm - 1| <= norm_tol.
    explicit PureState(ComplexVector coeffs, double norm_tol = 1e-10);

    /// Rescales a nonzero vector to unit norm.
    static PureState normalized(const ComplexVector& v);

    int dim() const { return static_cast<int>(c_.size()); }
    const ComplexVector& coeffs() const { return c_; }
    Complex operator[](int j) const { return c_(j); }

  private:
    ComplexVector c_;
};

/// Numerical rank: singular values above max(eps_zero * sigma_max, eps_zero).
int numerical_rank(const ComplexMatrix& m, double eps_zero);

/// Submatrix with the given rows and columns, in the given order.
ComplexMatrix submatrix(const ComplexMatrix& m, const IndexSet& rows,
                        const IndexSet& cols);

/// [0, d) minus `set`, ascending.
IndexSet complement(const IndexSet& set, int d);

/// Ascending [0, d).
IndexSet full_range(int d);

}  // namespace kdq
