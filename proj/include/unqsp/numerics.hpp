/*
   Copyright 2026 The unqsp authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef UNQSP_NUMERICS_HPP
#define UNQSP_NUMERICS_HPP

#include <Eigen/Dense>
#include <complex>
#include <cstdint>
#include <functional>
#include <random>

namespace unqsp {

using cd = std::complex<double>;
using Eigen::MatrixXcd;
using Eigen::MatrixXd;
using Eigen::VectorXcd;
using Eigen::VectorXd;

/// Seeded, value-semantics random generator. The raw stream is the
/// standard-mandated mt19937_64 sequence, and the derived distributions below
/// are computed from it explicitly, so identical seeds give identical output
/// on every platform.
class Rng {
   public:
    explicit Rng(std::uint64_t seed = 42) : gen_(seed) {}

    /// Uniform double in [0, 1).
    double uniform();
    /// Uniform double in [a, b).
    double uniform(double a, double b) { return a + (b - a) * uniform(); }
    /// Standard normal via Box-Muller on the uniform stream.
    double normal();
    /// Uniform integer in [0, n).
    std::uint64_t index(std::uint64_t n);
    /// Standard complex Gaussian (independent N(0,1) real and imaginary parts).
    cd cgauss() { double re = normal(); return {re, normal()}; }
    /// Derive an independent generator (for splitting work deterministically).
    Rng fork();

   private:
    std::mt19937_64 gen_;
    bool have_spare_ = false;
    double spare_ = 0.0;
};

/// Haar-distributed n x n unitary via QR of a complex Gaussian matrix with
/// the R diagonal phase fix.
MatrixXcd random_unitary(Rng& rng, int n);

/// Random complex matrix with iid standard complex Gaussian entries.
MatrixXcd random_complex(Rng& rng, int rows, int cols);

/// Nearest unitary (polar factor) U = M (M^* M)^{-1/2}, computed by SVD.
/// Throws PreconditionError when M is singular to working precision.
MatrixXcd polar_unitary(const MatrixXcd& m);

/// Unitary polar factor of a possibly rank-deficient matrix: U V^* from the
/// full SVD M = U S V^*. Used where the nullspace completion is a free choice.
MatrixXcd polar_factor_any(const MatrixXcd& m);

/// Principal square root of a unitary matrix: eigenphases are halved on
/// (-pi, pi].
MatrixXcd principal_unitary_sqrt(const MatrixXcd& u);

/// Operator (spectral) norm.
double op_norm(const MatrixXcd& m);

/// Largest singular value check helper.
double max_singular_value(const MatrixXcd& m);

/// ||M M^* - I|| measure of unitarity defect (operator norm).
double unitarity_defect(const MatrixXcd& m);

/// Kronecker product a (x) b.
MatrixXcd kron(const MatrixXcd& a, const MatrixXcd& b);

/// Bisection root finding for continuous f with f(lo) f(hi) <= 0.
double bisect(const std::function<double(double)>& f, double lo, double hi, double tol);

/// Composite Simpson rule with n (even) intervals.
double simpson(const std::function<double(double)>& f, double a, double b, int n);

}  // namespace unqsp

#endif
