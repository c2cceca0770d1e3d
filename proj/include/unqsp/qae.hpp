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

#ifndef UNQSP_QAE_HPP
#define UNQSP_QAE_HPP

#include <string>
#include <vector>

#include "unqsp/chebyshev.hpp"
#include "unqsp/numerics.hpp"
#include "unqsp/qsvt.hpp"

namespace unqsp {

/// Outcome model of an amplitude estimation circuit: polynomials P_m(x) on
/// [0,1], each nonnegative, summing identically to one.
struct ProbabilityFamily {
    int degree_bound = 0;
    std::vector<ChebPoly> members;

    int size() const { return static_cast<int>(members.size()); }
    /// Checks nonnegativity (>= -1e-9 on a 257-point grid) and unit sum.
    void validate() const;
};

/// Bayesian estimator summary: per-outcome posterior means, masses, and the
/// standard deviation error.
struct EstimatorSummary {
    std::vector<double> x_tilde;
    std::vector<double> mass;
    double delta_x = 0.0;
    std::vector<std::pair<double, double>> window;  // optional (eps, delta) pairs
};

/// Tabulated sweep results destined for CSV emission.
struct BoundTable {
    std::string kind;          // "r", "r_eps", "delta_tilde", "std"
    std::vector<int> n;        // family degree bound per row
    std::vector<double> param; // y or eps (or unused)
    std::vector<double> value;
};

enum class WeightKind { One, Square, Indicator };

struct Weight {
    WeightKind kind = WeightKind::One;
    double y = 0.0;
    double eps = 0.0;

    static Weight one() { return {WeightKind::One, 0.0, 0.0}; }
    static Weight square(double y) { return {WeightKind::Square, y, 0.0}; }
    static Weight indicator(double y, double eps) { return {WeightKind::Indicator, y, eps}; }
};

/// Entry (j,k) = integral_0^1 w(x) T_{|j-k|}(2x-1) dx, (N+1) x (N+1),
/// symmetric Toeplitz, by exact piecewise antiderivatives.
MatrixXd cheb_moment_matrices(int n, const Weight& w);

struct GenEigResult {
    double value = 0.0;
    VectorXd vector;
};

/// Smallest generalized eigenvalue of the symmetric pencil (A, B), B positive
/// definite, via Cholesky whitening with an eigen-whitening fallback.
GenEigResult min_gen_eig(const MatrixXd& a, const MatrixXd& b);

/// Reusable factorized denominator for the sweeps over y and eps.
class BoundSolver {
   public:
    explicit BoundSolver(int n);

    int n() const { return n_; }
    double r_of_y(double y) const;
    double r_eps(double y, double eps) const;

    /// Apply B^{-1} (through the factorization).
    VectorXd solve_b(const VectorXd& rhs) const;

   private:
    int n_;
    MatrixXd b_;
    Eigen::LLT<MatrixXd> llt_;
    bool use_eig_ = false;
    MatrixXd eig_vecs_;
    VectorXd eig_inv_;

    double r_eps_dense(double y, double eps) const;
    double r_eps_lanczos(double y, double eps) const;
    friend double detail_r_eps_dense(const BoundSolver&, double, double);
    friend double detail_r_eps_lanczos(const BoundSolver&, double, double);
};

double detail_r_eps_dense(const BoundSolver& s, double y, double eps);
double detail_r_eps_lanczos(const BoundSolver& s, double y, double eps);

/// r(y) = min generalized eigenvalue of (square-weight, unit-weight) moment
/// matrices at degree bound N.
double r_of_y(int n, double y);

/// Window analogue with the indicator weight.
double r_eps_of_y(int n, double y, double eps);

/// delta_tilde = (int_0^1 r_eps(y) dy) / (1 + r_eps(1/2)), 201-point Simpson.
double delta_tilde(int n, double eps, int jobs = 1);

/// Solve delta_tilde(N, eps) = delta for eps by bisection.
double eps_for_delta(int n, double delta, int jobs = 1);

/// Outcome family of textbook phase estimation with the sine initial state,
/// by direct simulation and Chebyshev fitting at N+1 nodes.
ProbabilityFamily qpe_sine_family(int n);

/// Amplitude amplification outcome pair {(1 - T_{2k+1}(2x-1))/2, (1 + ...)/2}.
ProbabilityFamily amplitude_amplification_family(int k);

/// Posterior means, masses, and standard deviation error under the uniform
/// prior, by exact Chebyshev integration.
EstimatorSummary bayes_and_errors(const ProbabilityFamily& fam);

/// Window error delta(eps) = sum_m int P_m outside [x_m - eps, x_m + eps].
double window_error(const ProbabilityFamily& fam, const EstimatorSummary& summary, double eps);

/// Inverse lookup: smallest eps with window_error <= delta.
double eps_for_window(const ProbabilityFamily& fam, const EstimatorSummary& summary, double delta);

/// Completion P(cos^2(t/2)) = |A(cos t/2)|^2 + sin^2(t/2) |B(cos t/2)|^2 via
/// Fejer-Riesz factorization; returns monomial coefficients of A and B.
std::pair<std::vector<cd>, std::vector<cd>> decompose_prob_AB(const ChebPoly& p, int n);

/// Realize a probability family as a U(N)-QSVT circuit; verified on W(theta)
/// at 33 angles before returning.
QsvtParams build_qae_circuit(const ProbabilityFamily& fam);

/// Outcome probabilities of the circuit on the block encoding W(theta).
VectorXd simulate_qae_probs(const QsvtParams& params, double theta);

}  // namespace unqsp

#endif
