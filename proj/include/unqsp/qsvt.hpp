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

#ifndef UNQSP_QSVT_HPP
#define UNQSP_QSVT_HPP

#include <tuple>
#include <vector>

#include "unqsp/polymat.hpp"

namespace unqsp {

enum class Parity { Even, Odd, None };

/// Matrix-valued polynomial of a real variable x in the monomial basis,
/// optionally parity-constrained (entries of the opposite parity vanish).
struct RealPolyMatrix {
    std::vector<MatrixXcd> coeffs;  // coeffs[l] multiplies x^l
    Parity parity = Parity::None;

    RealPolyMatrix() = default;
    RealPolyMatrix(std::vector<MatrixXcd> c, Parity p);

    int rows() const { return coeffs.empty() ? 0 : static_cast<int>(coeffs[0].rows()); }
    int cols() const { return coeffs.empty() ? 0 : static_cast<int>(coeffs[0].cols()); }
    int degree() const { return static_cast<int>(coeffs.size()) - 1; }
    MatrixXcd coeff(int l) const;
    MatrixXcd at(double x) const;
    double max_abs() const;
    /// Largest coefficient entry violating the declared parity.
    double parity_defect() const;
    void trim();
};

/// Circuit parameters for U(N)-QSVT: ancilla unitaries V_0..V_L interleaved
/// with the alternating U / U^* input gates.
struct QsvtParams {
    std::vector<MatrixXcd> unitaries;  // V_0 .. V_L

    int n_dim() const { return unitaries.empty() ? 0 : static_cast<int>(unitaries[0].rows()); }
    int length() const { return static_cast<int>(unitaries.size()) - 1; }
    int parity() const { return length() % 2; }
    void validate(double tol = 1e-10) const;
};

/// Unitary dilation holding a contraction A as its top-left a x b block.
struct BlockEncoding {
    MatrixXcd u;
    int a = 0;  // rows of A (the |0~> block)
    int b = 0;  // cols of A (the |0> block)

    MatrixXcd block() const { return u.topLeftCorner(a, b); }
    int dim() const { return static_cast<int>(u.rows()); }
};

/// Standard two-block dilation of a contraction.
BlockEncoding make_block_encoding(const MatrixXcd& a);

/// Ground truth: singular value transformation of A by each entry of P via
/// explicit SVD (even entries act on the right singular basis, odd entries
/// map right to left).
MatrixXcd svt_oracle(const MatrixXcd& a, const RealPolyMatrix& p);

/// Simulate the circuit inside one qubitized 2x2 subspace at singular value
/// lambda in [0,1]. Returns (P(lambda), lbar * Q(lambda)) as n x n matrices,
/// lbar = sqrt(1 - lambda^2).
std::pair<MatrixXcd, MatrixXcd> forward_2x2(const QsvtParams& params, double lambda);

/// Analytic continuation of forward_2x2 to lambda in [-1, 1]; used to fit
/// the realized polynomials.
std::pair<MatrixXcd, MatrixXcd> forward_2x2_extended(const QsvtParams& params, double lambda);

/// Build the full circuit unitary on (ancilla) (x) (encoding space).
MatrixXcd forward_full_circuit(const QsvtParams& params, const BlockEncoding& be);

/// Assemble the realized outcome blocks <k, 0(~)| circuit |j, 0> as one
/// (n*rows) x (n*cols) matrix laid out like svt_oracle's output.
MatrixXcd forward_full(const QsvtParams& params, const BlockEncoding& be);

/// Fit the polynomials realized by params from forward_2x2_extended samples
/// at Chebyshev nodes; returns (P, Q) with degrees L and L-1.
std::pair<RealPolyMatrix, RealPolyMatrix> fit_realized(const QsvtParams& params);

/// Recover V_0..V_L from a pair satisfying P^* P + (1-x^2) Q^* Q = I on
/// [-1,1], with deg P = L (parity L mod 2) and deg Q = L-1. P and Q may be
/// rectangular (M x c, M >= c) column blocks.
QsvtParams synthesize_pq(const RealPolyMatrix& p, const RealPolyMatrix& q, double tol = 1e-8);

/// Complete a parity-constrained target P (I - P^*P >= 0 on [-1,1]) via the
/// cos(theta/2) substitution, spectral factorization, and the even/odd
/// split; returns the completion pair (P1, Q1) and the circuit parameters.
std::tuple<RealPolyMatrix, RealPolyMatrix, QsvtParams> complete_qsvt(const RealPolyMatrix& p,
                                                                     double tol = 1e-8);

/// For Hermitian A and an indefinite-parity target already split and
/// synthesized as even/odd circuits, simulate the 1/2-1/2 linear combination
/// and return the combined designated block, equal to
/// (P_even(A) + P_odd(A)) / 2.
MatrixXcd lcu_parity_combine(const MatrixXcd& a, const QsvtParams& even_params,
                             const QsvtParams& odd_params);

/// Split 2*P into even and odd parts so that P(A) = (Pe(A) + Po(A)) / 2.
std::pair<RealPolyMatrix, RealPolyMatrix> parity_split_doubled(const RealPolyMatrix& p);

}  // namespace unqsp

#endif
