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

#ifndef UNQSP_QSPU_HPP
#define UNQSP_QSPU_HPP

#include <tuple>
#include <vector>

#include "unqsp/polymat.hpp"

namespace unqsp {

/// Circuit parameters for U(N) quantum signal processing: a seed unitary V_0
/// followed by projector-controlled input gates C_{Pi_k}(U).
struct QspuParams {
    MatrixXcd seed;                     // V_0, n_dim x n_dim
    std::vector<MatrixXcd> projectors;  // Pi_1 .. Pi_L, Hermitian idempotent

    int n_dim() const { return static_cast<int>(seed.rows()); }
    int length() const { return static_cast<int>(projectors.size()); }

    /// Check V_0^* V_0 = I and Pi_k^2 = Pi_k = Pi_k^* to tol.
    void validate(double tol = 1e-10) const;
};

/// Location of a completed target block inside the synthesized unitary
/// polynomial: rows 0..p_rows-1 x cols 0..p_cols-1 hold P, the next q_rows
/// rows hold the factor Q.
struct EmbeddingInfo {
    int p_rows = 0;
    int p_cols = 0;
    int q_rows = 0;
};

/// The polynomial matrix implemented by the circuit, by the degree-1-per-gate
/// induction: each Pi_k maps sum P_l z^l to sum [Pi_k P_l z^{l+1} +
/// (I - Pi_k) P_l z^l]. Unitary on |z| = 1.
PolyMatrix forward_symbolic(const QspuParams& params);

/// Product C_{Pi_L}(U) ... C_{Pi_1}(U) (V_0 (x) I) on the ancilla (x) system
/// space, where C_Pi(U) = Pi (x) U + (I - Pi) (x) I.
MatrixXcd forward_eval(const QspuParams& params, const MatrixXcd& u);

/// Recover circuit parameters for a unitary-on-the-circle polynomial matrix
/// by the leading-coefficient column-space recursion.
QspuParams synthesize_unitary(const PolyMatrix& p, double tol = 1e-8);

/// Complete a sub-unitary r x c target (singular values <= 1 on the circle)
/// with a spectral factor Q and synthesize the stacked column block; the
/// remaining completion block is never materialized.
std::pair<QspuParams, EmbeddingInfo> complete_and_synthesize(const PolyMatrix& p,
                                                             double tol = 1e-8);

/// Laurent targets z^{-d}..z^{d}: shift by z^d, complete, and remember d so
/// the evaluator can interpret each gate as the double-headed
/// C_Pi(U^{1/2}, U^{-1/2}).
std::tuple<QspuParams, EmbeddingInfo, int> synthesize_laurent(const PolyMatrix& p,
                                                              double tol = 1e-8);

/// Evaluate a synthesize_laurent circuit on a concrete unitary U using the
/// principal square root of U; reproduces P(U) in the designated block.
/// With d = 0 the gates degenerate to plain C_Pi(U).
MatrixXcd forward_eval_laurent(const QspuParams& params, int d, const MatrixXcd& u);

namespace detail {
/// Core recursion shared by synthesize_unitary and completion: S must have
/// orthonormal columns on the circle. Returns params whose forward_symbolic
/// agrees with S on the first S.cols() columns.
QspuParams column_synthesize(const PolyMatrix& s, double tol);
}  // namespace detail

}  // namespace unqsp

#endif
