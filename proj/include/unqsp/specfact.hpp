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

#ifndef UNQSP_SPECFACT_HPP
#define UNQSP_SPECFACT_HPP

#include <vector>

#include "unqsp/polymat.hpp"

namespace unqsp {

/// Analytic factor Q of F = Q^* Q together with the residual actually
/// attained on the verification grid (max operator norm of F - Q^* Q).
struct FactorResult {
    PolyMatrix Q;
    double residual = 0.0;
};

/// Factor a Laurent matrix polynomial F(z), positive semidefinite on |z|=1,
/// as F = Q(z)^* Q(z) with Q analytic of degree <= half_span(F).
///
/// Scalars go through exact Fejer-Riesz root splitting. Matrices use a
/// Bauer-type banded block-Toeplitz Cholesky (last block row) refined by
/// Wilson-Newton iterations; spectra that are singular on the circle are
/// handled by a descending eta*I regularization ladder.
FactorResult spectral_factor(const HermLaurent& f, double tol = 1e-8);

/// Fejer-Riesz factorization of a nonnegative real trig polynomial
///   f(theta) = c0 + 2 sum_k c_k cos(k theta)  >=  0,
/// returning A_0..A_D with |sum_k A_k e^{ik theta}|^2 = f(theta) and all
/// roots of the analytic factor in the closed unit disk.
std::vector<cd> fejer_riesz(const std::vector<double>& cos_coeffs, double tol = 1e-8);

/// General scalar path: F(z) = sum_s f_s z^s with f_{-s} = conj(f_s),
/// nonnegative on the circle; returns analytic factor coefficients.
std::vector<cd> fejer_riesz_laurent(const std::vector<cd>& full_coeffs, int half_span,
                                    double tol = 1e-8);

/// Maximum singular value of P over the unit-circle verification grid.
double sv_bound_check(const PolyMatrix& p, double bound = 1.0);

}  // namespace unqsp

#endif
