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

#ifndef UNQSP_POLYMAT_HPP
#define UNQSP_POLYMAT_HPP

#include <vector>

#include "unqsp/numerics.hpp"

namespace unqsp {

/// Matrix-valued (Laurent) polynomial in one complex variable:
///   P(z) = sum_{l=lo}^{hi} C_l z^l,
/// with every C_l of identical shape. Trailing all-zero coefficients are
/// trimmed relative to the largest coefficient entry.
class PolyMatrix {
   public:
    PolyMatrix() = default;
    /// coeffs[k] is the coefficient of z^{lo+k}.
    PolyMatrix(int lo, std::vector<MatrixXcd> coeffs);

    static PolyMatrix zero(int rows, int cols);
    static PolyMatrix constant(const MatrixXcd& m);
    static PolyMatrix monomial(const MatrixXcd& m, int power);
    static PolyMatrix identity(int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    int lo() const { return lo_; }
    int hi() const { return lo_ + static_cast<int>(coeffs_.size()) - 1; }
    int span() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool empty() const { return coeffs_.empty(); }

    /// Coefficient of z^power (zero matrix outside the stored range).
    MatrixXcd coeff(int power) const;
    const std::vector<MatrixXcd>& coeffs() const { return coeffs_; }

    /// Largest absolute entry over all coefficients.
    double max_abs() const;
    bool is_zero() const;

    /// Drop leading/trailing coefficients whose max-abs entry is below
    /// 1e-13 times the global max-abs entry.
    void trim();

   private:
    int rows_ = 0, cols_ = 0, lo_ = 0;
    std::vector<MatrixXcd> coeffs_;
};

/// Hermitian Laurent polynomial: lo = -hi and F_{-s} = F_s^*, so that F(z)
/// is Hermitian for every |z| = 1.
class HermLaurent {
   public:
    HermLaurent() = default;
    /// Validates the symmetry to tol (relative).
    explicit HermLaurent(PolyMatrix f, double tol = 1e-10);

    const PolyMatrix& poly() const { return f_; }
    int dim() const { return f_.rows(); }
    /// Half-span L (powers run -L..L).
    int half_span() const { return f_.hi(); }
    MatrixXcd coeff(int power) const { return f_.coeff(power); }

   private:
    PolyMatrix f_;
};

/// sum_l C_l z^l; z = 0 with negative lo is a domain error.
MatrixXcd eval(const PolyMatrix& p, cd z);

/// P^*(z) = sum_l C_l^* z^{-l}; on |z|=1 this is the conjugate transpose.
PolyMatrix adjoint_on_circle(const PolyMatrix& p);

PolyMatrix mul(const PolyMatrix& a, const PolyMatrix& b);
PolyMatrix add(const PolyMatrix& a, const PolyMatrix& b);
PolyMatrix sub(const PolyMatrix& a, const PolyMatrix& b);
PolyMatrix scale(const PolyMatrix& a, cd s);

/// Multiply by z^d (power shift).
PolyMatrix shift_power(const PolyMatrix& a, int d);

/// I - P^*(z) P(z) as a Hermitian Laurent polynomial with span [-L, L].
HermLaurent gram_defect(const PolyMatrix& p);

/// Stack [top; bottom] over a common power range.
PolyMatrix vstack(const PolyMatrix& top, const PolyMatrix& bottom);

/// Number of verification angles used for a degree span: 2*span + 5.
int circle_grid_size(int span);

/// Equally spaced angles on [0, 2pi).
std::vector<double> circle_grid(int m);

/// max over the verification grid of ||P(z)^* P(z) - I||.
double unitary_defect_on_circle(const PolyMatrix& p);

/// Largest coefficient-wise difference between two polynomials.
double coeff_distance(const PolyMatrix& a, const PolyMatrix& b);

}  // namespace unqsp

#endif
