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

#ifndef UNQSP_BIVARIATE_HPP
#define UNQSP_BIVARIATE_HPP

#include <vector>

#include "unqsp/polymat.hpp"

namespace unqsp {

/// Bivariate (Laurent) polynomial sum_{j,k} f_{jk} w^j v^k with finite
/// support; coeff(j, k) indexes powers j of w and k of v.
struct BivariatePoly {
    int lo_w = 0, lo_v = 0;
    // coeffs[jw][kv] multiplies w^{lo_w + jw} v^{lo_v + kv}
    std::vector<std::vector<cd>> coeffs;

    int hi_w() const { return lo_w + static_cast<int>(coeffs.size()) - 1; }
    int hi_v() const {
        return lo_v + (coeffs.empty() ? 0 : static_cast<int>(coeffs[0].size())) - 1;
    }
    cd coeff(int jw, int kv) const;
    void set(int jw, int kv, cd value);
    double one_norm() const;
    cd at(cd w, cd v) const;

    static BivariatePoly zero(int lo_w, int hi_w, int lo_v, int hi_v);
};

/// One term of a product decomposition: scalar polynomials p(w), q(v) with a
/// positive weight.
struct ProductTerm {
    PolyMatrix p;  // 1x1
    PolyMatrix q;  // 1x1
    double weight = 0.0;  // alpha_k / alpha
};

struct ProductDecomposition {
    std::vector<ProductTerm> terms;
    double scale = 0.0;  // alpha = sum alpha_k
};

/// Coefficients b^{(k)}_l of ((2/pi) arcsin x)^k = sum_l b^{(k)}_l x^l,
/// truncated at l <= Lmax. All entries are nonnegative and the full series
/// sums to 1.
struct ArcsinSeries {
    int k = 0;
    std::vector<double> coeffs;  // b^{(k)}_0 .. b^{(k)}_Lmax

    double partial_sum() const;
};

ArcsinSeries arcsin_coeffs(int k, int lmax);

/// Fourier coefficients of sin^l(z) truncated to |s| <= d: returns the
/// coefficients of e^{isz} for s = -d..d (index s + d), s == l (mod 2).
std::vector<cd> sin_power_fourier(int l, int d);

struct BivariateApproximation {
    BivariatePoly g;  // Laurent in w, v
    int d = 0;        // Laurent degree
    int truncation = 0;  // series order L
};

/// Appendix-style approximation of an analytic f(x, y) (monomial, nonnegative
/// powers) by a Laurent polynomial g(w, v) with w = e^{i pi x / 2},
/// v = e^{i pi y / 2}, accurate to eps on [-1+delta, 1-delta]^2.
/// half_angle = false instead targets w = e^{i pi x} via the substitution
/// x -> x/2 (valid for spectra within [-(1-delta)/2, (1-delta)/2]).
BivariateApproximation approximate_bivariate(const BivariatePoly& f, double delta, double eps,
                                             bool half_angle = true);

/// Per-v-power grouping: alpha_k = sup_w |sum_j g_{jk} w^j|, terms
/// ((1/alpha_k) sum_j g_{jk} w^j, v^k, alpha_k / alpha).
ProductDecomposition decompose_products(const BivariatePoly& g);

/// Evaluate the decomposition directly: sum_k weight_k p_k(w) q_k(v).
cd decomposition_value(const ProductDecomposition& dec, cd w, cd v);

/// Compose the two block encodings of the row and column polynomial blocks
/// on disjoint junk spaces (product of block encodings); returns the
/// designated block, equal to g(w, v) / alpha. Inputs must be unitary and
/// commuting (scalars are the 1x1 case).
MatrixXcd compose_block_encodings(const ProductDecomposition& dec, const MatrixXcd& w,
                                  const MatrixXcd& v);

/// Linear combination of unitaries: top block of V^* (sum_j |j><j| x U_j) V
/// with V |0> = sum_j sqrt(alpha_j) |j>.
MatrixXcd lcu_combine_generic(const std::vector<MatrixXcd>& unitaries,
                              const std::vector<double>& weights);

/// Sup of |p(e^{i theta})| over the circle: dense grid plus parabolic
/// refinement at the argmax.
double sup_on_circle(const PolyMatrix& scalar_poly);

}  // namespace unqsp

#endif
