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

#ifndef UNQSP_CHEBYSHEV_HPP
#define UNQSP_CHEBYSHEV_HPP

#include <utility>
#include <vector>

namespace unqsp {

/// Real polynomial on [0,1] stored in the shifted Chebyshev basis
/// T_k(2x - 1). coeffs()[k] multiplies T_k.
class ChebPoly {
   public:
    ChebPoly() : c_(1, 0.0) {}
    explicit ChebPoly(std::vector<double> coeffs);

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    const std::vector<double>& coeffs() const { return c_; }
    std::vector<double>& coeffs() { return c_; }
    double coeff(int k) const { return k < static_cast<int>(c_.size()) ? c_[k] : 0.0; }

    /// Drop trailing coefficients below 1e-14 relative to the largest one.
    void trim();

   private:
    std::vector<double> c_;
};

/// Clenshaw evaluation at x in [0,1].
double cheb_eval(const ChebPoly& p, double x);

/// Convert monomial coefficients c0 + c1 x + ... into the shifted basis.
ChebPoly cheb_from_monomial(const std::vector<double>& mono);

/// Inverse conversion, exact to round-off for moderate degrees.
std::vector<double> cheb_to_monomial(const ChebPoly& p);

/// Product in the shifted basis via T_j T_k = (T_{j+k} + T_{|j-k|}) / 2.
ChebPoly cheb_mul(const ChebPoly& a, const ChebPoly& b);

ChebPoly cheb_add(const ChebPoly& a, const ChebPoly& b);
ChebPoly cheb_scale(const ChebPoly& a, double s);

/// Split into the parts even and odd under x -> 1-x (i.e. even-index and
/// odd-index shifted-Chebyshev coefficients).
std::pair<ChebPoly, ChebPoly> cheb_shift_parity(const ChebPoly& p);

/// integral_0^1 T_m(2x-1) dx: zero for odd m, 1/(1-m^2) for even m.
double cheb_basis_integral(int m);

/// integral_a^b T_m(2x-1) dx for [a,b] inside [0,1], by exact antiderivative.
double cheb_basis_partial_integral(int m, double a, double b);

/// integral_0^1 p(x) dx.
double cheb_integral(const ChebPoly& p);

/// integral_0^1 x p(x) dx.
double cheb_moment1(const ChebPoly& p);

/// integral_0^1 x^2 p(x) dx.
double cheb_moment2(const ChebPoly& p);

/// integral_a^b p(x) dx for [a,b] inside [0,1].
double cheb_partial_integral(const ChebPoly& p, double a, double b);

/// Chebyshev nodes of [0,1]: x_i = (1 + cos(pi (i+1/2)/n)) / 2, i = 0..n-1.
std::vector<double> cheb_nodes01(int n);

/// Interpolate values sampled at cheb_nodes01(n) by a degree n-1 polynomial.
ChebPoly cheb_fit01(const std::vector<double>& values);

/// T_m as monomial coefficients (standard basis on [-1,1]).
std::vector<double> chebT_monomial(int m);

/// U_m (second kind) as monomial coefficients.
std::vector<double> chebU_monomial(int m);

}  // namespace unqsp

#endif
