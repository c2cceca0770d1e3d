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

#include "unqsp/chebyshev.hpp"

#include <algorithm>
#include <cmath>

#include "unqsp/errors.hpp"

namespace unqsp {

ChebPoly::ChebPoly(std::vector<double> coeffs) : c_(std::move(coeffs)) {
    if (c_.empty()) c_.assign(1, 0.0);
    for (double v : c_)
        if (!std::isfinite(v)) throw PreconditionError("ChebPoly: non-finite coefficient");
}

void ChebPoly::trim() {
    double scale = 0.0;
    for (double v : c_) scale = std::max(scale, std::abs(v));
    if (scale == 0.0) {
        c_.assign(1, 0.0);
        return;
    }
    size_t n = c_.size();
    while (n > 1 && std::abs(c_[n - 1]) < 1e-14 * scale) --n;
    c_.resize(n);
}

double cheb_eval(const ChebPoly& p, double x) {
    // Clenshaw backward recurrence in u = 2x - 1.
    double u = 2.0 * x - 1.0;
    const auto& c = p.coeffs();
    double b1 = 0.0, b2 = 0.0;
    for (int k = static_cast<int>(c.size()) - 1; k >= 1; --k) {
        double b0 = c[k] + 2.0 * u * b1 - b2;
        b2 = b1;
        b1 = b0;
    }
    return c[0] + u * b1 - b2;
}

ChebPoly cheb_from_monomial(const std::vector<double>& mono) {
    // Horner in the Chebyshev algebra: p = c_n; p = p*x + c_k.
    // x in the shifted basis is (T_0 + T_1)/2.
    if (mono.empty()) return ChebPoly();
    ChebPoly x(std::vector<double>{0.5, 0.5});
    ChebPoly acc(std::vector<double>{mono.back()});
    for (int k = static_cast<int>(mono.size()) - 2; k >= 0; --k) {
        acc = cheb_mul(acc, x);
        acc.coeffs()[0] += mono[k];
    }
    acc.trim();
    return acc;
}

std::vector<double> cheb_to_monomial(const ChebPoly& p) {
    // Build shifted-T_k monomial expansions by recurrence
    // T_{k+1}(2x-1) = 2(2x-1) T_k - T_{k-1}.
    int d = p.degree();
    std::vector<double> out(d + 1, 0.0);
    std::vector<double> tkm1{1.0}, tk{-1.0, 2.0};
    for (int k = 0; k <= d; ++k) {
        const std::vector<double>& t = (k == 0) ? tkm1 : tk;
        for (size_t i = 0; i < t.size(); ++i) out[i] += p.coeff(k) * t[i];
        if (k >= 1) {
            std::vector<double> nxt(tk.size() + 1, 0.0);
            for (size_t i = 0; i < tk.size(); ++i) {
                nxt[i + 1] += 4.0 * tk[i];
                nxt[i] -= 2.0 * tk[i];
            }
            for (size_t i = 0; i < tkm1.size(); ++i) nxt[i] -= tkm1[i];
            tkm1 = tk;
            tk = nxt;
        }
    }
    return out;
}

ChebPoly cheb_mul(const ChebPoly& a, const ChebPoly& b) {
    int da = a.degree(), db = b.degree();
    std::vector<double> out(da + db + 1, 0.0);
    for (int j = 0; j <= da; ++j) {
        if (a.coeff(j) == 0.0) continue;
        for (int k = 0; k <= db; ++k) {
            double v = 0.5 * a.coeff(j) * b.coeff(k);
            out[j + k] += v;
            out[std::abs(j - k)] += v;
        }
    }
    ChebPoly r(out);
    r.trim();
    return r;
}

ChebPoly cheb_add(const ChebPoly& a, const ChebPoly& b) {
    std::vector<double> out(std::max(a.degree(), b.degree()) + 1, 0.0);
    for (int k = 0; k < static_cast<int>(out.size()); ++k) out[k] = a.coeff(k) + b.coeff(k);
    ChebPoly r(out);
    r.trim();
    return r;
}

ChebPoly cheb_scale(const ChebPoly& a, double s) {
    std::vector<double> out = a.coeffs();
    for (double& v : out) v *= s;
    return ChebPoly(out);
}

std::pair<ChebPoly, ChebPoly> cheb_shift_parity(const ChebPoly& p) {
    std::vector<double> even(p.degree() + 1, 0.0), odd(p.degree() + 1, 0.0);
    for (int k = 0; k <= p.degree(); ++k) (k % 2 ? odd : even)[k] = p.coeff(k);
    ChebPoly e(even), o(odd);
    e.trim();
    o.trim();
    return {e, o};
}

double cheb_basis_integral(int m) {
    if (m % 2 == 1) return 0.0;
    return 1.0 / (1.0 - static_cast<double>(m) * m);
}

namespace {
double chebT(int m, double u) {
    u = std::clamp(u, -1.0, 1.0);
    return std::cos(m * std::acos(u));
}
// antiderivative of T_m(u), defined up to a constant
double chebT_antideriv(int m, double u) {
    if (m == 0) return u;
    if (m == 1) return 0.5 * u * u;
    return chebT(m + 1, u) / (2.0 * (m + 1)) - chebT(m - 1, u) / (2.0 * (m - 1));
}
}  // namespace

double cheb_basis_partial_integral(int m, double a, double b) {
    if (b <= a) return 0.0;
    double ua = 2.0 * a - 1.0, ub = 2.0 * b - 1.0;
    return 0.5 * (chebT_antideriv(m, ub) - chebT_antideriv(m, ua));
}

double cheb_integral(const ChebPoly& p) {
    double acc = 0.0;
    for (int k = 0; k <= p.degree(); ++k) acc += p.coeff(k) * cheb_basis_integral(k);
    return acc;
}

double cheb_moment1(const ChebPoly& p) {
    // x = (u+1)/2 -> int x T_k = (I_{k+1} + I_{|k-1|})/4 + I_k/2
    double acc = 0.0;
    for (int k = 0; k <= p.degree(); ++k) {
        double j = 0.25 * (cheb_basis_integral(k + 1) + cheb_basis_integral(std::abs(k - 1))) +
                   0.5 * cheb_basis_integral(k);
        acc += p.coeff(k) * j;
    }
    return acc;
}

double cheb_moment2(const ChebPoly& p) {
    // x^2 = 3/8 T_0 + 1/2 T_1 + 1/8 T_2 in the shifted basis
    double acc = 0.0;
    for (int k = 0; k <= p.degree(); ++k) {
        double term = 0.375 * cheb_basis_integral(k) +
                      0.25 * (cheb_basis_integral(k + 1) + cheb_basis_integral(std::abs(k - 1))) +
                      0.0625 * (cheb_basis_integral(k + 2) + cheb_basis_integral(std::abs(k - 2)));
        acc += p.coeff(k) * term;
    }
    return acc;
}

double cheb_partial_integral(const ChebPoly& p, double a, double b) {
    if (b <= a) return 0.0;
    double acc = 0.0;
    for (int k = 0; k <= p.degree(); ++k)
        acc += p.coeff(k) * cheb_basis_partial_integral(k, a, b);
    return acc;
}

std::vector<double> cheb_nodes01(int n) {
    std::vector<double> x(n);
    for (int i = 0; i < n; ++i) x[i] = 0.5 * (1.0 + std::cos(M_PI * (i + 0.5) / n));
    return x;
}

ChebPoly cheb_fit01(const std::vector<double>& values) {
    int n = static_cast<int>(values.size());
    if (n == 0) throw PreconditionError("cheb_fit01: empty sample");
    std::vector<double> c(n, 0.0);
    for (int j = 0; j < n; ++j) {
        double acc = 0.0;
        for (int i = 0; i < n; ++i) acc += values[i] * std::cos(M_PI * j * (i + 0.5) / n);
        c[j] = 2.0 * acc / n;
    }
    c[0] *= 0.5;
    ChebPoly p(c);
    p.trim();
    return p;
}

std::vector<double> chebT_monomial(int m) {
    std::vector<double> tkm1{1.0};
    if (m == 0) return tkm1;
    std::vector<double> tk{0.0, 1.0};
    for (int k = 1; k < m; ++k) {
        std::vector<double> nxt(tk.size() + 1, 0.0);
        for (size_t i = 0; i < tk.size(); ++i) nxt[i + 1] += 2.0 * tk[i];
        for (size_t i = 0; i < tkm1.size(); ++i) nxt[i] -= tkm1[i];
        tkm1 = tk;
        tk = nxt;
    }
    return tk;
}

std::vector<double> chebU_monomial(int m) {
    std::vector<double> ukm1{1.0};
    if (m == 0) return ukm1;
    std::vector<double> uk{0.0, 2.0};
    for (int k = 1; k < m; ++k) {
        std::vector<double> nxt(uk.size() + 1, 0.0);
        for (size_t i = 0; i < uk.size(); ++i) nxt[i + 1] += 2.0 * uk[i];
        for (size_t i = 0; i < ukm1.size(); ++i) nxt[i] -= ukm1[i];
        ukm1 = uk;
        uk = nxt;
    }
    return uk;
}

}  // namespace unqsp
