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

#include "unqsp/specfact.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "unqsp/errors.hpp"

namespace unqsp {

namespace {

double factor_residual(const HermLaurent& f, const PolyMatrix& q) {
    int span = std::max(2 * f.half_span(), 2 * q.span());
    double worst = 0.0;
    for (double th : circle_grid(circle_grid_size(span))) {
        cd z = std::polar(1.0, th);
        MatrixXcd fv = eval(f.poly(), z);
        MatrixXcd qv = eval(q, z);
        worst = std::max(worst, op_norm(fv - qv.adjoint() * qv));
    }
    return worst;
}

// --- scalar path: exact root splitting -----------------------------------

std::vector<cd> poly_mul_linear(const std::vector<cd>& p, cd root) {
    // p(z) * (z - root)
    std::vector<cd> out(p.size() + 1, cd(0, 0));
    for (size_t i = 0; i < p.size(); ++i) {
        out[i + 1] += p[i];
        out[i] -= root * p[i];
    }
    return out;
}

std::vector<cd> companion_roots(const std::vector<cd>& coeffs) {
    // coeffs: c_0..c_D with c_D != 0
    int d = static_cast<int>(coeffs.size()) - 1;
    MatrixXcd comp = MatrixXcd::Zero(d, d);
    for (int i = 1; i < d; ++i) comp(i, i - 1) = 1.0;
    for (int i = 0; i < d; ++i) comp(i, d - 1) = -coeffs[i] / coeffs[d];
    Eigen::ComplexEigenSolver<MatrixXcd> es(comp, false);
    std::vector<cd> roots(d);
    for (int i = 0; i < d; ++i) roots[i] = es.eigenvalues()(i);
    return roots;
}

}  // namespace

std::vector<cd> fejer_riesz_laurent(const std::vector<cd>& full, int half_span, double tol) {
    // full[k] is the coefficient of z^{k - half_span}, k = 0..2*half_span
    int d = half_span;
    // trim to the true trig degree
    double scale = 0.0;
    for (const cd& c : full) scale = std::max(scale, std::abs(c));
    if (scale == 0.0) return {cd(0, 0)};
    while (d > 0 && std::abs(full[half_span + d]) < 1e-13 * scale) --d;

    auto f_at = [&](double th) {
        cd acc = full[half_span];
        for (int k = 1; k <= d; ++k) {
            cd w = std::polar(1.0, k * th);
            acc += full[half_span + k] * w + full[half_span - k] * std::conj(w);
        }
        return acc.real();
    };

    // precondition: nonnegative on a (4D+5)-point grid
    int m = 4 * d + 5;
    double fmax = 0.0, fmin = 0.0;
    double th_max = 0.0;
    for (double th : circle_grid(m)) {
        double v = f_at(th);
        fmin = std::min(fmin, v);
        if (v > fmax) {
            fmax = v;
            th_max = th;
        }
    }
    if (fmin < -tol * std::max(1.0, fmax)) {
        std::ostringstream os;
        os << "fejer_riesz: trig polynomial negative on grid (min " << fmin << ")";
        throw PreconditionError(os.str());
    }
    if (d == 0) {
        return {cd(std::sqrt(std::max(0.0, full[half_span].real())), 0)};
    }

    // roots of z^d f(z); select the d roots of smallest modulus, which takes
    // every interior root plus one from each circle pair
    std::vector<cd> p(2 * d + 1);
    for (int k = 0; k < 2 * d + 1; ++k) p[k] = full[half_span - d + k];
    std::vector<cd> roots = companion_roots(p);
    std::sort(roots.begin(), roots.end(), [](const cd& a, const cd& b) {
        double ma = std::abs(a), mb = std::abs(b);
        if (ma != mb) return ma < mb;
        return std::arg(a) < std::arg(b);
    });

    std::vector<cd> a{cd(1, 0)};
    for (int i = 0; i < d; ++i) a = poly_mul_linear(a, roots[i]);

    // normalize amplitude at the grid argmax of f
    cd av(0, 0);
    for (int k = 0; k <= d; ++k) av += a[k] * std::polar(1.0, k * th_max);
    double mod2 = std::norm(av);
    if (mod2 <= 0.0) throw ConvergenceError("fejer_riesz: degenerate factor normalization", fmax);
    double gamma = std::sqrt(std::max(0.0, fmax) / mod2);
    for (cd& c : a) c *= gamma;

    // verification on the same grid
    double worst = 0.0;
    for (double th : circle_grid(m)) {
        cd acc(0, 0);
        for (int k = 0; k <= d; ++k) acc += a[k] * std::polar(1.0, k * th);
        worst = std::max(worst, std::abs(std::norm(acc) - f_at(th)));
    }
    if (worst > std::max(tol, 1e-10 * std::max(1.0, fmax)) * 10.0)
        throw ConvergenceError("fejer_riesz: reconstruction residual too large", worst);
    return a;
}

std::vector<cd> fejer_riesz(const std::vector<double>& cos_coeffs, double tol) {
    if (cos_coeffs.empty()) throw PreconditionError("fejer_riesz: empty coefficients");
    int d = static_cast<int>(cos_coeffs.size()) - 1;
    std::vector<cd> full(2 * d + 1, cd(0, 0));
    full[d] = cos_coeffs[0];
    for (int k = 1; k <= d; ++k) {
        full[d + k] = cos_coeffs[k];
        full[d - k] = cos_coeffs[k];
    }
    return fejer_riesz_laurent(full, d, tol);
}

namespace {

// --- matrix path: Bauer + Wilson ------------------------------------------

// Banded block Cholesky of the m x m block Toeplitz matrix T_{ij} = F_{i-j},
// returning the last block row as C_k = L_{m-1, m-1-k}. In the limit the
// symbol satisfies F(z) = C(z) C(z)^* with C minimum phase.
std::vector<MatrixXcd> bauer_last_row(const HermLaurent& f, double eta, int m) {
    int l = f.half_span();
    int n = f.dim();
    MatrixXcd eye = MatrixXcd::Identity(n, n);
    // G[i][k] is the block at (i, i-k), k = 0..min(i, l)
    std::vector<std::vector<MatrixXcd>> g(m, std::vector<MatrixXcd>(l + 1, MatrixXcd::Zero(n, n)));
    std::vector<Eigen::LLT<MatrixXcd>> diag_llt;
    diag_llt.reserve(m);
    for (int i = 0; i < m; ++i) {
        for (int k = std::min(i, l); k >= 1; --k) {
            int j = i - k;
            MatrixXcd s = f.coeff(k);
            for (int t = 1; t <= std::min(j, l - k); ++t) s -= g[i][k + t] * g[j][t].adjoint();
            // solve x * g[j][0]^* = s  =>  x = s * (g[j][0]^*)^{-1}
            g[i][k] = diag_llt[j].matrixU().solve<Eigen::OnTheRight>(s);
        }
        MatrixXcd s = f.coeff(0) + eta * eye;
        for (int t = 1; t <= std::min(i, l); ++t) s -= g[i][t] * g[i][t].adjoint();
        Eigen::LLT<MatrixXcd> llt(s);
        if (llt.info() != Eigen::Success)
            throw ConvergenceError("spectral_factor: Bauer Cholesky breakdown", 1.0);
        g[i][0] = llt.matrixL();
        diag_llt.push_back(llt);
    }
    std::vector<MatrixXcd> c(l + 1);
    for (int k = 0; k <= l; ++k) c[k] = g[m - 1][k];
    return c;
}

// One Wilson-Newton sweep for the minimum-phase convention F ~= C C^*:
// C <- C (I + Y), Y = P_+[C^{-1} F C^{-*} - I].
std::vector<MatrixXcd> wilson_step(const HermLaurent& f, double eta,
                                   const std::vector<MatrixXcd>& c) {
    int l = std::max<int>(f.half_span(), static_cast<int>(c.size()) - 1);
    int n = f.dim();
    int grid = std::max(64, 8 * (l + 1));
    MatrixXcd eye = MatrixXcd::Identity(n, n);
    std::vector<MatrixXcd> w(grid);
    for (int i = 0; i < grid; ++i) {
        double th = 2.0 * M_PI * i / grid;
        cd z = std::polar(1.0, th);
        MatrixXcd cv = c.back();
        for (int k = static_cast<int>(c.size()) - 2; k >= 0; --k) cv = cv * z + c[k];
        MatrixXcd fv = eval(f.poly(), z) + eta * eye;
        Eigen::PartialPivLU<MatrixXcd> lu(cv);
        MatrixXcd ci = lu.inverse();
        w[i] = ci * fv * ci.adjoint() - eye;
    }
    // causal part: Y = W_0/2 + sum_{s=1..l} W_s z^s
    std::vector<MatrixXcd> y(l + 1, MatrixXcd::Zero(n, n));
    for (int s = 0; s <= l; ++s) {
        MatrixXcd acc = MatrixXcd::Zero(n, n);
        for (int i = 0; i < grid; ++i)
            acc += w[i] * std::polar(1.0, -s * 2.0 * M_PI * i / grid);
        y[s] = acc / static_cast<double>(grid);
    }
    y[0] *= 0.5;
    y[0] += eye;
    // C (I + Y), truncated to degree l
    std::vector<MatrixXcd> out(l + 1, MatrixXcd::Zero(n, n));
    for (size_t a = 0; a < c.size(); ++a)
        for (size_t b = 0; b < y.size(); ++b)
            if (a + b <= static_cast<size_t>(l)) out[a + b] += c[a] * y[b];
    return out;
}

PolyMatrix q_from_c(const std::vector<MatrixXcd>& c) {
    int l = static_cast<int>(c.size()) - 1;
    std::vector<MatrixXcd> q(l + 1);
    for (int j = 0; j <= l; ++j) q[j] = c[l - j].adjoint();
    return PolyMatrix(0, std::move(q));
}

}  // namespace

FactorResult spectral_factor(const HermLaurent& f, double tol) {
    int l = f.half_span();
    int n = f.dim();

    // PSD precondition on the verification grid
    double worst_eig = 0.0, worst_th = 0.0, min_eig = 1e300;
    double scale = std::max(f.poly().max_abs(), 1e-300);
    for (double th : circle_grid(circle_grid_size(2 * l))) {
        MatrixXcd fv = eval(f.poly(), std::polar(1.0, th));
        Eigen::SelfAdjointEigenSolver<MatrixXcd> es((fv + fv.adjoint()) / 2.0);
        double lo = es.eigenvalues().minCoeff();
        min_eig = std::min(min_eig, lo);
        if (lo < worst_eig) {
            worst_eig = lo;
            worst_th = th;
        }
    }
    if (min_eig < -tol * std::max(1.0, scale)) {
        std::ostringstream os;
        os << "spectral_factor: F indefinite on grid, eigenvalue " << worst_eig << " at theta "
           << worst_th;
        throw PreconditionError(os.str());
    }

    if (n == 1) {
        std::vector<cd> full(2 * l + 1);
        for (int s = -l; s <= l; ++s) full[s + l] = f.coeff(s)(0, 0);
        std::vector<cd> a = fejer_riesz_laurent(full, l, tol);
        std::vector<MatrixXcd> q;
        for (const cd& v : a) q.push_back((MatrixXcd(1, 1) << v).finished());
        FactorResult res{PolyMatrix(0, std::move(q)), 0.0};
        res.residual = factor_residual(f, res.Q);
        if (res.residual > tol)
            throw ConvergenceError("spectral_factor: scalar factor residual above tolerance",
                                   res.residual);
        return res;
    }

    if (l == 0) {
        // constant Hermitian PSD matrix: eigen square root
        MatrixXcd f0 = (f.coeff(0) + f.coeff(0).adjoint()) / 2.0;
        Eigen::SelfAdjointEigenSolver<MatrixXcd> es(f0);
        VectorXd d = es.eigenvalues().cwiseMax(0.0).cwiseSqrt();
        MatrixXcd q = d.asDiagonal() * es.eigenvectors().adjoint();
        FactorResult res{PolyMatrix::constant(q), 0.0};
        res.residual = factor_residual(f, res.Q);
        return res;
    }

    double eta_target = (min_eig > 1e-6 * scale) ? 0.0 : std::max(1e-12, tol / 100.0) * scale;
    int m = 32 * (l + 1);
    FactorResult best;
    best.residual = 1e300;

    for (int attempt = 0; attempt < 4; ++attempt, m *= 2) {
        double eta_start = (eta_target == 0.0) ? 0.0 : std::max(eta_target, 1e-4 * scale);
        std::vector<MatrixXcd> c;
        try {
            c = bauer_last_row(f, eta_start, m);
        } catch (const ConvergenceError&) {
            continue;
        }
        double eta = eta_start;
        std::vector<MatrixXcd> best_c = c;
        double best_local = factor_residual(f, q_from_c(c));
        while (true) {
            for (int it = 0; it < 30; ++it) {
                c = wilson_step(f, eta, c);
                double r = factor_residual(f, q_from_c(c));
                if (r < best_local) {
                    best_local = r;
                    best_c = c;
                }
                if (r <= std::max(eta, 1e-13 * scale) * 2.0) break;
            }
            if (eta <= eta_target) break;
            double next = eta / 100.0;
            eta = (next <= std::max(eta_target, 1e-14 * scale)) ? eta_target : next;
        }
        if (best_local < best.residual) {
            best.residual = best_local;
            best.Q = q_from_c(best_c);
        }
        if (best.residual <= tol) return best;
    }
    if (best.residual <= tol) return best;
    throw ConvergenceError("spectral_factor: residual above tolerance after retries",
                           best.residual);
}

double sv_bound_check(const PolyMatrix& p, double /*bound*/) {
    double worst = 0.0;
    for (double th : circle_grid(circle_grid_size(p.span()))) {
        worst = std::max(worst, max_singular_value(eval(p, std::polar(1.0, th))));
    }
    return worst;
}

}  // namespace unqsp
