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

#include "unqsp/bivariate.hpp"

#include <algorithm>
#include <cmath>

#include "unqsp/errors.hpp"
#include "unqsp/qspu.hpp"

namespace unqsp {

cd BivariatePoly::coeff(int jw, int kv) const {
    int i = jw - lo_w, j = kv - lo_v;
    if (i < 0 || j < 0 || i >= static_cast<int>(coeffs.size()) ||
        (coeffs.empty() || j >= static_cast<int>(coeffs[0].size())))
        return cd(0, 0);
    return coeffs[i][j];
}

void BivariatePoly::set(int jw, int kv, cd value) {
    int i = jw - lo_w, j = kv - lo_v;
    coeffs.at(i).at(j) = value;
}

double BivariatePoly::one_norm() const {
    double acc = 0.0;
    for (const auto& row : coeffs)
        for (const cd& c : row) acc += std::abs(c);
    return acc;
}

cd BivariatePoly::at(cd w, cd v) const {
    cd acc(0, 0);
    for (int i = 0; i < static_cast<int>(coeffs.size()); ++i)
        for (int j = 0; j < static_cast<int>(coeffs[i].size()); ++j) {
            if (coeffs[i][j] == cd(0, 0)) continue;
            acc += coeffs[i][j] * std::pow(w, lo_w + i) * std::pow(v, lo_v + j);
        }
    return acc;
}

BivariatePoly BivariatePoly::zero(int lo_w, int hi_w, int lo_v, int hi_v) {
    BivariatePoly out;
    out.lo_w = lo_w;
    out.lo_v = lo_v;
    out.coeffs.assign(hi_w - lo_w + 1, std::vector<cd>(hi_v - lo_v + 1, cd(0, 0)));
    return out;
}

double ArcsinSeries::partial_sum() const {
    double acc = 0.0;
    for (double v : coeffs) acc += v;
    return acc;
}

ArcsinSeries arcsin_coeffs(int k, int lmax) {
    if (k < 1) throw PreconditionError("arcsin_coeffs: k must be >= 1");
    if (lmax < k) throw PreconditionError("arcsin_coeffs: Lmax must be >= k");
    std::vector<double> b1(lmax + 1, 0.0);
    double central = 1.0;  // C(2l, l) 4^{-l}
    for (int l = 0; 2 * l + 1 <= lmax; ++l) {
        b1[2 * l + 1] = central / (2 * l + 1) * (2.0 / M_PI);
        central *= (2.0 * l + 1) / (2.0 * l + 2);
    }
    std::vector<double> cur = b1;
    for (int kk = 2; kk <= k; ++kk) {
        std::vector<double> nxt(lmax + 1, 0.0);
        for (int l = 0; l <= lmax; ++l) {
            if (cur[l] == 0.0) continue;
            for (int m = 0; l + m <= lmax; ++m) {
                if (b1[m] == 0.0) continue;
                nxt[l + m] += cur[l] * b1[m];
            }
        }
        cur = std::move(nxt);
    }
    return ArcsinSeries{k, std::move(cur)};
}

std::vector<cd> sin_power_fourier(int l, int d) {
    if (l < 0 || d < 0) throw PreconditionError("sin_power_fourier: negative order");
    std::vector<cd> out(2 * d + 1, cd(0, 0));
    // (i/2)^l prefactor with the binomial-expansion sign (-1)^{(s+l)/2}
    cd pref = std::pow(cd(0, 0.5), l);
    double binom = 1.0;  // C(l, m) built incrementally over m
    for (int m = 0; m <= l; ++m) {
        int s = 2 * m - l;
        if (std::abs(s) <= d) {
            double sign = ((m % 2) == 0) ? 1.0 : -1.0;  // (-1)^{(s+l)/2} = (-1)^m
            out[s + d] += pref * sign * binom;
        }
        binom = binom * (l - m) / (m + 1.0);
    }
    return out;
}

BivariateApproximation approximate_bivariate(const BivariatePoly& f, double delta, double eps,
                                             bool half_angle) {
    if (!(delta > 0.0 && delta < 1.0) || !(eps > 0.0 && eps < 1.0))
        throw PreconditionError("approximate_bivariate: delta and eps must lie in (0,1)");
    if (f.lo_w < 0 || f.lo_v < 0)
        throw PreconditionError("approximate_bivariate: f must have nonnegative powers");
    double norm1 = f.one_norm();
    if (norm1 == 0.0) {
        BivariateApproximation out;
        out.g = BivariatePoly::zero(0, 0, 0, 0);
        return out;
    }

    int trunc = static_cast<int>(std::ceil(1.0 / (2.0 * delta * delta) *
                                           std::log(5.0 * norm1 / eps)));
    int d = static_cast<int>(std::ceil(delta * trunc / std::sqrt(2.0)));

    // full-angle convention: g(e^{i pi x}, .) approximates f at halved
    // arguments, so rescale the monomial coefficients
    int jmax = f.hi_w(), kmax = f.hi_v();
    std::vector<std::vector<double>> b(std::max(jmax, kmax) + 1);
    b[0].assign(trunc + 1, 0.0);
    b[0][0] = 1.0;
    for (int k = 1; k < static_cast<int>(b.size()); ++k)
        b[k] = arcsin_coeffs(k, trunc).coeffs;
    std::vector<std::vector<cd>> sp(trunc + 1);
    for (int l = 0; l <= trunc; ++l) sp[l] = sin_power_fourier(l, d);

    BivariatePoly g = BivariatePoly::zero(-d, d, -d, d);
    for (int j = f.lo_w; j <= jmax; ++j) {
        for (int k = f.lo_v; k <= kmax; ++k) {
            cd c = f.coeff(j, k);
            if (c == cd(0, 0)) continue;
            if (!half_angle) c *= std::pow(0.5, j + k);
            for (int l = 0; l <= trunc; ++l) {
                if (b[j][l] == 0.0) continue;
                for (int m = 0; m <= trunc; ++m) {
                    if (b[k][m] == 0.0) continue;
                    cd wgt = c * b[j][l] * b[k][m];
                    for (int s = -std::min(d, l); s <= std::min(d, l); ++s) {
                        if ((s - l) % 2 != 0) continue;
                        cd cs = sp[l][s + d];
                        if (cs == cd(0, 0)) continue;
                        for (int t = -std::min(d, m); t <= std::min(d, m); ++t) {
                            if ((t - m) % 2 != 0) continue;
                            cd ct = sp[m][t + d];
                            if (ct == cd(0, 0)) continue;
                            g.coeffs[s + d][t + d] += wgt * cs * ct;
                        }
                    }
                }
            }
        }
    }
    return BivariateApproximation{std::move(g), d, trunc};
}

double sup_on_circle(const PolyMatrix& p) {
    if (p.rows() != 1 || p.cols() != 1)
        throw PreconditionError("sup_on_circle: scalar polynomial expected");
    const int m = 1024;
    double best = 0.0;
    int best_i = 0;
    std::vector<double> vals(m);
    for (int i = 0; i < m; ++i) {
        double th = 2.0 * M_PI * i / m;
        vals[i] = std::norm(eval(p, std::polar(1.0, th))(0, 0));
        if (vals[i] > best) {
            best = vals[i];
            best_i = i;
        }
    }
    // parabolic refinement on |p|^2 around the grid argmax
    double h = 2.0 * M_PI / m;
    double ym = vals[(best_i + m - 1) % m], y0 = vals[best_i], yp = vals[(best_i + 1) % m];
    double denom = ym - 2.0 * y0 + yp;
    double refined = y0;
    if (denom < 0.0) {
        double dx = 0.5 * (ym - yp) / denom;
        double th = 2.0 * M_PI * best_i / m + dx * h;
        refined = std::norm(eval(p, std::polar(1.0, th))(0, 0));
        // the vertex estimate itself is an upper-bound guess; keep the larger
        double vertex = y0 - 0.25 * (ym - yp) * dx;
        refined = std::max(refined, vertex);
    }
    return std::sqrt(std::max(best, refined));
}

ProductDecomposition decompose_products(const BivariatePoly& g) {
    ProductDecomposition out;
    double scale_sum = 0.0;
    struct Raw {
        PolyMatrix p;
        int vpow;
        double alpha_k;
    };
    std::vector<Raw> raws;
    for (int k = g.lo_v; k <= g.hi_v(); ++k) {
        // w-section for this v power
        int lo = g.lo_w, hi = g.hi_w();
        std::vector<MatrixXcd> cs;
        bool nonzero = false;
        for (int j = lo; j <= hi; ++j) {
            MatrixXcd m(1, 1);
            m(0, 0) = g.coeff(j, k);
            if (m(0, 0) != cd(0, 0)) nonzero = true;
            cs.push_back(m);
        }
        if (!nonzero) continue;
        PolyMatrix sec(lo, cs);
        double ak = sup_on_circle(sec);
        if (ak <= 0.0) continue;
        raws.push_back({scale(sec, cd(1.0 / ak, 0)), k, ak});
        scale_sum += ak;
    }
    out.scale = scale_sum;
    if (raws.empty()) return out;  // zero polynomial: empty terms, scale 0
    for (auto& r : raws) {
        MatrixXcd one(1, 1);
        one(0, 0) = cd(1, 0);
        out.terms.push_back({std::move(r.p), PolyMatrix::monomial(one, r.vpow),
                             r.alpha_k / scale_sum});
    }
    return out;
}

cd decomposition_value(const ProductDecomposition& dec, cd w, cd v) {
    cd acc(0, 0);
    for (const auto& t : dec.terms)
        acc += t.weight * eval(t.p, w)(0, 0) * eval(t.q, v)(0, 0);
    return acc;
}

MatrixXcd compose_block_encodings(const ProductDecomposition& dec, const MatrixXcd& w,
                                  const MatrixXcd& v) {
    if (dec.terms.empty()) throw PreconditionError("compose_block_encodings: empty decomposition");
    if (w.rows() != w.cols() || v.rows() != v.cols() || w.rows() != v.rows())
        throw PreconditionError("compose_block_encodings: inputs must be square, equal size");
    if (unitarity_defect(w) > 1e-10 || unitarity_defect(v) > 1e-10)
        throw PreconditionError("compose_block_encodings: inputs must be unitary");
    if (op_norm(w * v - v * w) > 1e-10)
        throw PreconditionError("compose_block_encodings: inputs must commute");

    int r = static_cast<int>(dec.terms.size());
    int ds = static_cast<int>(w.rows());

    // row block R(z) = [sqrt(w_0) p_0, ...], column block C(z) = [sqrt(w_k) q_k]
    int lo_p = 0, hi_p = 0, lo_q = 0, hi_q = 0;
    for (const auto& t : dec.terms) {
        lo_p = std::min(lo_p, t.p.lo());
        hi_p = std::max(hi_p, t.p.hi());
        lo_q = std::min(lo_q, t.q.lo());
        hi_q = std::max(hi_q, t.q.hi());
    }
    std::vector<MatrixXcd> rc(hi_p - lo_p + 1, MatrixXcd::Zero(1, r));
    std::vector<MatrixXcd> cc(hi_q - lo_q + 1, MatrixXcd::Zero(r, 1));
    for (int k = 0; k < r; ++k) {
        double s = std::sqrt(dec.terms[k].weight);
        for (int l = lo_p; l <= hi_p; ++l) rc[l - lo_p](0, k) = s * dec.terms[k].p.coeff(l)(0, 0);
        for (int l = lo_q; l <= hi_q; ++l) cc[l - lo_q](k, 0) = s * dec.terms[k].q.coeff(l)(0, 0);
    }
    PolyMatrix rowp(lo_p, rc), colp(lo_q, cc);

    auto [rpar, rinfo, rd] = synthesize_laurent(rowp);
    auto [cpar, cinfo, cdg] = synthesize_laurent(colp);
    (void)rinfo;
    (void)cinfo;
    MatrixXcd ur = forward_eval_laurent(rpar, rd, w);  // (1+r) ds square
    MatrixXcd uc = forward_eval_laurent(cpar, cdg, v); // (r+1) ds square

    // disjoint-junk composition on (r+2) blocks of the system space:
    // coordinates: 0 = shared scalar slot, 1..r = shared index,
    // r+1 = junk kept private per factor.
    int nb = r + 2;
    MatrixXcd wc = MatrixXcd::Identity(nb * ds, nb * ds);
    // U_C acts on blocks {0..r}; its own junk row/col is block r (its last)
    wc.topLeftCorner((r + 1) * ds, (r + 1) * ds) = uc;
    MatrixXcd wr = MatrixXcd::Identity(nb * ds, nb * ds);
    // U_R acts on blocks {0..r-1} plus the private junk block r+1;
    // embed with index map: its block i -> (i == r ? r+1 : i)
    auto mapi = [&](int i) { return (i == r) ? (r + 1) : i; };
    for (int bi = 0; bi <= r; ++bi)
        for (int bj = 0; bj <= r; ++bj) {
            wr.block(mapi(bi) * ds, mapi(bj) * ds, ds, ds) =
                ur.block(bi * ds, bj * ds, ds, ds);
        }
    // U_R reads the shared index blocks 1..r which hold the column output;
    // its own row layout places the scalar at block 0 and p-columns at 0..r-1.
    // Shift: the row circuit's designated row block is 0 and its column
    // blocks are 0..r-1, while the column circuit writes to blocks 0..r-1.
    MatrixXcd prod = wr * wc;
    return prod.topLeftCorner(ds, ds);
}

MatrixXcd lcu_combine_generic(const std::vector<MatrixXcd>& unitaries,
                              const std::vector<double>& weights) {
    if (unitaries.empty() || unitaries.size() != weights.size())
        throw PreconditionError("lcu_combine_generic: size mismatch");
    double tot = 0.0;
    for (double a : weights) {
        if (a < 0.0) throw PreconditionError("lcu_combine_generic: negative weight");
        tot += a;
    }
    if (std::abs(tot - 1.0) > 1e-12)
        throw PreconditionError("lcu_combine_generic: weights must sum to 1");
    int m = static_cast<int>(unitaries.size());
    int d = static_cast<int>(unitaries[0].rows());
    for (const auto& u : unitaries)
        if (u.rows() != d || u.cols() != d)
            throw PreconditionError("lcu_combine_generic: dimension mismatch");
    // state preparation V with first column sqrt(alpha_j)
    VectorXcd col(m);
    for (int i = 0; i < m; ++i) col(i) = std::sqrt(weights[i]);
    MatrixXcd ext(m, m + 1);
    ext.col(0) = col;
    ext.rightCols(m) = MatrixXcd::Identity(m, m);
    Eigen::HouseholderQR<MatrixXcd> qr(ext);
    MatrixXcd q = qr.householderQ();
    MatrixXcd v(m, m);
    v.col(0) = col;
    v.rightCols(m - 1) = q.rightCols(m - 1);
    for (int j = 1; j < m; ++j) {
        VectorXcd w = v.col(j);
        for (int rep = 0; rep < 2; ++rep)
            for (int i = 0; i < j; ++i) w -= v.col(i) * (v.col(i).dot(w));
        v.col(j) = w / w.norm();
    }
    MatrixXcd sel = MatrixXcd::Zero(m * d, m * d);
    for (int i = 0; i < m; ++i) sel.block(i * d, i * d, d, d) = unitaries[i];
    MatrixXcd big = kron(v, MatrixXcd::Identity(d, d));
    MatrixXcd wmat = big.adjoint() * sel * big;
    return wmat.topLeftCorner(d, d);
}

}  // namespace unqsp
