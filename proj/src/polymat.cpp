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

#include "unqsp/polymat.hpp"

#include <cmath>

#include "unqsp/errors.hpp"

namespace unqsp {

PolyMatrix::PolyMatrix(int lo, std::vector<MatrixXcd> coeffs) : lo_(lo), coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) throw PreconditionError("PolyMatrix: at least one coefficient required");
    rows_ = static_cast<int>(coeffs_[0].rows());
    cols_ = static_cast<int>(coeffs_[0].cols());
    for (const auto& c : coeffs_)
        if (c.rows() != rows_ || c.cols() != cols_)
            throw PreconditionError("PolyMatrix: inconsistent coefficient shapes");
    trim();
}

PolyMatrix PolyMatrix::zero(int rows, int cols) {
    return PolyMatrix(0, {MatrixXcd::Zero(rows, cols)});
}

PolyMatrix PolyMatrix::constant(const MatrixXcd& m) { return PolyMatrix(0, {m}); }

PolyMatrix PolyMatrix::monomial(const MatrixXcd& m, int power) { return PolyMatrix(power, {m}); }

PolyMatrix PolyMatrix::identity(int n) { return constant(MatrixXcd::Identity(n, n)); }

MatrixXcd PolyMatrix::coeff(int power) const {
    int k = power - lo_;
    if (k < 0 || k >= static_cast<int>(coeffs_.size())) return MatrixXcd::Zero(rows_, cols_);
    return coeffs_[k];
}

double PolyMatrix::max_abs() const {
    double m = 0.0;
    for (const auto& c : coeffs_) m = std::max(m, c.cwiseAbs().maxCoeff());
    return m;
}

bool PolyMatrix::is_zero() const { return max_abs() == 0.0; }

void PolyMatrix::trim() {
    double scale = max_abs();
    double thresh = 1e-13 * scale;
    auto small = [&](const MatrixXcd& c) { return c.cwiseAbs().maxCoeff() <= thresh; };
    if (scale == 0.0) {
        coeffs_.assign(1, MatrixXcd::Zero(rows_, cols_));
        lo_ = 0;
        return;
    }
    size_t n = coeffs_.size();
    while (n > 1 && small(coeffs_[n - 1])) --n;
    coeffs_.resize(n);
    size_t k = 0;
    while (k + 1 < coeffs_.size() && small(coeffs_[k])) ++k;
    if (k > 0) {
        coeffs_.erase(coeffs_.begin(), coeffs_.begin() + k);
        lo_ += static_cast<int>(k);
    }
}

HermLaurent::HermLaurent(PolyMatrix f, double tol) : f_(std::move(f)) {
    if (f_.rows() != f_.cols()) throw PreconditionError("HermLaurent: matrix must be square");
    if (f_.lo() != -f_.hi())
        throw PreconditionError("HermLaurent: power range must be symmetric about 0");
    double scale = std::max(f_.max_abs(), 1e-300);
    for (int s = 0; s <= f_.hi(); ++s) {
        double d = (f_.coeff(-s) - f_.coeff(s).adjoint()).cwiseAbs().maxCoeff();
        if (d > tol * scale)
            throw PreconditionError("HermLaurent: F_{-s} != F_s^* beyond tolerance");
    }
}

MatrixXcd eval(const PolyMatrix& p, cd z) {
    if (p.lo() < 0 && z == cd(0, 0))
        throw PreconditionError("eval: z = 0 invalid for Laurent polynomial with negative powers");
    // Horner from the highest power, then multiply the z^lo prefactor.
    const auto& c = p.coeffs();
    MatrixXcd acc = c.back();
    for (int k = static_cast<int>(c.size()) - 2; k >= 0; --k) acc = acc * z + c[k];
    if (p.lo() != 0) acc *= std::pow(z, p.lo());
    return acc;
}

PolyMatrix adjoint_on_circle(const PolyMatrix& p) {
    std::vector<MatrixXcd> out;
    out.reserve(p.coeffs().size());
    for (int k = static_cast<int>(p.coeffs().size()) - 1; k >= 0; --k)
        out.push_back(p.coeffs()[k].adjoint());
    return PolyMatrix(-p.hi(), std::move(out));
}

PolyMatrix mul(const PolyMatrix& a, const PolyMatrix& b) {
    if (a.cols() != b.rows()) throw PreconditionError("mul: inner dimensions disagree");
    int lo = a.lo() + b.lo();
    int n = a.span() + b.span() + 1;
    std::vector<MatrixXcd> out(n, MatrixXcd::Zero(a.rows(), b.cols()));
    for (size_t i = 0; i < a.coeffs().size(); ++i)
        for (size_t j = 0; j < b.coeffs().size(); ++j) out[i + j] += a.coeffs()[i] * b.coeffs()[j];
    return PolyMatrix(lo, std::move(out));
}

PolyMatrix add(const PolyMatrix& a, const PolyMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw PreconditionError("add: shape mismatch");
    int lo = std::min(a.lo(), b.lo());
    int hi = std::max(a.hi(), b.hi());
    std::vector<MatrixXcd> out(hi - lo + 1, MatrixXcd::Zero(a.rows(), a.cols()));
    for (int l = lo; l <= hi; ++l) out[l - lo] = a.coeff(l) + b.coeff(l);
    return PolyMatrix(lo, std::move(out));
}

PolyMatrix sub(const PolyMatrix& a, const PolyMatrix& b) { return add(a, scale(b, cd(-1, 0))); }

PolyMatrix scale(const PolyMatrix& a, cd s) {
    std::vector<MatrixXcd> out = a.coeffs();
    for (auto& c : out) c *= s;
    return PolyMatrix(a.lo(), std::move(out));
}

PolyMatrix shift_power(const PolyMatrix& a, int d) {
    return PolyMatrix(a.lo() + d, a.coeffs());
}

HermLaurent gram_defect(const PolyMatrix& p) {
    PolyMatrix g = mul(adjoint_on_circle(p), p);
    PolyMatrix f = sub(PolyMatrix::identity(p.cols()), g);
    // enforce the symmetric power range [-L, L]
    int l = std::max(std::abs(f.lo()), std::abs(f.hi()));
    std::vector<MatrixXcd> out(2 * l + 1, MatrixXcd::Zero(p.cols(), p.cols()));
    for (int s = -l; s <= l; ++s) out[s + l] = f.coeff(s);
    return HermLaurent(PolyMatrix(-l, std::move(out)));
}

PolyMatrix vstack(const PolyMatrix& top, const PolyMatrix& bottom) {
    if (top.cols() != bottom.cols()) throw PreconditionError("vstack: column mismatch");
    int lo = std::min(top.lo(), bottom.lo());
    int hi = std::max(top.hi(), bottom.hi());
    std::vector<MatrixXcd> out;
    out.reserve(hi - lo + 1);
    for (int l = lo; l <= hi; ++l) {
        MatrixXcd m(top.rows() + bottom.rows(), top.cols());
        m.topRows(top.rows()) = top.coeff(l);
        m.bottomRows(bottom.rows()) = bottom.coeff(l);
        out.push_back(std::move(m));
    }
    return PolyMatrix(lo, std::move(out));
}

int circle_grid_size(int span) { return 2 * span + 5; }

std::vector<double> circle_grid(int m) {
    std::vector<double> th(m);
    for (int i = 0; i < m; ++i) th[i] = 2.0 * M_PI * i / m;
    return th;
}

double unitary_defect_on_circle(const PolyMatrix& p) {
    double worst = 0.0;
    MatrixXcd eye = MatrixXcd::Identity(p.cols(), p.cols());
    for (double th : circle_grid(circle_grid_size(p.span()))) {
        MatrixXcd v = eval(p, std::polar(1.0, th));
        worst = std::max(worst, op_norm(v.adjoint() * v - eye));
    }
    return worst;
}

double coeff_distance(const PolyMatrix& a, const PolyMatrix& b) {
    int lo = std::min(a.lo(), b.lo());
    int hi = std::max(a.hi(), b.hi());
    double worst = 0.0;
    for (int l = lo; l <= hi; ++l)
        worst = std::max(worst, (a.coeff(l) - b.coeff(l)).cwiseAbs().maxCoeff());
    return worst;
}

}  // namespace unqsp
