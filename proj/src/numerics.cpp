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

#include "unqsp/numerics.hpp"

#include <cmath>

#include "unqsp/errors.hpp"

namespace unqsp {

double Rng::uniform() {
    // 53 random bits -> double in [0, 1)
    return (gen_() >> 11) * 0x1.0p-53;
}

double Rng::normal() {
    if (have_spare_) {
        have_spare_ = false;
        return spare_;
    }
    double u1 = 0.0;
    do {
        u1 = uniform();
    } while (u1 <= 0.0);
    double u2 = uniform();
    double r = std::sqrt(-2.0 * std::log(u1));
    double a = 2.0 * M_PI * u2;
    spare_ = r * std::sin(a);
    have_spare_ = true;
    return r * std::cos(a);
}

std::uint64_t Rng::index(std::uint64_t n) {
    // rejection-free modulo is fine at desk scale
    return gen_() % n;
}

Rng Rng::fork() {
    std::uint64_t s = gen_();
    return Rng(s ^ 0x9e3779b97f4a7c15ull);
}

MatrixXcd random_complex(Rng& rng, int rows, int cols) {
    MatrixXcd m(rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) m(i, j) = rng.cgauss();
    return m;
}

MatrixXcd random_unitary(Rng& rng, int n) {
    if (n < 1) throw PreconditionError("random_unitary: n must be >= 1");
    MatrixXcd g = random_complex(rng, n, n);
    Eigen::HouseholderQR<MatrixXcd> qr(g);
    MatrixXcd q = qr.householderQ();
    MatrixXcd r = qr.matrixQR().triangularView<Eigen::Upper>();
    for (int i = 0; i < n; ++i) {
        cd d = r(i, i);
        double a = std::abs(d);
        q.col(i) *= (a > 0) ? d / a : cd(1, 0);
    }
    return q;
}

MatrixXcd polar_unitary(const MatrixXcd& m) {
    if (m.rows() != m.cols()) throw PreconditionError("polar_unitary: matrix must be square");
    Eigen::JacobiSVD<MatrixXcd> svd(m, Eigen::ComputeFullU | Eigen::ComputeFullV);
    double smin = svd.singularValues().minCoeff();
    double smax = svd.singularValues().maxCoeff();
    if (smax <= 0 || smin < 1e-12 * smax)
        throw PreconditionError("polar_unitary: matrix is singular to working precision");
    return svd.matrixU() * svd.matrixV().adjoint();
}

MatrixXcd polar_factor_any(const MatrixXcd& m) {
    Eigen::JacobiSVD<MatrixXcd> svd(m, Eigen::ComputeFullU | Eigen::ComputeFullV);
    return svd.matrixU() * svd.matrixV().adjoint();
}

MatrixXcd principal_unitary_sqrt(const MatrixXcd& u) {
    // A unitary matrix is normal; its complex Schur form is diagonal.
    Eigen::ComplexSchur<MatrixXcd> schur(u);
    MatrixXcd q = schur.matrixU();
    VectorXcd d = schur.matrixT().diagonal();
    VectorXcd s(d.size());
    for (int i = 0; i < d.size(); ++i) {
        double phi = std::arg(d(i));
        s(i) = std::polar(1.0, phi / 2.0);
    }
    return q * s.asDiagonal() * q.adjoint();
}

double op_norm(const MatrixXcd& m) {
    if (m.size() == 0) return 0.0;
    Eigen::JacobiSVD<MatrixXcd> svd(m);
    return svd.singularValues()(0);
}

double max_singular_value(const MatrixXcd& m) { return op_norm(m); }

double unitarity_defect(const MatrixXcd& m) {
    MatrixXcd d = m * m.adjoint() - MatrixXcd::Identity(m.rows(), m.rows());
    return op_norm(d);
}

MatrixXcd kron(const MatrixXcd& a, const MatrixXcd& b) {
    MatrixXcd out(a.rows() * b.rows(), a.cols() * b.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j)
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    return out;
}

double bisect(const std::function<double(double)>& f, double lo, double hi, double tol) {
    double flo = f(lo), fhi = f(hi);
    if (flo == 0.0) return lo;
    if (fhi == 0.0) return hi;
    if (flo * fhi > 0.0) throw PreconditionError("bisect: root not bracketed");
    while (hi - lo > tol) {
        double mid = 0.5 * (lo + hi);
        double fm = f(mid);
        if (fm == 0.0) return mid;
        if (flo * fm < 0.0) {
            hi = mid;
        } else {
            lo = mid;
            flo = fm;
        }
    }
    return 0.5 * (lo + hi);
}

double simpson(const std::function<double(double)>& f, double a, double b, int n) {
    if (n < 2 || n % 2 != 0) throw PreconditionError("simpson: n must be even and >= 2");
    double h = (b - a) / n;
    double acc = f(a) + f(b);
    for (int i = 1; i < n; ++i) acc += f(a + i * h) * (i % 2 ? 4.0 : 2.0);
    return acc * h / 3.0;
}

}  // namespace unqsp
