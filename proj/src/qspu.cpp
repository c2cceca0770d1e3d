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

#include "unqsp/qspu.hpp"

#include <cmath>
#include <sstream>

#include "unqsp/errors.hpp"
#include "unqsp/specfact.hpp"

namespace unqsp {

void QspuParams::validate(double tol) const {
    if (seed.rows() != seed.cols()) throw PreconditionError("QspuParams: seed must be square");
    if (unitarity_defect(seed) > tol) throw PreconditionError("QspuParams: seed not unitary");
    for (const auto& pi : projectors) {
        if (pi.rows() != seed.rows() || pi.cols() != seed.cols())
            throw PreconditionError("QspuParams: projector dimension mismatch");
        if (op_norm(pi - pi.adjoint()) > tol)
            throw PreconditionError("QspuParams: projector not Hermitian");
        if (op_norm(pi * pi - pi) > tol)
            throw PreconditionError("QspuParams: projector not idempotent");
    }
}

PolyMatrix forward_symbolic(const QspuParams& params) {
    int n = params.n_dim();
    MatrixXcd eye = MatrixXcd::Identity(n, n);
    std::vector<MatrixXcd> coeffs{params.seed};
    for (const auto& pi : params.projectors) {
        std::vector<MatrixXcd> next(coeffs.size() + 1, MatrixXcd::Zero(n, n));
        for (size_t l = 0; l < coeffs.size(); ++l) {
            next[l + 1] += pi * coeffs[l];
            next[l] += (eye - pi) * coeffs[l];
        }
        coeffs = std::move(next);
    }
    return PolyMatrix(0, std::move(coeffs));
}

MatrixXcd forward_eval(const QspuParams& params, const MatrixXcd& u) {
    if (u.rows() != u.cols() || unitarity_defect(u) > 1e-10)
        throw PreconditionError("forward_eval: input must be unitary to 1e-10");
    int n = params.n_dim();
    int d = static_cast<int>(u.rows());
    MatrixXcd eyed = MatrixXcd::Identity(d, d);
    MatrixXcd eyen = MatrixXcd::Identity(n, n);
    MatrixXcd acc = kron(params.seed, eyed);
    for (const auto& pi : params.projectors) {
        MatrixXcd gate = kron(pi, u) + kron(eyen - pi, eyed);
        acc = gate * acc;
    }
    return acc;
}

namespace detail {

QspuParams column_synthesize(const PolyMatrix& s, double tol) {
    int n = s.rows();
    int c = s.cols();
    double scale = std::max(s.max_abs(), 1e-300);
    MatrixXcd eye = MatrixXcd::Identity(n, n);

    std::vector<MatrixXcd> coeffs = s.coeffs();
    if (s.lo() != 0) throw PreconditionError("column_synthesize: target must have lo = 0");

    std::vector<MatrixXcd> projectors;  // collected as Pi_L, Pi_{L-1}, ...
    int step = static_cast<int>(coeffs.size()) - 1;
    while (coeffs.size() > 1) {
        const MatrixXcd& lead = coeffs.back();
        double lead_norm = lead.cwiseAbs().maxCoeff();
        if (lead_norm < 1e-12 * scale) {
            // spurious degree left by upstream arithmetic
            coeffs.pop_back();
            --step;
            continue;
        }
        Eigen::JacobiSVD<MatrixXcd> svd(lead, Eigen::ComputeFullU);
        double smax = svd.singularValues()(0);
        int rank = 0;
        for (int i = 0; i < svd.singularValues().size(); ++i)
            if (svd.singularValues()(i) > 1e-10 * smax) ++rank;
        MatrixXcd ur = svd.matrixU().leftCols(rank);
        MatrixXcd pi = ur * ur.adjoint();

        double orth = (pi * coeffs.front()).cwiseAbs().maxCoeff();
        if (orth > std::max(tol, 1e-6 * scale)) {
            std::ostringstream os;
            os << "column_synthesize: leading/constant column spaces not orthogonal at step "
               << step << " (|Pi P_0| = " << orth << ")";
            throw DegeneracyError(os.str(), step);
        }

        size_t deg = coeffs.size() - 1;
        std::vector<MatrixXcd> next(deg, MatrixXcd::Zero(n, c));
        for (size_t l = 0; l < deg; ++l) next[l] = pi * coeffs[l + 1] + (eye - pi) * coeffs[l];
        // the recursion must lower the degree by exactly one
        double top = ((eye - pi) * coeffs.back()).cwiseAbs().maxCoeff();
        if (top > 1e-8 * scale)
            throw DegeneracyError("column_synthesize: degree reduction failed", step);
        coeffs = std::move(next);
        projectors.push_back(std::move(pi));
        --step;
    }

    // constant term: orthonormalize and complete to a unitary seed
    MatrixXcd s0 = coeffs[0];
    if (c == n) {
        s0 = polar_unitary(s0);
    } else {
        // polar-orthonormalize the columns, then complete via Householder QR
        Eigen::JacobiSVD<MatrixXcd> svd(s0, Eigen::ComputeFullU | Eigen::ComputeFullV);
        s0 = svd.matrixU().leftCols(c) * svd.matrixV().adjoint();
        MatrixXcd ext(n, n + c);
        ext.leftCols(c) = s0;
        ext.rightCols(n) = MatrixXcd::Identity(n, n);
        Eigen::HouseholderQR<MatrixXcd> qr(ext);
        MatrixXcd q = qr.householderQ();  // n x n, first c columns span col(s0)
        MatrixXcd full(n, n);
        full.leftCols(c) = s0;
        full.rightCols(n - c) = q.rightCols(n - c);
        // re-orthonormalize the completion against the fixed columns (MGS)
        for (int j = c; j < n; ++j) {
            VectorXcd v = full.col(j);
            for (int rep = 0; rep < 2; ++rep)
                for (int i = 0; i < j; ++i) v -= full.col(i) * (full.col(i).dot(v));
            double nm = v.norm();
            if (nm < 1e-8)
                throw DegeneracyError("column_synthesize: unitary completion degenerate", 0);
            full.col(j) = v / nm;
        }
        s0 = full;
    }

    QspuParams params;
    params.seed = s0;
    params.projectors.assign(projectors.rbegin(), projectors.rend());
    return params;
}

}  // namespace detail

QspuParams synthesize_unitary(const PolyMatrix& p, double tol) {
    if (p.rows() != p.cols()) throw PreconditionError("synthesize_unitary: target must be square");
    if (p.lo() != 0) throw PreconditionError("synthesize_unitary: target must have lo = 0");
    double defect = unitary_defect_on_circle(p);
    if (defect > 1e-8) {
        std::ostringstream os;
        os << "synthesize_unitary: target not unitary on circle (defect " << defect << ")";
        throw PreconditionError(os.str());
    }
    return detail::column_synthesize(p, tol);
}

std::pair<QspuParams, EmbeddingInfo> complete_and_synthesize(const PolyMatrix& p, double tol) {
    if (p.lo() != 0) throw PreconditionError("complete_and_synthesize: target must have lo = 0");
    double sv = sv_bound_check(p);
    if (sv > 1.0 + 1e-9) {
        std::ostringstream os;
        os << "complete_and_synthesize: singular values exceed 1 on circle (max " << sv << ")";
        throw PreconditionError(os.str());
    }
    FactorResult fac = spectral_factor(gram_defect(p), tol);
    PolyMatrix stacked = vstack(p, fac.Q);
    QspuParams params = detail::column_synthesize(stacked, std::max(tol, fac.residual * 10.0));
    EmbeddingInfo info{p.rows(), p.cols(), p.cols()};
    return {params, info};
}

std::tuple<QspuParams, EmbeddingInfo, int> synthesize_laurent(const PolyMatrix& p, double tol) {
    int d = std::max(-p.lo(), p.hi());
    if (d < 0) throw PreconditionError("synthesize_laurent: empty polynomial");
    PolyMatrix shifted = shift_power(p, d);
    auto [params, info] = complete_and_synthesize(shifted, tol);
    return {params, info, d};
}

MatrixXcd forward_eval_laurent(const QspuParams& params, int d, const MatrixXcd& u) {
    if (u.rows() != u.cols() || unitarity_defect(u) > 1e-10)
        throw PreconditionError("forward_eval_laurent: input must be unitary to 1e-10");
    int n = params.n_dim();
    int du = static_cast<int>(u.rows());
    MatrixXcd eyed = MatrixXcd::Identity(du, du);
    MatrixXcd eyen = MatrixXcd::Identity(n, n);

    MatrixXcd a, b;  // gate actions on the two projector branches
    if (d > 0) {
        a = principal_unitary_sqrt(u);
        b = a.adjoint();
    } else {
        a = u;
        b = eyed;
    }
    MatrixXcd acc = kron(params.seed, eyed);
    for (const auto& pi : params.projectors) {
        MatrixXcd gate = kron(pi, a) + kron(eyen - pi, b);
        acc = gate * acc;
    }
    if (d > 0) {
        // each double-headed gate contributes a global U^{-1/2}; realign so the
        // designated block equals the Laurent polynomial of U
        int l = params.length();
        int shift = l - 2 * d;  // net power correction in units of U^{1/2}
        if (shift != 0) {
            MatrixXcd su = a;  // U^{1/2}
            MatrixXcd corr = eyed;
            MatrixXcd base = (shift > 0) ? su : MatrixXcd(su.adjoint());
            for (int i = 0; i < std::abs(shift); ++i) corr = corr * base;
            acc = acc * kron(eyen, corr);
        }
    }
    return acc;
}

}  // namespace unqsp
