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

#include "unqsp/qsvt.hpp"

#include <cmath>
#include <sstream>

#include "unqsp/chebyshev.hpp"
#include "unqsp/errors.hpp"
#include "unqsp/specfact.hpp"

namespace unqsp {

RealPolyMatrix::RealPolyMatrix(std::vector<MatrixXcd> c, Parity p) : coeffs(std::move(c)), parity(p) {
    if (coeffs.empty()) throw PreconditionError("RealPolyMatrix: empty coefficient list");
    for (const auto& m : coeffs)
        if (m.rows() != coeffs[0].rows() || m.cols() != coeffs[0].cols())
            throw PreconditionError("RealPolyMatrix: inconsistent shapes");
}

MatrixXcd RealPolyMatrix::coeff(int l) const {
    if (l < 0 || l >= static_cast<int>(coeffs.size())) return MatrixXcd::Zero(rows(), cols());
    return coeffs[l];
}

MatrixXcd RealPolyMatrix::at(double x) const {
    MatrixXcd acc = coeffs.back();
    for (int l = static_cast<int>(coeffs.size()) - 2; l >= 0; --l) acc = acc * x + coeffs[l];
    return acc;
}

double RealPolyMatrix::max_abs() const {
    double m = 0.0;
    for (const auto& c : coeffs) m = std::max(m, c.cwiseAbs().maxCoeff());
    return m;
}

double RealPolyMatrix::parity_defect() const {
    if (parity == Parity::None) return 0.0;
    int want = (parity == Parity::Even) ? 0 : 1;
    double worst = 0.0;
    for (int l = 0; l < static_cast<int>(coeffs.size()); ++l)
        if (l % 2 != want) worst = std::max(worst, coeffs[l].cwiseAbs().maxCoeff());
    return worst;
}

void RealPolyMatrix::trim() {
    double scale = max_abs();
    while (coeffs.size() > 1 && coeffs.back().cwiseAbs().maxCoeff() <= 1e-12 * scale)
        coeffs.pop_back();
}

void QsvtParams::validate(double tol) const {
    if (unitaries.empty()) throw PreconditionError("QsvtParams: empty unitary list");
    for (const auto& v : unitaries) {
        if (v.rows() != unitaries[0].rows() || v.rows() != v.cols())
            throw PreconditionError("QsvtParams: dimension mismatch");
        if (unitarity_defect(v) > tol) throw PreconditionError("QsvtParams: V_k not unitary");
    }
}

BlockEncoding make_block_encoding(const MatrixXcd& a) {
    int r = static_cast<int>(a.rows());
    int c = static_cast<int>(a.cols());
    if (max_singular_value(a) > 1.0 + 1e-10)
        throw PreconditionError("make_block_encoding: matrix is not a contraction");
    // defect operators via SVD keeps the dilation exactly unitary
    Eigen::JacobiSVD<MatrixXcd> svd(a, Eigen::ComputeFullU | Eigen::ComputeFullV);
    VectorXd s = svd.singularValues();
    int k = static_cast<int>(s.size());
    VectorXd sbar(k);
    for (int i = 0; i < k; ++i) sbar(i) = std::sqrt(std::max(0.0, 1.0 - s(i) * s(i)));
    // D_{A^*} = U diag(sbar, I) U^*  (r x r), D_A = V diag(sbar, I) V^*  (c x c)
    VectorXd dr = VectorXd::Ones(r), dc = VectorXd::Ones(c);
    dr.head(k) = sbar;
    dc.head(k) = sbar;
    MatrixXcd dat = svd.matrixU() * dr.asDiagonal() * svd.matrixU().adjoint();
    MatrixXcd da = svd.matrixV() * dc.asDiagonal() * svd.matrixV().adjoint();
    BlockEncoding be;
    be.a = r;
    be.b = c;
    be.u = MatrixXcd::Zero(r + c, r + c);
    be.u.topLeftCorner(r, c) = a;
    be.u.topRightCorner(r, r) = dat;
    be.u.bottomLeftCorner(c, c) = da;
    be.u.bottomRightCorner(c, r) = -a.adjoint();
    return be;
}

MatrixXcd svt_oracle(const MatrixXcd& a, const RealPolyMatrix& p) {
    if (p.parity == Parity::None)
        throw PreconditionError("svt_oracle: polynomial must have definite parity");
    if (p.parity_defect() > 1e-12 * std::max(p.max_abs(), 1e-300))
        throw PreconditionError("svt_oracle: mixed-parity coefficients");
    if (max_singular_value(a) > 1.0 + 1e-10)
        throw PreconditionError("svt_oracle: ||A|| must be <= 1");
    bool odd = (p.parity == Parity::Odd);
    int r = static_cast<int>(a.rows());
    int c = static_cast<int>(a.cols());
    Eigen::JacobiSVD<MatrixXcd> svd(a, Eigen::ComputeFullU | Eigen::ComputeFullV);
    int k = static_cast<int>(svd.singularValues().size());

    int br = odd ? r : c;  // block rows of each entry transform
    MatrixXcd out = MatrixXcd::Zero(p.rows() * br, p.cols() * c);
    for (int i = 0; i < p.rows(); ++i) {
        for (int j = 0; j < p.cols(); ++j) {
            // scalar polynomial of entry (i,j)
            std::vector<cd> mono(p.coeffs.size());
            for (size_t l = 0; l < p.coeffs.size(); ++l) mono[l] = p.coeffs[l](i, j);
            auto peval = [&](double x) {
                cd acc = mono.back();
                for (int l = static_cast<int>(mono.size()) - 2; l >= 0; --l) acc = acc * x + mono[l];
                return acc;
            };
            MatrixXcd blk = MatrixXcd::Zero(br, c);
            if (odd) {
                for (int s = 0; s < k; ++s)
                    blk += peval(svd.singularValues()(s)) * svd.matrixU().col(s) *
                           svd.matrixV().col(s).adjoint();
            } else {
                for (int s = 0; s < c; ++s) {
                    double sv = (s < k) ? svd.singularValues()(s) : 0.0;
                    blk += peval(sv) * svd.matrixV().col(s) * svd.matrixV().col(s).adjoint();
                }
            }
            out.block(i * br, j * c, br, c) = blk;
        }
    }
    return out;
}

namespace {

std::pair<MatrixXcd, MatrixXcd> forward_2x2_impl(const QsvtParams& params, double lambda) {
    int n = params.n_dim();
    double lbar = std::sqrt(std::max(0.0, 1.0 - lambda * lambda));
    MatrixXcd a = params.unitaries[0];
    MatrixXcd b = MatrixXcd::Zero(n, n);
    for (int k = 1; k <= params.length(); ++k) {
        MatrixXcd na, nb;
        if (k % 2 == 1) {
            // U: untilde frame -> tilde frame
            na = lambda * a - lbar * b;
            nb = lbar * a + lambda * b;
        } else {
            // U^*: tilde frame -> untilde frame
            na = lambda * a + lbar * b;
            nb = -lbar * a + lambda * b;
        }
        a = params.unitaries[k] * na;
        b = nb;
    }
    return {a, b};
}

}  // namespace

std::pair<MatrixXcd, MatrixXcd> forward_2x2(const QsvtParams& params, double lambda) {
    if (lambda < 0.0 || lambda > 1.0)
        throw PreconditionError("forward_2x2: lambda must lie in [0,1]");
    return forward_2x2_impl(params, lambda);
}

std::pair<MatrixXcd, MatrixXcd> forward_2x2_extended(const QsvtParams& params, double lambda) {
    if (lambda < -1.0 || lambda > 1.0)
        throw PreconditionError("forward_2x2_extended: lambda must lie in [-1,1]");
    return forward_2x2_impl(params, lambda);
}

MatrixXcd forward_full_circuit(const QsvtParams& params, const BlockEncoding& be) {
    int n = params.n_dim();
    int d = be.dim();
    MatrixXcd eyen = MatrixXcd::Identity(n, n);
    MatrixXcd eyed = MatrixXcd::Identity(d, d);
    MatrixXcd pi = MatrixXcd::Zero(d, d);      // |0><0| (input side, b coords)
    MatrixXcd pit = MatrixXcd::Zero(d, d);     // |0~><0~| (output side, a coords)
    for (int i = 0; i < be.b; ++i) pi(i, i) = 1.0;
    for (int i = 0; i < be.a; ++i) pit(i, i) = 1.0;

    MatrixXcd acc = kron(params.unitaries[0], eyed);
    for (int k = 1; k <= params.length(); ++k) {
        const MatrixXcd& proj = (k % 2 == 1) ? pit : pi;
        MatrixXcd input = (k % 2 == 1) ? be.u : MatrixXcd(be.u.adjoint());
        acc = kron(eyen, input) * acc;
        acc = (kron(params.unitaries[k], proj) + kron(eyen, eyed - proj)) * acc;
    }
    return acc;
}

MatrixXcd forward_full(const QsvtParams& params, const BlockEncoding& be) {
    MatrixXcd circ = forward_full_circuit(params, be);
    int n = params.n_dim();
    int d = be.dim();
    bool odd = params.length() % 2 == 1;
    int br = odd ? be.a : be.b;
    MatrixXcd out(n * br, n * be.b);
    for (int k = 0; k < n; ++k)
        for (int j = 0; j < n; ++j)
            out.block(k * br, j * be.b, br, be.b) = circ.block(k * d, j * d, br, be.b);
    return out;
}

std::pair<RealPolyMatrix, RealPolyMatrix> fit_realized(const QsvtParams& params) {
    int l = params.length();
    int n = params.n_dim();
    // P has degree <= l: sample at l+1 Chebyshev nodes of [-1,1]
    int np = l + 1;
    std::vector<double> nodes(np);
    for (int i = 0; i < np; ++i) nodes[i] = std::cos(M_PI * (i + 0.5) / np);
    MatrixXd vand(np, np);
    for (int i = 0; i < np; ++i)
        for (int j = 0; j < np; ++j) vand(i, j) = std::pow(nodes[i], j);
    Eigen::PartialPivLU<MatrixXd> lu(vand);

    std::vector<MatrixXcd> pv(np), qv(np);
    for (int i = 0; i < np; ++i) {
        auto [a, b] = forward_2x2_extended(params, nodes[i]);
        double lbar = std::sqrt(std::max(0.0, 1.0 - nodes[i] * nodes[i]));
        pv[i] = a;
        qv[i] = (lbar > 1e-12) ? MatrixXcd(b / lbar) : MatrixXcd::Zero(n, n);
    }
    auto solve_entrywise = [&](const std::vector<MatrixXcd>& vals, int count,
                               Eigen::PartialPivLU<MatrixXd>& solver) {
        std::vector<MatrixXcd> res(count, MatrixXcd::Zero(n, n));
        VectorXd re(count), im(count);
        for (int r = 0; r < n; ++r)
            for (int c = 0; c < n; ++c) {
                for (int i = 0; i < count; ++i) {
                    re(i) = vals[i](r, c).real();
                    im(i) = vals[i](r, c).imag();
                }
                VectorXd sre = solver.solve(re), sim = solver.solve(im);
                for (int i = 0; i < count; ++i) res[i](r, c) = cd(sre(i), sim(i));
            }
        return res;
    };
    std::vector<MatrixXcd> pc = solve_entrywise(pv, np, lu);

    RealPolyMatrix p(pc, l % 2 == 0 ? Parity::Even : Parity::Odd);
    RealPolyMatrix q;
    if (l == 0) {
        q = RealPolyMatrix({MatrixXcd::Zero(n, n)}, Parity::Even);
    } else {
        int nq = l;  // Q degree <= l-1
        MatrixXd vq(nq, nq);
        std::vector<double> qnodes(nq);
        for (int i = 0; i < nq; ++i) qnodes[i] = std::cos(M_PI * (i + 0.5) / nq);
        for (int i = 0; i < nq; ++i)
            for (int j = 0; j < nq; ++j) vq(i, j) = std::pow(qnodes[i], j);
        Eigen::PartialPivLU<MatrixXd> luq(vq);
        std::vector<MatrixXcd> qvals(nq);
        for (int i = 0; i < nq; ++i) {
            auto [a, b] = forward_2x2_extended(params, qnodes[i]);
            (void)a;
            double lbar = std::sqrt(std::max(0.0, 1.0 - qnodes[i] * qnodes[i]));
            qvals[i] = MatrixXcd(b / lbar);
        }
        std::vector<MatrixXcd> qc = solve_entrywise(qvals, nq, luq);
        q = RealPolyMatrix(qc, l % 2 == 0 ? Parity::Odd : Parity::Even);
    }
    return {p, q};
}

QsvtParams synthesize_pq(const RealPolyMatrix& p_in, const RealPolyMatrix& q_in, double tol) {
    int m = p_in.rows();
    int c = p_in.cols();
    if (q_in.rows() != m || q_in.cols() != c)
        throw PreconditionError("synthesize_pq: P and Q shapes disagree");
    int l = p_in.degree();
    double scale = std::max({p_in.max_abs(), q_in.max_abs(), 1e-300});

    // constraint P^*P + (1-x^2) Q^*Q = I on a Chebyshev grid
    {
        MatrixXcd eye = MatrixXcd::Identity(c, c);
        double worst = 0.0, worst_x = 0.0;
        for (int i = 0; i < 129; ++i) {
            double x = std::cos(M_PI * (i + 0.5) / 129);
            MatrixXcd pv = p_in.at(x), qv = q_in.at(x);
            double d = op_norm(pv.adjoint() * pv + (1.0 - x * x) * qv.adjoint() * qv - eye);
            if (d > worst) {
                worst = d;
                worst_x = x;
            }
        }
        if (worst > std::max(1e-8, tol)) {
            std::ostringstream os;
            os << "synthesize_pq: constraint violated, residual " << worst << " at x = " << worst_x;
            throw PreconditionError(os.str());
        }
    }

    std::vector<MatrixXcd> pc = p_in.coeffs;
    std::vector<MatrixXcd> qc = q_in.coeffs;
    pc.resize(l + 1, MatrixXcd::Zero(m, c));
    qc.resize(std::max(l, 1), MatrixXcd::Zero(m, c));

    std::vector<MatrixXcd> vs(l + 1);
    for (int k = l; k >= 1; --k) {
        double sgn = (k % 2 == 1) ? 1.0 : -1.0;
        MatrixXcd pl = pc[k];
        MatrixXcd ql = sgn * qc[k - 1];
        double gram = op_norm(pl.adjoint() * pl - ql.adjoint() * ql);
        if (gram > 1e-8 * std::max(1.0, scale * scale)) {
            std::ostringstream os;
            os << "synthesize_pq: leading Gram mismatch " << gram << " at step " << k;
            throw DegeneracyError(os.str(), k);
        }
        // unitary with V^* pl = ql, via the polar factor of pl ql^*
        MatrixXcd v = polar_factor_any(pl * ql.adjoint());
        vs[k] = v;
        MatrixXcd vd = v.adjoint();

        std::vector<MatrixXcd> vp(k + 1);
        for (int i = 0; i <= k; ++i) vp[i] = vd * pc[i];
        // degree reduction must be strict: the would-be x^{k+1} coefficient
        double top = (vp[k] - sgn * qc[k - 1]).cwiseAbs().maxCoeff();
        if (top > 1e-6 * std::max(1.0, scale))
            throw DegeneracyError("synthesize_pq: degree reduction failed", k);

        // odd k:  P' = x (V^*P) + (1-x^2) Q,  Q' = -(V^*P) + x Q
        // even k: P' = x (V^*P) - (1-x^2) Q,  Q' = +(V^*P) + x Q
        std::vector<MatrixXcd> np(k, MatrixXcd::Zero(m, c));
        std::vector<MatrixXcd> nq(std::max(k - 1, 1), MatrixXcd::Zero(m, c));
        for (int i = 1; i < k; ++i) np[i] += vp[i - 1];
        for (int i = 0; i < k && i < static_cast<int>(qc.size()); ++i) np[i] += sgn * qc[i];
        for (int i = 0; i + 2 < k && i < static_cast<int>(qc.size()); ++i) np[i + 2] -= sgn * qc[i];
        for (int i = 0; i < k - 1; ++i) {
            nq[i] = -sgn * vp[i];
            if (i >= 1) nq[i] += qc[i - 1];
        }
        pc = std::move(np);
        qc = std::move(nq);
        if (k == 1) qc.assign(1, MatrixXcd::Zero(m, c));
    }

    // degree 0: remaining constant has orthonormal columns
    MatrixXcd s0 = pc[0];
    MatrixXcd v0;
    if (m == c) {
        v0 = polar_unitary(s0);
    } else {
        Eigen::JacobiSVD<MatrixXcd> svd(s0, Eigen::ComputeFullU | Eigen::ComputeFullV);
        MatrixXcd on = svd.matrixU().leftCols(c) * svd.matrixV().adjoint();
        MatrixXcd ext(m, m + c);
        ext.leftCols(c) = on;
        ext.rightCols(m) = MatrixXcd::Identity(m, m);
        Eigen::HouseholderQR<MatrixXcd> qr(ext);
        MatrixXcd q = qr.householderQ();
        MatrixXcd full(m, m);
        full.leftCols(c) = on;
        full.rightCols(m - c) = q.rightCols(m - c);
        for (int j = c; j < m; ++j) {
            VectorXcd v = full.col(j);
            for (int rep = 0; rep < 2; ++rep)
                for (int i = 0; i < j; ++i) v -= full.col(i) * (full.col(i).dot(v));
            full.col(j) = v / v.norm();
        }
        v0 = full;
    }
    vs[0] = v0;
    QsvtParams out;
    out.unitaries = std::move(vs);
    return out;
}

std::tuple<RealPolyMatrix, RealPolyMatrix, QsvtParams> complete_qsvt(const RealPolyMatrix& p,
                                                                     double tol) {
    int r = p.rows();
    int c = p.cols();
    int l = p.degree();
    if (p.parity == Parity::None || (p.parity == Parity::Even) != (l % 2 == 0))
        throw PreconditionError("complete_qsvt: parity must match the degree");
    if (p.parity_defect() > 1e-9 * std::max(1.0, p.max_abs()))
        throw PreconditionError("complete_qsvt: coefficients violate the declared parity");

    // positivity of I - P^*P on a Chebyshev grid
    {
        MatrixXcd eye = MatrixXcd::Identity(c, c);
        for (int i = 0; i < 129; ++i) {
            double x = std::cos(M_PI * (i + 0.5) / 129);
            MatrixXcd pv = p.at(x);
            Eigen::SelfAdjointEigenSolver<MatrixXcd> es(eye - pv.adjoint() * pv);
            if (es.eigenvalues().minCoeff() < -1e-9) {
                std::ostringstream os;
                os << "complete_qsvt: I - P^*P indefinite at x = " << x << " (eig "
                   << es.eigenvalues().minCoeff() << ")";
                throw PreconditionError(os.str());
            }
        }
    }

    // substitute x -> cos(theta/2): Ptilde(z) = e^{i L theta / 2} P(cos(theta/2))
    // x^a -> 2^{-a} sum_m C(a,m) z^{m + (L-a)/2}
    std::vector<MatrixXcd> pt(l + 1, MatrixXcd::Zero(r, c));
    for (int a = 0; a <= l; ++a) {
        if (p.coeff(a).cwiseAbs().maxCoeff() == 0.0) continue;
        if ((l - a) % 2 != 0) continue;  // parity guarantees this
        double binom = 1.0;
        double pref = std::pow(0.5, a);
        for (int m = 0; m <= a; ++m) {
            pt[m + (l - a) / 2] += pref * binom * p.coeff(a);
            binom = binom * (a - m) / (m + 1.0);
        }
    }
    PolyMatrix ptilde(0, pt);

    FactorResult fac = spectral_factor(gram_defect(ptilde), tol);

    // G(theta) = e^{-iL theta/2} Qtilde(e^{i theta})
    //          = P1(cos theta/2) + sin(theta/2) Q1(cos theta/2)
    // with Qtilde_k contributing T_{|2k-L|} and sign(2k-L) i U_{|2k-L|-1}.
    std::vector<MatrixXcd> p1(l + 1, MatrixXcd::Zero(c, c));
    std::vector<MatrixXcd> q1(std::max(l, 1), MatrixXcd::Zero(c, c));
    for (int k = 0; k <= fac.Q.hi(); ++k) {
        MatrixXcd qk = fac.Q.coeff(k);
        if (qk.cwiseAbs().maxCoeff() == 0.0) continue;
        int mfreq = 2 * k - l;
        std::vector<double> tm = chebT_monomial(std::abs(mfreq));
        for (size_t i = 0; i < tm.size(); ++i)
            if (tm[i] != 0.0) p1[i] += tm[i] * qk;
        if (mfreq != 0) {
            std::vector<double> um = chebU_monomial(std::abs(mfreq) - 1);
            double sg = (mfreq > 0) ? 1.0 : -1.0;
            for (size_t i = 0; i < um.size(); ++i)
                if (um[i] != 0.0) q1[i] += cd(0, sg) * um[i] * qk;
        }
    }
    RealPolyMatrix p1m(p1, l % 2 == 0 ? Parity::Even : Parity::Odd);
    RealPolyMatrix q1m(q1, l % 2 == 0 ? Parity::Odd : Parity::Even);

    // stack [P; P1] with Q1 zero-padded on the P rows
    std::vector<MatrixXcd> ps(l + 1, MatrixXcd::Zero(r + c, c));
    std::vector<MatrixXcd> qs(std::max(l, 1), MatrixXcd::Zero(r + c, c));
    for (int i = 0; i <= l; ++i) {
        ps[i].topRows(r) = p.coeff(i);
        ps[i].bottomRows(c) = p1m.coeff(i);
    }
    for (int i = 0; i < static_cast<int>(qs.size()); ++i) qs[i].bottomRows(c) = q1m.coeff(i);

    QsvtParams params = synthesize_pq(RealPolyMatrix(ps, p.parity),
                                      RealPolyMatrix(qs, q1m.parity),
                                      std::max(tol, fac.residual * 10.0));
    return {p1m, q1m, params};
}

std::pair<RealPolyMatrix, RealPolyMatrix> parity_split_doubled(const RealPolyMatrix& p) {
    int l = p.degree();
    std::vector<MatrixXcd> ec(l + 1, MatrixXcd::Zero(p.rows(), p.cols()));
    std::vector<MatrixXcd> oc(l + 1, MatrixXcd::Zero(p.rows(), p.cols()));
    for (int i = 0; i <= l; ++i) {
        if (i % 2 == 0)
            ec[i] = 2.0 * p.coeff(i);
        else
            oc[i] = 2.0 * p.coeff(i);
    }
    RealPolyMatrix pe(ec, Parity::Even), po(oc, Parity::Odd);
    pe.trim();
    po.trim();
    // keep the declared degree parity after the trim
    if (pe.degree() % 2 != 0) pe.coeffs.push_back(MatrixXcd::Zero(p.rows(), p.cols()));
    if (po.degree() % 2 != 1) po.coeffs.push_back(MatrixXcd::Zero(p.rows(), p.cols()));
    return {pe, po};
}

MatrixXcd lcu_parity_combine(const MatrixXcd& a, const QsvtParams& even_params,
                             const QsvtParams& odd_params) {
    if (a.rows() != a.cols() || op_norm(a - MatrixXcd(a.adjoint())) > 1e-10)
        throw PreconditionError("lcu_parity_combine: input must be Hermitian");
    if (even_params.length() % 2 != 0 || odd_params.length() % 2 != 1)
        throw PreconditionError("lcu_parity_combine: parameter parities are swapped");
    BlockEncoding be = make_block_encoding(a);
    MatrixXcd ue = forward_full_circuit(even_params, be);
    MatrixXcd uo = forward_full_circuit(odd_params, be);
    int dim = std::max(ue.rows(), uo.rows());
    auto pad = [&](const MatrixXcd& m) {
        MatrixXcd out = MatrixXcd::Identity(dim, dim);
        out.topLeftCorner(m.rows(), m.cols()) = m;
        return out;
    };
    MatrixXcd u0 = pad(ue), u1 = pad(uo);
    // V^* (|0><0| x U0 + |1><1| x U1) V with V = Hadamard
    MatrixXcd sel = MatrixXcd::Zero(2 * dim, 2 * dim);
    sel.topLeftCorner(dim, dim) = u0;
    sel.bottomRightCorner(dim, dim) = u1;
    MatrixXcd h(2, 2);
    h << 1, 1, 1, -1;
    h /= std::sqrt(2.0);
    MatrixXcd v = kron(h, MatrixXcd::Identity(dim, dim));
    MatrixXcd w = v.adjoint() * sel * v;
    // designated block: lcu index 0, ancilla index 0, encoding |0> block
    int n = static_cast<int>(a.rows());
    return w.topLeftCorner(n, n);
}

}  // namespace unqsp
