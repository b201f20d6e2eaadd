#include "susyqm/eigensolver.hpp"

#include "susyqm/errors.hpp"

#include <Eigen/SparseCholesky>

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>

namespace susyqm {

double infinity_norm(const CsrMatrix& a) {
    double best = 0.0;
    for (int r = 0; r < a.outerSize(); ++r) {
        double s = 0.0;
        for (CsrMatrix::InnerIterator it(a, r); it; ++it) s += std::abs(it.value());
        best = std::max(best, s);
    }
    return best;
}

double gershgorin_lower(const CsrMatrix& a) {
    double lower = std::numeric_limits<double>::infinity();
    for (int r = 0; r < a.outerSize(); ++r) {
        double diag = 0.0, off = 0.0;
        for (CsrMatrix::InnerIterator it(a, r); it; ++it) {
            if (it.col() == r) diag += it.value();
            else off += std::abs(it.value());
        }
        lower = std::min(lower, diag - off);
    }
    return lower;
}

double max_asymmetry(const CsrMatrix& a) {
    const CsrMatrix t = a.transpose();
    const CsrMatrix d = a - t;
    double m = 0.0;
    for (int r = 0; r < d.outerSize(); ++r) {
        for (CsrMatrix::InnerIterator it(d, r); it; ++it) m = std::max(m, std::abs(it.value()));
    }
    return m;
}

int count_below(const CsrMatrix& h, double x) {
    if (h.rows() != h.cols()) throw Error(ErrorCode::DimensionMismatch, "inertia count needs a square matrix");
    CsrMatrix shifted = h;
    for (Eigen::Index i = 0; i < h.rows(); ++i) shifted.coeffRef(i, i) -= x;
    shifted.makeCompressed();
    Eigen::SimplicialLDLT<Eigen::SparseMatrix<double>> ldlt(Eigen::SparseMatrix<double>{shifted});
    if (ldlt.info() != Eigen::Success || (ldlt.vectorD().array() == 0.0).any()) return -1;
    return static_cast<int>((ldlt.vectorD().array() < 0.0).count());
}

namespace {

Eigen::MatrixXd orthonormal_basis(const Eigen::MatrixXd& k) {
    Eigen::HouseholderQR<Eigen::MatrixXd> qr(k);
    return qr.householderQ() * Eigen::MatrixXd::Identity(k.rows(), k.cols());
}

EigenResult dense_lowest(const CsrMatrix& h, int k, double scale) {
    const Eigen::MatrixXd dense = Eigen::MatrixXd(h);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(dense);
    if (es.info() != Eigen::Success) throw Error(ErrorCode::NonConvergence, "dense eigensolver failed");
    EigenResult r;
    r.dense = true;
    r.scale = scale;
    r.values = es.eigenvalues().head(k);
    r.vectors = es.eigenvectors().leftCols(k);
    const Eigen::MatrixXd res = dense * r.vectors - r.vectors * r.values.asDiagonal();
    r.max_residual = res.colwise().norm().maxCoeff();
    return r;
}

} // namespace

EigenResult eigen_lowest(const CsrMatrix& h, int k, const EigenOptions& options) {
    const Eigen::Index n = h.rows();
    if (h.cols() != n) throw Error(ErrorCode::DimensionMismatch, "eigensolver needs a square matrix");
    if (k < 1 || k >= n) throw Error(ErrorCode::InvalidArgument, "k must satisfy 1 <= k < dimension");
    const double scale = std::max(infinity_norm(h), std::numeric_limits<double>::min());
    if (max_asymmetry(h) > 1e-12 * scale) throw Error(ErrorCode::InvalidArgument, "eigensolver needs a symmetric matrix");
    const int p = k + std::max(options.guard_vectors, k / 2);
    if (n <= options.dense_limit || 3 * static_cast<Eigen::Index>(p) >= n) return dense_lowest(h, k, scale);

    const double tol = options.tolerance * scale;

    // Gershgorin is a safe lower bound but can sit far below the spectrum for
    // badly scaled operators. Tighter shifts are accepted when the LDLT pivots
    // prove H - sigma positive definite (Sylvester inertia).
    const double sigma_safe = gershgorin_lower(h) - 1e-6 * scale;
    Eigen::SimplicialLDLT<Eigen::SparseMatrix<double>> ldlt;
    auto factor = [&](double sigma) {
        CsrMatrix shifted = h;
        for (Eigen::Index i = 0; i < n; ++i) shifted.coeffRef(i, i) -= sigma;
        shifted.makeCompressed();
        ldlt.compute(Eigen::SparseMatrix<double>(shifted));
        return ldlt.info() == Eigen::Success && (ldlt.vectorD().array() > 0.0).all();
    };
    bool factored = false;
    for (const double eps : {1e-12, 1e-10, 1e-8}) {
        const double sigma = -eps * scale;
        if (sigma <= sigma_safe) break;
        if ((factored = factor(sigma))) break;
    }
    if (!factored) {
        factor(sigma_safe);
        if (ldlt.info() != Eigen::Success) throw Error(ErrorCode::NonConvergence, "factorization of the shifted operator failed");
    }

    std::mt19937_64 rng(options.seed);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    Eigen::MatrixXd x(n, p);
    for (Eigen::Index c = 0; c < p; ++c) {
        for (Eigen::Index r = 0; r < n; ++r) x(r, c) = u(rng);
    }
    x = orthonormal_basis(x);

    EigenResult out;
    out.scale = scale;
    Eigen::MatrixXd hx;
    for (int iter = 1; iter <= options.max_iterations; ++iter) {
        const Eigen::MatrixXd s1 = ldlt.solve(x);
        const Eigen::MatrixXd s2 = ldlt.solve(s1);
        Eigen::MatrixXd krylov(n, 3 * p);
        krylov << x, s1, s2;
        const Eigen::MatrixXd q = orthonormal_basis(krylov);
        Eigen::MatrixXd hq;
        csr_matmat_parallel(h, q, hq);
        Eigen::MatrixXd t = q.transpose() * hq;
        t = 0.5 * (t + t.transpose()).eval();
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(t);
        const Eigen::MatrixXd y = es.eigenvectors().leftCols(p);
        x = q * y;
        hx = hq * y;
        const Eigen::VectorXd theta = es.eigenvalues().head(p);
        double worst = 0.0;
        for (int c = 0; c < k; ++c) worst = std::max(worst, (hx.col(c) - theta(c) * x.col(c)).norm());
        out.iterations = iter;
        out.max_residual = worst;
        if (worst < tol) {
            out.values = theta.head(k);
            out.vectors = x.leftCols(k);
            return out;
        }
    }
    std::ostringstream msg;
    msg << "eigensolver stopped after " << options.max_iterations << " iterations with residual " << out.max_residual
        << " (target " << tol << ")";
    throw Error(ErrorCode::NonConvergence, msg.str());
}

} // namespace susyqm
