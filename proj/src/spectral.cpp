#include "dcp/spectral.hpp"

#include <Eigen/QR>
#include <Eigen/SVD>
#include <algorithm>
#include <cmath>

#include "dcp/rng.hpp"

namespace dcp {

namespace {

Matrix orthonormalize(const Matrix& y) {
    Eigen::HouseholderQR<Matrix> qr(y);
    return qr.householderQ() * Matrix::Identity(y.rows(), y.cols());
}

Matrix random_block(Eigen::Index rows, Eigen::Index cols, std::uint64_t seed) {
    Rng rng(seed);
    Matrix x(rows, cols);
    for (Eigen::Index j = 0; j < cols; ++j)
        for (Eigen::Index i = 0; i < rows; ++i) x(i, j) = 2.0 * rng.uniform() - 1.0;
    return x;
}

void fix_signs(Matrix& u, Matrix& v) {
    for (Eigen::Index i = 0; i < u.cols(); ++i) {
        Eigen::Index arg = 0;
        u.col(i).cwiseAbs().maxCoeff(&arg);
        if (u(arg, i) < 0) {
            u.col(i) *= -1.0;
            v.col(i) *= -1.0;
        }
    }
}

}  // namespace

SparseMatrix SparseMatrix::adjacency(const DirectedGraph& g) {
    std::vector<Eigen::Triplet<double>> t;
    t.reserve(g.m());
    for (const auto& [u, v] : g.edges()) t.emplace_back(u, v, 1.0);
    Storage a(static_cast<Eigen::Index>(g.n()), static_cast<Eigen::Index>(g.n()));
    a.setFromTriplets(t.begin(), t.end());
    return SparseMatrix(std::move(a));
}

SvdFactors truncated_svd(const SparseMatrix& a, int r, std::uint64_t seed, const SvdOptions& opt) {
    const Eigen::Index rows = a.rows(), cols = a.cols();
    const Eigen::Index full = std::min(rows, cols);
    if (r < 1 || r > full) throw Error("truncated_svd: rank must satisfy 1 <= r <= min(rows, cols)");
    const Eigen::Index b = std::min<Eigen::Index>(full, r + std::max(opt.oversample, 0));

    Matrix qv = orthonormalize(random_block(cols, b, seed));
    SvdFactors f;
    for (int it = 1; it <= opt.max_iter; ++it) {
        Matrix qu = orthonormalize(a.mul(qv));
        Matrix z = a.tmul(qu);
        Matrix qz = orthonormalize(z);
        Matrix small = qz.transpose() * z;
        Eigen::JacobiSVD<Matrix> svd(small, Eigen::ComputeFullU | Eigen::ComputeFullV);

        f.u = (qu * svd.matrixV()).leftCols(r);
        f.v = (qz * svd.matrixU()).leftCols(r);
        f.sigma = svd.singularValues().head(r);
        f.iterations = it;
        fix_signs(f.u, f.v);

        const double s1 = f.sigma.size() ? f.sigma(0) : 0.0;
        Matrix resid = a.mul(f.v) - f.u * f.sigma.asDiagonal();
        if (resid.colwise().norm().maxCoeff() <= opt.tol * s1) return f;
        qv = qz;
    }
    throw ConvergenceError<SvdFactors>("truncated_svd did not converge", std::move(f));
}

SvdFactors truncated_svd(const DirectedGraph& g, int r, std::uint64_t seed, const SvdOptions& opt) {
    return truncated_svd(SparseMatrix::adjacency(g), r, seed, opt);
}

Matrix low_rank_reconstruct(const SvdFactors& f) { return f.u * f.sigma.asDiagonal() * f.v.transpose(); }

Vector low_rank_row_sums(const SvdFactors& f) {
    Vector vt1 = f.v.transpose() * Vector::Ones(f.v.rows());
    return f.u * (f.sigma.asDiagonal() * vt1);
}

Vector low_rank_col_sums(const SvdFactors& f) {
    Vector ut1 = f.u.transpose() * Vector::Ones(f.u.rows());
    return f.v * (f.sigma.asDiagonal() * ut1);
}

HitsScores hits(const DirectedGraph& g, double tol, int max_iter) {
    if (g.m() == 0) throw Error("hits: graph has no edges");
    const auto a_mat = SparseMatrix::adjacency(g);
    const auto& a = a_mat.storage();
    Eigen::SparseMatrix<double, Eigen::RowMajor> at = a.transpose();

    HitsScores s;
    s.hub = Vector::Ones(a.rows());
    s.authority = Vector::Ones(a.rows());
    for (int it = 1; it <= max_iter; ++it) {
        Vector auth = at * s.hub;
        auth /= auth.norm();
        Vector hub = a * auth;
        hub /= hub.norm();
        const double change = std::max((auth - s.authority).cwiseAbs().maxCoeff(),
                                       (hub - s.hub).cwiseAbs().maxCoeff());
        s.authority = std::move(auth);
        s.hub = std::move(hub);
        s.iterations = it;
        if (change < tol) {
            s.converged = true;
            return s;
        }
    }
    throw ConvergenceError<HitsScores>("hits did not converge", std::move(s));
}

EigenResult top_eigenpairs(const std::function<Matrix(const Matrix&)>& op, Eigen::Index n, int k,
                           std::uint64_t seed, double tol, int max_iter, int oversample) {
    if (k < 1 || k > n) throw Error("top_eigenpairs: need 1 <= k <= n");
    const Eigen::Index b = std::min<Eigen::Index>(n, k + std::max(oversample, 0));
    Matrix q = orthonormalize(random_block(n, b, seed));
    EigenResult r;
    for (int it = 1; it <= max_iter; ++it) {
        Matrix y = op(q);
        Matrix h = q.transpose() * y;
        h = 0.5 * (h + h.transpose()).eval();
        Eigen::SelfAdjointEigenSolver<Matrix> es(h);
        // ascending order; flip to descending
        Matrix w = es.eigenvectors().rowwise().reverse();
        Vector lam = es.eigenvalues().reverse();

        Matrix x = q * w;
        Matrix ax = y * w;
        r.values = lam.head(k);
        r.vectors = x.leftCols(k);
        r.iterations = it;
        const double scale = std::abs(lam(0));
        Matrix resid = ax.leftCols(k) - r.vectors * r.values.asDiagonal();
        if (resid.colwise().norm().maxCoeff() <= tol * scale) {
            Matrix dummy = r.vectors;
            fix_signs(r.vectors, dummy);
            r.converged = true;
            return r;
        }
        q = orthonormalize(ax);
    }
    throw ConvergenceError<EigenResult>("top_eigenpairs did not converge", std::move(r));
}

}  // namespace dcp
