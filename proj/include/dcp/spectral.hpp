#pragma once

#include <Eigen/Dense>
#include <Eigen/SparseCore>
#include <cstdint>
#include <functional>

#include "dcp/errors.hpp"
#include "dcp/graph.hpp"

namespace dcp {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;

/// Sparse matrix with its transpose kept alongside for fast A^T x.
class SparseMatrix {
public:
    using Storage = Eigen::SparseMatrix<double, Eigen::RowMajor>;

    SparseMatrix() = default;
    explicit SparseMatrix(Storage a) : a_(std::move(a)), at_(a_.transpose()) {}

    /// 0/1 adjacency of g.
    static SparseMatrix adjacency(const DirectedGraph& g);

    Eigen::Index rows() const { return a_.rows(); }
    Eigen::Index cols() const { return a_.cols(); }

    Matrix mul(const Matrix& x) const { return a_ * x; }
    Matrix tmul(const Matrix& x) const { return at_ * x; }

    const Storage& storage() const { return a_; }
    Matrix dense() const { return Matrix(a_); }

private:
    Storage a_, at_;
};

struct SvdFactors {
    Matrix u;      // rows x r, orthonormal columns
    Vector sigma;  // r values, descending
    Matrix v;      // cols x r, orthonormal columns
    int iterations = 0;

    int rank() const { return static_cast<int>(sigma.size()); }
};

struct SvdOptions {
    double tol = 1e-10;
    int max_iter = 20000;
    int oversample = 10;
};

/// Top-r singular triplets by block subspace iteration from a seeded random
/// start. Converged when every retained triplet has residual
/// ||A v_i - sigma_i u_i|| <= tol * sigma_1. Each pair is sign-fixed so the
/// largest-magnitude entry of u_i is positive.
SvdFactors truncated_svd(const SparseMatrix& a, int r, std::uint64_t seed, const SvdOptions& opt = {});
SvdFactors truncated_svd(const DirectedGraph& g, int r, std::uint64_t seed, const SvdOptions& opt = {});

/// Dense U_r Sigma_r V_r^T.
Matrix low_rank_reconstruct(const SvdFactors& f);
/// Row sums of the reconstruction without forming it: U Sigma (V^T 1).
Vector low_rank_row_sums(const SvdFactors& f);
/// Column sums of the reconstruction: V Sigma (U^T 1).
Vector low_rank_col_sums(const SvdFactors& f);

struct HitsScores {
    Vector hub;
    Vector authority;
    int iterations = 0;
    bool converged = false;
};

/// Kleinberg's iteration from all-ones vectors: a <- A^T h, h <- A a, each
/// L2-normalized, until the largest elementwise change is below tol.
HitsScores hits(const DirectedGraph& g, double tol = 1e-10, int max_iter = 100000);

struct EigenResult {
    Vector values;   // descending
    Matrix vectors;  // n x k
    int iterations = 0;
    bool converged = false;
};

/// Largest-k eigenpairs of a symmetric positive semidefinite operator of
/// order n by subspace iteration with Rayleigh-Ritz extraction. Throws
/// ConvergenceError when max_iter is reached.
EigenResult top_eigenpairs(const std::function<Matrix(const Matrix&)>& op, Eigen::Index n, int k,
                           std::uint64_t seed, double tol = 1e-8, int max_iter = 20000, int oversample = 10);

}  // namespace dcp
