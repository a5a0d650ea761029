#include "ncgeo/skew_lin.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>
#include <algorithm>
#include <cmath>
#include <numeric>

namespace ncgeo {

SkewMatrix::SkewMatrix(const Eigen::MatrixXd& entries) {
    if (entries.rows() != entries.cols() || entries.rows() < 1)
        throw std::invalid_argument("SkewMatrix: input must be square and nonempty");
    dim_ = int(entries.rows());
    double scale = std::max(1.0, entries.cwiseAbs().maxCoeff());
    if (((entries + entries.transpose()).cwiseAbs().maxCoeff()) > 1e-12 * scale)
        throw std::invalid_argument("SkewMatrix: input is not skew-symmetric within 1e-12");
    m_ = 0.5 * (entries - entries.transpose());
}

SkewMatrix SkewMatrix::scalar2(double s) {
    Eigen::MatrixXd m(2, 2);
    m << 0, s, -s, 0;
    return SkewMatrix(m);
}

Eigen::MatrixXd standard_block(int dim, int rank2n) {
    int n = rank2n / 2;
    Eigen::MatrixXd j = Eigen::MatrixXd::Zero(dim, dim);
    for (int k = 0; k < n; ++k) {
        j(k, n + k) = -1.0;
        j(n + k, k) = 1.0;
    }
    return j;
}

NormalForm standard_form(const SkewMatrix& theta) {
    const int d = theta.dim();
    const Eigen::MatrixXd& a = theta.entries();

    // Rank by thresholding singular values at 1e-9 * ||theta||.
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(a);
    double norm = svd.singularValues().size() ? svd.singularValues()(0) : 0.0;
    double tol = 1e-9 * norm;

    NormalForm nf;
    if (norm == 0.0) {
        nf.T = Eigen::MatrixXd::Identity(d, d);
        return nf;
    }

    // Real Schur form of a skew matrix is block diagonal with 2x2 blocks
    // [[0, mu], [-mu, 0]] and zeros.
    Eigen::RealSchur<Eigen::MatrixXd> schur(a);
    if (schur.info() != Eigen::Success)
        throw std::runtime_error("standard_form: real Schur decomposition failed");
    Eigen::MatrixXd s = schur.matrixT();
    Eigen::MatrixXd u = schur.matrixU();

    struct Pair {
        double mu;
        int col_pos, col_neg; // columns of u: s(col_pos, col_neg) = +mu
    };
    std::vector<Pair> pairs;
    std::vector<int> kernel_cols;
    for (int i = 0; i < d;) {
        if (i + 1 < d && std::abs(s(i + 1, i)) > tol) {
            double mu = 0.5 * (std::abs(s(i, i + 1)) + std::abs(s(i + 1, i)));
            if (s(i, i + 1) > 0)
                pairs.push_back({mu, i, i + 1});
            else
                pairs.push_back({mu, i + 1, i});
            i += 2;
        } else {
            kernel_cols.push_back(i);
            i += 1;
        }
    }
    std::sort(pairs.begin(), pairs.end(), [](const Pair& l, const Pair& r) { return l.mu > r.mu; });

    const int n = int(pairs.size());
    nf.rank2n = 2 * n;
    nf.mus.reserve(n);
    for (const Pair& p : pairs) nf.mus.push_back(p.mu);

    // Row j of T picks the Schur vector (scaled by 1/sqrt(mu)) that maps the
    // block pair onto the target slots (e_j, e_{n+j}).  With columns (v+, v-)
    // of u satisfying v+^t a v- = +mu one gets T a T^t in standard form for
    // rows T_j = v-^t/sqrt(mu), T_{n+j} = v+^t/sqrt(mu):
    //   (T a T^t)_{j, n+j} = v-^t a v+ / mu = -1.
    nf.T = Eigen::MatrixXd::Zero(d, d);
    for (int j = 0; j < n; ++j) {
        double r = 1.0 / std::sqrt(pairs[j].mu);
        nf.T.row(j) = r * u.col(pairs[j].col_neg).transpose();
        nf.T.row(n + j) = r * u.col(pairs[j].col_pos).transpose();
    }
    for (int k = 0; k < int(kernel_cols.size()); ++k)
        nf.T.row(2 * n + k) = u.col(kernel_cols[k]).transpose();
    return nf;
}

SkewMatrix assemble_big_theta(const SkewMatrix& theta, const SkewMatrix& theta_prime) {
    if (theta.dim() != theta_prime.dim())
        throw std::invalid_argument("assemble_big_theta: dimension mismatch");
    const int d = theta.dim();
    Eigen::MatrixXd big = Eigen::MatrixXd::Zero(2 * d, 2 * d);
    big.topLeftCorner(d, d) = theta.entries();
    big.bottomRightCorner(d, d) = theta_prime.entries();
    big.topRightCorner(d, d) = -Eigen::MatrixXd::Identity(d, d);
    big.bottomLeftCorner(d, d) = Eigen::MatrixXd::Identity(d, d);
    return SkewMatrix(big);
}

double pfaffian_modulus(const SkewMatrix& theta) {
    NormalForm nf = standard_form(theta);
    return std::accumulate(nf.mus.begin(), nf.mus.end(), 1.0, std::multiplies<double>());
}

} // namespace ncgeo
