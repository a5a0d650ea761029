#include "ncgeo/bridge.hpp"

#include <Eigen/Eigenvalues>
#include <numbers>

namespace ncgeo {

Eigen::MatrixXcd lambda_matrix(const GridFunction& f, const std::vector<FockOperator>& gens) {
    const int d = f.d();
    if (int(gens.size()) != d) throw std::invalid_argument("lambda_matrix: need d generators");
    const long dim = gens[0].matrix.rows();
    const double dk = std::numbers::pi / f.half_width();
    const int M = f.points_per_axis();
    const std::complex<double> i(0.0, 1.0);

    Eigen::MatrixXcd acc = Eigen::MatrixXcd::Zero(dim, dim);
    long total = f.size();
    for (long idx = 0; idx < total; ++idx) {
        Cd coef = f.fourier()[idx];
        if (std::abs(coef) < 1e-16) continue;
        long rest = idx;
        Eigen::MatrixXcd kx = Eigen::MatrixXcd::Zero(dim, dim);
        for (int a = d - 1; a >= 0; --a) {
            int s = int(rest % M);
            rest /= M;
            kx += f.freq_coord(s) * gens[a].matrix;
        }
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(kx);
        Eigen::VectorXcd ph(dim);
        for (long k = 0; k < dim; ++k) ph(k) = std::exp(i * es.eigenvalues()(k));
        acc += coef * (es.eigenvectors() * ph.asDiagonal() * es.eigenvectors().adjoint());
    }
    return std::pow(dk / (2.0 * std::numbers::pi), d) * acc;
}

} // namespace ncgeo
