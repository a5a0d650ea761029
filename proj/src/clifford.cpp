#include "ncgeo/clifford.hpp"

#include <stdexcept>

namespace ncgeo {

namespace {

Eigen::MatrixXcd pauli(char which) {
    Eigen::MatrixXcd m(2, 2);
    const std::complex<double> i(0.0, 1.0);
    switch (which) {
        case 'x': m << 0, 1, 1, 0; break;
        case 'y': m << 0, -i, i, 0; break;
        case 'z': m << 1, 0, 0, -1; break;
        default: m.setIdentity();
    }
    return m;
}

Eigen::MatrixXcd kron2(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b) {
    Eigen::MatrixXcd r(a.rows() * b.rows(), a.cols() * b.cols());
    for (long i = 0; i < a.rows(); ++i)
        for (long j = 0; j < a.cols(); ++j)
            r.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    return r;
}

} // namespace

CliffordAlgebra clifford_build(int d) {
    if (d <= 0 || d % 2 != 0 || d > 8)
        throw std::invalid_argument("clifford_build: d must be even with 2 <= d <= 8");
    const int qubits = d / 2;
    CliffordAlgebra cl;
    cl.d = d;
    cl.c.resize(d);
    // Jordan-Wigner: c_{2k+1} = Z^k X I..., c_{2k+2} = Z^k Y I...
    for (int k = 0; k < qubits; ++k) {
        Eigen::MatrixXcd cx(1, 1), cy(1, 1);
        cx(0, 0) = 1.0;
        cy(0, 0) = 1.0;
        for (int q = 0; q < qubits; ++q) {
            char wx = q < k ? 'z' : (q == k ? 'x' : '1');
            char wy = q < k ? 'z' : (q == k ? 'y' : '1');
            cx = kron2(cx, pauli(wx));
            cy = kron2(cy, pauli(wy));
        }
        cl.c[2 * k] = cx;
        cl.c[2 * k + 1] = cy;
    }
    Eigen::MatrixXcd g = Eigen::MatrixXcd::Identity(1 << qubits, 1 << qubits);
    for (int j = 0; j < d; ++j) g = g * cl.c[j];
    std::complex<double> phase = std::pow(std::complex<double>(0.0, -1.0), qubits);
    cl.gamma = phase * g;
    return cl;
}

std::complex<double> str(const CliffordAlgebra& cl, const Eigen::MatrixXcd& a) {
    return (cl.gamma * a).trace();
}

Eigen::MatrixXcd curvature_form(const CliffordAlgebra& cl, const SkewMatrix& theta_prime) {
    if (theta_prime.dim() != cl.d)
        throw std::invalid_argument("curvature_form: dimension mismatch");
    const std::complex<double> half_i(0.0, 0.5);
    Eigen::MatrixXcd w = Eigen::MatrixXcd::Zero(cl.rep_dim(), cl.rep_dim());
    for (int j = 0; j < cl.d; ++j)
        for (int k = 0; k < cl.d; ++k)
            if (theta_prime(j, k) != 0.0) w += half_i * theta_prime(j, k) * (cl.c[j] * cl.c[k]);
    return w;
}

CliffordBasis::CliffordBasis(const CliffordAlgebra& cl) : d_(cl.d) {
    const int n = nwords();
    const long dim = cl.rep_dim();
    std::vector<Eigen::MatrixXcd> word(n);
    word[0] = Eigen::MatrixXcd::Identity(dim, dim);
    for (int s = 1; s < n; ++s) {
        int j = 0;
        while (!(s & (1 << j))) ++j;
        word[s] = cl.c[j] * word[s & ~(1 << j)];
    }
    str_.resize(n);
    for (int s = 0; s < n; ++s) str_[s] = (cl.gamma * word[s]).trace();
    mul_.resize(std::size_t(n) * n);
    for (int s = 0; s < n; ++s)
        for (int t = 0; t < n; ++t) {
            Eigen::MatrixXcd prod = word[s] * word[t];
            mul_[(std::size_t(s) << d_) + t] =
                (word[s ^ t].adjoint() * prod).trace() / double(dim);
        }
}

} // namespace ncgeo
