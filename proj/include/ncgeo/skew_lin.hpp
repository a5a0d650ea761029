#ifndef NCGEO_SKEW_LIN_HPP
#define NCGEO_SKEW_LIN_HPP

#include <Eigen/Dense>
#include <stdexcept>
#include <vector>

namespace ncgeo {

// Real skew-symmetric deformation matrix.  Construction antisymmetrizes the
// input exactly and rejects anything further than 1e-12 from skew.
class SkewMatrix {
  public:
    explicit SkewMatrix(const Eigen::MatrixXd& entries);
    explicit SkewMatrix(int dim) : dim_(dim), m_(Eigen::MatrixXd::Zero(dim, dim)) {
        if (dim < 1) throw std::invalid_argument("SkewMatrix: dimension must be positive");
    }
    // d=2 convenience: [[0, s], [-s, 0]].
    static SkewMatrix scalar2(double s);

    int dim() const { return dim_; }
    const Eigen::MatrixXd& entries() const { return m_; }
    double operator()(int j, int k) const { return m_(j, k); }

  private:
    int dim_;
    Eigen::MatrixXd m_;
};

// T*theta*T^t equals [[0,-I_n],[I_n,0]] (+) 0_{d-2n}; mus are the positive
// imaginary parts of the eigenvalues of theta, sorted descending.
struct NormalForm {
    Eigen::MatrixXd T;
    int rank2n = 0;
    std::vector<double> mus;
};

Eigen::MatrixXd standard_block(int dim, int rank2n);

NormalForm standard_form(const SkewMatrix& theta);

// Theta = [[theta, -I_d], [I_d, theta_prime]] under generator ordering
// (x_1..x_d, xi_1..xi_d); consistent with [xi_j, x_k] = -i delta_jk.
SkewMatrix assemble_big_theta(const SkewMatrix& theta, const SkewMatrix& theta_prime);

// prod_j mu_j = |det theta|^{1/2}; 1 for rank zero.
double pfaffian_modulus(const SkewMatrix& theta);

} // namespace ncgeo

#endif
