#ifndef NCGEO_FOCK_NUMERIC_HPP
#define NCGEO_FOCK_NUMERIC_HPP

#include <Eigen/Dense>
#include <complex>
#include <memory>
#include <vector>

#include "ncgeo/skew_lin.hpp"
#include "ncgeo/weyl_algebra.hpp"

namespace ncgeo {

// Truncated matrix model of R_theta.  The rank-2n part of theta is realized
// on n oscillator modes with per-mode occupation cutoff N_max (paper ladder
// normalization [a, a*] = 2); each rank-deficient direction is discretized by
// Gauss-Hermite quadrature nodes, where the trace becomes a weighted sum.
// trace_scale = (2 pi)^n prod_j mu_j.
class FockRep {
  public:
    FockRep(const SkewMatrix& theta, int cutoff, int grid_points = 32);

    int d() const { return d_; }
    const NormalForm& normal_form() const { return nf_; }
    int modes() const { return nf_.rank2n / 2; }
    int commutative_dirs() const { return d_ - nf_.rank2n; }
    int cutoff() const { return cutoff_; }
    int grid_points() const { return grid_points_; }
    double grid_half_width() const { return grid_half_width_; }
    double trace_scale() const { return trace_scale_; }
    long total_dim() const { return total_dim_; }
    const std::vector<double>& grid_nodes() const { return nodes_; }
    // Plain-integral quadrature weights w_i e^{y_i^2}.
    const std::vector<double>& grid_weights() const { return weights_; }
    // Per-basis-state weight entering the trace (1 in the full-rank case).
    const Eigen::VectorXd& diag_weight() const { return diag_weight_; }

    std::complex<double> weighted_trace(const Eigen::MatrixXcd& m) const;

    // Projector onto states with every mode occupation <= cutoff - drop.
    Eigen::VectorXd interior_mask(int drop = 2) const;

  private:
    int d_;
    NormalForm nf_;
    int cutoff_;
    int grid_points_;
    double grid_half_width_ = 0.0;
    double trace_scale_;
    long total_dim_;
    std::vector<double> nodes_, weights_;
    Eigen::VectorXd diag_weight_;
};

struct FockOperator {
    std::shared_ptr<const FockRep> rep;
    Eigen::MatrixXcd matrix;
};

std::shared_ptr<const FockRep> make_fock_rep(const SkewMatrix& theta, int cutoff,
                                             int grid_points = 32);

// Self-adjoint generator matrices X_1..X_d with [X_j, X_k] = -i theta_jk on
// the interior block.
std::vector<FockOperator> build_generators(const std::shared_ptr<const FockRep>& rep);

// trace_scale * (weighted) matrix trace.
std::complex<double> trace(const FockOperator& op);

struct HeatTraceResult {
    double value = 0.0;
    double tail_bound = 0.0;
    bool tail_warning = false;
};

// trace of e^{-t |x|^2} over the truncated representation, plus the analytic
// bound on the part of the oscillator spectrum lost to truncation.
HeatTraceResult heat_trace_numeric(const std::shared_ptr<const FockRep>& rep, double t,
                                   double tail_tol = 1e-8);

// t^{-d/2} * prod_j (pi t mu_j / sinh(t mu_j)) * pi^{(d-2n)/2}.
double heat_trace_closed(const SkewMatrix& theta, double t);

// Gauss-Hermite rule for weight e^{-y^2} (Golub-Welsch).
void gauss_hermite(int m, std::vector<double>& nodes, std::vector<double>& weights);

// e^{-t h} for self-adjoint h via eigendecomposition.
Eigen::MatrixXcd hermitian_heat(const Eigen::MatrixXcd& h, double t);

// Evaluate a normal-ordered element on generator matrices (x^alpha xi^beta ->
// gens[0]^a1 ... gens[2d-1]^b_d); gens.size() must be 2*a.dim() or a.dim().
Eigen::MatrixXcd eval_on_generators(const WeylElement<Cd>& a,
                                    const std::vector<Eigen::MatrixXcd>& gens);

Eigen::MatrixXcd kron(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b);

} // namespace ncgeo

#endif
