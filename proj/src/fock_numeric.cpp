#include "ncgeo/fock_numeric.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace ncgeo {

namespace {
constexpr double kPi = std::numbers::pi;
constexpr long kMaxDenseDim = 4096;
} // namespace

void gauss_hermite(int m, std::vector<double>& nodes, std::vector<double>& weights) {
    if (m < 1) throw std::invalid_argument("gauss_hermite: need at least one node");
    Eigen::MatrixXd j = Eigen::MatrixXd::Zero(m, m);
    for (int k = 1; k < m; ++k) {
        double b = std::sqrt(0.5 * k);
        j(k - 1, k) = b;
        j(k, k - 1) = b;
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(j);
    nodes.resize(m);
    weights.resize(m);
    for (int k = 0; k < m; ++k) {
        nodes[k] = es.eigenvalues()(k);
        double v0 = es.eigenvectors()(0, k);
        weights[k] = std::sqrt(kPi) * v0 * v0;
    }
}

FockRep::FockRep(const SkewMatrix& theta, int cutoff, int grid_points)
    : d_(theta.dim()), nf_(standard_form(theta)), cutoff_(cutoff), grid_points_(grid_points) {
    if (cutoff < 1) throw std::invalid_argument("FockRep: cutoff must be >= 1");
    if (grid_points < 1) throw std::invalid_argument("FockRep: grid_points must be >= 1");

    const int n = modes(), c = commutative_dirs();
    trace_scale_ = 1.0;
    for (double mu : nf_.mus) trace_scale_ *= 2.0 * kPi * mu;

    total_dim_ = 1;
    for (int k = 0; k < n; ++k) {
        total_dim_ *= cutoff_ + 1;
        if (total_dim_ > kMaxDenseDim) throw std::invalid_argument("FockRep: dense dimension too large");
    }
    for (int k = 0; k < c; ++k) {
        total_dim_ *= grid_points_;
        if (total_dim_ > kMaxDenseDim) throw std::invalid_argument("FockRep: dense dimension too large");
    }

    if (c > 0) {
        std::vector<double> raw_w;
        gauss_hermite(grid_points_, nodes_, raw_w);
        weights_.resize(grid_points_);
        for (int k = 0; k < grid_points_; ++k)
            weights_[k] = raw_w[k] * std::exp(nodes_[k] * nodes_[k]);
        grid_half_width_ = std::abs(nodes_.back());
    }

    diag_weight_ = Eigen::VectorXd::Ones(total_dim_);
    if (c > 0) {
        long mode_dim = 1;
        for (int k = 0; k < n; ++k) mode_dim *= cutoff_ + 1;
        long grid_dim = total_dim_ / mode_dim;
        for (long idx = 0; idx < total_dim_; ++idx) {
            long g = idx % grid_dim;
            double w = 1.0;
            for (int axis = c - 1; axis >= 0; --axis) {
                w *= weights_[g % grid_points_];
                g /= grid_points_;
            }
            diag_weight_(idx) = w;
        }
    }
}

std::complex<double> FockRep::weighted_trace(const Eigen::MatrixXcd& m) const {
    if (m.rows() != total_dim_ || m.cols() != total_dim_)
        throw std::invalid_argument("weighted_trace: dimension mismatch");
    std::complex<double> s = 0.0;
    for (long i = 0; i < total_dim_; ++i) s += diag_weight_(i) * m(i, i);
    return trace_scale_ * s;
}

Eigen::VectorXd FockRep::interior_mask(int drop) const {
    Eigen::VectorXd mask = Eigen::VectorXd::Ones(total_dim_);
    const int n = modes();
    long grid_dim = 1;
    for (int k = 0; k < commutative_dirs(); ++k) grid_dim *= grid_points_;
    for (long idx = 0; idx < total_dim_; ++idx) {
        long m = idx / grid_dim;
        for (int axis = 0; axis < n; ++axis) {
            if (m % (cutoff_ + 1) > cutoff_ - drop) {
                mask(idx) = 0.0;
                break;
            }
            m /= cutoff_ + 1;
        }
    }
    return mask;
}

std::shared_ptr<const FockRep> make_fock_rep(const SkewMatrix& theta, int cutoff, int grid_points) {
    return std::make_shared<const FockRep>(theta, cutoff, grid_points);
}

Eigen::MatrixXcd kron(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b) {
    Eigen::MatrixXcd r(a.rows() * b.rows(), a.cols() * b.cols());
    for (long i = 0; i < a.rows(); ++i)
        for (long j = 0; j < a.cols(); ++j)
            r.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    return r;
}

namespace {

// I_pre (x) A (x) I_post with axis dimensions as in the basis ordering:
// oscillator modes first, then commutative directions.
Eigen::MatrixXcd embed(const Eigen::MatrixXcd& a, long pre, long post) {
    Eigen::MatrixXcd r = kron(Eigen::MatrixXcd::Identity(pre, pre), a);
    return kron(r, Eigen::MatrixXcd::Identity(post, post));
}

} // namespace

std::vector<FockOperator> build_generators(const std::shared_ptr<const FockRep>& rep) {
    const int d = rep->d(), n = rep->modes(), c = rep->commutative_dirs();
    const int k1 = rep->cutoff() + 1;
    const std::complex<double> im(0.0, 1.0);

    // Single-mode ladder: a* |n> = sqrt(2n+2) |n+1>, so [a, a*] = 2.
    Eigen::MatrixXcd ad = Eigen::MatrixXcd::Zero(k1, k1);
    for (int k = 0; k + 1 < k1; ++k) ad(k + 1, k) = std::sqrt(2.0 * k + 2.0);
    Eigen::MatrixXcd an = ad.adjoint();
    Eigen::MatrixXcd q = (ad - an) / (2.0 * im);
    Eigen::MatrixXcd p = (ad + an) / 2.0;

    // Standard-form generators: (Q_1..Q_n, P_1..P_n, y_1..y_c) satisfy
    // [Xt_j, Xt_k] = -i J_jk for the standard block J.
    std::vector<Eigen::MatrixXcd> std_gens(d);
    long mode_dim = 1;
    for (int k = 0; k < n; ++k) mode_dim *= k1;
    long grid_dim = rep->total_dim() / mode_dim;
    for (int j = 0; j < n; ++j) {
        long pre = 1;
        for (int k = 0; k < j; ++k) pre *= k1;
        long post = rep->total_dim() / (pre * k1);
        std_gens[j] = embed(q, pre, post);
        std_gens[n + j] = embed(p, pre, post);
    }
    for (int j = 0; j < c; ++j) {
        Eigen::MatrixXcd diag = Eigen::MatrixXcd::Zero(rep->grid_points(), rep->grid_points());
        for (int k = 0; k < rep->grid_points(); ++k) diag(k, k) = rep->grid_nodes()[k];
        long pre = mode_dim;
        for (int k = 0; k < j; ++k) pre *= rep->grid_points();
        long post = rep->total_dim() / (pre * rep->grid_points());
        std_gens[2 * n + j] = embed(diag, pre, post);
    }
    (void)grid_dim;

    // Pull back through T: X_j = sum_k (T^{-1})_{jk} Xt_k reproduces
    // [X_j, X_k] = -i theta_jk from T theta T^t = J.
    Eigen::MatrixXd tinv = rep->normal_form().T.inverse();
    std::vector<FockOperator> gens(d);
    std::shared_ptr<const FockRep> hold = rep;
    for (int j = 0; j < d; ++j) {
        Eigen::MatrixXcd x = Eigen::MatrixXcd::Zero(rep->total_dim(), rep->total_dim());
        for (int k = 0; k < d; ++k)
            if (tinv(j, k) != 0.0) x += tinv(j, k) * std_gens[k];
        gens[j] = FockOperator{hold, std::move(x)};
    }
    return gens;
}

std::complex<double> trace(const FockOperator& op) { return op.rep->weighted_trace(op.matrix); }

Eigen::MatrixXcd hermitian_heat(const Eigen::MatrixXcd& h, double t) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(h);
    Eigen::VectorXd ev = es.eigenvalues();
    Eigen::VectorXcd boltz(ev.size());
    for (long k = 0; k < ev.size(); ++k) boltz(k) = std::exp(-t * ev(k));
    return es.eigenvectors() * boltz.asDiagonal() * es.eigenvectors().adjoint();
}

HeatTraceResult heat_trace_numeric(const std::shared_ptr<const FockRep>& rep, double t,
                                   double tail_tol) {
    if (t <= 0.0) throw std::invalid_argument("heat_trace_numeric: t must be positive");
    auto gens = build_generators(rep);
    Eigen::MatrixXcd h = Eigen::MatrixXcd::Zero(rep->total_dim(), rep->total_dim());
    for (const auto& g : gens) h += g.matrix * g.matrix;

    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(h);
    const Eigen::VectorXd& ev = es.eigenvalues();
    const Eigen::MatrixXcd& v = es.eigenvectors();

    // weighted trace of e^{-t h}: sum_k e^{-t ev_k} sum_i w_i |v_ik|^2
    double total = 0.0;
    for (long k = 0; k < rep->total_dim(); ++k) {
        double wk = 0.0;
        for (long i = 0; i < rep->total_dim(); ++i)
            wk += rep->diag_weight()(i) * std::norm(v(i, k));
        total += std::exp(-t * ev(k)) * wk;
    }

    HeatTraceResult r;
    r.value = rep->trace_scale() * total;

    // Oscillator truncation tail from the exact spectrum mu_j (2k+1).
    double full = 1.0, part = 1.0;
    for (double mu : rep->normal_form().mus) {
        double q = std::exp(-2.0 * t * mu);
        double f = std::exp(-t * mu) / (1.0 - q);
        double p = f * (1.0 - std::pow(q, rep->cutoff() + 1));
        full *= f;
        part *= p;
    }
    double comm = 1.0;
    for (int cdir = 0; cdir < rep->commutative_dirs(); ++cdir) {
        double g = 0.0;
        for (int i = 0; i < rep->grid_points(); ++i)
            g += rep->grid_weights()[i] *
                 std::exp(-t * rep->grid_nodes()[i] * rep->grid_nodes()[i]);
        comm *= g;
    }
    r.tail_bound = rep->trace_scale() * comm * (full - part);
    r.tail_warning = r.tail_bound > tail_tol * std::max(1.0, std::abs(r.value));
    return r;
}

double heat_trace_closed(const SkewMatrix& theta, double t) {
    if (t <= 0.0) throw std::invalid_argument("heat_trace_closed: t must be positive");
    NormalForm nf = standard_form(theta);
    const int d = theta.dim();
    const int n = nf.rank2n / 2;
    double v = std::pow(t, -0.5 * d) * std::pow(kPi, 0.5 * (d - 2 * n));
    for (double mu : nf.mus) v *= kPi * t * mu / std::sinh(t * mu);
    return v;
}

Eigen::MatrixXcd eval_on_generators(const WeylElement<Cd>& a,
                                    const std::vector<Eigen::MatrixXcd>& gens) {
    const int d = a.dim();
    if (int(gens.size()) != 2 * d && int(gens.size()) != d)
        throw std::invalid_argument("eval_on_generators: need d or 2d generator matrices");
    if (gens.empty()) throw std::invalid_argument("eval_on_generators: empty generator list");
    const long dim = gens[0].rows();
    Eigen::MatrixXcd acc = Eigen::MatrixXcd::Zero(dim, dim);
    for (const auto& [m, c] : a.terms()) {
        Eigen::MatrixXcd term = Eigen::MatrixXcd::Identity(dim, dim);
        for (int g = 0; g < int(m.size()); ++g) {
            if (m[g] == 0) continue;
            if (g >= int(gens.size()))
                throw std::invalid_argument("eval_on_generators: monomial uses missing generator");
            for (int k = 0; k < m[g]; ++k) term = term * gens[g];
        }
        acc += c * term;
    }
    return acc;
}

} // namespace ncgeo
