#include "ncgeo/symbol_calculus.hpp"

#include <Eigen/Eigenvalues>

#include "ncgeo/fock_numeric.hpp"

namespace ncgeo {

namespace {

SkewMatrix block_diag(const SkewMatrix& a, const SkewMatrix& b) {
    const int d = a.dim();
    Eigen::MatrixXd m = Eigen::MatrixXd::Zero(2 * d, 2 * d);
    m.topLeftCorner(d, d) = a.entries();
    m.bottomRightCorner(d, d) = b.entries();
    return SkewMatrix(m);
}

SkewMatrix context_matrix(const WeylElement<Cd>& a, bool prime) {
    const int d = a.dim();
    Eigen::MatrixXd m(d, d);
    for (int j = 0; j < d; ++j)
        for (int k = 0; k < d; ++k) {
            Cd v = prime ? a.context()->theta_prime(j, k) : a.context()->theta(j, k);
            m(j, k) = v.real();
        }
    return SkewMatrix(m);
}

struct RegulatedTrace {
    Cd value;
    double top_mass;
};

// trace(A e^{-|x|^2} e^{-|xi|^2}) on a 2d-generator representation; the top
// occupation shell's share of the diagonal mass is the truncation diagnostic.
RegulatedTrace regulated_trace(const WeylElement<Cd>& elem,
                               const std::shared_ptr<const FockRep>& rep) {
    auto gens = build_generators(rep);
    const int two_d = rep->d();
    const int d = two_d / 2;
    const long dim = rep->total_dim();

    Eigen::MatrixXcd x2 = Eigen::MatrixXcd::Zero(dim, dim), xi2 = Eigen::MatrixXcd::Zero(dim, dim);
    for (int j = 0; j < d; ++j) x2 += gens[j].matrix * gens[j].matrix;
    for (int j = d; j < two_d; ++j) xi2 += gens[j].matrix * gens[j].matrix;

    std::vector<Eigen::MatrixXcd> mats(two_d);
    for (int j = 0; j < two_d; ++j) mats[j] = gens[j].matrix;
    Eigen::MatrixXcd a = eval_on_generators(elem, mats);
    Eigen::MatrixXcd prod = a * hermitian_heat(x2, 1.0) * hermitian_heat(xi2, 1.0);

    // Truncation diagnostic: diagonal mass in the top shell, extrapolated by
    // the shell-to-tail ratio of a ~1/n^2 decay (the slowest the regulated
    // product exhibits); conservative for anything faster.
    const int drop = std::max(1, rep->cutoff() / 8);
    Eigen::VectorXd interior = rep->interior_mask(drop);
    Cd total(0);
    double shell = 0.0;
    for (long i = 0; i < dim; ++i) {
        Cd v = rep->diag_weight()(i) * prod(i, i);
        total += v;
        if (interior(i) == 0.0) shell += std::abs(v);
    }
    RegulatedTrace out;
    out.value = rep->trace_scale() * total;
    out.top_mass = rep->trace_scale() * shell * double(rep->cutoff()) / double(drop);
    return out;
}

} // namespace

SymbolTraceResult symbol_trace(const WeylElement<Cd>& a, int cutoff, int grid_points) {
    if (a.context()->kind() != AlgebraKind::Symbol)
        throw std::invalid_argument("symbol_trace: input must live in the symbol algebra");
    SkewMatrix theta = context_matrix(a, false);
    SkewMatrix theta_prime = context_matrix(a, true);

    SymbolTraceResult out;
    if (a.is_zero()) return out;

    // Operator side: tau_Theta(Op(a) e^{-|x|^2} e^{-|xi|^2}) in R_Theta.
    auto rep_op = make_fock_rep(assemble_big_theta(theta, theta_prime), cutoff, grid_points);
    WeylElement<Cd> qa = quantize(a);
    // The quantized element evaluates on the Theta generators with the same
    // normal-ordered term map.
    RegulatedTrace op_side = regulated_trace(qa, rep_op);

    // Symbol side: tau_{theta,theta'}(a G') in R_theta (x) R_theta'.
    auto rep_sym = make_fock_rep(block_diag(theta, theta_prime), cutoff, grid_points);
    RegulatedTrace sym_side = regulated_trace(a, rep_sym);

    out.operator_side = op_side.value;
    out.symbol_side = sym_side.value;
    out.tail_bound = std::max(op_side.top_mass, sym_side.top_mass);
    double scale = std::max({1.0, std::abs(out.operator_side), std::abs(out.symbol_side)});
    out.truncation_warning = out.tail_bound > 1e-6 * scale;
    return out;
}

} // namespace ncgeo
