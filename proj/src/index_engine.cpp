#include "ncgeo/index_engine.hpp"

#include <cmath>
#include <numbers>

namespace ncgeo {

namespace {
constexpr double kPi = std::numbers::pi;
}

std::vector<BigInt> sigma_table(int n) {
    if (n < 1) throw std::invalid_argument("sigma_table: n must be >= 1");
    // Convolve the linear factors (z + j), j = 0..n-1.
    std::vector<BigInt> coeff{BigInt(0), BigInt(1)}; // z
    for (int j = 1; j < n; ++j) {
        std::vector<BigInt> next(coeff.size() + 1, BigInt(0));
        for (std::size_t p = 0; p < coeff.size(); ++p) {
            next[p] += coeff[p] * j;
            next[p + 1] += coeff[p];
        }
        coeff = std::move(next);
    }
    return coeff;
}

CocycleConstants cocycle_constants(int m, const std::vector<int>& k) {
    if (m < 0) throw std::invalid_argument("cocycle_constants: m must be nonnegative");
    if (int(k.size()) != m && !(m == 0 && k.empty()))
        throw std::invalid_argument("cocycle_constants: k must have length m");
    for (int kj : k)
        if (kj < 0) throw std::invalid_argument("cocycle_constants: k entries must be nonnegative");

    CocycleConstants cc;
    cc.m = m;
    cc.k = k;
    BigInt num = 1, den = 1;
    int prefix = 0;
    for (int j = 0; j < m; ++j) {
        for (int f = 2; f <= k[j]; ++f) num *= f;
        prefix += k[j];
        den *= prefix + j + 1;
    }
    cc.alpha = m == 0 ? Rational(1) : Rational(num, den);
    int total = prefix + (m % 2 == 0 ? m / 2 : 0);
    cc.sigma = sigma_table(std::max(1, total));
    return cc;
}

Rational chern_coefficient(int k) {
    if (k < 0) throw std::invalid_argument("chern_coefficient: k must be nonnegative");
    if (k == 0) return Rational(1);
    BigInt num = 1;
    for (int f = k + 1; f <= 2 * k; ++f) num *= f; // (2k)!/k!
    return (k % 2 == 0 ? Rational(num) : -Rational(num));
}

double dirac_square_check(int d, const SkewMatrix& theta_prime,
                          const std::shared_ptr<const FockRep>& rep) {
    if (d % 2 != 0) throw std::invalid_argument("dirac_square_check: d must be even");
    if (theta_prime.dim() != d || rep->d() != d)
        throw std::invalid_argument("dirac_square_check: dimension mismatch");

    CliffordAlgebra cl = clifford_build(d);
    CliffordBasis cb(cl);
    auto gens = build_generators(rep);
    const long dim = rep->total_dim();

    CliffordPoly<Eigen::MatrixXcd> dirac(cb);
    for (int j = 0; j < d; ++j)
        dirac = dirac + CliffordPoly<Eigen::MatrixXcd>::letter(cb, j, gens[j].matrix);
    CliffordPoly<Eigen::MatrixXcd> dsq = dirac * dirac;

    // Expected: sum_j Xi_j^2 (x) 1 - 1 (x) omega.
    Eigen::MatrixXcd xi2 = Eigen::MatrixXcd::Zero(dim, dim);
    for (int j = 0; j < d; ++j) xi2 += gens[j].matrix * gens[j].matrix;
    Eigen::MatrixXcd omega = curvature_form(cl, theta_prime);
    CliffordPoly<Eigen::MatrixXcd> expected(cb);
    for (int s = 0; s < cb.nwords(); ++s) {
        // omega expands over two-letter words; project it on the word basis.
        if (s == 0) continue;
        int bits = __builtin_popcount(unsigned(s));
        if (bits != 2) continue;
        int j = __builtin_ctz(unsigned(s));
        int t = s & ~(1 << j);
        int kk = __builtin_ctz(unsigned(t));
        // coefficient of c_j c_k (j < k) in omega is i theta'_{jk}
        std::complex<double> coef = std::complex<double>(0.0, 1.0) * theta_prime(j, kk);
        if (coef != std::complex<double>(0.0, 0.0))
            expected.accumulate(s, Eigen::MatrixXcd::Identity(dim, dim), -coef);
    }
    expected.accumulate(0, xi2, 1.0);

    CliffordPoly<Eigen::MatrixXcd> diff = dsq - expected;
    Eigen::VectorXd mask = rep->interior_mask(2);
    double resid = 0.0;
    for (const auto& [w, m] : diff.comps) {
        Eigen::MatrixXcd masked = m * mask.asDiagonal();
        resid = std::max(resid, masked.cwiseAbs().maxCoeff());
    }
    return resid;
}

Eigen::MatrixXcd cocycle_curvature(const CliffordAlgebra& cl, const SkewMatrix& theta_prime) {
    return -curvature_form(cl, theta_prime);
}

namespace {

// Clifford-word expansion of a Clifford matrix: a = sum_S coef_S c_S, using
// orthogonality tr(c_S^* c_T) = dim delta_{ST}.
std::vector<std::complex<double>> word_coefficients(const CliffordAlgebra& cl,
                                                    const Eigen::MatrixXcd& a) {
    const int n = 1 << cl.d;
    std::vector<Eigen::MatrixXcd> word(n);
    word[0] = Eigen::MatrixXcd::Identity(cl.rep_dim(), cl.rep_dim());
    for (int s = 1; s < n; ++s) {
        int j = __builtin_ctz(unsigned(s));
        word[s] = cl.c[j] * word[s & ~(1 << j)];
    }
    std::vector<std::complex<double>> coef(n);
    for (int s = 0; s < n; ++s) coef[s] = (word[s].adjoint() * a).trace() / double(cl.rep_dim());
    return coef;
}

} // namespace

CocycleValue simplified_cocycle(int m, const std::vector<CocycleOperand>& a,
                                const CliffordAlgebra& cl, const SkewMatrix& theta_prime,
                                const std::shared_ptr<const FockRep>& rep) {
    const int d = cl.d;
    if (m % 2 != 0 || m < 0 || m > d)
        throw std::invalid_argument("simplified_cocycle: m must be even with 0 <= m <= d");
    if (int(a.size()) != m + 1)
        throw std::invalid_argument("simplified_cocycle: need m+1 operands");
    const int n = a[0].n;
    for (const auto& op : a)
        if (op.n != n) throw std::invalid_argument("simplified_cocycle: block size mismatch");

    CliffordBasis cb(cl);
    const long dim = rep->total_dim();

    // chain = a_0 * da_1 * ... * da_m as an n x n block matrix.
    auto block_mul = [&](const std::vector<CliffordPoly<Eigen::MatrixXcd>>& x,
                         const std::vector<CliffordPoly<Eigen::MatrixXcd>>& y) {
        std::vector<CliffordPoly<Eigen::MatrixXcd>> r(n * n, CliffordPoly<Eigen::MatrixXcd>(cb));
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                for (int k = 0; k < n; ++k)
                    r[i * n + j] = r[i * n + j] + x[i * n + k] * y[k * n + j];
        return r;
    };

    std::vector<CliffordPoly<Eigen::MatrixXcd>> chain = a[0].value;
    for (int j = 1; j <= m; ++j) {
        if (int(a[j].differential.size()) != n * n)
            throw std::invalid_argument("simplified_cocycle: operand missing differential");
        chain = block_mul(chain, a[j].differential);
    }

    // Multiply by omega_c^{(d-m)/2} / ((d-m)/2)! in the Clifford slot.
    const int p = (d - m) / 2;
    Eigen::MatrixXcd wpow = Eigen::MatrixXcd::Identity(cl.rep_dim(), cl.rep_dim());
    Eigen::MatrixXcd wc = cocycle_curvature(cl, theta_prime);
    double fact = 1.0;
    for (int k = 1; k <= p; ++k) {
        wpow = wpow * wc;
        fact *= k;
    }
    auto wcoef = word_coefficients(cl, wpow);
    CliffordPoly<Eigen::MatrixXcd> wfactor(cb);
    for (int s = 0; s < cb.nwords(); ++s)
        if (wcoef[s] != std::complex<double>(0.0, 0.0))
            wfactor.accumulate(s, Eigen::MatrixXcd::Identity(dim, dim), wcoef[s] / fact);

    double mfact = 1.0;
    for (int k = 2; k <= m; ++k) mfact *= k;

    // Str over the interior window; the top decile of the window is reported
    // as a convergence diagnostic.
    Eigen::VectorXd mask = rep->interior_mask(2);
    auto windowed_trace = [&](const Eigen::MatrixXcd& mtx, double lo_frac) {
        std::complex<double> s = 0.0;
        long lo = long(lo_frac * dim);
        for (long i = lo; i < dim; ++i)
            if (mask(i) > 0.0) s += rep->diag_weight()(i) * mtx(i, i);
        return rep->trace_scale() * s;
    };

    // Diagonal blocks times the curvature factor, supertraced.
    std::complex<double> total = 0.0, top = 0.0;
    for (int i = 0; i < n; ++i) {
        CliffordPoly<Eigen::MatrixXcd> cell = chain[i * n + i] * wfactor;
        total += cell.supertrace([&](const Eigen::MatrixXcd& mtx) { return windowed_trace(mtx, 0.0); });
        top += cell.supertrace([&](const Eigen::MatrixXcd& mtx) { return windowed_trace(mtx, 0.9); });
    }

    CocycleValue out;
    out.value = std::pow(kPi, 0.5 * d) / mfact * total;
    out.tail_diagnostic = std::abs(top) / std::max(1e-300, std::abs(total));
    out.trace_class_warning = out.tail_diagnostic > 1e-3;
    return out;
}

namespace {

using ClBand = CliffordPoly<BandMatrix>;

struct BottMatrices {
    CliffordBasis cb;
    long dim;
    // 2x2 projector blocks, row-major, of Fock (x) Cl expansions
    std::vector<ClBand> e, de;
    BandMatrix r;

    explicit BottMatrices(const CliffordAlgebra& cl, double theta, int cutoff)
        : cb(cl), dim(cutoff + 1) {
        using cd = std::complex<double>;
        const cd i(0.0, 1.0);
        double sq = std::sqrt(theta);

        // z = sqrt(theta) a*, z* = sqrt(theta) a, R = (1 + 2theta + z z*)^{-1}.
        BandMatrix z = BandMatrix::from_diagonal(
            dim, -1, [&](long k) { return cd(sq * std::sqrt(2.0 * k + 2.0)); });
        BandMatrix zs = BandMatrix::from_diagonal(
            dim, +1, [&](long k) { return cd(sq * std::sqrt(2.0 * k + 2.0)); });
        r = BandMatrix::from_diagonal(
            dim, 0, [&](long k) { return cd(1.0 / (1.0 + 2.0 * theta + 2.0 * k * theta)); });
        BandMatrix id = BandMatrix::identity(dim);

        // dz = -i c_1 + c_2, dz* = -i c_1 - c_2 (scalars in the Fock slot).
        ClBand dz(cb), dzs(cb);
        dz.accumulate(1 << 0, id, -i);
        dz.accumulate(1 << 1, id, 1.0);
        dzs.accumulate(1 << 0, id, -i);
        dzs.accumulate(1 << 1, id, -1.0);

        auto lift = [&](const BandMatrix& m) { return ClBand::scalar(cb, m); };

        // dR = -R d(z* z) R = -R (dz* z + z* dz) R.
        ClBand dr = (-1.0) * (lift(r) * (dzs * lift(z) + lift(zs) * dz) * lift(r));

        // e = [[R, R z*], [z R, z R z*]].
        e = {lift(r), lift(r * zs), lift(z * r), lift((z * r) * zs)};
        de.resize(4, ClBand(cb));
        de[0] = dr;
        de[1] = dr * lift(zs) + lift(r) * dzs;
        de[2] = dz * lift(r) + lift(z) * dr;
        de[3] = dz * lift(r * zs) + lift(z) * (dr * lift(zs)) + lift(z * r) * dzs;
    }
};

} // namespace

BottIndexResult bott_index(double theta, double theta_prime, long series_cutoff,
                           int matrix_cutoff) {
    if (theta <= 0.0) throw std::invalid_argument("bott_index: theta must be positive");
    if (series_cutoff < 100 || matrix_cutoff < 100)
        throw std::invalid_argument("bott_index: cutoffs must be >= 100");

    BottIndexResult out;
    out.matrix_cutoff = matrix_cutoff;
    out.series_cutoff = series_cutoff;
    out.closed_form = 4.0 * kPi * kPi * (1.0 - theta * theta_prime);

    // Series route: phi_0 contributes its closed form -4 pi^2 theta theta';
    // phi_2 reduces to 8 theta pi^2 sum_k u_k with
    // u_k = 1/((1+2k theta)(1+2theta+2k theta)), tail < 1/(4 theta^2 K).
    double s = 0.0;
    for (long k = series_cutoff; k >= 0; --k)
        s += 1.0 / ((1.0 + 2.0 * k * theta) * (1.0 + 2.0 * theta + 2.0 * k * theta));
    out.series_value = -4.0 * kPi * kPi * theta * theta_prime + 8.0 * theta * kPi * kPi * s;
    out.series_tail = 8.0 * theta * kPi * kPi / (4.0 * theta * theta * double(series_cutoff));

    // Matrix route: pi Str((e - 1_e) omega_c) + pi Str(e de de), supertraced
    // over the interior window of the truncated Fock space.
    CliffordAlgebra cl = clifford_build(2);
    SkewMatrix tp = SkewMatrix::scalar2(theta_prime);
    Eigen::MatrixXcd wc = cocycle_curvature(cl, tp);
    std::complex<double> str_wc = str(cl, wc);

    BottMatrices bm(cl, theta, matrix_cutoff);
    const long k_int = matrix_cutoff - 8;
    const double tau_scale = 2.0 * kPi * theta;
    auto interior = [&](const BandMatrix& m) { return tau_scale * m.partial_trace(k_int); };

    // phi_0 block: tr_2(e - 1_e) = R + z R z* - 1 with no Clifford content.
    BandMatrix e_one =
        bm.e[0].comps.at(0) + bm.e[3].comps.at(0) - BandMatrix::identity(bm.dim);
    std::complex<double> phi0 = interior(e_one) * str_wc;

    // phi_2 block: Str(e de de).
    std::complex<double> phi2 = 0.0;
    for (int i = 0; i < 2; ++i) {
        ClBand cell(bm.cb);
        for (int a = 0; a < 2; ++a)
            for (int b = 0; b < 2; ++b)
                cell = cell + bm.e[i * 2 + a] * bm.de[a * 2 + b] * bm.de[b * 2 + i];
        phi2 += cell.supertrace([&](const BandMatrix& m) { return interior(m); });
    }
    out.matrix_value = kPi * (phi0 + phi2).real();

    // Both pieces decay like u_k; missing mass beyond the interior window.
    double u_tail = 1.0 / (4.0 * theta * theta * double(k_int));
    out.matrix_tail = (8.0 * theta * kPi * kPi + 8.0 * kPi * kPi * theta * theta * std::abs(theta_prime)) * u_tail;

    double gap = std::abs(out.matrix_value - out.series_value);
    out.methods_agree = gap <= out.matrix_tail + out.series_tail;
    if (!out.methods_agree)
        throw GateError("bott_index: matrix and series methods disagree beyond tail bounds");
    return out;
}

} // namespace ncgeo
