#include "ncgeo/verify_suite.hpp"

#include <cmath>
#include <numbers>
#include <random>
#include <sstream>

#include "ncgeo/clifford.hpp"
#include "ncgeo/fock_numeric.hpp"
#include "ncgeo/index_engine.hpp"
#include "ncgeo/moyal_grid.hpp"
#include "ncgeo/symbol_calculus.hpp"
#include "ncgeo/weyl_algebra.hpp"

namespace ncgeo {

namespace {

constexpr double kPi = std::numbers::pi;

Rational dyadic(std::mt19937_64& rng, int bits = 16) {
    std::uniform_int_distribution<long> dist(-(1L << bits), 1L << bits);
    return Rational(dist(rng), 1L << bits);
}

std::vector<Cq> random_skew_entries(std::mt19937_64& rng, int d) {
    std::vector<Cq> m(d * d, Cq(0));
    for (int j = 0; j < d; ++j)
        for (int k = j + 1; k < d; ++k) {
            Cq v{dyadic(rng), Rational(0)};
            m[j * d + k] = v;
            m[k * d + j] = -v;
        }
    return m;
}

WeylElement<Cq> random_poly(const std::shared_ptr<const WeylContext<Cq>>& ctx,
                            std::mt19937_64& rng, int max_deg) {
    const int slots = 2 * ctx->dim();
    WeylElement<Cq> e(ctx);
    std::uniform_int_distribution<int> keep(0, 2);
    // Enumerate exponent vectors of total degree <= max_deg.
    std::vector<int> m(slots, 0);
    while (true) {
        int total = 0;
        for (int v : m) total += v;
        if (total <= max_deg && keep(rng) == 0)
            e.add_term(m, Cq{dyadic(rng, 8), dyadic(rng, 8)});
        int pos = slots - 1;
        while (pos >= 0) {
            ++m[pos];
            int t = 0;
            for (int v : m) t += v;
            if (t <= max_deg) break;
            m[pos] = 0;
            --pos;
        }
        if (pos < 0) break;
    }
    if (e.is_zero()) e.add_term(std::vector<int>(slots, 0), Cq(1));
    return e;
}

CriterionResult criterion_composition(unsigned long seed) {
    CriterionResult r{1, "composition-exactness (exact arithmetic, 100 random pairs)", true, 0.0, 0.0, ""};
    std::mt19937_64 rng(seed * 1000003ULL + 17);
    int failures = 0;
    for (int trial = 0; trial < 100; ++trial) {
        int d = trial % 2 + 1;
        auto ctx = WeylContext<Cq>::make(d, AlgebraKind::Symbol, random_skew_entries(rng, d),
                                         random_skew_entries(rng, d));
        WeylElement<Cq> a = random_poly(ctx, rng, 3);
        WeylElement<Cq> b = random_poly(ctx, rng, 3);
        CompositionCheck chk = verify_composition(a, b);
        r.residual = std::max(r.residual, chk.residual);
        if (!chk.ok || chk.residual != 0.0) ++failures;
    }
    r.pass = failures == 0 && r.residual == 0.0;
    r.detail = failures ? std::to_string(failures) + " pairs failed" : "100/100 exact";
    return r;
}

CriterionResult criterion_heat_trace() {
    CriterionResult r{2, "heat-trace numeric vs closed form (N_max = 400)", true, 0.0, 1e-8, ""};
    for (double theta : {0.5, 1.0, 2.0}) {
        auto rep = make_fock_rep(SkewMatrix::scalar2(theta), 400);
        for (double t : {0.25, 0.5, 1.0}) {
            double closed = heat_trace_closed(SkewMatrix::scalar2(theta), t);
            HeatTraceResult num = heat_trace_numeric(rep, t);
            r.residual = std::max(r.residual, std::abs(num.value - closed));
            double formula = kPi * theta / std::sinh(t * theta);
            r.residual = std::max(r.residual, std::abs(closed - formula));
        }
    }
    r.pass = r.residual < r.threshold;
    return r;
}

CriterionResult criterion_index() {
    CriterionResult r{3, "Bott index reproduction (series 1e5, matrix 2000)", true, 0.0, 5e-3, ""};
    std::ostringstream detail;
    try {
        for (auto [theta, tp] : std::vector<std::pair<double, double>>{{0.2, 0.3}, {0.5, 0.0}}) {
            BottIndexResult b = bott_index(theta, tp, 100000, 2000);
            double rel_m = std::abs(b.matrix_value - b.closed_form) / std::abs(b.closed_form);
            double rel_s = std::abs(b.series_value - b.closed_form) / std::abs(b.closed_form);
            r.residual = std::max({r.residual, rel_m, rel_s});
            detail << "(" << theta << "," << tp << "): matrix=" << b.matrix_value
                   << " series=" << b.series_value << " closed=" << b.closed_form << "  ";
            if (!b.methods_agree) r.pass = false;
        }
    } catch (const GateError& e) {
        r.pass = false;
        detail << "gate failure: " << e.what();
    }
    r.pass = r.pass && r.residual < r.threshold;
    r.detail = detail.str();
    return r;
}

CriterionResult criterion_integrality() {
    CriterionResult r{4, "index integrality over five (theta, theta') pairs", true, 0.0, 1e-3, ""};
    const std::vector<std::pair<double, double>> pairs{
        {0.5, 0.0}, {0.2, 0.3}, {1.0, 0.5}, {0.3, -0.4}, {0.8, 0.6}};
    try {
        for (auto [theta, tp] : pairs) {
            BottIndexResult b = bott_index(theta, tp, 100000, 1000);
            double normalized = b.series_value / (4.0 * kPi * kPi * std::abs(1.0 - theta * tp));
            r.residual = std::max(r.residual, std::abs(normalized - 1.0));
        }
    } catch (const GateError&) {
        r.pass = false;
    }
    r.pass = r.pass && r.residual < r.threshold;
    return r;
}

CriterionResult criterion_moyal() {
    CriterionResult r{5, "Moyal property suite (64^2 grid, L = 8)", true, 0.0, 0.0, ""};
    const int d = 2, M = 64;
    const double L = 8.0;
    auto gauss = GridFunction::sample(d, L, M, [](const std::vector<double>& x) {
        return Cd(std::exp(-(x[0] * x[0] + x[1] * x[1])), 0.0);
    });
    auto shifted = GridFunction::sample(d, L, M, [](const std::vector<double>& x) {
        double u = x[0] - 1.0, v = x[1] - 0.5;
        return Cd(std::exp(-0.5 * (u * u + v * v)), 0.0);
    });
    auto modulated = GridFunction::sample(d, L, M, [](const std::vector<double>& x) {
        return Cd(x[0], x[1]) * std::exp(-0.75 * (x[0] * x[0] + x[1] * x[1]));
    });

    std::ostringstream detail;
    bool ok = true;

    double flat = sup_distance(star(gauss, shifted, SkewMatrix(Eigen::MatrixXd::Zero(2, 2))).value,
                               pointwise_product(gauss, shifted));
    detail << "theta=0 limit " << flat;
    ok = ok && flat < 1e-8;

    SkewMatrix th7 = SkewMatrix::scalar2(0.7);
    GridFunction fg = star(gauss, shifted, th7).value;
    GridFunction gh = star(shifted, modulated, th7).value;
    double assoc = sup_distance(star(fg, modulated, th7).value, star(gauss, gh, th7).value);
    detail << ", assoc " << assoc;
    ok = ok && assoc < 1e-6;

    double rev = star_adjoint_check(gauss, modulated, th7);
    detail << ", conj-reversal " << rev;
    ok = ok && rev < 1e-8;

    SkewMatrix th5 = SkewMatrix::scalar2(0.5);
    Cd lhs = integral(star(gauss, shifted, th5).value);
    Cd rhs = integral(pointwise_product(gauss, shifted));
    double tr = std::abs(lhs - rhs);
    detail << ", tracial " << tr;
    ok = ok && tr < 1e-6;

    r.pass = ok;
    r.residual = std::max({flat, assoc, rev, tr});
    r.detail = detail.str();
    return r;
}

CriterionResult criterion_structural() {
    CriterionResult r{6, "structural identities (Clifford, D^2, sigma, alpha)", true, 0.0, 1e-10, ""};
    std::ostringstream detail;
    bool ok = true;

    // Clifford anticommutation and grading, exactly.
    for (int d : {2, 4, 6}) {
        CliffordAlgebra cl = clifford_build(d);
        double worst = 0.0;
        for (int j = 0; j < d; ++j)
            for (int k = 0; k < d; ++k) {
                Eigen::MatrixXcd anti = cl.c[j] * cl.c[k] + cl.c[k] * cl.c[j];
                if (j == k) anti -= 2.0 * Eigen::MatrixXcd::Identity(cl.rep_dim(), cl.rep_dim());
                worst = std::max(worst, anti.cwiseAbs().maxCoeff());
            }
        worst = std::max(worst, (cl.gamma * cl.gamma -
                                 Eigen::MatrixXcd::Identity(cl.rep_dim(), cl.rep_dim()))
                                    .cwiseAbs()
                                    .maxCoeff());
        for (int j = 0; j < d; ++j)
            worst = std::max(worst, (cl.gamma * cl.c[j] + cl.c[j] * cl.gamma).cwiseAbs().maxCoeff());
        if (worst != 0.0) ok = false;
        detail << "Cl^" << d << " exact:" << (worst == 0.0) << " ";
    }

    // D^2 = |xi|^2 - omega, symbolically (exact term maps).
    {
        const int d = 2;
        const double tp = 0.3;
        std::vector<Cd> zero(d * d, Cd(0)), tpm(d * d, Cd(0));
        tpm[0 * d + 1] = Cd(tp, 0);
        tpm[1 * d + 0] = Cd(-tp, 0);
        auto ctx = WeylContext<Cd>::make(d, AlgebraKind::Operator, zero, tpm);
        CliffordAlgebra cl = clifford_build(d);
        CliffordBasis cb(cl);
        using ClW = CliffordPoly<WeylElement<Cd>>;
        ClW dirac(cb);
        for (int j = 0; j < d; ++j)
            dirac = dirac + ClW::letter(cb, j, WeylElement<Cd>::xi(ctx, j + 1));
        ClW dsq = dirac * dirac;
        ClW expect(cb);
        WeylElement<Cd> xi2 = WeylElement<Cd>::zero(ctx);
        for (int j = 0; j < d; ++j)
            xi2 = xi2 + weyl_mul(WeylElement<Cd>::xi(ctx, j + 1), WeylElement<Cd>::xi(ctx, j + 1));
        expect.accumulate(0, xi2, 1.0);
        // omega = i theta'_{12} c_1 c_2 for d=2; D^2 subtracts it.
        expect.accumulate(0b11, WeylElement<Cd>::one(ctx), Cd(0, -tp));
        double worst = 0.0;
        ClW diff = dsq - expect;
        for (const auto& [w, m] : diff.comps) worst = std::max(worst, residual(m, WeylElement<Cd>::zero(ctx)));
        if (worst != 0.0) ok = false;
        detail << "D^2 symbolic exact:" << (worst == 0.0) << " ";

        // Matrix form on the interior block.
        auto rep = make_fock_rep(SkewMatrix::scalar2(tp), 24);
        double mres = dirac_square_check(d, SkewMatrix::scalar2(tp), rep);
        r.residual = std::max(r.residual, mres);
        ok = ok && mres < 1e-10;
        detail << "D^2 matrix residual " << mres << " ";
    }

    // sigma_{n,j} against the factor recurrence, n <= 8.
    {
        bool sig_ok = true;
        std::vector<std::vector<BigInt>> rec(9);
        rec[1] = {BigInt(0), BigInt(1)};
        for (int n = 2; n <= 8; ++n) {
            rec[n].assign(n + 1, BigInt(0));
            for (int j = 1; j <= n; ++j) {
                rec[n][j] = (j > 0 ? rec[n - 1][j - 1] : BigInt(0)) +
                            BigInt(n - 1) * (j < n ? rec[n - 1][j] : BigInt(0));
            }
            if (sigma_table(n) != rec[n]) sig_ok = false;
            // sigma_{n,1} = (n-1)!
            BigInt fact = 1;
            for (int f = 2; f <= n - 1; ++f) fact *= f;
            if (rec[n][1] != fact) sig_ok = false;
        }
        ok = ok && sig_ok;
        detail << "sigma<=8:" << sig_ok << " ";
    }

    // alpha(k) against a direct partial-sum product, |k| <= 4, m <= 4.
    {
        bool al_ok = true;
        for (int m = 1; m <= 4; ++m) {
            std::vector<int> k(m, 0);
            while (true) {
                int total = 0;
                for (int v : k) total += v;
                if (total <= 4) {
                    Rational direct(1);
                    int prefix = 0;
                    for (int j = 0; j < m; ++j) {
                        BigInt f = 1;
                        for (int q = 2; q <= k[j]; ++q) f *= q;
                        prefix += k[j];
                        direct *= Rational(f, BigInt(prefix + j + 1));
                    }
                    if (cocycle_constants(m, k).alpha != direct) al_ok = false;
                }
                int pos = m - 1;
                while (pos >= 0 && ++k[pos] > 4) k[pos--] = 0;
                if (pos < 0) break;
            }
        }
        ok = ok && al_ok;
        detail << "alpha<=4:" << al_ok;
    }

    r.pass = ok;
    r.detail = detail.str();
    return r;
}

CriterionResult criterion_normal_form(unsigned long seed) {
    CriterionResult r{7, "normal-form residual, 50 random skew matrices d <= 6", true, 0.0, 1e-10, ""};
    std::mt19937_64 rng(seed * 7919ULL + 5);
    std::uniform_real_distribution<double> unif(-2.0, 2.0);
    std::uniform_int_distribution<int> dims(1, 6);
    for (int trial = 0; trial < 50; ++trial) {
        int d = dims(rng);
        Eigen::MatrixXd m = Eigen::MatrixXd::Zero(d, d);
        for (int j = 0; j < d; ++j)
            for (int k = j + 1; k < d; ++k) {
                m(j, k) = unif(rng);
                m(k, j) = -m(j, k);
            }
        SkewMatrix theta(m);
        NormalForm nf = standard_form(theta);
        Eigen::MatrixXd resid =
            nf.T * theta.entries() * nf.T.transpose() - standard_block(d, nf.rank2n);
        r.residual = std::max(r.residual, resid.cwiseAbs().maxCoeff());
    }
    r.pass = r.residual < r.threshold;
    return r;
}

} // namespace

VerifyReport run_verify_suite(unsigned long seed) {
    VerifyReport rep;
    rep.seed = seed;
    rep.results.push_back(criterion_composition(seed));
    rep.results.push_back(criterion_heat_trace());
    rep.results.push_back(criterion_index());
    rep.results.push_back(criterion_integrality());
    rep.results.push_back(criterion_moyal());
    rep.results.push_back(criterion_structural());
    rep.results.push_back(criterion_normal_form(seed));
    return rep;
}

} // namespace ncgeo
