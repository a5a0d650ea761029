#include <doctest.h>

#include <numbers>

#include "ncgeo/bridge.hpp"
#include "ncgeo/moyal_grid.hpp"

using namespace ncgeo;

namespace {

constexpr double kPi = std::numbers::pi;

GridFunction gaussian2(double width = 1.0, double cx = 0.0, double cy = 0.0, int m = 64,
                       double l = 8.0) {
    return GridFunction::sample(2, l, m, [=](const std::vector<double>& x) {
        double u = x[0] - cx, v = x[1] - cy;
        return Cd(std::exp(-width * (u * u + v * v)), 0.0);
    });
}

// Independent oracle: the real-space double integral
//   (f star g)(x) = (2 pi)^{-d} Int f(x + theta v / 2) g(x - w) e^{i v.w} dv dw
// on a truncated v, w box with trapezoid weights, evaluated per probe point.
// Functions are given analytically so no grid interpolation enters.
Cd star_oracle_point(const std::function<Cd(double, double)>& f,
                     const std::function<Cd(double, double)>& g, double theta, double x0,
                     double x1) {
    const int n = 41;
    const double lim = 5.0, h = 2.0 * lim / (n - 1);
    // separable phase: sum over v of f(x + th v/2) e^{i v.w}, then over w
    std::vector<Cd> fv(n * n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            double v0 = -lim + a * h, v1 = -lim + b * h;
            // theta matrix [[0, theta], [-theta, 0]] acting on v
            fv[a * n + b] = f(x0 + 0.5 * theta * v1, x1 - 0.5 * theta * v0);
        }
    Cd acc(0);
    for (int wa = 0; wa < n; ++wa)
        for (int wb = 0; wb < n; ++wb) {
            double w0 = -lim + wa * h, w1 = -lim + wb * h;
            // inner sum over v with phase e^{i(v0 w0 + v1 w1)}, separable
            Cd inner(0);
            for (int a = 0; a < n; ++a) {
                Cd row(0);
                double v0 = -lim + a * h;
                for (int b = 0; b < n; ++b) {
                    double v1 = -lim + b * h;
                    row += fv[a * n + b] * Cd(std::cos(v1 * w1), std::sin(v1 * w1));
                }
                inner += row * Cd(std::cos(v0 * w0), std::sin(v0 * w0));
            }
            acc += inner * g(x0 - w0, x1 - w1);
        }
    return acc * h * h * h * h / (4.0 * kPi * kPi);
}

} // namespace

TEST_CASE("grid basics") {
    SUBCASE("constructor validation") {
        CHECK_THROWS_AS(GridFunction(2, 8.0, 12, std::vector<Cd>(144)), std::invalid_argument);
        CHECK_THROWS_AS(GridFunction(2, 8.0, 16, std::vector<Cd>(17)), std::invalid_argument);
        CHECK_THROWS_AS(GridFunction(2, -1.0, 16, std::vector<Cd>(256)), std::invalid_argument);
        std::vector<Cd> bad(256, Cd(0));
        bad[3] = Cd(std::nan(""), 0);
        CHECK_THROWS_AS(GridFunction(2, 8.0, 16, std::move(bad)), std::invalid_argument);
    }
    SUBCASE("integral of the unit Gaussian is pi") {
        CHECK(std::abs(integral(gaussian2()) - Cd(kPi, 0)) < 1e-8);
    }
    SUBCASE("integral of zero is zero") {
        GridFunction z(2, 8.0, 16, std::vector<Cd>(256, Cd(0)));
        CHECK(integral(z) == Cd(0, 0));
    }
    SUBCASE("fourier companion of a Gaussian is the continuum transform") {
        // e^{-x^2} in 1d has fhat(k) = sqrt(pi) e^{-k^2/4}
        auto f = GridFunction::sample(1, 8.0, 64, [](const std::vector<double>& x) {
            return Cd(std::exp(-x[0] * x[0]), 0.0);
        });
        for (int s = 20; s < 44; ++s) {
            double k = f.freq_coord(s);
            Cd expect(std::sqrt(kPi) * std::exp(-k * k / 4.0), 0.0);
            CHECK(std::abs(f.fourier()[s] - expect) < 1e-10);
        }
    }
}

TEST_CASE("star product") {
    SUBCASE("theta = 0 is the pointwise product") {
        SkewMatrix z(Eigen::MatrixXd::Zero(2, 2));
        auto f = gaussian2(1.0), g = gaussian2(0.5, 1.0, 0.5);
        StarResult r = star(f, g, z);
        CHECK(sup_distance(r.value, pointwise_product(f, g)) < 1e-8);
        CHECK(!r.aliasing_warning);
    }
    SUBCASE("grid mismatch rejected") {
        SkewMatrix z(Eigen::MatrixXd::Zero(2, 2));
        CHECK_THROWS_AS(star(gaussian2(1.0, 0, 0, 64), gaussian2(1.0, 0, 0, 32), z),
                        std::invalid_argument);
    }
    SUBCASE("plane waves at grid frequencies reproduce the twisted phase") {
        const double th = 0.6;
        SkewMatrix theta = SkewMatrix::scalar2(th);
        // box-periodic plane waves, frequencies on the dual grid k = pi m / L
        const double k1 = kPi * 4 / 8.0, k2 = kPi * 2 / 8.0; // xi = (k1, 0), eta = (0, k2)
        auto f = GridFunction::sample(2, 8.0, 64, [&](const std::vector<double>& x) {
            return Cd(std::cos(k1 * x[0]), std::sin(k1 * x[0]));
        });
        auto g = GridFunction::sample(2, 8.0, 64, [&](const std::vector<double>& x) {
            return Cd(std::cos(k2 * x[1]), std::sin(k2 * x[1]));
        });
        GridFunction h = star(f, g, theta).value;
        // expected: e^{(i/2) xi.theta eta} e^{i(xi+eta).x}; xi.theta eta = th k1 k2
        double twist = 0.5 * th * k1 * k2;
        const int m = 64;
        double worst = 0.0;
        for (int a = 24; a < 40; ++a)
            for (int b = 24; b < 40; ++b) {
                double x0 = -8.0 + 0.25 * a, x1 = -8.0 + 0.25 * b;
                double ph = twist + k1 * x0 + k2 * x1;
                Cd expected(std::cos(ph), std::sin(ph));
                worst = std::max(worst, std::abs(h.samples()[a * m + b] - expected));
            }
        CHECK(worst < 1e-6);
    }
    SUBCASE("Gaussian star Gaussian agrees with the real-space oracle, theta = 0.5") {
        const double th = 0.5;
        auto fa = [](double a, double b) { return Cd(std::exp(-(a * a + b * b)), 0.0); };
        auto ga = [](double a, double b) {
            double u = a - 0.7, v = b + 0.4;
            return Cd(std::exp(-0.8 * (u * u + v * v)), 0.0);
        };
        auto f = GridFunction::sample(2, 8.0, 64,
                                      [&](const std::vector<double>& x) { return fa(x[0], x[1]); });
        auto g = GridFunction::sample(2, 8.0, 64,
                                      [&](const std::vector<double>& x) { return ga(x[0], x[1]); });
        GridFunction h = star(f, g, SkewMatrix::scalar2(th)).value;
        double worst = 0.0;
        const int m = 64;
        for (int a = 24; a < 40; a += 4)
            for (int b = 24; b < 40; b += 4) {
                double x0 = -8.0 + 0.25 * a, x1 = -8.0 + 0.25 * b;
                Cd oracle = star_oracle_point(fa, ga, th, x0, x1);
                worst = std::max(worst, std::abs(oracle - h.samples()[a * m + b]));
            }
        CHECK(worst < 1e-5);
    }
    SUBCASE("aliasing warning on an under-resolved grid") {
        auto narrow = GridFunction::sample(2, 8.0, 8, [](const std::vector<double>& x) {
            return Cd(std::exp(-4.0 * (x[0] * x[0] + x[1] * x[1])), 0.0);
        });
        StarResult r = star(narrow, narrow, SkewMatrix::scalar2(0.3));
        CHECK(r.aliasing_warning);
    }
}

TEST_CASE("star identities") {
    SkewMatrix th7 = SkewMatrix::scalar2(0.7);
    auto f = gaussian2(1.0);
    auto g = GridFunction::sample(2, 8.0, 64, [](const std::vector<double>& x) {
        return Cd(x[0], x[1]) * std::exp(-0.75 * (x[0] * x[0] + x[1] * x[1]));
    });
    auto h = gaussian2(0.6, -0.5, 0.3);

    SUBCASE("conjugation reversal") {
        CHECK(star_adjoint_check(f, g, th7) < 1e-8);
        SkewMatrix z(Eigen::MatrixXd::Zero(2, 2));
        CHECK(star_adjoint_check(f, h, z) < 1e-12);
    }
    SUBCASE("associativity") {
        GridFunction fg = star(f, g, th7).value;
        GridFunction gh = star(g, h, th7).value;
        CHECK(sup_distance(star(fg, h, th7).value, star(f, gh, th7).value) < 1e-6);
    }
    SUBCASE("tracial identity: integral of f star g equals integral of fg") {
        for (double th : {0.3, 0.7, 1.4}) {
            Cd lhs = integral(star(f, g, SkewMatrix::scalar2(th)).value);
            Cd rhs = integral(pointwise_product(f, g));
            CHECK(std::abs(lhs - rhs) < 1e-8);
            Cd sym = integral(star(g, f, SkewMatrix::scalar2(th)).value);
            CHECK(std::abs(lhs - sym) < 1e-8);
        }
    }
    SUBCASE("continuity at theta = 0: deformation error is O(theta)") {
        GridFunction flat = pointwise_product(f, h);
        double prev = -1.0;
        for (double th : {0.4, 0.2, 0.1, 0.05}) {
            double err = sup_distance(star(f, h, SkewMatrix::scalar2(th)).value, flat);
            if (prev > 0.0) CHECK(err < 0.65 * prev);
            prev = err;
        }
    }
}

TEST_CASE("bridge: lambda matrices multiply like the star product") {
    const double th = 0.8;
    auto rep = make_fock_rep(SkewMatrix::scalar2(th), 40);
    auto gens = build_generators(rep);

    auto f = gaussian2(1.0, 0.0, 0.0, 64);
    auto g = gaussian2(0.7, 0.4, -0.3, 64);
    GridFunction fg = star(f, g, SkewMatrix::scalar2(th)).value;

    Eigen::MatrixXcd lf = lambda_matrix(f, gens);
    Eigen::MatrixXcd lg = lambda_matrix(g, gens);
    Eigen::MatrixXcd lfg = lambda_matrix(fg, gens);
    double err = (lf * lg - lfg).cwiseAbs().maxCoeff();
    CHECK(err < 1e-4);
    // sanity: the matrices are not vanishingly small
    CHECK(lf.cwiseAbs().maxCoeff() > 1e-2);
}
