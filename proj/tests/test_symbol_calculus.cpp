#include <doctest.h>

#include <numbers>
#include <random>

#include "ncgeo/symbol_calculus.hpp"

using namespace ncgeo;

namespace {

using ElemD = WeylElement<Cd>;
using ElemQ = WeylElement<Cq>;
using CtxQ = std::shared_ptr<const WeylContext<Cq>>;

CtxQ random_symbol_ctx(int d, std::mt19937_64& rng) {
    std::uniform_int_distribution<long> dist(-64, 64);
    std::vector<Cq> th(d * d, Cq(0)), tp(d * d, Cq(0));
    for (int j = 0; j < d; ++j)
        for (int k = j + 1; k < d; ++k) {
            th[j * d + k] = Cq(Rational(dist(rng), 64));
            th[k * d + j] = -th[j * d + k];
            tp[j * d + k] = Cq(Rational(dist(rng), 64));
            tp[k * d + j] = -tp[j * d + k];
        }
    return WeylContext<Cq>::make(d, AlgebraKind::Symbol, th, tp);
}

ElemQ random_poly(const CtxQ& ctx, std::mt19937_64& rng, int max_deg) {
    std::uniform_int_distribution<long> coeff(-8, 8);
    std::uniform_int_distribution<int> keep(0, 2);
    const int slots = 2 * ctx->dim();
    ElemQ e(ctx);
    std::vector<int> m(slots, 0);
    while (true) {
        int total = 0;
        for (int v : m) total += v;
        if (total <= max_deg && keep(rng) == 0)
            e.add_term(m, Cq{Rational(coeff(rng)), Rational(coeff(rng))});
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
    return e;
}

} // namespace

TEST_CASE("quantize") {
    auto ctx = WeylContext<Cd>::make_flat(1, AlgebraKind::Symbol);
    SUBCASE("unit maps to unit") {
        CHECK(quantize(ElemD::one(ctx)) ==
              ElemD::one(ctx->with_kind(AlgebraKind::Operator)));
    }
    SUBCASE("normal-ordered monomials are fixed") {
        ElemD a = weyl_mul(ElemD::x(ctx, 1), ElemD::xi(ctx, 1));
        ElemD qa = quantize(a);
        CHECK(qa.terms() == a.terms());
        CHECK(qa.context()->kind() == AlgebraKind::Operator);
    }
    SUBCASE("d=1: quantize(xi) quantize(x) = quantize(x xi - i)") {
        ElemD lhs = weyl_mul(quantize(ElemD::xi(ctx, 1)), quantize(ElemD::x(ctx, 1)));
        ElemD rhs = quantize(weyl_mul(ElemD::x(ctx, 1), ElemD::xi(ctx, 1)) -
                             Cd(0, 1) * ElemD::one(ctx));
        CHECK(lhs == rhs);
    }
    SUBCASE("operator-algebra input rejected") {
        auto op_ctx = ctx->with_kind(AlgebraKind::Operator);
        CHECK_THROWS_AS(quantize(ElemD::x(op_ctx, 1)), std::invalid_argument);
    }
    SUBCASE("linear and injective on a monomial sample") {
        ElemD a = Cd(2, -1) * ElemD::x(ctx, 1) + Cd(0, 3) * ElemD::xi(ctx, 1);
        ElemD qa = quantize(a);
        CHECK(qa.terms().size() == 2);
        CHECK(quantize(Cd(2, 0) * a) == Cd(2, 0) * qa);
    }
}

TEST_CASE("compose terminating examples, d=1 flat") {
    auto ctx = WeylContext<Cd>::make_flat(1, AlgebraKind::Symbol);
    auto x = ElemD::x(ctx, 1), xi = ElemD::xi(ctx, 1);

    SUBCASE("compose(a, 1, N) = a") {
        ElemD a = weyl_mul(x, xi) + Cd(3, 0) * x;
        SymbolExpansion<Cd> e = compose(a, ElemD::one(ctx), 3);
        CHECK(e.total() == a);
    }
    SUBCASE("compose(xi, x, 1) = x xi - i") {
        ElemD c = compose(xi, x, 1).total();
        CHECK(c == weyl_mul(x, xi) - Cd(0, 1) * ElemD::one(ctx));
    }
    SUBCASE("compose(xi^2, x, 2) = x xi^2 - 2i xi") {
        ElemD c = compose(weyl_mul(xi, xi), x, 2).total();
        CHECK(c == weyl_mul(x, weyl_mul(xi, xi)) - Cd(0, 2) * xi);
    }
    SUBCASE("order bounds decrease and bound the xi-degree") {
        SymbolExpansion<Cd> e = compose(weyl_mul(xi, xi), weyl_mul(x, xi), 2);
        for (std::size_t k = 0; k + 1 < e.terms.size(); ++k)
            CHECK(e.terms[k].first > e.terms[k + 1].first);
        for (const auto& [bound, elem] : e.terms) {
            if (elem.is_zero()) continue;
            CHECK(bidegree(elem).deg_xi <= bound);
        }
    }
}

TEST_CASE("verify_composition") {
    SUBCASE("(xi, x) and (1, anything), d=1 flat, float mode") {
        auto ctx = WeylContext<Cd>::make_flat(1, AlgebraKind::Symbol);
        CHECK(verify_composition(ElemD::xi(ctx, 1), ElemD::x(ctx, 1)).ok);
        ElemD any = Cd(1, 1) * weyl_mul(ElemD::x(ctx, 1), ElemD::xi(ctx, 1));
        CHECK(verify_composition(ElemD::one(ctx), any).ok);
    }
    SUBCASE("random exact suite, d <= 2, with adjoint compatibility") {
        std::mt19937_64 rng(101);
        for (int trial = 0; trial < 60; ++trial) {
            int d = trial % 2 + 1;
            auto ctx = random_symbol_ctx(d, rng);
            ElemQ a = random_poly(ctx, rng, 3), b = random_poly(ctx, rng, 3);
            CompositionCheck fwd = verify_composition(b, a);
            CHECK(fwd.ok);
            CHECK(fwd.residual == 0.0);
            CompositionCheck adj = verify_composition(adjoint(a), adjoint(b));
            CHECK(adj.ok);
        }
    }
}

TEST_CASE("symbol_trace") {
    SUBCASE("a = 0") {
        auto ctx = WeylContext<Cd>::make_flat(1, AlgebraKind::Symbol);
        SymbolTraceResult r = symbol_trace(ElemD::zero(ctx), 16);
        CHECK(r.operator_side == Cd(0, 0));
        CHECK(r.symbol_side == Cd(0, 0));
    }
    SUBCASE("a = 1, d=1 flat: both sides are the product of Gaussian traces") {
        // The symbol side (fully commutative rep) is quadrature-exact; the
        // operator side converges like O(1/cutoff) under sharp Fock
        // truncation of the regulator, with the reported bound covering the
        // gap and the warning flagging the truncation quality.
        auto ctx = WeylContext<Cd>::make_flat(1, AlgebraKind::Symbol);
        double expect = std::numbers::pi;
        SymbolTraceResult r = symbol_trace(ElemD::one(ctx), 240, 24);
        CHECK(std::abs(r.symbol_side - Cd(expect, 0)) < 1e-10);
        CHECK(std::abs(r.operator_side - Cd(expect, 0)) < r.tail_bound);
        CHECK(r.truncation_warning);

        // error at least nearly halves when the cutoff doubles
        SymbolTraceResult half = symbol_trace(ElemD::one(ctx), 120, 24);
        CHECK(std::abs(r.operator_side - Cd(expect, 0)) <
              0.65 * std::abs(half.operator_side - Cd(expect, 0)));
    }
    SUBCASE("a = x1^2, d=2, nontrivial theta and theta'") {
        const int d = 2;
        std::vector<Cd> th(d * d, Cd(0)), tp(d * d, Cd(0));
        th[1] = Cd(0.8, 0);
        th[2] = Cd(-0.8, 0);
        tp[1] = Cd(0.6, 0);
        tp[2] = Cd(-0.6, 0);
        auto ctx = WeylContext<Cd>::make(d, AlgebraKind::Symbol, th, tp);
        ElemD a = weyl_mul(ElemD::x(ctx, 1), ElemD::x(ctx, 1));
        SymbolTraceResult r = symbol_trace(a, 24);
        CHECK(std::abs(r.operator_side - r.symbol_side) < r.tail_bound);
        CHECK(std::abs(r.symbol_side) > 0.1); // the quantity is not trivially zero
    }
}
