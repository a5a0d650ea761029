#ifndef NCGEO_SYMBOL_CALCULUS_HPP
#define NCGEO_SYMBOL_CALCULUS_HPP

#include <utility>
#include <vector>

#include "ncgeo/weyl_algebra.hpp"

namespace ncgeo {

// Quantization map Op: R_{theta,theta'} -> R_Theta.  On the normal-ordered
// monomial basis x^alpha xi^beta it multiplies the x part and the xi part in
// R_Theta (x factors left), which is again normal-ordered; the map is the
// identity on term maps and only switches the commutation rules in force.
template <class K>
WeylElement<K> quantize(const WeylElement<K>& a) {
    if (a.context()->kind() != AlgebraKind::Symbol)
        throw std::invalid_argument("quantize: input must live in the symbol algebra");
    WeylElement<K> r(a.context()->with_kind(AlgebraKind::Operator));
    for (const auto& [m, c] : a.terms()) r.add_term(m, c);
    return r;
}

// Asymptotic expansion of a composed symbol, grouped by expansion order k;
// order_bound for group k is deg_xi(a) + deg_xi(b) - k.
template <class K>
struct SymbolExpansion {
    std::vector<std::pair<int, WeylElement<K>>> terms; // (order_bound, group), order_bound decreasing

    WeylElement<K> total() const {
        if (terms.empty()) throw std::logic_error("SymbolExpansion: empty");
        WeylElement<K> acc = terms[0].second;
        for (std::size_t k = 1; k < terms.size(); ++k) acc = acc + terms[k].second;
        return acc;
    }
};

namespace detail {

template <class F>
void for_each_multi_index(int dim, int total, std::vector<int>& idx, int slot, int remaining, F&& f) {
    if (slot == dim - 1) {
        idx[slot] = remaining;
        f(idx);
        return;
    }
    for (int v = 0; v <= remaining; ++v) {
        idx[slot] = v;
        for_each_multi_index(dim, total, idx, slot + 1, remaining - v, f);
    }
}

inline long multi_factorial(const std::vector<int>& alpha) {
    long r = 1;
    for (int a : alpha)
        for (int k = 2; k <= a; ++k) r *= k;
    return r;
}

} // namespace detail

template <class K>
WeylElement<K> scale_by_inverse_int(const WeylElement<K>& a, long n);

template <>
inline WeylElement<Cd> scale_by_inverse_int(const WeylElement<Cd>& a, long n) {
    return Cd(1.0 / double(n), 0.0) * a;
}

template <>
inline WeylElement<Cq> scale_by_inverse_int(const WeylElement<Cq>& a, long n) {
    return Cq(Rational(1, n)) * a;
}

// Composition expansion sum_{|alpha| <= N} (i^{|alpha|} / alpha!)
// D_xi^alpha(a) D_x^alpha(b).  For polynomial symbols the series terminates:
// all terms with |alpha| > deg_xi(a) vanish, so the result is exact once
// N >= deg_xi(a).  The i^{+|alpha|} sign is pinned by verify_composition.
template <class K>
SymbolExpansion<K> compose(const WeylElement<K>& a, const WeylElement<K>& b, int N) {
    a.require_compatible(b);
    if (a.context()->kind() != AlgebraKind::Symbol)
        throw std::invalid_argument("compose: inputs must live in the symbol algebra");
    if (N < 0) throw std::invalid_argument("compose: N must be nonnegative");

    const int d = a.dim();
    BiDegree da = a.bidegree(), db = b.bidegree();
    int base_order = (da.deg_xi == BiDegree::neg_inf || db.deg_xi == BiDegree::neg_inf)
                         ? BiDegree::neg_inf
                         : da.deg_xi + db.deg_xi;

    SymbolExpansion<K> out;
    K i_pow = ScalarOps<K>::one();
    for (int k = 0; k <= N; ++k) {
        WeylElement<K> group(a.context());
        std::vector<int> alpha(d, 0);
        detail::for_each_multi_index(d, k, alpha, 0, k, [&](const std::vector<int>& al) {
            WeylElement<K> lhs = derive_xi_multi(al, a);
            if (lhs.is_zero()) return;
            WeylElement<K> rhs = derive_x_multi(al, b);
            if (rhs.is_zero()) return;
            long fact = detail::multi_factorial(al);
            group = group + scale_by_inverse_int(weyl_mul(lhs, rhs), fact);
        });
        int bound = base_order == BiDegree::neg_inf ? BiDegree::neg_inf : base_order - k;
        out.terms.emplace_back(bound, i_pow * group);
        i_pow *= ScalarOps<K>::i();
    }
    return out;
}

struct CompositionCheck {
    bool ok = false;
    double residual = 0.0;
};

// Consistency check of the trace identity tau_Theta(Op(a)) = tau_{theta,theta'}(a)
// at truncated scale: both sides are regulated by the matched Gaussian factors
// e^{-|x|^2} e^{-|xi|^2} and evaluated in the respective 2d-generator
// representations (per-mode occupation cutoff `cutoff`).
struct SymbolTraceResult {
    Cd operator_side{0.0, 0.0};
    Cd symbol_side{0.0, 0.0};
    double tail_bound = 0.0;
    bool truncation_warning = false;
};

SymbolTraceResult symbol_trace(const WeylElement<Cd>& a, int cutoff, int grid_points = 32);

// Exactness harness: quantize(compose(a, b, deg_xi(a))) must reproduce
// quantize(a) * quantize(b) -- with zero residual in the exact mode.
template <class K>
CompositionCheck verify_composition(const WeylElement<K>& a, const WeylElement<K>& b,
                                    double tol = 1e-12) {
    int N = std::max(0, a.bidegree().deg_xi == BiDegree::neg_inf ? 0 : a.bidegree().deg_xi);
    WeylElement<K> c = compose(a, b, N).total();
    WeylElement<K> lhs = quantize(c);
    WeylElement<K> rhs = weyl_mul(quantize(a), quantize(b));
    CompositionCheck r;
    r.residual = residual(lhs, rhs);
    r.ok = std::is_same_v<K, Cq> ? lhs == rhs : r.residual <= tol;
    return r;
}

} // namespace ncgeo

#endif
