#ifndef NCGEO_WEYL_ALGEBRA_HPP
#define NCGEO_WEYL_ALGEBRA_HPP

#include <algorithm>
#include <map>
#include <memory>
#include <limits>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "ncgeo/scalar.hpp"

namespace ncgeo {

// Which commutation rules are in force.  Symbol: [x_j, xi_k] = 0 (the algebra
// R_{theta,theta'} of commuting-across-sorts variables).  Operator: the full
// CCR [xi_j, x_k] = -i delta_jk (the algebra R_Theta).
enum class AlgebraKind { Symbol, Operator };

// Structure constants shared by all elements that may be combined:
//   [x_j, x_k]   = -i theta_jk
//   [xi_j, xi_k] = -i theta'_jk
//   [xi_j, x_k]  = -i delta_jk   (Operator kind only)
// Generators are indexed 0..d-1 for x_1..x_d and d..2d-1 for xi_1..xi_d; the
// normal order is ascending generator index.
template <class K>
class WeylContext {
  public:
    WeylContext(int dim, AlgebraKind kind, std::vector<K> theta, std::vector<K> theta_prime)
        : dim_(dim), kind_(kind), theta_(std::move(theta)), theta_prime_(std::move(theta_prime)) {
        if (dim < 1) throw std::invalid_argument("WeylContext: dimension must be positive");
        if (int(theta_.size()) != dim * dim || int(theta_prime_.size()) != dim * dim)
            throw std::invalid_argument("WeylContext: structure constant size mismatch");
        antisymmetrize(theta_);
        antisymmetrize(theta_prime_);
    }

    static std::shared_ptr<const WeylContext> make(int dim, AlgebraKind kind,
                                                   std::vector<K> theta, std::vector<K> theta_prime) {
        return std::make_shared<const WeylContext>(dim, kind, std::move(theta), std::move(theta_prime));
    }
    static std::shared_ptr<const WeylContext> make_flat(int dim, AlgebraKind kind) {
        std::vector<K> z(dim * dim, ScalarOps<K>::zero());
        return make(dim, kind, z, z);
    }

    int dim() const { return dim_; }
    AlgebraKind kind() const { return kind_; }
    const K& theta(int j, int k) const { return theta_[j * dim_ + k]; }
    const K& theta_prime(int j, int k) const { return theta_prime_[j * dim_ + k]; }

    std::shared_ptr<const WeylContext> with_kind(AlgebraKind kind) const {
        return make(dim_, kind, theta_, theta_prime_);
    }

    // Scalar value of [g_a, g_b] for generator ids a, b.
    K commutator(int a, int b) const {
        static const K minus_i = -ScalarOps<K>::i();
        const int d = dim_;
        if (a < d && b < d) return minus_i * theta(a, b);
        if (a >= d && b >= d) return minus_i * theta_prime(a - d, b - d);
        if (kind_ == AlgebraKind::Symbol) return ScalarOps<K>::zero();
        if (a >= d && b < d) return a - d == b ? minus_i : ScalarOps<K>::zero();
        return b - d == a ? ScalarOps<K>::i() : ScalarOps<K>::zero();
    }

    bool compatible(const WeylContext& o) const {
        return dim_ == o.dim_ && kind_ == o.kind_ && theta_ == o.theta_ && theta_prime_ == o.theta_prime_;
    }

  private:
    void antisymmetrize(std::vector<K>& m) {
        for (int j = 0; j < dim_; ++j) {
            m[j * dim_ + j] = ScalarOps<K>::zero();
            for (int k = 0; k < j; ++k) m[j * dim_ + k] = -m[k * dim_ + j];
        }
    }

    int dim_;
    AlgebraKind kind_;
    std::vector<K> theta_, theta_prime_;
};

// Exponent vector of a normal-ordered monomial x^alpha xi^beta; size 2d.
using Monomial = std::vector<int>;

struct BiDegree {
    static constexpr int neg_inf = std::numeric_limits<int>::min();
    int deg_x = neg_inf;
    int deg_xi = neg_inf;
    friend bool operator==(const BiDegree&, const BiDegree&) = default;
};

// Normal-ordered noncommutative polynomial over the context's CCR relations.
// Monomials are stored with x factors (ascending index) before xi factors
// (ascending index); zero coefficients are never stored.
template <class K>
class WeylElement {
  public:
    using Ctx = std::shared_ptr<const WeylContext<K>>;
    using Ops = ScalarOps<K>;
    using TermMap = std::map<Monomial, K>;

    explicit WeylElement(Ctx ctx) : ctx_(std::move(ctx)) {
        if (!ctx_) throw std::invalid_argument("WeylElement: null context");
    }

    static WeylElement zero(Ctx ctx) { return WeylElement(std::move(ctx)); }
    static WeylElement constant(Ctx ctx, K value) {
        WeylElement e(std::move(ctx));
        e.add_term(Monomial(2 * e.dim(), 0), std::move(value));
        return e;
    }
    static WeylElement one(Ctx ctx) { return constant(std::move(ctx), Ops::one()); }
    // j is 1-based.
    static WeylElement x(Ctx ctx, int j) { return generator(std::move(ctx), j - 1, false); }
    static WeylElement xi(Ctx ctx, int j) { return generator(std::move(ctx), j - 1, true); }

    const Ctx& context() const { return ctx_; }
    int dim() const { return ctx_->dim(); }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(const Monomial& m, K coeff) {
        if (Ops::is_zero(coeff)) return;
        auto it = terms_.find(m);
        if (it == terms_.end()) {
            terms_.emplace(m, std::move(coeff));
        } else {
            it->second += coeff;
            if (Ops::is_zero(it->second)) terms_.erase(it);
        }
    }

    friend WeylElement operator+(WeylElement a, const WeylElement& b) {
        a.require_compatible(b);
        for (const auto& [m, c] : b.terms_) a.add_term(m, c);
        return a;
    }
    friend WeylElement operator-(WeylElement a, const WeylElement& b) {
        a.require_compatible(b);
        for (const auto& [m, c] : b.terms_) a.add_term(m, -c);
        return a;
    }
    friend WeylElement operator*(const K& s, const WeylElement& a) {
        WeylElement r(a.ctx_);
        if (ScalarOps<K>::is_zero(s)) return r;
        for (const auto& [m, c] : a.terms_) r.add_term(m, s * c);
        return r;
    }
    friend WeylElement operator-(const WeylElement& a) { return Ops::from_int(-1) * a; }

    friend bool operator==(const WeylElement& a, const WeylElement& b) {
        return a.ctx_->compatible(*b.ctx_) && a.terms_ == b.terms_;
    }

    // max |coefficient| of a - b; 0 for equal term maps.
    friend double residual(const WeylElement& a, const WeylElement& b) {
        WeylElement d = a - b;
        double r = 0;
        for (const auto& [m, c] : d.terms_) r = std::max(r, Ops::abs(c));
        return r;
    }

    BiDegree bidegree() const {
        BiDegree bd;
        const int d = dim();
        for (const auto& [m, c] : terms_) {
            int dx = 0, dxi = 0;
            for (int j = 0; j < d; ++j) dx += m[j];
            for (int j = d; j < 2 * d; ++j) dxi += m[j];
            bd.deg_x = std::max(bd.deg_x, dx);
            bd.deg_xi = std::max(bd.deg_xi, dxi);
        }
        return bd;
    }

    void require_compatible(const WeylElement& o) const {
        if (ctx_ != o.ctx_ && !ctx_->compatible(*o.ctx_))
            throw std::invalid_argument("WeylElement: incompatible algebras");
    }

  private:
    static WeylElement generator(Ctx ctx, int j0, bool is_xi) {
        WeylElement e(std::move(ctx));
        const int d = e.dim();
        if (j0 < 0 || j0 >= d) throw std::out_of_range("WeylElement: generator index out of range");
        Monomial m(2 * d, 0);
        m[is_xi ? d + j0 : j0] = 1;
        e.add_term(m, Ops::one());
        return e;
    }

    Ctx ctx_;
    TermMap terms_;
};

namespace detail {

// Normal-orders a generator word by adjacent transpositions.  Each swap of an
// out-of-order pair emits the commutator correction, a word shorter by two;
// total degree strictly drops there, so the recursion terminates.
template <class K>
void normal_order_word(const WeylContext<K>& ctx, std::vector<int>& word, const K& coeff,
                       typename WeylElement<K>::TermMap& out) {
    for (std::size_t i = 0; i + 1 < word.size(); ++i) {
        if (word[i] <= word[i + 1]) continue;
        K comm = ctx.commutator(word[i], word[i + 1]);
        std::swap(word[i], word[i + 1]);
        if (!ScalarOps<K>::is_zero(comm)) {
            std::vector<int> reduced;
            reduced.reserve(word.size() - 2);
            reduced.insert(reduced.end(), word.begin(), word.begin() + i);
            reduced.insert(reduced.end(), word.begin() + i + 2, word.end());
            normal_order_word(ctx, reduced, coeff * comm, out);
        }
        // Restart the scan from the position the swap may have disordered.
        i = i > 0 ? i - 2 : std::size_t(-1);
    }
    Monomial m(2 * ctx.dim(), 0);
    for (int g : word) ++m[g];
    auto it = out.find(m);
    if (it == out.end()) {
        out.emplace(std::move(m), coeff);
    } else {
        it->second += coeff;
        if (ScalarOps<K>::is_zero(it->second)) out.erase(it);
    }
}

inline void append_word(std::vector<int>& word, const Monomial& m) {
    for (int g = 0; g < int(m.size()); ++g)
        for (int r = 0; r < m[g]; ++r) word.push_back(g);
}

} // namespace detail

// Normal-ordered product.  Exact: coefficients stay in K.
template <class K>
WeylElement<K> weyl_mul(const WeylElement<K>& a, const WeylElement<K>& b) {
    a.require_compatible(b);
    WeylElement<K> r(a.context());
    typename WeylElement<K>::TermMap acc;
    std::vector<int> word;
    for (const auto& [ma, ca] : a.terms()) {
        for (const auto& [mb, cb] : b.terms()) {
            word.clear();
            detail::append_word(word, ma);
            detail::append_word(word, mb);
            detail::normal_order_word(*a.context(), word, ca * cb, acc);
        }
    }
    for (auto& [m, c] : acc) r.add_term(m, std::move(c));
    return r;
}

template <class K>
WeylElement<K> operator*(const WeylElement<K>& a, const WeylElement<K>& b) {
    return weyl_mul(a, b);
}

// Conjugate-linear anti-homomorphism fixing the generators.
template <class K>
WeylElement<K> adjoint(const WeylElement<K>& a) {
    WeylElement<K> r(a.context());
    typename WeylElement<K>::TermMap acc;
    std::vector<int> word;
    for (const auto& [m, c] : a.terms()) {
        word.clear();
        detail::append_word(word, m);
        std::reverse(word.begin(), word.end());
        detail::normal_order_word(*a.context(), word, ScalarOps<K>::conj(c), acc);
    }
    for (auto& [m, c] : acc) r.add_term(m, std::move(c));
    return r;
}

namespace detail {

// Formal partial derivative: the generator at slot g maps to -i, all other
// generators to 0.  This is a derivation of the CCR product because the
// commutator corrections are scalars.
template <class K>
WeylElement<K> derive_slot(const WeylElement<K>& a, int g) {
    WeylElement<K> r(a.context());
    static const K minus_i = -ScalarOps<K>::i();
    for (const auto& [m, c] : a.terms()) {
        if (m[g] == 0) continue;
        Monomial lowered = m;
        --lowered[g];
        r.add_term(lowered, ScalarOps<K>::from_int(m[g]) * minus_i * c);
    }
    return r;
}

} // namespace detail

// D_{x_j}, D_{xi_j} with D_{x_j}(x_k) = -i delta_jk, D_{x_j}(xi_k) = 0 and
// symmetrically; j is 1-based.
template <class K>
WeylElement<K> derive_x(int j, const WeylElement<K>& a) {
    if (j < 1 || j > a.dim()) throw std::out_of_range("derive_x: index out of range");
    return detail::derive_slot(a, j - 1);
}

template <class K>
WeylElement<K> derive_xi(int j, const WeylElement<K>& a) {
    if (j < 1 || j > a.dim()) throw std::out_of_range("derive_xi: index out of range");
    return detail::derive_slot(a, a.dim() + j - 1);
}

template <class K>
WeylElement<K> derive_x_multi(const std::vector<int>& alpha, const WeylElement<K>& a) {
    WeylElement<K> r = a;
    for (int j = 0; j < int(alpha.size()); ++j)
        for (int k = 0; k < alpha[j]; ++k) r = derive_x(j + 1, r);
    return r;
}

template <class K>
WeylElement<K> derive_xi_multi(const std::vector<int>& alpha, const WeylElement<K>& a) {
    WeylElement<K> r = a;
    for (int j = 0; j < int(alpha.size()); ++j)
        for (int k = 0; k < alpha[j]; ++k) r = derive_xi(j + 1, r);
    return r;
}

// Algebra automorphism x_j -> x_j + y_j (and xi_j -> xi_j + y_{d+j} when y
// has length 2d).  Scalars commute with everything, so each generator power
// expands binomially and the word stays normal-ordered.
template <class K>
WeylElement<K> transference(const std::vector<K>& y, const WeylElement<K>& a) {
    const int d = a.dim();
    if (int(y.size()) != d && int(y.size()) != 2 * d)
        throw std::invalid_argument("transference: shift length must be d or 2d");
    std::vector<K> shift(2 * d, ScalarOps<K>::zero());
    std::copy(y.begin(), y.end(), shift.begin());

    WeylElement<K> r(a.context());
    // Pascal-style expansion per slot.
    for (const auto& [m, c] : a.terms()) {
        std::map<Monomial, K> partial{{Monomial(2 * d, 0), c}};
        for (int g = 0; g < 2 * d; ++g) {
            if (m[g] == 0) continue;
            std::map<Monomial, K> next;
            for (const auto& [pm, pc] : partial) {
                // (g + y_g)^{m[g]} = sum_k binom(m,k) y_g^k g^{m[g]-k}
                K pow = ScalarOps<K>::one();
                long binom = 1;
                for (int k = 0; k <= m[g]; ++k) {
                    Monomial nm = pm;
                    nm[g] += m[g] - k;
                    K add = ScalarOps<K>::from_int(binom) * pow * pc;
                    auto it = next.find(nm);
                    if (it == next.end()) next.emplace(std::move(nm), std::move(add));
                    else it->second += add;
                    pow *= shift[g];
                    binom = binom * (m[g] - k) / (k + 1);
                }
            }
            partial = std::move(next);
        }
        for (auto& [pm, pc] : partial) r.add_term(pm, std::move(pc));
    }
    return r;
}

template <class K>
BiDegree bidegree(const WeylElement<K>& a) {
    return a.bidegree();
}

// Deterministic display form, e.g. "(0,-1)*x1*xi2 + (2,0)*x2^3".
template <class K>
std::string to_string(const WeylElement<K>& a) {
    if (a.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    const int d = a.dim();
    for (const auto& [m, c] : a.terms()) {
        if (!first) os << " + ";
        first = false;
        Cd v = ScalarOps<K>::to_cd(c);
        os << "(" << v.real() << (v.imag() < 0 ? "" : "+") << v.imag() << "i)";
        for (int g = 0; g < 2 * d; ++g) {
            if (m[g] == 0) continue;
            os << "*" << (g < d ? "x" : "xi") << (g < d ? g + 1 : g - d + 1);
            if (m[g] > 1) os << "^" << m[g];
        }
    }
    return os.str();
}

} // namespace ncgeo

#endif
