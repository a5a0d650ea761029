#ifndef NCGEO_CLIFFORD_HPP
#define NCGEO_CLIFFORD_HPP

#include <Eigen/Dense>
#include <complex>
#include <map>
#include <vector>

#include "ncgeo/scalar.hpp"
#include "ncgeo/skew_lin.hpp"

namespace ncgeo {

// Cl^d in the 2^{d/2}-dimensional Pauli-tensor representation, d even.
// Invariants hold exactly: c_j c_k + c_k c_j = 2 delta_jk, gamma^2 = I,
// gamma c_j = -c_j gamma with gamma = (-i)^{d/2} c_1 ... c_d.
struct CliffordAlgebra {
    int d = 0;
    std::vector<Eigen::MatrixXcd> c;
    Eigen::MatrixXcd gamma;

    long rep_dim() const { return gamma.rows(); }
};

CliffordAlgebra clifford_build(int d);

// Supertrace tr(gamma a) on the matrix representation.
std::complex<double> str(const CliffordAlgebra& cl, const Eigen::MatrixXcd& a);

// omega = (i/2) sum_jk theta'_jk c_j c_k; self-adjoint, commutes with gamma,
// and satisfies D^2 = |xi|^2 - omega.
Eigen::MatrixXcd curvature_form(const CliffordAlgebra& cl, const SkewMatrix& theta_prime);

// Word-basis view: words are bitmasks over the d letters, c_S = prod_{j in S}
// c_j ascending.  Products reduce as c_S c_T = mul[S][T] * c_{S xor T}; the
// factors and the supertraces tr(gamma c_S) are read off the representation
// once (they are exact integers times powers of i).
class CliffordBasis {
  public:
    explicit CliffordBasis(const CliffordAlgebra& cl);

    int d() const { return d_; }
    int nwords() const { return 1 << d_; }
    std::complex<double> mul_factor(int s, int t) const { return mul_[(s << d_) + t]; }
    std::complex<double> str_word(int s) const { return str_[s]; }

  private:
    int d_;
    std::vector<std::complex<double>> mul_, str_;
};

// Finite expansion sum_S M_S (x) c_S with coefficients in a module M that
// supports +, * and complex scaling.  Used with dense matrices, banded
// matrices and symbolic Weyl elements.
template <class M>
struct CliffordPoly {
    const CliffordBasis* basis = nullptr;
    std::map<int, M> comps;

    CliffordPoly() = default;
    explicit CliffordPoly(const CliffordBasis& b) : basis(&b) {}

    static CliffordPoly scalar(const CliffordBasis& b, M m) {
        CliffordPoly p(b);
        p.comps.emplace(0, std::move(m));
        return p;
    }
    static CliffordPoly letter(const CliffordBasis& b, int j, M m) {
        CliffordPoly p(b);
        p.comps.emplace(1 << j, std::move(m));
        return p;
    }

    void accumulate(int word, const M& m, std::complex<double> factor) {
        auto it = comps.find(word);
        if (it == comps.end()) {
            M scaled = factor * m;
            comps.emplace(word, std::move(scaled));
        } else {
            it->second = it->second + factor * m;
        }
    }

    friend CliffordPoly operator+(const CliffordPoly& a, const CliffordPoly& b) {
        CliffordPoly r = a;
        if (!r.basis) r.basis = b.basis;
        for (const auto& [w, m] : b.comps) r.accumulate(w, m, 1.0);
        return r;
    }
    friend CliffordPoly operator-(const CliffordPoly& a, const CliffordPoly& b) {
        CliffordPoly r = a;
        if (!r.basis) r.basis = b.basis;
        for (const auto& [w, m] : b.comps) r.accumulate(w, m, -1.0);
        return r;
    }
    friend CliffordPoly operator*(const CliffordPoly& a, const CliffordPoly& b) {
        CliffordPoly r(*a.basis);
        for (const auto& [s, ma] : a.comps)
            for (const auto& [t, mb] : b.comps) {
                M prod = ma * mb;
                r.accumulate(s ^ t, prod, a.basis->mul_factor(s, t));
            }
        return r;
    }
    friend CliffordPoly operator*(std::complex<double> s, const CliffordPoly& a) {
        CliffordPoly r(*a.basis);
        for (const auto& [w, m] : a.comps) r.accumulate(w, m, s);
        return r;
    }

    // Str = sum_S trace_fn(M_S) tr(gamma c_S).
    template <class TraceFn>
    std::complex<double> supertrace(TraceFn&& trace_fn) const {
        std::complex<double> acc = 0.0;
        for (const auto& [w, m] : comps) {
            std::complex<double> sw = basis->str_word(w);
            if (sw != std::complex<double>(0.0, 0.0)) acc += sw * trace_fn(m);
        }
        return acc;
    }
};

} // namespace ncgeo

#endif
