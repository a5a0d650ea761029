#ifndef NCGEO_BAND_MATRIX_HPP
#define NCGEO_BAND_MATRIX_HPP

#include <complex>
#include <functional>
#include <stdexcept>
#include <vector>

namespace ncgeo {

// Square complex matrix stored by diagonals.  The Fock-side operators of the
// index pipeline are finite sums shift^k * diag(f(n)), so bands stay narrow
// while dimensions reach the thousands.
class BandMatrix {
  public:
    using cd = std::complex<double>;

    BandMatrix() = default;
    explicit BandMatrix(long n) : n_(n), lo_(0), hi_(0), diags_(1, std::vector<cd>(n, cd(0))) {}

    static BandMatrix zero(long n) { return BandMatrix(n); }
    static BandMatrix identity(long n) {
        BandMatrix m(n);
        for (long k = 0; k < n; ++k) m.diags_[0][k] = 1.0;
        return m;
    }
    // diag(f(0), ..., f(n-1)) placed on diagonal `offset` (col - row).
    static BandMatrix from_diagonal(long n, int offset, const std::function<cd(long)>& f) {
        BandMatrix m(n);
        m.lo_ = m.hi_ = offset;
        m.diags_.assign(1, std::vector<cd>(n - std::abs(offset)));
        for (long j = 0; j < long(m.diags_[0].size()); ++j) m.diags_[0][j] = f(j);
        return m;
    }

    long dim() const { return n_; }
    int lo() const { return lo_; }
    int hi() const { return hi_; }

    // Entry (r, c); diagonal j-index is min(r, c).
    cd at(long r, long c) const {
        long off = c - r;
        if (off < lo_ || off > hi_) return 0.0;
        return diags_[off - lo_][std::min(r, c)];
    }

    friend BandMatrix operator+(const BandMatrix& a, const BandMatrix& b) { return combined(a, b, 1.0); }
    friend BandMatrix operator-(const BandMatrix& a, const BandMatrix& b) { return combined(a, b, -1.0); }

    friend BandMatrix operator*(cd s, const BandMatrix& a) {
        BandMatrix r = a;
        for (auto& dgl : r.diags_)
            for (auto& v : dgl) v *= s;
        return r;
    }

    friend BandMatrix operator*(const BandMatrix& a, const BandMatrix& b) {
        if (a.n_ != b.n_) throw std::invalid_argument("BandMatrix: dimension mismatch");
        BandMatrix r(a.n_);
        r.lo_ = a.lo_ + b.lo_;
        r.hi_ = a.hi_ + b.hi_;
        if (r.hi_ - r.lo_ > 64) throw std::logic_error("BandMatrix: bandwidth blow-up");
        r.diags_.assign(r.hi_ - r.lo_ + 1, {});
        for (int oc = r.lo_; oc <= r.hi_; ++oc)
            r.diags_[oc - r.lo_].assign(a.n_ - std::min<long>(std::abs(oc), a.n_), cd(0));
        for (int oa = a.lo_; oa <= a.hi_; ++oa)
            for (int ob = b.lo_; ob <= b.hi_; ++ob) {
                int oc = oa + ob;
                long rmin = std::max<long>({0, -oa, -oc});
                long rmax = std::min<long>({a.n_ - 1, a.n_ - 1 - oa, a.n_ - 1 - oc});
                for (long row = rmin; row <= rmax; ++row) {
                    cd va = a.diags_[oa - a.lo_][std::min(row, row + oa)];
                    cd vb = b.diags_[ob - b.lo_][std::min(row + oa, row + oc)];
                    r.diags_[oc - r.lo_][std::min(row, row + oc)] += va * vb;
                }
            }
        return r;
    }

    // Sum of the main diagonal over rows 0..k_max (interior trace window).
    cd partial_trace(long k_max) const {
        cd s = 0.0;
        if (lo_ > 0 || hi_ < 0) return s;
        const auto& main = diags_[-lo_];
        for (long k = 0; k <= std::min<long>(k_max, long(main.size()) - 1); ++k) s += main[k];
        return s;
    }

    double max_abs_upto(long k_max) const {
        double m = 0.0;
        for (int off = lo_; off <= hi_; ++off) {
            const auto& dgl = diags_[off - lo_];
            for (long j = 0; j <= std::min<long>(k_max, long(dgl.size()) - 1); ++j)
                m = std::max(m, std::abs(dgl[j]));
        }
        return m;
    }

  private:
    static BandMatrix combined(const BandMatrix& a, const BandMatrix& b, cd sb) {
        if (a.n_ != b.n_) throw std::invalid_argument("BandMatrix: dimension mismatch");
        BandMatrix r(a.n_);
        r.lo_ = std::min(a.lo_, b.lo_);
        r.hi_ = std::max(a.hi_, b.hi_);
        r.diags_.assign(r.hi_ - r.lo_ + 1, {});
        for (int off = r.lo_; off <= r.hi_; ++off) {
            auto& dgl = r.diags_[off - r.lo_];
            dgl.assign(std::max<long>(0, a.n_ - std::abs(off)), cd(0));
            if (off >= a.lo_ && off <= a.hi_)
                for (long j = 0; j < long(dgl.size()); ++j) dgl[j] += a.diags_[off - a.lo_][j];
            if (off >= b.lo_ && off <= b.hi_)
                for (long j = 0; j < long(dgl.size()); ++j) dgl[j] += sb * b.diags_[off - b.lo_][j];
        }
        return r;
    }

    long n_ = 0;
    int lo_ = 0, hi_ = 0;
    std::vector<std::vector<cd>> diags_;
};

} // namespace ncgeo

#endif
