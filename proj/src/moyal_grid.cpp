#include "ncgeo/moyal_grid.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "parallel.hpp"

namespace ncgeo {

namespace {

constexpr double kPi = std::numbers::pi;

bool power_of_two(int m) { return m > 0 && (m & (m - 1)) == 0; }

// In-place radix-2 FFT; sign = -1 forward (e^{-2pi i jq/M}), +1 backward.
void fft_radix2(std::vector<Cd>& a, int sign) {
    const std::size_t n = a.size();
    for (std::size_t i = 1, j = 0; i < n; ++i) {
        std::size_t bit = n >> 1;
        for (; j & bit; bit >>= 1) j ^= bit;
        j ^= bit;
        if (i < j) std::swap(a[i], a[j]);
    }
    for (std::size_t len = 2; len <= n; len <<= 1) {
        double ang = sign * 2.0 * kPi / double(len);
        Cd wl(std::cos(ang), std::sin(ang));
        for (std::size_t i = 0; i < n; i += len) {
            Cd w(1.0);
            for (std::size_t k = 0; k < len / 2; ++k) {
                Cd u = a[i + k], v = a[i + k + len / 2] * w;
                a[i + k] = u + v;
                a[i + k + len / 2] = u - v;
                w *= wl;
            }
        }
    }
}

// One-axis continuum transform on the offset grid.  Forward:
//   out[s] = h * (-1)^m * DFT_-(in)[m mod M],  m = s - M/2.
// Backward: out[j] = (1/2L) * (-1)^j * DFT_+((-1)^m in)[j].
void axis_transform(std::vector<Cd>& data, int d, int M, double L, int axis, bool forward) {
    long total = 1;
    for (int k = 0; k < d; ++k) total *= M;
    long stride = 1;
    for (int k = d - 1; k > axis; --k) stride *= M;
    long lines = total / M;

    std::vector<Cd> line(M);
    double h = 2.0 * L / M;
    long strides[16];
    long cur = 1;
    for (int k = d - 1; k >= 0; --k) {
        strides[k] = cur;
        cur *= M;
    }
    for (long ln = 0; ln < lines; ++ln) {
        // Base offset of this line: digits of ln fill the non-axis slots.
        long base = 0, rest = ln;
        for (int k = d - 1; k >= 0; --k) {
            if (k == axis) continue;
            base += (rest % M) * strides[k];
            rest /= M;
        }

        if (forward) {
            for (int j = 0; j < M; ++j) line[j] = data[base + j * stride];
            fft_radix2(line, -1);
            for (int s = 0; s < M; ++s) {
                int m = s - M / 2;
                int q = ((m % M) + M) % M;
                double ph = (m % 2 == 0) ? 1.0 : -1.0;
                data[base + s * stride] = h * ph * line[q];
            }
        } else {
            std::vector<Cd> tmp(M);
            for (int s = 0; s < M; ++s) {
                int m = s - M / 2;
                double ph = (m % 2 == 0) ? 1.0 : -1.0;
                tmp[s] = ph * data[base + s * stride];
            }
            fft_radix2(tmp, +1);
            for (int j = 0; j < M; ++j) {
                double ph = (j % 2 == 0) ? 1.0 : -1.0;
                data[base + j * stride] = ph * tmp[j] / (2.0 * L);
            }
        }
    }
}

std::vector<Cd> full_transform(std::vector<Cd> data, int d, int M, double L, bool forward) {
    for (int axis = 0; axis < d; ++axis) axis_transform(data, d, M, L, axis, forward);
    return data;
}

} // namespace

GridFunction::GridFunction(int d, double half_width, int points_per_axis, std::vector<Cd> samples)
    : d_(d), L_(half_width), M_(points_per_axis), samples_(std::move(samples)) {
    if (d_ < 1 || d_ > 4) throw std::invalid_argument("GridFunction: d must be in 1..4");
    if (L_ <= 0.0) throw std::invalid_argument("GridFunction: half width must be positive");
    if (M_ < 8 || !power_of_two(M_))
        throw std::invalid_argument("GridFunction: M must be a power of two and >= 8");
    long total = 1;
    for (int k = 0; k < d_; ++k) total *= M_;
    if (long(samples_.size()) != total)
        throw std::invalid_argument("GridFunction: sample count mismatch");
    for (const Cd& v : samples_)
        if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
            throw std::invalid_argument("GridFunction: samples must be finite");
    fourier_ = full_transform(samples_, d_, M_, L_, true);
}

GridFunction GridFunction::sample(int d, double half_width, int points_per_axis,
                                  const std::function<Cd(const std::vector<double>&)>& f) {
    long total = 1;
    for (int k = 0; k < d; ++k) total *= points_per_axis;
    std::vector<Cd> samples(total);
    std::vector<double> x(d);
    double h = 2.0 * half_width / points_per_axis;
    for (long idx = 0; idx < total; ++idx) {
        long rest = idx;
        for (int k = d - 1; k >= 0; --k) {
            x[k] = -half_width + h * (rest % points_per_axis);
            rest /= points_per_axis;
        }
        samples[idx] = f(x);
    }
    return GridFunction(d, half_width, points_per_axis, std::move(samples));
}

double GridFunction::freq_coord(int s) const { return kPi * (s - M_ / 2) / L_; }

double GridFunction::nyquist_mass() const {
    double total = 0.0, shell = 0.0;
    long n = long(fourier_.size());
    for (long idx = 0; idx < n; ++idx) {
        double m2 = std::norm(fourier_[idx]);
        total += m2;
        long rest = idx;
        bool near = false;
        for (int k = d_ - 1; k >= 0; --k) {
            int s = int(rest % M_);
            rest /= M_;
            if (std::abs(s - M_ / 2) >= M_ / 2 - 1) near = true;
        }
        if (near) shell += m2;
    }
    return total > 0.0 ? shell / total : 0.0;
}

StarResult star(const GridFunction& f, const GridFunction& g, const SkewMatrix& theta) {
    if (!f.matches(g)) throw std::invalid_argument("star: grid mismatch");
    if (theta.dim() != f.d()) throw std::invalid_argument("star: theta dimension mismatch");
    const int d = f.d(), M = f.points_per_axis();
    const double L = f.half_width();
    long total = f.size();

    // Phase tables exp(sign * (i/2) theta_ab k_a k_b) for all frequency pairs.
    std::vector<std::vector<Cd>> phase(d * d);
    for (int a = 0; a < d; ++a)
        for (int b = 0; b < d; ++b) {
            if (theta(a, b) == 0.0) continue;
            auto& tab = phase[a * d + b];
            tab.resize(std::size_t(M) * M);
            for (int sa = 0; sa < M; ++sa)
                for (int sb = 0; sb < M; ++sb) {
                    double arg = kStarPhaseSign * 0.5 * theta(a, b) * f.freq_coord(sa) * f.freq_coord(sb);
                    tab[std::size_t(sa) * M + sb] = Cd(std::cos(arg), std::sin(arg));
                }
        }

    const std::vector<Cd>& fh = f.fourier();
    const std::vector<Cd>& gh = g.fourier();
    std::vector<Cd> out(total, Cd(0));
    double dk = kPi / L;
    double norm = std::pow(dk / (2.0 * kPi), d);

    parallel_for(total, [&](long kidx) {
        int ks[4];
        long rest = kidx;
        for (int a = d - 1; a >= 0; --a) {
            ks[a] = int(rest % M);
            rest /= M;
        }
        // Kahan over the eta grid in fixed order.
        Cd sum(0), comp(0);
        int es[4], zs[4];
        for (long eidx = 0; eidx < total; ++eidx) {
            Cd fv = fh[eidx];
            if (fv == Cd(0)) continue;
            long r = eidx;
            bool in_range = true;
            for (int a = d - 1; a >= 0; --a) {
                es[a] = int(r % M);
                r /= M;
                zs[a] = ks[a] - es[a] + M / 2;
                if (zs[a] < 0 || zs[a] >= M) in_range = false;
            }
            if (!in_range) continue;
            long zidx = 0;
            for (int a = 0; a < d; ++a) zidx = zidx * M + zs[a];
            Cd term = fv * gh[zidx];
            for (int a = 0; a < d; ++a)
                for (int b = 0; b < d; ++b) {
                    const auto& tab = phase[a * d + b];
                    if (!tab.empty()) term *= tab[std::size_t(es[a]) * M + zs[b]];
                }
            Cd y = term - comp;
            Cd t = sum + y;
            comp = (t - sum) - y;
            sum = t;
        }
        out[kidx] = norm * sum;
    });

    std::vector<Cd> result = full_transform(std::move(out), d, M, L, false);
    StarResult r{GridFunction(d, L, M, std::move(result)), 0.0, false};
    double mass = std::max(f.nyquist_mass(), g.nyquist_mass());
    r.nyquist_mass = mass;
    r.aliasing_warning = mass > 1e-8;
    return r;
}

Cd integral(const GridFunction& f) {
    Cd s(0), comp(0);
    for (const Cd& v : f.samples()) {
        Cd y = v - comp;
        Cd t = s + y;
        comp = (t - s) - y;
        s = t;
    }
    return s * std::pow(f.spacing(), f.d());
}

GridFunction conj(const GridFunction& f) {
    std::vector<Cd> s(f.samples().size());
    for (std::size_t k = 0; k < s.size(); ++k) s[k] = std::conj(f.samples()[k]);
    return GridFunction(f.d(), f.half_width(), f.points_per_axis(), std::move(s));
}

GridFunction pointwise_product(const GridFunction& f, const GridFunction& g) {
    if (!f.matches(g)) throw std::invalid_argument("pointwise_product: grid mismatch");
    std::vector<Cd> s(f.samples().size());
    for (std::size_t k = 0; k < s.size(); ++k) s[k] = f.samples()[k] * g.samples()[k];
    return GridFunction(f.d(), f.half_width(), f.points_per_axis(), std::move(s));
}

double sup_distance(const GridFunction& a, const GridFunction& b) {
    if (!a.matches(b)) throw std::invalid_argument("sup_distance: grid mismatch");
    double m = 0.0;
    for (std::size_t k = 0; k < a.samples().size(); ++k)
        m = std::max(m, std::abs(a.samples()[k] - b.samples()[k]));
    return m;
}

double star_adjoint_check(const GridFunction& f, const GridFunction& g, const SkewMatrix& theta) {
    GridFunction lhs = star(conj(f), conj(g), theta).value;
    GridFunction rhs = conj(star(g, f, theta).value);
    return sup_distance(lhs, rhs);
}

} // namespace ncgeo
