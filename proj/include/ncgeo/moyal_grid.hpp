#ifndef NCGEO_MOYAL_GRID_HPP
#define NCGEO_MOYAL_GRID_HPP

#include <complex>
#include <functional>
#include <vector>

#include "ncgeo/scalar.hpp"
#include "ncgeo/skew_lin.hpp"

namespace ncgeo {

// Samples of a Schwartz-class function on the uniform grid x_k = -L + 2Lk/M,
// row-major over d axes, with the continuum-normalized Fourier companion
// fhat(k_m) (k_m = pi m / L, m in [-M/2, M/2)) computed at construction.
// Immutable after construction.
class GridFunction {
  public:
    GridFunction(int d, double half_width, int points_per_axis, std::vector<Cd> samples);

    static GridFunction sample(int d, double half_width, int points_per_axis,
                               const std::function<Cd(const std::vector<double>&)>& f);

    int d() const { return d_; }
    double half_width() const { return L_; }
    int points_per_axis() const { return M_; }
    double spacing() const { return 2.0 * L_ / M_; }
    long size() const { return long(samples_.size()); }
    const std::vector<Cd>& samples() const { return samples_; }
    const std::vector<Cd>& fourier() const { return fourier_; }

    double grid_coord(int index_1d) const { return -L_ + spacing() * index_1d; }
    // Frequency for a shifted index s in [0, M): k = pi (s - M/2) / L.
    double freq_coord(int s) const;

    bool matches(const GridFunction& o) const { return d_ == o.d_ && L_ == o.L_ && M_ == o.M_; }

    // Fraction of spectral l2 mass with any |m_i| >= M/2 - 1.
    double nyquist_mass() const;

  private:
    int d_;
    double L_;
    int M_;
    std::vector<Cd> samples_;
    std::vector<Cd> fourier_;
};

struct StarResult {
    GridFunction value;
    double nyquist_mass = 0.0;
    bool aliasing_warning = false;
};

// Moyal product via the twisted convolution
//   (f star g)^(k) = (2 pi)^{-d} Int fhat(eta) ghat(k - eta)
//                    e^{(i/2) eta . theta (k - eta)} d eta,
// direct O(M^{2d}) quadrature over the frequency grid.  The phase sign is the
// one reproducing lambda(xi) lambda(eta) = e^{(i/2) xi.theta eta}
// lambda(xi+eta) on plane waves; see kStarPhaseSign.
StarResult star(const GridFunction& f, const GridFunction& g, const SkewMatrix& theta);

// The frozen phase-sign convention for the twisted convolution.
inline constexpr double kStarPhaseSign = +1.0;

// Trapezoidal integral over the grid.
Cd integral(const GridFunction& f);

// || conj(f) star conj(g) - conj(g star f) ||_inf.
double star_adjoint_check(const GridFunction& f, const GridFunction& g, const SkewMatrix& theta);

double sup_distance(const GridFunction& a, const GridFunction& b);
GridFunction conj(const GridFunction& f);
GridFunction pointwise_product(const GridFunction& f, const GridFunction& g);

} // namespace ncgeo

#endif
