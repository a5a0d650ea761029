#ifndef NCGEO_INDEX_ENGINE_HPP
#define NCGEO_INDEX_ENGINE_HPP

#include <complex>
#include <vector>

#include "ncgeo/band_matrix.hpp"
#include "ncgeo/clifford.hpp"
#include "ncgeo/fock_numeric.hpp"
#include "ncgeo/scalar.hpp"
#include "ncgeo/skew_lin.hpp"

namespace ncgeo {

using BigInt = boost::multiprecision::cpp_int;

// alpha(k) = k_1!...k_m! / ((k_1+1)(k_1+k_2+2)...(|k|+m)) and the sigma table
// for n = |k| + m/2: prod_{j=0}^{n-1}(z+j) = sum_j sigma_{n,j} z^j.
struct CocycleConstants {
    int m = 0;
    std::vector<int> k;
    Rational alpha;
    std::vector<BigInt> sigma; // sigma[j], j = 0..n
};

CocycleConstants cocycle_constants(int m, const std::vector<int>& k);

// Coefficients of prod_{j=0}^{n-1}(z+j), indexed by power of z.
std::vector<BigInt> sigma_table(int n);

// Chern character coefficient (-1)^k (2k)!/k!; 1 for k = 0.
Rational chern_coefficient(int k);

// || D^2 - (sum_j Xi_j^2 (x) 1 - 1 (x) omega) || on the interior block, for
// D = sum_j Xi_j (x) c_j built from a FockRep of R_{theta'}.
double dirac_square_check(int d, const SkewMatrix& theta_prime,
                          const std::shared_ptr<const FockRep>& rep);

// Operand of the residue cocycle: an element of M_n(Fock (x) Cl^d) together
// with its differential da = sum_j D_j(a) (x) c_j.  Blocks are stored
// row-major; `differential` may be empty for the a_0 slot.
struct CocycleOperand {
    int n = 1;
    std::vector<CliffordPoly<Eigen::MatrixXcd>> value;
    std::vector<CliffordPoly<Eigen::MatrixXcd>> differential;
};

struct CocycleValue {
    std::complex<double> value;
    double tail_diagnostic = 0.0; // share of the trace carried by the top of the window
    bool trace_class_warning = false;
};

// phi_m(a_0, ..., a_m) = (pi^{d/2} / m!) Str_theta(a_0 da_1 ... da_m
// omega_c^{(d-m)/2} / ((d-m)/2)!) for even m; odd m is rejected (phi_m = 0 by
// the vanishing theorem).  Str_theta carries the rep's trace normalization.
CocycleValue simplified_cocycle(int m, const std::vector<CocycleOperand>& a,
                                const CliffordAlgebra& cl, const SkewMatrix& theta_prime,
                                const std::shared_ptr<const FockRep>& rep);

// Curvature factor entering the cocycle; opposite in sign to the omega of the
// D^2 identity.  Fixed by the d=2 index normalization 4 pi^2 (1 - theta theta').
Eigen::MatrixXcd cocycle_curvature(const CliffordAlgebra& cl, const SkewMatrix& theta_prime);

struct BottIndexResult {
    double matrix_value = 0.0;
    double series_value = 0.0;
    double closed_form = 0.0;
    double matrix_tail = 0.0;
    double series_tail = 0.0;
    int matrix_cutoff = 0;
    long series_cutoff = 0;
    bool methods_agree = false;
};

// d=2 Bott projector pairing via two routes: (i) the matrix route evaluates
// pi Str((e - 1_e) omega_c) + pi Str(e de de) with e built from ladder/diagonal
// Fock matrices at `matrix_cutoff`; (ii) the series route evaluates
// -4 pi^2 theta theta' + 8 theta pi^2 sum_{k<=cutoff} 1/((1+2k theta)(1+2theta+2k theta)).
// Throws GateError if the two disagree beyond the combined tail bounds.
BottIndexResult bott_index(double theta, double theta_prime, long series_cutoff,
                           int matrix_cutoff = 2000);

struct GateError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace ncgeo

#endif
