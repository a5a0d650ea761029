#ifndef NCGEO_BRIDGE_HPP
#define NCGEO_BRIDGE_HPP

#include "ncgeo/fock_numeric.hpp"
#include "ncgeo/moyal_grid.hpp"

namespace ncgeo {

// Weyl quantization of a sampled function: lambda(f) = (2 pi)^{-d} Int
// fhat(k) e^{i k . X} dk, with the integral discretized on f's frequency grid
// and e^{i k . X} computed by eigendecomposition of the Hermitian k . X.
Eigen::MatrixXcd lambda_matrix(const GridFunction& f, const std::vector<FockOperator>& gens);

} // namespace ncgeo

#endif
