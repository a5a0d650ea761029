#ifndef NCGEO_IO_HPP
#define NCGEO_IO_HPP

#include <string>
#include <vector>

#include "ncgeo/moyal_grid.hpp"
#include "ncgeo/skew_lin.hpp"

namespace ncgeo {

// Minimal JSON emitter.  Floats are always printed with 17 significant
// digits so reruns with identical inputs are byte-identical.
namespace jsonw {

std::string num(double v);
std::string num(long v);
std::string str(const std::string& s);
std::string arr(const std::vector<std::string>& rendered);
std::string obj(const std::vector<std::pair<std::string, std::string>>& fields);
std::string matrix(const Eigen::MatrixXd& m);
std::string real_vector(const std::vector<double>& v);

} // namespace jsonw

// Matrices are stored as JSON arrays of rows.
SkewMatrix read_skew_matrix(const std::string& path);

// Grid CSV: header line "d,L,M", then M^d lines "re,im" in row-major order.
GridFunction read_grid_csv(const std::string& path);
void write_grid_csv(const std::string& path, const GridFunction& f);
std::string grid_csv_string(const GridFunction& f);

} // namespace ncgeo

#endif
