#include "ncgeo/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace ncgeo {

namespace jsonw {

std::string num(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string num(long v) { return std::to_string(v); }

std::string str(const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
        switch (c) {
            case '"': out += "\\\""; break;
            case '\\': out += "\\\\"; break;
            case '\n': out += "\\n"; break;
            case '\t': out += "\\t"; break;
            default: out += c;
        }
    }
    out += '"';
    return out;
}

std::string arr(const std::vector<std::string>& rendered) {
    std::string out = "[";
    for (std::size_t k = 0; k < rendered.size(); ++k) {
        if (k) out += ",";
        out += rendered[k];
    }
    out += "]";
    return out;
}

std::string obj(const std::vector<std::pair<std::string, std::string>>& fields) {
    std::string out = "{";
    for (std::size_t k = 0; k < fields.size(); ++k) {
        if (k) out += ",";
        out += str(fields[k].first) + ":" + fields[k].second;
    }
    out += "}";
    return out;
}

std::string matrix(const Eigen::MatrixXd& m) {
    std::vector<std::string> rows;
    for (long r = 0; r < m.rows(); ++r) {
        std::vector<std::string> cols;
        for (long c = 0; c < m.cols(); ++c) cols.push_back(num(m(r, c)));
        rows.push_back(arr(cols));
    }
    return arr(rows);
}

std::string real_vector(const std::vector<double>& v) {
    std::vector<std::string> items;
    for (double x : v) items.push_back(num(x));
    return arr(items);
}

} // namespace jsonw

SkewMatrix read_skew_matrix(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open matrix file: " + path);
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument("malformed JSON in " + path + ": " + e.what());
    }
    if (!j.is_array() || j.empty()) throw std::invalid_argument("matrix file must hold an array of rows");
    const long rows = long(j.size());
    Eigen::MatrixXd m(rows, rows);
    for (long r = 0; r < rows; ++r) {
        if (!j[r].is_array() || long(j[r].size()) != rows)
            throw std::invalid_argument("matrix file rows must be square");
        for (long c = 0; c < rows; ++c) {
            if (!j[r][c].is_number()) throw std::invalid_argument("matrix entries must be numbers");
            m(r, c) = j[r][c].get<double>();
        }
    }
    return SkewMatrix(m);
}

GridFunction read_grid_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open grid file: " + path);
    std::string line;
    if (!std::getline(in, line)) throw std::invalid_argument("empty grid file: " + path);
    int d = 0, m = 0;
    double half = 0.0;
    {
        std::istringstream hs(line);
        char comma;
        if (!(hs >> d >> comma >> half >> comma >> m))
            throw std::invalid_argument("grid header must be d,L,M");
    }
    long total = 1;
    for (int k = 0; k < d; ++k) total *= m;
    std::vector<Cd> samples;
    samples.reserve(total);
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::istringstream ls(line);
        double re, im;
        char comma;
        if (!(ls >> re >> comma >> im)) throw std::invalid_argument("grid rows must be re,im");
        samples.emplace_back(re, im);
    }
    if (long(samples.size()) != total)
        throw std::invalid_argument("grid sample count does not match header");
    return GridFunction(d, half, m, std::move(samples));
}

std::string grid_csv_string(const GridFunction& f) {
    std::string out = std::to_string(f.d()) + "," + jsonw::num(f.half_width()) + "," +
                      std::to_string(f.points_per_axis()) + "\n";
    for (const Cd& v : f.samples())
        out += jsonw::num(v.real()) + "," + jsonw::num(v.imag()) + "\n";
    return out;
}

void write_grid_csv(const std::string& path, const GridFunction& f) {
    std::ofstream out(path);
    if (!out) throw std::invalid_argument("cannot write grid file: " + path);
    out << grid_csv_string(f);
}

} // namespace ncgeo
