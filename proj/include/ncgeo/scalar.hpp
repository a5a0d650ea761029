#ifndef NCGEO_SCALAR_HPP
#define NCGEO_SCALAR_HPP

#include <complex>
#include <cstdint>
#include <string>
#include <cmath>
#include <boost/multiprecision/cpp_int.hpp>

namespace ncgeo {

using Cd = std::complex<double>;
using Rational = boost::multiprecision::cpp_rational;

// Exact complex number with rational real and imaginary parts.  Used for the
// exact-arithmetic mode of the symbolic algebra where residuals must be zero,
// not merely small.
struct Cq {
    Rational re, im;

    Cq() : re(0), im(0) {}
    Cq(int v) : re(v), im(0) {}
    Cq(Rational r) : re(std::move(r)), im(0) {}
    Cq(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}

    friend Cq operator+(const Cq& a, const Cq& b) { return {a.re + b.re, a.im + b.im}; }
    friend Cq operator-(const Cq& a, const Cq& b) { return {a.re - b.re, a.im - b.im}; }
    friend Cq operator-(const Cq& a) { return {-a.re, -a.im}; }
    friend Cq operator*(const Cq& a, const Cq& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    Cq& operator+=(const Cq& b) { re += b.re; im += b.im; return *this; }
    Cq& operator-=(const Cq& b) { re -= b.re; im -= b.im; return *this; }
    Cq& operator*=(const Cq& b) { *this = *this * b; return *this; }
    friend bool operator==(const Cq& a, const Cq& b) { return a.re == b.re && a.im == b.im; }
    friend bool operator!=(const Cq& a, const Cq& b) { return !(a == b); }
};

// Uniform scalar interface used by the templated algebra code.
template <class K> struct ScalarOps;

template <> struct ScalarOps<Cd> {
    static Cd zero() { return {0.0, 0.0}; }
    static Cd one() { return {1.0, 0.0}; }
    static Cd i() { return {0.0, 1.0}; }
    static Cd from_int(long v) { return {double(v), 0.0}; }
    static Cd conj(const Cd& v) { return std::conj(v); }
    static bool is_zero(const Cd& v) { return v.real() == 0.0 && v.imag() == 0.0; }
    static double abs(const Cd& v) { return std::abs(v); }
    static Cd parse_real(const std::string& s) { return {std::stod(s), 0.0}; }
    static Cd to_cd(const Cd& v) { return v; }
};

template <> struct ScalarOps<Cq> {
    static Cq zero() { return {}; }
    static Cq one() { return {1}; }
    static Cq i() { return {Rational(0), Rational(1)}; }
    static Cq from_int(long v) { return {Rational(v), Rational(0)}; }
    static Cq conj(const Cq& v) { return {v.re, -v.im}; }
    static bool is_zero(const Cq& v) { return v.re == 0 && v.im == 0; }
    static double abs(const Cq& v) {
        double r = v.re.convert_to<double>(), i = v.im.convert_to<double>();
        return std::hypot(r, i);
    }
    // Decimal literals parse exactly: "1.25" -> 5/4.
    static Cq parse_real(const std::string& s) { return {parse_decimal(s), Rational(0)}; }
    static Cd to_cd(const Cq& v) { return {v.re.convert_to<double>(), v.im.convert_to<double>()}; }

    static Rational parse_decimal(const std::string& s) {
        std::string t = s;
        bool neg = false;
        if (!t.empty() && (t[0] == '+' || t[0] == '-')) { neg = t[0] == '-'; t = t.substr(1); }
        auto dot = t.find('.');
        std::string digits = dot == std::string::npos ? t : t.substr(0, dot) + t.substr(dot + 1);
        int frac = dot == std::string::npos ? 0 : int(t.size() - dot - 1);
        // strip leading zeros (a leading 0 would switch cpp_int to octal)
        std::size_t nz = digits.find_first_not_of('0');
        digits = nz == std::string::npos ? "0" : digits.substr(nz);
        Rational num{boost::multiprecision::cpp_int(digits)};
        for (int k = 0; k < frac; ++k) num /= 10;
        return neg ? -num : num;
    }
};

} // namespace ncgeo

#endif
