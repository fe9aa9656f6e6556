#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <cstdint>
#include <string>
#include <type_traits>

namespace qhf {

// Exact rational scalar backend. Closed under +,-,*,/ with no rounding.
using Rational = boost::multiprecision::cpp_rational;

template <class S>
struct scalar_traits;

template <>
struct scalar_traits<double> {
    static constexpr bool exact = false;
    static double abs(double v) { return std::fabs(v); }
    static double to_double(double v) { return v; }
    static double from_int(long long v) { return static_cast<double>(v); }
    static std::string to_string(double v) { return std::to_string(v); }
};

template <>
struct scalar_traits<Rational> {
    static constexpr bool exact = true;
    static Rational abs(const Rational& v) { return v < 0 ? Rational(-v) : v; }
    static double to_double(const Rational& v) { return v.convert_to<double>(); }
    static Rational from_int(long long v) { return Rational(v); }
    static std::string to_string(const Rational& v) {
        auto den = boost::multiprecision::denominator(v);
        std::string s = boost::multiprecision::numerator(v).str();
        if (den != 1) s += "/" + den.str();
        return s;
    }
};

template <class S>
inline constexpr bool is_exact_v = scalar_traits<S>::exact;

template <class S>
S scalar_abs(const S& v) { return scalar_traits<S>::abs(v); }

}  // namespace qhf
