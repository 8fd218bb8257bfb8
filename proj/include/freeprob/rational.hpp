#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <string>

namespace freeprob {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int factorial(long n) {
    Int r = 1;
    for (long i = 2; i <= n; ++i) r *= i;
    return r;
}

// n(n-1)...(n-k+1), zero when the product crosses zero
inline Int falling(const Int& n, long k) {
    Int r = 1;
    for (long i = 0; i < k; ++i) r *= (n - i);
    return r;
}

inline Int binomial(long n, long k) {
    if (k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    Int r = 1;
    for (long i = 1; i <= k; ++i) { r *= (n - k + i); r /= i; }
    return r;
}

// generalized binomial x(x-1)...(x-k+1)/k! for rational x
inline Rat binomial_rat(const Rat& x, long k) {
    if (k < 0) return 0;
    Rat r = 1;
    for (long i = 0; i < k; ++i) r *= (x - i);
    return r / Rat(factorial(k));
}

// standard double factorial m(m-2)(m-4)...; empty product for m <= 0
inline Int df_std(long m) {
    Int r = 1;
    for (long i = m; i >= 2; i -= 2) r *= i;
    return r;
}

// This library's m!! follows the convention m!! = (m-1)(m-3)(m-5)...,
// i.e. one step below the common definition: here 4!! = 3*1 = 3 and
// 5!! = 4*2 = 8.  Everything in exactcount/weingarten that quotes a
// double factorial uses this convention; see README.
inline Int df_shifted(long m) { return df_std(m - 1); }

inline Int ipow(Int b, long e) {
    Int r = 1;
    while (e > 0) { if (e & 1) r *= b; b *= b; e >>= 1; }
    return r;
}

inline Rat rpow(const Rat& b, long e) {
    if (e < 0) {
        if (b == 0) throw std::domain_error("rpow: 0 to negative power");
        return Rat(1) / rpow(b, -e);
    }
    Rat r = 1, x = b;
    while (e > 0) { if (e & 1) r *= x; x *= x; e >>= 1; }
    return r;
}

inline std::string rat_str(const Rat& r) {
    Int num = numerator(r), den = denominator(r);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

inline Rat rat_parse(const std::string& s) {
    auto pos = s.find('/');
    try {
        if (pos == std::string::npos) {
            // allow plain integers and decimal literals
            auto dot = s.find('.');
            if (dot == std::string::npos) return Rat(Int(s));
            std::string head = s.substr(0, dot), tail = s.substr(dot + 1);
            bool neg = !head.empty() && head[0] == '-';
            Int scale = ipow(10, (long)tail.size());
            Int whole = head.empty() || head == "-" ? Int(0) : Int(head);
            Int frac = tail.empty() ? Int(0) : Int(tail);
            Rat r = Rat(whole) + (neg ? -Rat(frac, scale) : Rat(frac, scale));
            return r;
        }
        return Rat(Int(s.substr(0, pos)), Int(s.substr(pos + 1)));
    } catch (const std::exception&) {
        throw std::invalid_argument("cannot parse rational: " + s);
    }
}

inline double to_double(const Rat& r) { return r.convert_to<double>(); }

} // namespace freeprob
