#ifndef ACOLEN_NUMERIC_HPP
#define ACOLEN_NUMERIC_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace acolen {

using Int = std::int64_t;
using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

inline BigInt big_pow(const BigInt& base, unsigned exp) {
    BigInt r = 1, b = base;
    while (exp) {
        if (exp & 1u) r *= b;
        b *= b;
        exp >>= 1u;
    }
    return r;
}

inline BigInt binomial(Int n, Int k) {
    if (k < 0 || n < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    BigInt r = 1;
    for (Int i = 1; i <= k; ++i) {
        r *= (n - k + i);
        r /= i;
    }
    return r;
}

/// floor(num/den) for a rational given as BigRat.
inline BigInt rat_floor(const BigRat& x) {
    BigInt n = numerator(x), d = denominator(x);
    BigInt q = n / d;
    if (n % d != 0 && n < 0) --q;
    return q;
}

inline double to_double(const BigRat& x) { return x.convert_to<double>(); }

/// Decimal rendering with `digits` fractional digits, round half away from zero.
inline std::string decimal_string(const BigRat& x, int digits = 12) {
    BigInt n = numerator(x), d = denominator(x);
    bool neg = n < 0;
    if (neg) n = -n;
    BigInt scale = big_pow(10, static_cast<unsigned>(digits));
    BigInt scaled = n * scale * 2 + d;  // adds 1/2 ulp for rounding
    scaled /= (d * 2);
    BigInt ip = scaled / scale, fp = scaled % scale;
    std::string frac = fp.str();
    frac.insert(frac.begin(), static_cast<size_t>(digits) - frac.size(), '0');
    return (neg ? "-" : "") + ip.str() + "." + frac;
}

inline bool is_prime(Int p) {
    if (p < 2) return false;
    for (Int f = 2; f * f <= p; ++f)
        if (p % f == 0) return false;
    return true;
}

inline bool is_power_of(Int n, Int p, Int* exponent = nullptr) {
    if (n < 1) return false;
    Int e = 0;
    while (n % p == 0) {
        n /= p;
        ++e;
    }
    if (exponent) *exponent = e;
    return n == 1;
}

struct input_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace acolen

#endif
