#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>
#include <string_view>

namespace frobkit {

using BigInt = boost::multiprecision::cpp_int;

/// Exact rational scalar. Always stored reduced with positive denominator.
using Scalar = boost::multiprecision::cpp_rational;

/// Errors raised by library operations (bad input, undefined operation).
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

inline bool is_integer(const Scalar& x) { return denominator(x) == 1; }

inline bool is_zero(const Scalar& x) { return x.is_zero(); }

/// Renders "p/q", or just "p" when the denominator is 1.
inline std::string scalar_to_string(const Scalar& x) {
    std::string s = numerator(x).str();
    if (denominator(x) != 1) {
        s += '/';
        s += denominator(x).str();
    }
    return s;
}

/// Parses "p", "-p", "p/q" or "-p/q". Rejects anything else.
inline Scalar parse_scalar(std::string_view text) {
    const auto bad = [&] { return Error("invalid rational '" + std::string(text) + "'"); };
    if (text.empty()) throw bad();
    const std::size_t slash = text.find('/');
    const auto parse_int = [&](std::string_view part) -> BigInt {
        if (part.empty()) throw bad();
        std::size_t i = (part[0] == '-' || part[0] == '+') ? 1 : 0;
        if (i == part.size()) throw bad();
        for (std::size_t j = i; j < part.size(); ++j)
            if (part[j] < '0' || part[j] > '9') throw bad();
        return BigInt(std::string(part));
    };
    const BigInt num = parse_int(text.substr(0, slash));
    if (slash == std::string_view::npos) return Scalar(num);
    const BigInt den = parse_int(text.substr(slash + 1));
    if (den == 0) throw bad();
    // Constructing via division keeps the stored form canonical for any sign.
    return Scalar(num) / Scalar(den);
}

/// x^k for integer k (negative allowed when x != 0).
inline Scalar scalar_pow(const Scalar& x, long long k) {
    if (k < 0) {
        if (x.is_zero()) throw Error("zero has no negative power");
        return Scalar(1) / scalar_pow(x, -k);
    }
    Scalar result(1);
    Scalar base = x;
    unsigned long long e = static_cast<unsigned long long>(k);
    while (e) {
        if (e & 1) result *= base;
        base *= base;
        e >>= 1;
    }
    return result;
}

inline BigInt factorial(int n) {
    BigInt r = 1;
    for (int i = 2; i <= n; ++i) r *= i;
    return r;
}

inline BigInt binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    k = std::min(k, n - k);
    BigInt num = 1, den = 1;
    for (int i = 0; i < k; ++i) {
        num *= n - i;
        den *= i + 1;
    }
    return num / den;
}

} // namespace frobkit
