#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>

namespace cherncr {

// Exact arbitrary-precision rational. GMP keeps values canonical
// (lowest terms, positive denominator); everything downstream relies
// on that, so all construction goes through the helpers below.
using Rational = mpq_class;

inline Rational rat(long num, long den = 1) {
    if (den == 0) throw std::invalid_argument("rational with zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

// Parses "p", "-p" or "p/q". Throws std::invalid_argument on malformed
// input or zero denominator.
inline Rational rat_from_string(std::string_view s) {
    Rational q;
    if (s.empty() || q.set_str(std::string(s), 10) != 0)
        throw std::invalid_argument("malformed rational: '" + std::string(s) + "'");
    if (q.get_den() == 0)
        throw std::invalid_argument("rational with zero denominator: '" + std::string(s) + "'");
    q.canonicalize();
    return q;
}

// "p/q" with the denominator omitted when 1, e.g. "-3/4", "7".
inline std::string to_string(const Rational& q) { return q.get_str(); }

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

inline Rational factorial(int n) {
    Rational r = 1;
    for (int i = 2; i <= n; ++i) r *= i;
    return r;
}

inline Rational binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    Rational r = 1;
    for (int i = 0; i < k; ++i) r *= n - i;
    return r / factorial(k);
}

inline Rational pow(const Rational& base, int exp) {
    if (exp < 0) throw std::invalid_argument("negative exponent");
    Rational r = 1;
    for (int i = 0; i < exp; ++i) r *= base;
    return r;
}

}  // namespace cherncr
