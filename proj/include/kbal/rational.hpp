#pragma once

#include <gmpxx.h>

#include <string>

namespace kbal {

using Rational = mpq_class;

inline Rational make_rational(long num, long den = 1) {
    Rational r(num, den);
    r.canonicalize();
    return r;
}

// Exact decimal form "p" or "p/q".
inline std::string to_string(const Rational& r) { return r.get_str(); }

Rational parse_rational(const std::string& text);

}  // namespace kbal
