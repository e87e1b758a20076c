#pragma once

// Test-side evaluation: every variable gets an explicit rational square root,
// and values are computed with plain mpq arithmetic, independent of the
// library's evaluators.

#include <array>
#include <optional>

#include "kbal/factored.hpp"
#include "kbal/polynomial.hpp"
#include "kbal/rational_sum.hpp"

namespace oracle {

using kbal::Rational;

struct Point {
    std::array<Rational, kbal::kSlots> root;

    explicit Point(int salt = 0) {
        static const int primes[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71,
                                     73, 79, 83, 89, 97, 101, 103, 107, 109, 113, 127, 131, 137, 139, 149};
        for (int s = 0; s < kbal::kSlots; ++s) root[s] = Rational(primes[s + (salt % 3)], primes[(s + 5 + salt) % 35]);
    }
    Rational value(int slot) const { return root[slot] * root[slot]; }
    Rational half(int slot) const { return root[slot]; }
};

inline Rational power(Rational base, int e) {
    Rational out = 1;
    if (e < 0) {
        base = 1 / base;
        e = -e;
    }
    for (int k = 0; k < e; ++k) out *= base;
    return out;
}

// Value of exponent vector with doubled exponents.
inline Rational exps_value(const Point& p, const kbal::Exponents& e) {
    Rational out = 1;
    for (int s = 0; s < kbal::kSlots; ++s) out *= power(p.root[s], e[s]);
    return out;
}

inline Rational eval(const Point& p, const kbal::Monomial& m) { return m.coeff() * exps_value(p, m.exps()); }

inline Rational eval(const Point& p, const kbal::Polynomial& poly) {
    Rational out = 0;
    for (const auto& t : poly.terms()) out += t.coeff * exps_value(p, t.exps);
    return out;
}

inline std::optional<Rational> eval(const Point& p, const kbal::FactoredRational& f) {
    Rational out = eval(p, f.unit());
    for (const auto& x : f.factors()) {
        Rational b = 1 + eval(p, x.cm);
        if (b == 0) {
            if (x.exp < 0) return std::nullopt;
            return Rational(0);
        }
        out *= power(b, x.exp);
    }
    return out;
}

inline std::optional<Rational> eval(const Point& p, const kbal::RationalSum& s) {
    Rational out = 0;
    for (const auto& t : s.terms()) {
        auto v = eval(p, t);
        if (!v) return std::nullopt;
        out += *v;
    }
    return out;
}

}  // namespace oracle
