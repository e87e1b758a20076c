#pragma once

#include <compare>
#include <initializer_list>
#include <string>
#include <utility>

#include "kbal/rational.hpp"
#include "kbal/variable.hpp"

namespace kbal {

// Rational coefficient times a product of variables with half-integer powers.
class Monomial {
public:
    Monomial() : coeff_(1) { exps_.fill(0); }
    explicit Monomial(Rational c) : coeff_(std::move(c)) { exps_.fill(0); }
    Monomial(Rational c, const Exponents& e) : coeff_(std::move(c)), exps_(e) {}

    // Single variable raised to an integer power.
    static Monomial variable(int slot, int power = 1);
    // Single variable raised to numer/2.
    static Monomial half_power(int slot, int doubled);
    // Product of integer powers, e.g. {{var::t(1), 1}, {var::t(0), -1}}.
    static Monomial product(std::initializer_list<std::pair<int, int>> powers, Rational c = 1);

    const Rational& coeff() const { return coeff_; }
    const Exponents& exps() const { return exps_; }
    int doubled(int slot) const { return exps_[slot]; }

    bool is_zero() const { return coeff_ == 0; }
    bool is_constant() const;
    bool has_half_powers() const;
    // Exponent part only (coefficient forced to 1).
    Monomial shape() const { return Monomial(Rational(1), exps_); }

    Monomial operator*(const Monomial& o) const;
    Monomial& operator*=(const Monomial& o);
    Monomial operator/(const Monomial& o) const;
    Monomial operator-() const { return Monomial(-coeff_, exps_); }
    Monomial inverse() const;
    Monomial pow(int e) const;

    bool operator==(const Monomial& o) const { return coeff_ == o.coeff_ && exps_ == o.exps_; }
    bool operator!=(const Monomial& o) const { return !(*this == o); }

    std::string to_string() const;

private:
    Rational coeff_;
    Exponents exps_;
};

// Lexicographic order on exponent arrays.
inline bool exps_less(const Exponents& a, const Exponents& b) { return a < b; }

// Orders monomials by exponents first, then coefficient.
struct MonomialLess {
    bool operator()(const Monomial& a, const Monomial& b) const {
        if (a.exps() != b.exps()) return a.exps() < b.exps();
        return a.coeff() < b.coeff();
    }
};

std::string exps_to_string(const Exponents& e);

}  // namespace kbal
