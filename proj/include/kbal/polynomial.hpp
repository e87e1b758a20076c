#pragma once

#include <string>
#include <vector>

#include "kbal/monomial.hpp"
#include "kbal/substitution.hpp"

namespace kbal {

// Sparse Laurent polynomial on the doubled exponent lattice. Terms are kept
// sorted by exponent with no zero coefficients.
class Polynomial {
public:
    struct Term {
        Exponents exps;
        Rational coeff;
    };

    Polynomial() = default;
    explicit Polynomial(const Monomial& m);
    static Polynomial constant(const Rational& c) { return Polynomial(Monomial(c)); }

    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }

    Polynomial operator+(const Polynomial& o) const;
    Polynomial operator-(const Polynomial& o) const;
    Polynomial operator-() const;
    Polynomial operator*(const Polynomial& o) const;
    Polynomial operator*(const Monomial& m) const;
    Polynomial& operator+=(const Polynomial& o) { return *this = *this + o; }
    Polynomial& operator-=(const Polynomial& o) { return *this = *this - o; }

    // this * (1 + cm)^e for e >= 0, by repeated linear merges.
    Polynomial times_binomial(const Monomial& cm, int e = 1) const;

    Polynomial substitute(const Substitution& s) const;

    // Range of doubled exponents of one variable; {0,0} for the zero polynomial.
    std::pair<int, int> degree_range(int slot) const;

    bool operator==(const Polynomial& o) const;
    bool operator!=(const Polynomial& o) const { return !(*this == o); }

    std::vector<Monomial> monomials() const;
    std::string to_string() const;

    static Polynomial from_unsorted(std::vector<Term> terms);

private:
    std::vector<Term> terms_;
};

// a / b with both sides expanded. Equality is decided by a*d - b*c == 0.
struct ExpandedRational {
    Polynomial numerator;
    Polynomial denominator;

    bool equals(const ExpandedRational& o) const;
    bool is_zero() const { return numerator.is_zero(); }
    std::string to_string() const;
};

// Remainder of p modulo a relation that is univariate-monic-up-to-unit in the
// given variable (its top coefficient in that variable must be one monomial).
// p is first multiplied by a power of the variable to clear negative powers.
Polynomial remainder_modulo(const Polynomial& p, const Polynomial& relation, int slot);

}  // namespace kbal
