#pragma once

#include <optional>
#include <string>
#include <vector>

#include "kbal/evaluation.hpp"
#include "kbal/monomial.hpp"
#include "kbal/polynomial.hpp"
#include "kbal/substitution.hpp"

namespace kbal {

// One binomial factor (1 + cm)^exp with cm non-constant and exp != 0.
struct Factor {
    Monomial cm;
    int exp;

    bool operator==(const Factor& o) const { return exp == o.exp && cm == o.cm; }
};

// unit * prod (1 + cm)^exp. Binomials are stored in the orientation in which
// they were built; canonical() flips them into a normal form for comparison.
class FactoredRational {
public:
    FactoredRational() = default;
    explicit FactoredRational(Monomial unit);
    static FactoredRational zero();
    // (1 + cm)^exp. A constant cm folds into the unit.
    static FactoredRational binomial(const Monomial& cm, int exp = 1);
    // (1 - m)^exp.
    static FactoredRational one_minus(const Monomial& m, int exp = 1);
    // a + b for two monomials, written as a * (1 + b/a).
    static FactoredRational sum_of(const Monomial& a, const Monomial& b);

    const Monomial& unit() const { return unit_; }
    const std::vector<Factor>& factors() const { return factors_; }
    bool is_zero() const { return unit_.is_zero(); }
    bool is_one() const { return factors_.empty() && unit_ == Monomial(); }

    FactoredRational& operator*=(const FactoredRational& o);
    FactoredRational& operator/=(const FactoredRational& o);
    FactoredRational operator*(const FactoredRational& o) const;
    FactoredRational operator/(const FactoredRational& o) const;
    FactoredRational operator-() const;
    FactoredRational inverse() const;
    FactoredRational pow(int e) const;
    void multiply_binomial(const Monomial& cm, int exp);
    void multiply_unit(const Monomial& m);

    FactoredRational substitute(const Substitution& s) const;

    // Every binomial oriented so that its first nonzero exponent is positive.
    FactoredRational canonical() const;

    // Structural identity (same unit and the same stored factors).
    bool operator==(const FactoredRational& o) const { return unit_ == o.unit_ && factors_ == o.factors_; }
    bool operator!=(const FactoredRational& o) const { return !(*this == o); }

    // Numerator collects the unit and positive factors; denominator the rest.
    ExpandedRational expand() const;
    Polynomial expand_numerator() const;
    Polynomial expand_denominator() const;

    std::optional<uint64_t> evaluate(const EvalPoint& pt) const;
    std::optional<Rational> evaluate(const RationalPoint& pt) const;

    std::string to_string() const;

private:
    Monomial unit_;
    std::vector<Factor> factors_;
};

}  // namespace kbal
