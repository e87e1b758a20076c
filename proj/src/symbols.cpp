#include "kbal/symbols.hpp"

#include "kbal/errors.hpp"

namespace kbal {

FactoredRational pochhammer(const Monomial& x, int d) {
    FactoredRational f;
    const Monomial q = Monomial::variable(var::q);
    if (d >= 0) {
        for (int m = 0; m < d; ++m) f.multiply_binomial(-(x * q.pow(m)), 1);
        return f;
    }
    for (int m = 1; m <= -d; ++m) {
        Monomial w = x * q.pow(-m);
        if (w.is_constant() && w.coeff() == 1)
            throw DomainError("pochhammer(" + x.to_string() + ", " + std::to_string(d) +
                              "): denominator factor vanishes at m = " + std::to_string(m));
        f.multiply_binomial(-w, -1);
    }
    return f;
}

Monomial brace_unit(int d) {
    Monomial u(Rational(-1));
    u = u * Monomial::half_power(var::q, 1) * Monomial::half_power(var::hbar, -1);
    return u.pow(d);
}

FactoredRational brace(const Monomial& x, int d, bool normalized) {
    const Monomial hbar = Monomial::variable(var::hbar);
    const Monomial q = Monomial::variable(var::q);
    FactoredRational f = pochhammer(hbar / x, d) / pochhammer(q / x, d);
    if (!normalized) f.multiply_unit(brace_unit(d));
    return f;
}

FactoredRational lambda_class(const WeightCharacter& w, const Monomial& y) {
    FactoredRational f;
    for (const auto& [e, mult] : w.terms()) {
        if (mult < 0) throw DomainError("lambda class of a virtual character (multiplicity " + std::to_string(mult) + ")");
        f.multiply_binomial(y * Monomial(Rational(1), e), mult);
    }
    return f;
}

FactoredRational lambda_y(const WeightCharacter& w) { return lambda_class(w, Monomial::variable(var::y)); }

FactoredRational lambda_minus1(const WeightCharacter& w) { return lambda_class(w, Monomial(Rational(-1))); }

FactoredRational roof(const WeightCharacter& w) {
    FactoredRational f;
    for (const auto& [e, mult] : w.terms()) {
        Monomial mu(Rational(1), e);
        if (mu.is_constant()) throw DomainError("roof of the trivial weight");
        Exponents half{};
        for (int s = 0; s < kSlots; ++s) {
            if (e[s] % 2 != 0) throw DomainError("roof of a weight with half powers");
            half[s] = e[s] / 2;
        }
        const Monomial neg_root(Rational(-1), half);
        f.multiply_unit(neg_root.pow(mult));
        f.multiply_binomial(-mu, -mult);
    }
    return f;
}

}  // namespace kbal
