#include "kbal/factored.hpp"

#include <algorithm>

#include "kbal/errors.hpp"

namespace kbal {

namespace {

bool cm_less(const Monomial& a, const Monomial& b) { return MonomialLess{}(a, b); }

Rational rational_pow(const Rational& b, int e) {
    Rational r = 1;
    if (e < 0) {
        Rational inv = 1 / b;
        for (int k = 0; k < -e; ++k) r *= inv;
    } else {
        for (int k = 0; k < e; ++k) r *= b;
    }
    return r;
}

}  // namespace

FactoredRational::FactoredRational(Monomial unit) : unit_(std::move(unit)) {}

FactoredRational FactoredRational::zero() { return FactoredRational(Monomial(Rational(0))); }

FactoredRational FactoredRational::binomial(const Monomial& cm, int exp) {
    FactoredRational f;
    f.multiply_binomial(cm, exp);
    return f;
}

FactoredRational FactoredRational::one_minus(const Monomial& m, int exp) { return binomial(-m, exp); }

FactoredRational FactoredRational::sum_of(const Monomial& a, const Monomial& b) {
    FactoredRational f(a);
    f.multiply_binomial(b / a, 1);
    return f;
}

void FactoredRational::multiply_unit(const Monomial& m) {
    if (is_zero()) return;
    unit_ *= m;
    if (unit_.is_zero()) factors_.clear();
}

void FactoredRational::multiply_binomial(const Monomial& cm, int exp) {
    if (exp == 0 || cm.is_zero()) return;
    if (cm.is_constant()) {
        Rational base = 1 + cm.coeff();
        if (base == 0) {
            if (exp < 0) throw DomainError("vanishing factor (1 + " + cm.to_string() + ") with negative exponent");
            unit_ = Monomial(Rational(0));
            factors_.clear();
            return;
        }
        multiply_unit(Monomial(rational_pow(base, exp)));
        return;
    }
    if (is_zero()) return;
    auto it = std::lower_bound(factors_.begin(), factors_.end(), cm,
                               [](const Factor& f, const Monomial& m) { return cm_less(f.cm, m); });
    if (it != factors_.end() && it->cm == cm) {
        it->exp += exp;
        if (it->exp == 0) factors_.erase(it);
    } else {
        factors_.insert(it, Factor{cm, exp});
    }
}

FactoredRational& FactoredRational::operator*=(const FactoredRational& o) {
    if (o.is_zero()) {
        *this = zero();
        return *this;
    }
    if (is_zero()) return *this;
    multiply_unit(o.unit_);
    for (const auto& f : o.factors_) multiply_binomial(f.cm, f.exp);
    return *this;
}

FactoredRational& FactoredRational::operator/=(const FactoredRational& o) { return *this *= o.inverse(); }

FactoredRational FactoredRational::operator*(const FactoredRational& o) const {
    FactoredRational r = *this;
    return r *= o;
}

FactoredRational FactoredRational::operator/(const FactoredRational& o) const {
    FactoredRational r = *this;
    return r /= o;
}

FactoredRational FactoredRational::operator-() const {
    FactoredRational r = *this;
    r.unit_ = -r.unit_;
    return r;
}

FactoredRational FactoredRational::inverse() const {
    if (is_zero()) throw DomainError("inverse of zero");
    FactoredRational r(unit_.inverse());
    r.factors_ = factors_;
    for (auto& f : r.factors_) f.exp = -f.exp;
    return r;
}

FactoredRational FactoredRational::pow(int e) const {
    if (e < 0) return inverse().pow(-e);
    FactoredRational r(unit_.pow(e));
    if (e == 0) return r;
    r.factors_ = factors_;
    for (auto& f : r.factors_) f.exp *= e;
    return r;
}

FactoredRational FactoredRational::substitute(const Substitution& s) const {
    if (is_zero()) return *this;
    // Multiply vanishing-positive factors last so a zero never meets a later
    // negative-exponent check out of order; the result is zero either way.
    FactoredRational r(s.apply(unit_));
    bool zero_seen = r.is_zero();
    for (const auto& f : factors_) {
        Monomial img = s.apply(f.cm);
        if (img.is_constant() && 1 + img.coeff() == 0) {
            if (f.exp < 0) throw DomainError("substitution makes the denominator factor (1 + " + f.cm.to_string() + ") vanish");
            zero_seen = true;
            continue;
        }
        if (!zero_seen) r.multiply_binomial(img, f.exp);
    }
    return zero_seen ? zero() : r;
}

FactoredRational FactoredRational::canonical() const {
    if (is_zero()) return *this;
    FactoredRational r(unit_);
    for (const auto& f : factors_) {
        const Exponents& e = f.cm.exps();
        int lead = 0;
        for (int s = 0; s < kSlots && lead == 0; ++s) lead = e[s];
        if (lead < 0) {
            // 1 + cm = cm * (1 + 1/cm)
            r.multiply_unit(f.cm.pow(f.exp));
            r.multiply_binomial(f.cm.inverse(), f.exp);
        } else {
            r.multiply_binomial(f.cm, f.exp);
        }
    }
    return r;
}

Polynomial FactoredRational::expand_numerator() const {
    Polynomial p(unit_);
    for (const auto& f : factors_)
        if (f.exp > 0) p = p.times_binomial(f.cm, f.exp);
    return p;
}

Polynomial FactoredRational::expand_denominator() const {
    Polynomial p = Polynomial::constant(1);
    for (const auto& f : factors_)
        if (f.exp < 0) p = p.times_binomial(f.cm, -f.exp);
    return p;
}

ExpandedRational FactoredRational::expand() const { return {expand_numerator(), expand_denominator()}; }

std::optional<uint64_t> FactoredRational::evaluate(const EvalPoint& pt) const {
    auto u = pt.monomial(unit_);
    if (!u) return std::nullopt;
    uint64_t v = *u;
    for (const auto& f : factors_) {
        auto c = pt.monomial(f.cm);
        if (!c) return std::nullopt;
        uint64_t base = modp::add(1, *c);
        if (f.exp < 0) {
            if (base == 0) return std::nullopt;
            base = modp::inv(base);
        }
        v = modp::mul(v, modp::pow(base, static_cast<uint64_t>(f.exp < 0 ? -f.exp : f.exp)));
    }
    return v;
}

std::optional<Rational> FactoredRational::evaluate(const RationalPoint& pt) const {
    Rational v = pt.monomial(unit_);
    for (const auto& f : factors_) {
        Rational base = 1 + pt.monomial(f.cm);
        if (base == 0) {
            if (f.exp < 0) return std::nullopt;
            return Rational(0);
        }
        v *= rational_pow(base, f.exp);
    }
    return v;
}

std::string FactoredRational::to_string() const {
    if (is_zero()) return "0";
    std::string num, den;
    auto piece = [](const Factor& f, int e) {
        std::string b = "(1 + " + f.cm.to_string() + ")";
        if (f.cm.coeff() < 0) b = "(1 - " + (-f.cm).to_string() + ")";
        return e == 1 ? b : b + "^" + std::to_string(e);
    };
    for (const auto& f : factors_) {
        std::string& dst = f.exp > 0 ? num : den;
        if (!dst.empty()) dst += "*";
        dst += piece(f, f.exp > 0 ? f.exp : -f.exp);
    }
    std::string u = unit_.to_string();
    std::string out = num.empty() ? u : (u == "1" ? num : u + "*" + num);
    if (!den.empty()) out += " / (" + den + ")";
    return out;
}

}  // namespace kbal
