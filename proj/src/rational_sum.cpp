#include "kbal/rational_sum.hpp"

#include <map>

namespace kbal {

namespace {

struct FactorListLess {
    bool operator()(const std::vector<Factor>& a, const std::vector<Factor>& b) const {
        if (a.size() != b.size()) return a.size() < b.size();
        for (std::size_t i = 0; i < a.size(); ++i) {
            if (a[i].exp != b[i].exp) return a[i].exp < b[i].exp;
            if (a[i].cm != b[i].cm) return MonomialLess{}(a[i].cm, b[i].cm);
        }
        return false;
    }
};

}  // namespace

RationalSum RationalSum::from_polynomial(const Polynomial& p) {
    RationalSum s;
    for (const auto& m : p.monomials()) s.terms_.emplace_back(m);
    return s;
}

RationalSum& RationalSum::operator+=(const RationalSum& o) {
    for (const auto& t : o.terms_) terms_.push_back(t);
    return *this;
}

RationalSum& RationalSum::operator-=(const RationalSum& o) {
    for (const auto& t : o.terms_) terms_.push_back(-t);
    return *this;
}

RationalSum RationalSum::operator+(const RationalSum& o) const {
    RationalSum s = *this;
    return s += o;
}

RationalSum RationalSum::operator-(const RationalSum& o) const {
    RationalSum s = *this;
    return s -= o;
}

RationalSum RationalSum::operator-() const {
    RationalSum s;
    for (const auto& t : terms_) s.terms_.push_back(-t);
    return s;
}

RationalSum RationalSum::operator*(const FactoredRational& f) const {
    RationalSum s;
    if (f.is_zero()) return s;
    for (const auto& t : terms_) s.terms_.push_back(t * f);
    return s;
}

RationalSum RationalSum::operator*(const RationalSum& o) const {
    RationalSum s;
    for (const auto& a : terms_)
        for (const auto& b : o.terms_) s.terms_.push_back(a * b);
    return s;
}

RationalSum RationalSum::substitute(const Substitution& sub) const {
    RationalSum s;
    for (const auto& t : terms_) {
        FactoredRational v = t.substitute(sub);
        if (!v.is_zero()) s.terms_.push_back(std::move(v));
    }
    return s;
}

std::vector<RationalSum::Group> RationalSum::grouped() const {
    std::map<std::vector<Factor>, Polynomial, FactorListLess> groups;
    for (const auto& t : terms_) {
        if (t.is_zero()) continue;
        FactoredRational c = t.canonical();
        groups[c.factors()] += Polynomial(c.unit());
    }
    std::vector<Group> out;
    for (auto& [factors, coeff] : groups) {
        if (coeff.is_zero()) continue;
        FactoredRational f;
        for (const auto& x : factors) f.multiply_binomial(x.cm, x.exp);
        out.push_back({std::move(coeff), std::move(f)});
    }
    return out;
}

ExpandedRational RationalSum::expand() const {
    auto groups = grouped();
    // Least common denominator over canonical binomials.
    std::map<Monomial, int, MonomialLess> lcd;
    for (const auto& g : groups)
        for (const auto& f : g.factors.factors())
            if (f.exp < 0) {
                int& need = lcd[f.cm];
                need = std::max(need, -f.exp);
            }
    Polynomial den = Polynomial::constant(1);
    for (const auto& [cm, e] : lcd) den = den.times_binomial(cm, e);
    Polynomial num;
    for (const auto& g : groups) {
        Polynomial part = g.coeff;
        std::map<Monomial, int, MonomialLess> own;
        for (const auto& f : g.factors.factors()) {
            if (f.exp > 0)
                part = part.times_binomial(f.cm, f.exp);
            else
                own[f.cm] = -f.exp;
        }
        for (const auto& [cm, e] : lcd) {
            auto it = own.find(cm);
            int have = it == own.end() ? 0 : it->second;
            part = part.times_binomial(cm, e - have);
        }
        num += part;
    }
    return {num, den};
}

std::optional<uint64_t> RationalSum::evaluate(const EvalPoint& pt) const {
    uint64_t acc = 0;
    for (const auto& t : terms_) {
        auto v = t.evaluate(pt);
        if (!v) return std::nullopt;
        acc = modp::add(acc, *v);
    }
    return acc;
}

std::optional<Rational> RationalSum::evaluate(const RationalPoint& pt) const {
    Rational acc = 0;
    for (const auto& t : terms_) {
        auto v = t.evaluate(pt);
        if (!v) return std::nullopt;
        acc += *v;
    }
    return acc;
}

std::string RationalSum::to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& t : terms_) {
        if (!out.empty()) out += " + ";
        out += "[" + t.to_string() + "]";
    }
    return out;
}

}  // namespace kbal
