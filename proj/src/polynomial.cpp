#include "kbal/polynomial.hpp"

#include <algorithm>

#include "kbal/errors.hpp"

namespace kbal {

namespace {

using Terms = std::vector<Polynomial::Term>;

Terms merge(const Terms& a, const Terms& b, bool subtract) {
    Terms out;
    out.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
        if (j == b.size() || (i < a.size() && a[i].exps < b[j].exps)) {
            out.push_back(a[i++]);
        } else if (i == a.size() || b[j].exps < a[i].exps) {
            out.push_back({b[j].exps, subtract ? Rational(-b[j].coeff) : b[j].coeff});
            ++j;
        } else {
            Rational c = subtract ? Rational(a[i].coeff - b[j].coeff) : Rational(a[i].coeff + b[j].coeff);
            if (c != 0) out.push_back({a[i].exps, std::move(c)});
            ++i;
            ++j;
        }
    }
    return out;
}

Exponents add_exps(const Exponents& a, const Exponents& b) {
    Exponents r;
    for (int s = 0; s < kSlots; ++s) r[s] = a[s] + b[s];
    return r;
}

}  // namespace

Polynomial::Polynomial(const Monomial& m) {
    if (!m.is_zero()) terms_.push_back({m.exps(), m.coeff()});
}

Polynomial Polynomial::from_unsorted(std::vector<Term> terms) {
    std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) { return a.exps < b.exps; });
    Polynomial p;
    for (auto& t : terms) {
        if (!p.terms_.empty() && p.terms_.back().exps == t.exps)
            p.terms_.back().coeff += t.coeff;
        else
            p.terms_.push_back(std::move(t));
    }
    std::erase_if(p.terms_, [](const Term& t) { return t.coeff == 0; });
    return p;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
    Polynomial p;
    p.terms_ = merge(terms_, o.terms_, false);
    return p;
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
    Polynomial p;
    p.terms_ = merge(terms_, o.terms_, true);
    return p;
}

Polynomial Polynomial::operator-() const {
    Polynomial p = *this;
    for (auto& t : p.terms_) t.coeff = -t.coeff;
    return p;
}

Polynomial Polynomial::operator*(const Monomial& m) const {
    Polynomial p;
    if (m.is_zero()) return p;
    p.terms_.reserve(terms_.size());
    // A common shift preserves the lexicographic order.
    for (const auto& t : terms_) p.terms_.push_back({add_exps(t.exps, m.exps()), t.coeff * m.coeff()});
    return p;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
    if (is_zero() || o.is_zero()) return {};
    const Polynomial& small = size() <= o.size() ? *this : o;
    const Polynomial& large = size() <= o.size() ? o : *this;
    if (small.size() <= 4) {
        Polynomial acc;
        for (const auto& t : small.terms_) acc += large * Monomial(t.coeff, t.exps);
        return acc;
    }
    std::vector<Term> raw;
    raw.reserve(small.size() * large.size());
    for (const auto& a : small.terms_)
        for (const auto& b : large.terms_) raw.push_back({add_exps(a.exps, b.exps), a.coeff * b.coeff});
    return from_unsorted(std::move(raw));
}

Polynomial Polynomial::times_binomial(const Monomial& cm, int e) const {
    Polynomial p = *this;
    for (int k = 0; k < e; ++k) p = p + p * cm;
    return p;
}

Polynomial Polynomial::substitute(const Substitution& s) const {
    std::vector<Term> raw;
    raw.reserve(terms_.size());
    for (const auto& t : terms_) {
        Monomial m = s.apply(Monomial(t.coeff, t.exps));
        if (!m.is_zero()) raw.push_back({m.exps(), m.coeff()});
    }
    return from_unsorted(std::move(raw));
}

std::pair<int, int> Polynomial::degree_range(int slot) const {
    if (terms_.empty()) return {0, 0};
    int lo = terms_.front().exps[slot], hi = lo;
    for (const auto& t : terms_) {
        lo = std::min(lo, t.exps[slot]);
        hi = std::max(hi, t.exps[slot]);
    }
    return {lo, hi};
}

bool Polynomial::operator==(const Polynomial& o) const {
    if (terms_.size() != o.terms_.size()) return false;
    for (std::size_t i = 0; i < terms_.size(); ++i)
        if (terms_[i].exps != o.terms_[i].exps || terms_[i].coeff != o.terms_[i].coeff) return false;
    return true;
}

std::vector<Monomial> Polynomial::monomials() const {
    std::vector<Monomial> out;
    out.reserve(terms_.size());
    for (const auto& t : terms_) out.emplace_back(t.coeff, t.exps);
    return out;
}

std::string Polynomial::to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& t : terms_) {
        std::string s = Monomial(t.coeff, t.exps).to_string();
        if (out.empty())
            out = s;
        else if (s[0] == '-')
            out += " - " + s.substr(1);
        else
            out += " + " + s;
    }
    return out;
}

bool ExpandedRational::equals(const ExpandedRational& o) const {
    return numerator * o.denominator == o.numerator * denominator;
}

std::string ExpandedRational::to_string() const {
    return "(" + numerator.to_string() + ") / (" + denominator.to_string() + ")";
}

Polynomial remainder_modulo(const Polynomial& p, const Polynomial& relation, int slot) {
    if (relation.is_zero()) throw DomainError("reduction modulo the zero relation");
    auto [rlo, rhi] = relation.degree_range(slot);
    if (rlo != 0) throw DomainError("relation must have a nonzero constant term in " + slot_name(slot));
    Monomial lead;
    int leads = 0;
    for (const auto& t : relation.terms())
        if (t.exps[slot] == rhi) {
            lead = Monomial(t.coeff, t.exps);
            ++leads;
        }
    if (leads != 1) throw DomainError("relation top coefficient in " + slot_name(slot) + " is not a monomial");

    Polynomial rem = p;
    auto [plo, phi] = rem.degree_range(slot);
    if (plo < 0) rem = rem * Monomial::half_power(slot, -plo);
    while (!rem.is_zero()) {
        auto [lo, hi] = rem.degree_range(slot);
        if (hi < rhi) break;
        for (const auto& t : rem.terms()) {
            if (t.exps[slot] != hi) continue;
            rem = rem - relation * (Monomial(t.coeff, t.exps) / lead);
            break;
        }
    }
    return rem;
}

}  // namespace kbal
