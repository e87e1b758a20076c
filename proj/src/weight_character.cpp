#include "kbal/weight_character.hpp"

#include "kbal/errors.hpp"

namespace kbal {

WeightCharacter WeightCharacter::single(const Monomial& weight, int mult) {
    WeightCharacter w;
    w.add(weight, mult);
    return w;
}

void WeightCharacter::add(const Monomial& weight, int mult) {
    if (weight.coeff() != 1) throw DomainError("weights carry coefficient 1, got " + weight.to_string());
    if (mult == 0) return;
    auto [it, inserted] = terms_.try_emplace(weight.exps(), mult);
    if (!inserted) {
        it->second += mult;
        if (it->second == 0) terms_.erase(it);
    }
}

int WeightCharacter::dimension() const {
    int d = 0;
    for (const auto& [e, m] : terms_) d += m;
    return d;
}

bool WeightCharacter::is_nonnegative() const {
    for (const auto& [e, m] : terms_)
        if (m < 0) return false;
    return true;
}

WeightCharacter& WeightCharacter::operator+=(const WeightCharacter& o) {
    for (const auto& [e, m] : o.terms_) add(Monomial(Rational(1), e), m);
    return *this;
}

WeightCharacter& WeightCharacter::operator-=(const WeightCharacter& o) {
    for (const auto& [e, m] : o.terms_) add(Monomial(Rational(1), e), -m);
    return *this;
}

WeightCharacter WeightCharacter::operator+(const WeightCharacter& o) const {
    WeightCharacter w = *this;
    return w += o;
}

WeightCharacter WeightCharacter::operator-(const WeightCharacter& o) const {
    WeightCharacter w = *this;
    return w -= o;
}

WeightCharacter WeightCharacter::operator*(const Monomial& weight) const {
    WeightCharacter w;
    for (const auto& [e, m] : terms_) w.add(Monomial(Rational(1), e) * weight, m);
    return w;
}

WeightCharacter WeightCharacter::operator*(const WeightCharacter& o) const {
    WeightCharacter w;
    for (const auto& [e1, m1] : terms_)
        for (const auto& [e2, m2] : o.terms_) w.add(Monomial(Rational(1), e1) * Monomial(Rational(1), e2), m1 * m2);
    return w;
}

WeightCharacter WeightCharacter::dual() const {
    WeightCharacter w;
    for (const auto& [e, m] : terms_) w.add(Monomial(Rational(1), e).inverse(), m);
    return w;
}

std::string WeightCharacter::to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [e, m] : terms_) {
        std::string w = exps_to_string(e);
        if (w.empty()) w = "1";
        std::string piece = (m == 1 || m == -1) ? w : std::to_string(m < 0 ? -m : m) + "*" + w;
        if (out.empty())
            out = (m < 0 ? "-" : "") + piece;
        else
            out += (m < 0 ? " - " : " + ") + piece;
    }
    return out;
}

}  // namespace kbal
