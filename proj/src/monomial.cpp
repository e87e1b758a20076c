#include "kbal/monomial.hpp"

#include <cstdlib>

#include "kbal/errors.hpp"

namespace kbal {

Monomial Monomial::variable(int slot, int power) {
    Monomial m;
    m.exps_[slot] = 2 * power;
    return m;
}

Monomial Monomial::half_power(int slot, int doubled) {
    Monomial m;
    m.exps_[slot] = doubled;
    return m;
}

Monomial Monomial::product(std::initializer_list<std::pair<int, int>> powers, Rational c) {
    Monomial m(std::move(c));
    for (const auto& [slot, p] : powers) m.exps_[slot] += 2 * p;
    return m;
}

bool Monomial::is_constant() const {
    for (int e : exps_)
        if (e != 0) return false;
    return true;
}

bool Monomial::has_half_powers() const {
    for (int e : exps_)
        if (e % 2 != 0) return true;
    return false;
}

Monomial Monomial::operator*(const Monomial& o) const {
    Monomial r(coeff_ * o.coeff_, exps_);
    for (int s = 0; s < kSlots; ++s) r.exps_[s] += o.exps_[s];
    return r;
}

Monomial& Monomial::operator*=(const Monomial& o) {
    coeff_ *= o.coeff_;
    for (int s = 0; s < kSlots; ++s) exps_[s] += o.exps_[s];
    return *this;
}

Monomial Monomial::operator/(const Monomial& o) const { return *this * o.inverse(); }

Monomial Monomial::inverse() const {
    if (coeff_ == 0) throw DomainError("inverse of the zero monomial");
    Monomial r(1 / coeff_, exps_);
    for (auto& e : r.exps_) e = -e;
    return r;
}

Monomial Monomial::pow(int e) const {
    if (e < 0) return inverse().pow(-e);
    Rational c = 1;
    for (int k = 0; k < e; ++k) c *= coeff_;
    Monomial r(c, exps_);
    for (auto& x : r.exps_) x *= e;
    return r;
}

std::string exps_to_string(const Exponents& e) {
    std::string out;
    for (int s = 0; s < kSlots; ++s) {
        if (e[s] == 0) continue;
        if (!out.empty()) out += "*";
        out += slot_name(s);
        if (e[s] == 2) continue;
        if (e[s] % 2 == 0)
            out += "^" + std::to_string(e[s] / 2);
        else
            out += "^(" + std::to_string(e[s]) + "/2)";
    }
    return out;
}

std::string Monomial::to_string() const {
    std::string body = exps_to_string(exps_);
    if (body.empty()) return coeff_.get_str();
    if (coeff_ == 1) return body;
    if (coeff_ == -1) return "-" + body;
    return coeff_.get_str() + "*" + body;
}

}  // namespace kbal
