#include "kbal/substitution.hpp"

#include "kbal/errors.hpp"

namespace kbal {

Substitution& Substitution::set(int slot, Monomial image) {
    images_[slot] = std::move(image);
    return *this;
}

bool Substitution::empty() const {
    for (const auto& i : images_)
        if (i) return false;
    return true;
}

namespace {

Monomial square_root(const Monomial& m, int slot) {
    if (m.coeff() != 1)
        throw DomainError("half power of " + slot_name(slot) + " substituted by a monomial with coefficient " + m.coeff().get_str());
    Exponents e = m.exps();
    for (auto& x : e) {
        if (x % 2 != 0)
            throw DomainError("half power of " + slot_name(slot) + " has no exact square root image");
        x /= 2;
    }
    return Monomial(Rational(1), e);
}

}  // namespace

Monomial Substitution::apply(const Monomial& m) const {
    if (m.is_zero()) return m;
    Exponents kept = m.exps();
    Monomial out(m.coeff());
    for (int s = 0; s < kSlots; ++s) {
        if (!images_[s] || kept[s] == 0) continue;
        const int d = kept[s];
        kept[s] = 0;
        const Monomial& img = *images_[s];
        if (img.is_zero()) {
            if (d < 0) throw DomainError("negative power of " + slot_name(s) + " sent to zero");
            return Monomial(Rational(0));
        }
        if (d % 2 == 0)
            out *= img.pow(d / 2);
        else
            out *= square_root(img, s).pow(d);
    }
    return out * Monomial(Rational(1), kept);
}

}  // namespace kbal
