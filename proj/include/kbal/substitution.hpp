#pragma once

#include <array>
#include <optional>

#include "kbal/monomial.hpp"

namespace kbal {

// Maps variables to monomials (possibly the zero monomial). Unlisted variables are fixed.
class Substitution {
public:
    Substitution& set(int slot, Monomial image);
    Substitution& set_zero(int slot) { return set(slot, Monomial(Rational(0))); }
    bool empty() const;

    // Image of a monomial; the zero monomial when a positive power of a zeroed
    // variable occurs. Throws DomainError for negative powers of zero and for
    // half powers of images without an exact square root.
    Monomial apply(const Monomial& m) const;

private:
    std::array<std::optional<Monomial>, kSlots> images_;
};

}  // namespace kbal
