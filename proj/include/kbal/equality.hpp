#pragma once

#include <cstdint>

#include "kbal/factored.hpp"
#include "kbal/rational_sum.hpp"

namespace kbal {

struct EqualityOptions {
    uint64_t seed = 0;
    // Seeded prime-field evaluation; it may only conclude "not equal".
    bool fast_path = true;
    // Skip the factored shortcut and decide by full cross-multiplied expansion.
    bool force_expansion = false;
};

bool factored_equal(const FactoredRational& a, const FactoredRational& b, const EqualityOptions& opts = {});
bool sum_is_zero(const RationalSum& s, const EqualityOptions& opts = {});
bool sum_equal(const RationalSum& a, const RationalSum& b, const EqualityOptions& opts = {});

// True when s vanishes modulo a relation polynomial in one variable: the
// numerator over the common denominator reduces to zero. The denominator is
// assumed invertible modulo the relation. Factored sums containing every
// factor of the relation are accepted without expansion.
bool zero_modulo_relation(const RationalSum& s, const FactoredRational& relation, int slot,
                          const EqualityOptions& opts = {});

}  // namespace kbal
