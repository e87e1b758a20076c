#include "kbal/equality.hpp"

#include "kbal/errors.hpp"

namespace kbal {

namespace {

constexpr int kFastPathRetries = 3;

// Value of f at a seeded point, resampling when a denominator vanishes.
template <typename T>
std::optional<uint64_t> sample(const T& f, uint64_t seed) {
    for (int k = 0; k < kFastPathRetries; ++k) {
        auto v = f.evaluate(EvalPoint(seed + 0x51ed27ULL * static_cast<uint64_t>(k)));
        if (v) return v;
    }
    return std::nullopt;
}

bool residual_is_one(const FactoredRational& residual, const EqualityOptions& opts) {
    if (residual.is_one()) return true;
    if (opts.fast_path) {
        auto v = sample(residual, opts.seed);
        if (v && *v != 1) return false;
    }
    return residual.expand_numerator() == residual.expand_denominator();
}

}  // namespace

bool factored_equal(const FactoredRational& a, const FactoredRational& b, const EqualityOptions& opts) {
    if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
    if (opts.force_expansion) return a.expand().equals(b.expand());
    FactoredRational ca = a.canonical(), cb = b.canonical();
    if (ca == cb) return true;
    return residual_is_one((ca / cb).canonical(), opts);
}

bool sum_is_zero(const RationalSum& s, const EqualityOptions& opts) {
    if (!opts.force_expansion && s.grouped().empty()) return true;
    if (opts.fast_path) {
        auto v = sample(s, opts.seed);
        if (v && *v != 0) return false;
    }
    return s.expand().is_zero();
}

bool sum_equal(const RationalSum& a, const RationalSum& b, const EqualityOptions& opts) {
    return sum_is_zero(a - b, opts);
}

bool zero_modulo_relation(const RationalSum& s, const FactoredRational& relation, int slot,
                          const EqualityOptions& opts) {
    if (!opts.force_expansion) {
        auto groups = s.grouped();
        if (groups.empty()) return true;
        FactoredRational rel = relation.canonical();
        bool all_contain = true;
        for (const auto& g : groups) {
            FactoredRational quotient = (g.factors / rel).canonical();
            for (const auto& f : quotient.factors())
                for (const auto& r : rel.factors())
                    if (f.cm == r.cm && f.exp < 0) all_contain = false;
            if (!all_contain) break;
        }
        if (all_contain) return true;
    }
    ExpandedRational e = s.expand();
    Polynomial rel = relation.expand_numerator();
    if (relation.expand_denominator() != Polynomial::constant(1))
        throw DomainError("relation must be a polynomial");
    return remainder_modulo(e.numerator, rel, slot).is_zero();
}

}  // namespace kbal
