#pragma once

#include <array>
#include <cstdint>
#include <optional>

#include "kbal/monomial.hpp"
#include "kbal/polynomial.hpp"

namespace kbal {

// Arithmetic modulo the Mersenne prime 2^61 - 1.
namespace modp {
inline constexpr uint64_t kPrime = (uint64_t{1} << 61) - 1;
uint64_t add(uint64_t a, uint64_t b);
uint64_t sub(uint64_t a, uint64_t b);
uint64_t mul(uint64_t a, uint64_t b);
uint64_t pow(uint64_t a, uint64_t e);
uint64_t inv(uint64_t a);
std::optional<uint64_t> from_rational(const Rational& r);
}  // namespace modp

// A seeded point of the prime field. Each variable is assigned the square of a
// random unit so that half powers evaluate exactly. An undefined result (a
// denominator vanishing at the point) is reported as nullopt.
class EvalPoint {
public:
    explicit EvalPoint(uint64_t seed);

    std::optional<uint64_t> monomial(const Monomial& m) const;
    std::optional<uint64_t> polynomial(const Polynomial& p) const;

private:
    std::array<uint64_t, kSlots> root_{};
    std::array<uint64_t, kSlots> root_inv_{};
};

// Exact evaluation at a rational point given by square roots of the variable values.
class RationalPoint {
public:
    explicit RationalPoint(const std::array<Rational, kSlots>& roots) : roots_(roots) {}
    // Deterministic point with small distinct rational roots derived from seed.
    static RationalPoint sample(uint64_t seed);

    Rational monomial(const Monomial& m) const;
    Rational polynomial(const Polynomial& p) const;
    // Value of a single variable (the square of its root).
    Rational value(int slot) const { return roots_[slot] * roots_[slot]; }

private:
    std::array<Rational, kSlots> roots_;
};

}  // namespace kbal
