#pragma once

#include "kbal/factored.hpp"
#include "kbal/weight_character.hpp"

namespace kbal {

// (x)_d = prod_{m=0}^{d-1} (1 - x q^m) for d >= 0 and
// 1 / prod_{m=1}^{-d} (1 - x q^{-m}) for d < 0.
FactoredRational pochhammer(const Monomial& x, int d);

// {x}_d = (hbar/x)_d / (q/x)_d, times (-q^{1/2} hbar^{-1/2})^d unless normalized.
FactoredRational brace(const Monomial& x, int d, bool normalized = true);

// The unit (-q^{1/2} hbar^{-1/2})^d dropped by normalization.
Monomial brace_unit(int d);

// prod over weights (1 + y mu)^mult; y may be the variable y, the constant -1
// or any monomial. Empty character gives 1.
FactoredRational lambda_class(const WeightCharacter& w, const Monomial& y);
FactoredRational lambda_y(const WeightCharacter& w);
FactoredRational lambda_minus1(const WeightCharacter& w);

// roof(mu) = 1/(mu^{1/2} - mu^{-1/2}) stored as -mu^{1/2} / (1 - mu); extended
// multiplicatively to virtual characters.
FactoredRational roof(const WeightCharacter& w);

}  // namespace kbal
