#pragma once

#include <map>
#include <string>

#include "kbal/monomial.hpp"

namespace kbal {

// Integer combination of torus weights (monomials with coefficient 1).
class WeightCharacter {
public:
    using Map = std::map<Exponents, int>;

    WeightCharacter() = default;
    static WeightCharacter single(const Monomial& weight, int mult = 1);

    void add(const Monomial& weight, int mult = 1);
    const Map& terms() const { return terms_; }
    bool empty() const { return terms_.empty(); }
    int dimension() const;
    bool is_nonnegative() const;

    WeightCharacter operator+(const WeightCharacter& o) const;
    WeightCharacter operator-(const WeightCharacter& o) const;
    WeightCharacter& operator+=(const WeightCharacter& o);
    WeightCharacter& operator-=(const WeightCharacter& o);
    // Tensor with a one-dimensional weight.
    WeightCharacter operator*(const Monomial& weight) const;
    // Tensor product of characters.
    WeightCharacter operator*(const WeightCharacter& o) const;
    // Inverts every weight.
    WeightCharacter dual() const;

    bool operator==(const WeightCharacter& o) const { return terms_ == o.terms_; }

    std::string to_string() const;

private:
    Map terms_;
};

}  // namespace kbal
