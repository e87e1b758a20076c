#pragma once

#include <optional>
#include <string>
#include <vector>

#include "kbal/factored.hpp"

namespace kbal {

// A finite sum of factored rational functions.
class RationalSum {
public:
    RationalSum() = default;
    RationalSum(const FactoredRational& f) {  // NOLINT: implicit by design
        if (!f.is_zero()) terms_.push_back(f);
    }
    static RationalSum from_polynomial(const Polynomial& p);

    const std::vector<FactoredRational>& terms() const { return terms_; }
    bool empty() const { return terms_.empty(); }

    RationalSum& operator+=(const RationalSum& o);
    RationalSum& operator-=(const RationalSum& o);
    RationalSum operator+(const RationalSum& o) const;
    RationalSum operator-(const RationalSum& o) const;
    RationalSum operator-() const;
    RationalSum operator*(const FactoredRational& f) const;
    RationalSum operator*(const RationalSum& o) const;
    RationalSum substitute(const Substitution& s) const;

    // Terms with identical canonical factor multisets merged, their units summed.
    struct Group {
        Polynomial coeff;
        FactoredRational factors;  // unit 1
    };
    std::vector<Group> grouped() const;

    // Brought over the least common factored denominator and expanded.
    ExpandedRational expand() const;

    std::optional<uint64_t> evaluate(const EvalPoint& pt) const;
    std::optional<Rational> evaluate(const RationalPoint& pt) const;

    std::string to_string() const;

private:
    std::vector<FactoredRational> terms_;
};

}  // namespace kbal
