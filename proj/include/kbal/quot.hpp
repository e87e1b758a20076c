#pragma once

#include <vector>

#include "kbal/factored.hpp"
#include "kbal/weight_character.hpp"

namespace kbal {

// Subsets are 0-based, strictly increasing.
using Subset = std::vector<int>;

struct GrassFixedPoint {
    int n = 0;
    int r = 0;
    Subset subset;

    bool operator==(const GrassFixedPoint&) const = default;
};

// Fixed point of the Quot scheme: a chosen subset with two degree vectors
// aligned with the subset order.
struct QuotFixedPoint {
    int n = 0;
    int r = 0;
    Subset delta;
    std::vector<int> a;
    std::vector<int> b;

    int degree() const;
    bool supported_at_zero() const;
    bool operator==(const QuotFixedPoint&) const = default;
};

struct QuasimapFixedPoint {
    int n = 0;
    int r = 0;
    Subset subset;
    std::vector<int> dvec;

    int degree() const;
    bool operator==(const QuasimapFixedPoint&) const = default;
};

// All r-subsets of {0..n-1}, lexicographic.
std::vector<Subset> subsets(int n, int r);
std::vector<GrassFixedPoint> grass_fixed_points(int r, int n);
// Ordered tuples of `parts` nonnegative integers summing to d, lexicographically descending.
std::vector<std::vector<int>> compositions(int d, int parts);

std::vector<QuotFixedPoint> enumerate_fixed_points(int r, int n, int d, bool supported_at_zero);

WeightCharacter tangent_weights(const QuotFixedPoint& p);
// lambda_y of the cotangent space via duals of the tangent weights.
FactoredRational cotangent_lambda_y(const QuotFixedPoint& p);
// The same class from the three explicit products over the subset (points supported at zero).
FactoredRational cotangent_lambda_y_product(const QuotFixedPoint& p);

GrassFixedPoint rho(const QuotFixedPoint& p);
FactoredRational grassmannian_cotangent_lambda_minus1(const GrassFixedPoint& g);

QuasimapFixedPoint quasimap_bijection(const QuotFixedPoint& p);
QuotFixedPoint quot_from_quasimap(const QuasimapFixedPoint& qp);

// Weight t_j / t_i.
Monomial torus_ratio(int j, int i);

}  // namespace kbal
