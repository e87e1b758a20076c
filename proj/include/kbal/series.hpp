#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "kbal/quot.hpp"
#include "kbal/rational_sum.hpp"
#include "kbal/report.hpp"

namespace kbal {

// Coefficient of Q^dvec of the localized I-function at a Grassmannian fixed
// point: the reciprocal of three products over pairs inside and outside the subset.
FactoredRational i_coefficient_direct(const GrassFixedPoint& g, const std::vector<int>& dvec);
// Sum of the direct coefficients over all compositions of d.
RationalSum i_coefficient_total(const GrassFixedPoint& g, int d);
// Prefactor times the sum of 1/lambda_{-1}(cotangent) over the Quot fixed
// points of degree d supported at zero above g.
RationalSum j_coefficient_geometric(const GrassFixedPoint& g, int d);

// Every factor (1 - m)^e gains (1 + y m)^{-e}. Throws DomainError when a
// factor is not of the form (1 - m).
FactoredRational balance(const FactoredRational& f, const Monomial& y);
FactoredRational balance(const FactoredRational& f);
// y -> -hbar/q.
Substitution vertex_specialization();

FactoredRational vertex_coefficient_product(const GrassFixedPoint& g, const std::vector<int>& dvec, bool normalized = true);

// H^0 - H^1 character of O(m) on the projective line: 1 + q + ... + q^m,
// zero at m = -1 and -(q^{m+1} + ... + q^{-1}) below.
WeightCharacter line_bundle_cohomology(int m);
WeightCharacter virtual_tangent(const QuasimapFixedPoint& qp);
// Tangent space of T*G(r,n) at the fixed point.
WeightCharacter cotangent_bundle_tangent(const GrassFixedPoint& g);
// roof of the virtual tangent; normalized divides by (-q^{1/2} hbar^{-1/2})^{n d}.
FactoredRational vertex_coefficient_localization(const QuasimapFixedPoint& qp, bool normalized = true);

// Optional restriction of the (fixed point, degree vector) grid.
struct GridFilter {
    std::optional<Subset> point;
    std::optional<std::vector<int>> dvec;
};

// Grassmannian fixed points times compositions of every d <= dmax, in
// enumeration order. A dvec filter overrides dmax.
std::vector<std::pair<GrassFixedPoint, std::vector<int>>> coefficient_grid(int r, int n, int dmax, const GridFilter& filter = {});

Report verify_main_theorem(int r, int n, int dmax, const EqualityOptions& opts, int jobs = 0, const GridFilter& filter = {});
// (a) direct vs geometric I coefficients, (b) product-formula vs localization vertex.
Report verify_cross_paths(int r, int n, int dmax, const EqualityOptions& opts, int jobs = 0);
// hbar -> 0 of the normalized vertex and y -> 0 of the balanced coefficient.
Report verify_degenerations(int r, int n, int dmax, const EqualityOptions& opts, int jobs = 0);

}  // namespace kbal
