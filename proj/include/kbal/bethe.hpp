#pragma once

#include <utility>
#include <vector>

#include "kbal/qdiff.hpp"

namespace kbal {

// prod_{m=-inf}^{N} (1 - q^m w) / prod_{m=-inf}^{0} (1 - q^m w) as a finite product.
FactoredRational infinite_ratio(const Monomial& w, int N);
// The same ratio built from (1 + y q^m w).
FactoredRational infinite_ratio_y(const Monomial& w, int N, const Monomial& y);

// Coefficient of prod Q_i^{d_i} in the twisted abelian series; balanced adds
// the (1 + y ...) partners.
FactoredRational abelian_j_coefficient(int r, int n, const IntVec& dvec, bool balanced);
TruncatedSeries abelian_series(int r, int n, int trunc, bool balanced);
// prod_a (1 - P_i / t_a), i 0-based.
FactoredRational abelian_relation(int i, int n);

// The pair of operators for index i (0-based) with D1 J = D2 J.
std::pair<OperatorProduct, OperatorProduct> build_bethe_operators(int i, int r, int n);

// Staged coefficients at Q^{d'+e_i}: stage 1..3 of either side.
enum class Side { Left, Right };
FactoredRational staged_closed_form(Side side, int stage, int i, int r, int n, const IntVec& dprime);
FactoredRational staged_direct(Side side, int stage, int i, int r, int n, const IntVec& dprime);

Report verify_abelian_identities(int r, int n, int trunc, const EqualityOptions& opts, int jobs = 0);

// P_i S_i -> P_i, q -> 1, y -> -hbar on an operator whose coefficient
// monomials carry P-exponents equal to their shift vectors.
RationalSum specialize_operator(const DiffOperator& op, int r);
// The Bethe left-hand side with k = hbar, s = 1 in variables x_i.
RationalSum bethe_expression(int i, int r, int n);

Report bethe_correspondence(int r, int n, const EqualityOptions& opts);

}  // namespace kbal
