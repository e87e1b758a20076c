#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "kbal/polynomial.hpp"
#include "kbal/rational_sum.hpp"
#include "kbal/report.hpp"

namespace kbal {

using IntVec = std::vector<int>;

// Operator sum_k c_k S^{b_k} Q^{a_k} in canonical order: shift generators
// S_i = q^{Q_i d/dQ_i} to the left of every Q power. Coefficients commute
// with both. rank is the number of (S_i, Q_i) pairs.
class DiffOperator {
public:
    struct Term {
        Polynomial coeff;
        IntVec shift;
        IntVec qpow;
    };

    explicit DiffOperator(int rank = 1) : rank_(rank) {}
    static DiffOperator constant(int rank, const Polynomial& c);
    static DiffOperator term(int rank, const Polynomial& c, IntVec shift, IntVec qpow);
    static DiffOperator shift(int rank, IntVec b, const Monomial& c = Monomial());
    static DiffOperator qpower(int rank, IntVec a);

    int rank() const { return rank_; }
    std::vector<Term> terms() const;
    std::size_t size() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }

    DiffOperator operator+(const DiffOperator& o) const;
    DiffOperator operator-(const DiffOperator& o) const;
    // Q^a S^b = q^{-a.b} S^b Q^a when reordering.
    DiffOperator operator*(const DiffOperator& o) const;

    bool operator==(const DiffOperator& o) const;
    Json to_json() const;

private:
    using Key = std::pair<IntVec, IntVec>;
    void add_term(const Key& key, const Polynomial& c);

    int rank_;
    std::map<Key, Polynomial> terms_;
};

// A word of letters in arbitrary order; canonicalize() multiplies it out.
class OperatorWord {
public:
    explicit OperatorWord(int rank) : rank_(rank) {}
    OperatorWord& coeff(const Polynomial& c);
    OperatorWord& shift(IntVec b);
    OperatorWord& qpow(IntVec a);
    DiffOperator canonicalize() const;

private:
    int rank_;
    std::vector<DiffOperator> letters_;
};

DiffOperator canonicalize(const DiffOperator& op);

// Multivariate Q-series truncated by total degree.
struct TruncatedSeries {
    int rank = 1;
    int trunc = 0;
    std::map<IntVec, RationalSum> coeffs;
    // Set when an operator pushed terms beyond the truncation.
    bool overflow = false;

    RationalSum at(const IntVec& d) const;
    // All multi-degrees with total degree <= trunc, in descending lexicographic order per degree.
    std::vector<IntVec> degrees() const;
};

// Series with the single term Q^d.
TruncatedSeries monomial_series(int rank, int trunc, const IntVec& d);

TruncatedSeries apply(const DiffOperator& op, const TruncatedSeries& s);

// Factor of an operator product: (1 + c S^b), Q^a, or a general operator.
struct OpFactor {
    enum class Kind { Binomial, QPower, General };
    Kind kind;
    Monomial c;
    IntVec exps;
    DiffOperator general;

    static OpFactor binomial(const Monomial& c, IntVec b);
    static OpFactor qpower(IntVec a);
    static OpFactor op(const DiffOperator& d);
};

// Ordered product; the rightmost factor acts first.
struct OperatorProduct {
    int rank = 1;
    std::vector<OpFactor> factors;

    OperatorProduct& then_left(const OpFactor& f);  // multiply on the left
    OperatorProduct& times(const OpFactor& f);      // multiply on the right
    OperatorProduct& times(const OperatorProduct& p);
    DiffOperator expand() const;
};

// Applies factor by factor, so factored coefficients stay factored.
TruncatedSeries apply(const OperatorProduct& op, const TruncatedSeries& s);

// For a product of factors (1 - M_i): the pair (prod (1 - M_i), prod (1 - h M_i)).
std::pair<OperatorProduct, OperatorProduct> balance_operator(const OperatorProduct& op, const Monomial& h);

// prod_i (1 - P S / t_i) as a product, and minus Q as an operator.
OperatorProduct build_pn_product(int n);
DiffOperator build_pn_operator(int n);
// Coefficients 1 / prod_i (q P / t_i)_d.
TruncatedSeries build_pn_iseries(int n, int trunc);
// Coefficients prod_i (y q P/t_i)_d / (q P/t_i)_d.
TruncatedSeries build_pn_displayed_balanced(int n, int trunc);
// Coefficient-wise balance of the I-series.
TruncatedSeries balance_series(const TruncatedSeries& s, const Monomial& y);
// prod_i (1 - P / t_i).
FactoredRational pn_relation(int n);

Report verify_compatibility(int n, int trunc, const EqualityOptions& opts);

}  // namespace kbal
