#include "kbal/qdiff.hpp"

#include <algorithm>
#include <chrono>
#include <numeric>

#include "kbal/errors.hpp"
#include "kbal/quot.hpp"
#include "kbal/series.hpp"
#include "kbal/symbols.hpp"

namespace kbal {

namespace {

void check_len(int rank, const IntVec& v) {
    if (static_cast<int>(v.size()) != rank) throw UsageError("generator vector length must equal the operator rank");
}

int dot(const IntVec& a, const IntVec& b) { return std::inner_product(a.begin(), a.end(), b.begin(), 0); }

IntVec add(const IntVec& a, const IntVec& b) {
    IntVec r(a.size());
    for (std::size_t k = 0; k < a.size(); ++k) r[k] = a[k] + b[k];
    return r;
}

int total(const IntVec& v) { return std::accumulate(v.begin(), v.end(), 0); }

Monomial qpow(int m) { return Monomial::variable(var::q, m); }

RationalSum times_polynomial(const RationalSum& s, const Polynomial& p) {
    RationalSum out;
    for (const auto& m : p.monomials()) out += s * FactoredRational(m);
    return out;
}

}  // namespace

DiffOperator DiffOperator::constant(int rank, const Polynomial& c) {
    return term(rank, c, IntVec(rank, 0), IntVec(rank, 0));
}

DiffOperator DiffOperator::term(int rank, const Polynomial& c, IntVec shift, IntVec qpow) {
    check_len(rank, shift);
    check_len(rank, qpow);
    for (int a : qpow)
        if (a < 0) throw DomainError("Q powers must be nonnegative");
    DiffOperator op(rank);
    op.add_term({std::move(shift), std::move(qpow)}, c);
    return op;
}

DiffOperator DiffOperator::shift(int rank, IntVec b, const Monomial& c) {
    return term(rank, Polynomial(c), std::move(b), IntVec(rank, 0));
}

DiffOperator DiffOperator::qpower(int rank, IntVec a) {
    return term(rank, Polynomial::constant(1), IntVec(rank, 0), std::move(a));
}

void DiffOperator::add_term(const Key& key, const Polynomial& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(key);
    if (it == terms_.end()) {
        terms_.emplace(key, c);
        return;
    }
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
}

std::vector<DiffOperator::Term> DiffOperator::terms() const {
    std::vector<Term> out;
    for (const auto& [key, c] : terms_) out.push_back({c, key.first, key.second});
    return out;
}

DiffOperator DiffOperator::operator+(const DiffOperator& o) const {
    DiffOperator r = *this;
    for (const auto& [key, c] : o.terms_) r.add_term(key, c);
    return r;
}

DiffOperator DiffOperator::operator-(const DiffOperator& o) const {
    DiffOperator r = *this;
    for (const auto& [key, c] : o.terms_) r.add_term(key, -c);
    return r;
}

DiffOperator DiffOperator::operator*(const DiffOperator& o) const {
    if (rank_ != o.rank_) throw UsageError("operator ranks differ");
    DiffOperator r(rank_);
    for (const auto& [k1, c1] : terms_)
        for (const auto& [k2, c2] : o.terms_) {
            // c1 S^b1 Q^a1 c2 S^b2 Q^a2 = c1 c2 q^{-a1.b2} S^{b1+b2} Q^{a1+a2}
            Polynomial c = (c1 * c2) * qpow(-dot(k1.second, k2.first));
            r.add_term({add(k1.first, k2.first), add(k1.second, k2.second)}, c);
        }
    return r;
}

bool DiffOperator::operator==(const DiffOperator& o) const {
    if (rank_ != o.rank_ || terms_.size() != o.terms_.size()) return false;
    auto a = terms_.begin();
    auto b = o.terms_.begin();
    for (; a != terms_.end(); ++a, ++b)
        if (a->first != b->first || a->second != b->second) return false;
    return true;
}

Json DiffOperator::to_json() const {
    Json terms = Json::array();
    for (const auto& [key, c] : terms_) {
        Json coeff = Json::array();
        for (const auto& m : c.monomials()) coeff.push_back(kbal::to_json(m));
        terms.push_back(Json{{"coeff", coeff}, {"shift", key.first}, {"qpow", key.second}});
    }
    return Json{{"rank", rank_}, {"terms", terms}};
}

OperatorWord& OperatorWord::coeff(const Polynomial& c) {
    letters_.push_back(DiffOperator::constant(rank_, c));
    return *this;
}

OperatorWord& OperatorWord::shift(IntVec b) {
    letters_.push_back(DiffOperator::shift(rank_, std::move(b)));
    return *this;
}

OperatorWord& OperatorWord::qpow(IntVec a) {
    letters_.push_back(DiffOperator::qpower(rank_, std::move(a)));
    return *this;
}

DiffOperator OperatorWord::canonicalize() const {
    DiffOperator r = DiffOperator::constant(rank_, Polynomial::constant(1));
    for (const auto& l : letters_) r = r * l;
    return r;
}

DiffOperator canonicalize(const DiffOperator& op) {
    // Terms are stored canonically; multiplying by one re-merges them.
    return DiffOperator::constant(op.rank(), Polynomial::constant(1)) * op;
}

RationalSum TruncatedSeries::at(const IntVec& d) const {
    auto it = coeffs.find(d);
    return it == coeffs.end() ? RationalSum() : it->second;
}

std::vector<IntVec> TruncatedSeries::degrees() const {
    std::vector<IntVec> out;
    for (int d = 0; d <= trunc; ++d)
        for (auto& c : compositions(d, rank)) out.push_back(c);
    return out;
}

TruncatedSeries monomial_series(int rank, int trunc, const IntVec& d) {
    TruncatedSeries s{rank, trunc, {}, false};
    if (total(d) <= trunc) s.coeffs[d] = FactoredRational();
    return s;
}

TruncatedSeries apply(const DiffOperator& op, const TruncatedSeries& s) {
    if (op.rank() != s.rank) throw UsageError("operator and series ranks differ");
    TruncatedSeries out{s.rank, s.trunc, {}, s.overflow};
    for (const auto& t : op.terms()) {
        for (const auto& [d0, f] : s.coeffs) {
            IntVec d = add(d0, t.qpow);
            if (total(d) > s.trunc) {
                out.overflow = true;
                continue;
            }
            out.coeffs[d] += times_polynomial(f, t.coeff * qpow(dot(t.shift, d)));
        }
    }
    return out;
}

OpFactor OpFactor::binomial(const Monomial& c, IntVec b) { return {Kind::Binomial, c, std::move(b), DiffOperator()}; }
OpFactor OpFactor::qpower(IntVec a) { return {Kind::QPower, Monomial(), std::move(a), DiffOperator()}; }
OpFactor OpFactor::op(const DiffOperator& d) { return {Kind::General, Monomial(), {}, d}; }

OperatorProduct& OperatorProduct::then_left(const OpFactor& f) {
    factors.insert(factors.begin(), f);
    return *this;
}

OperatorProduct& OperatorProduct::times(const OpFactor& f) {
    factors.push_back(f);
    return *this;
}

OperatorProduct& OperatorProduct::times(const OperatorProduct& p) {
    for (const auto& f : p.factors) factors.push_back(f);
    return *this;
}

DiffOperator OperatorProduct::expand() const {
    DiffOperator r = DiffOperator::constant(rank, Polynomial::constant(1));
    for (const auto& f : factors) {
        switch (f.kind) {
            case OpFactor::Kind::Binomial:
                r = r * (DiffOperator::constant(rank, Polynomial::constant(1)) + DiffOperator::shift(rank, f.exps, f.c));
                break;
            case OpFactor::Kind::QPower:
                r = r * DiffOperator::qpower(rank, f.exps);
                break;
            case OpFactor::Kind::General:
                r = r * f.general;
                break;
        }
    }
    return r;
}

TruncatedSeries apply(const OperatorProduct& op, const TruncatedSeries& s) {
    TruncatedSeries cur = s;
    for (auto it = op.factors.rbegin(); it != op.factors.rend(); ++it) {
        const OpFactor& f = *it;
        if (f.kind == OpFactor::Kind::General) {
            cur = apply(f.general, cur);
            continue;
        }
        check_len(cur.rank, f.exps);
        TruncatedSeries next{cur.rank, cur.trunc, {}, cur.overflow};
        for (const auto& [d0, c] : cur.coeffs) {
            if (f.kind == OpFactor::Kind::Binomial) {
                next.coeffs[d0] += c * FactoredRational::binomial(f.c * qpow(dot(f.exps, d0)));
            } else {
                IntVec d = add(d0, f.exps);
                if (total(d) > cur.trunc)
                    next.overflow = true;
                else
                    next.coeffs[d] += c;
            }
        }
        cur = std::move(next);
    }
    return cur;
}

std::pair<OperatorProduct, OperatorProduct> balance_operator(const OperatorProduct& op, const Monomial& h) {
    OperatorProduct twin{op.rank, {}};
    for (const auto& f : op.factors) {
        if (f.kind != OpFactor::Kind::Binomial)
            throw DomainError("balance_operator: factor is not of the form (1 - M)");
        bool trivial = std::all_of(f.exps.begin(), f.exps.end(), [](int b) { return b == 0; });
        if (trivial) throw DomainError("balance_operator: M must involve the shift generators");
        twin.factors.push_back(OpFactor::binomial(h * f.c, f.exps));
    }
    return {op, twin};
}

OperatorProduct build_pn_product(int n) {
    OperatorProduct p{1, {}};
    for (int i = 0; i < n; ++i)
        p.times(OpFactor::binomial(-(Monomial::variable(var::P) * Monomial::variable(var::t(i), -1)), {1}));
    return p;
}

DiffOperator build_pn_operator(int n) { return build_pn_product(n).expand() - DiffOperator::qpower(1, {1}); }

TruncatedSeries build_pn_iseries(int n, int trunc) {
    TruncatedSeries s{1, trunc, {}, false};
    for (int d = 0; d <= trunc; ++d) {
        FactoredRational c;
        for (int i = 0; i < n; ++i) c /= pochhammer(qpow(1) * Monomial::variable(var::P) * Monomial::variable(var::t(i), -1), d);
        s.coeffs[{d}] = c;
    }
    return s;
}

TruncatedSeries build_pn_displayed_balanced(int n, int trunc) {
    TruncatedSeries s{1, trunc, {}, false};
    const Monomial y = Monomial::variable(var::y);
    for (int d = 0; d <= trunc; ++d) {
        FactoredRational c;
        for (int i = 0; i < n; ++i) {
            Monomial a = Monomial::variable(var::P) * Monomial::variable(var::t(i), -1);
            c *= pochhammer(y * qpow(1) * a, d) / pochhammer(qpow(1) * a, d);
        }
        s.coeffs[{d}] = c;
    }
    return s;
}

TruncatedSeries balance_series(const TruncatedSeries& s, const Monomial& y) {
    TruncatedSeries out{s.rank, s.trunc, {}, s.overflow};
    for (const auto& [d, c] : s.coeffs) {
        RationalSum b;
        for (const auto& t : c.terms()) b += balance(t, y);
        out.coeffs[d] = b;
    }
    return out;
}

FactoredRational pn_relation(int n) {
    FactoredRational r;
    for (int i = 0; i < n; ++i) r.multiply_binomial(-(Monomial::variable(var::P) * Monomial::variable(var::t(i), -1)), 1);
    return r;
}

Report verify_compatibility(int n, int trunc, const EqualityOptions& opts) {
    auto t0 = std::chrono::steady_clock::now();
    Report rep;
    rep.command = "verify-ops";
    rep.params = Json{{"n", n}, {"trunc", trunc}};
    rep.notes = Json{{"commutation", "Q^a S^b = q^(-a*b) S^b Q^a"},
                     {"compatibility_series", "prod_i (y q a_i)_d / (q a_i)_d"},
                     {"balanced_twin", "class balance (1 + y m) pairs with prod (1 + y a_i S)"}};
    if (n < 1 || n > kMaxN) throw UsageError("n must lie in [1, " + std::to_string(kMaxN) + "]");
    if (trunc < 0) throw UsageError("trunc must be nonnegative");

    const FactoredRational relation = pn_relation(n);
    const Monomial y = Monomial::variable(var::y);
    const OperatorProduct shifts = build_pn_product(n);
    const DiffOperator D = build_pn_operator(n);
    rep.notes["operator"] = D.to_json();
    const TruncatedSeries I = build_pn_iseries(n, trunc);
    const TruncatedSeries displayed = build_pn_displayed_balanced(n, trunc);
    const TruncatedSeries balanced = balance_series(I, y);

    auto residual_case = [&](const std::string& id, const RationalSum& lhs, const RationalSum& rhs, int d) {
        if (d > 0) return compare_sum_case(id, lhs, rhs, opts);
        bool ok = zero_modulo_relation(lhs - rhs, relation, var::P, opts);
        return flag_case(id, ok, ok ? Json::object() : Json{{"residual", to_json((lhs - rhs).expand())}});
    };

    // D I = 0, with the degree-0 term reduced by the relation.
    TruncatedSeries DI = apply(D, I);
    for (int d = 0; d <= trunc; ++d) rep.cases.push_back(residual_case("DI d=" + std::to_string(d), DI.at({d}), RationalSum(), d));

    // prod (1 - a_i S) B = prod (1 - y a_i S) Q B with the displayed balanced series.
    auto [num, twin] = balance_operator(shifts, y);
    OperatorProduct rhs_op = twin;
    rhs_op.times(OpFactor::qpower({1}));
    TruncatedSeries L = apply(num, displayed), R = apply(rhs_op, displayed);
    for (int d = 0; d <= trunc; ++d)
        rep.cases.push_back(residual_case("compat d=" + std::to_string(d), L.at({d}), R.at({d}), d));

    // The displayed series is the class balance with y -> -y.
    Substitution flip;
    flip.set(var::y, -y);
    for (int d = 0; d <= trunc; ++d)
        rep.cases.push_back(compare_sum_case("series d=" + std::to_string(d), displayed.at({d}), balanced.at({d}).substitute(flip), opts));

    // Class balance against the matching twin prod (1 + y a_i S).
    auto [num2, twin2] = balance_operator(shifts, -y);
    OperatorProduct rhs2 = twin2;
    rhs2.times(OpFactor::qpower({1}));
    TruncatedSeries L2 = apply(num2, balanced), R2 = apply(rhs2, balanced);
    for (int d = 0; d <= trunc; ++d)
        rep.cases.push_back(residual_case("twin d=" + std::to_string(d), L2.at({d}), R2.at({d}), d));

    rep.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    return rep;
}

}  // namespace kbal
