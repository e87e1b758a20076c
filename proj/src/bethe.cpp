#include "kbal/bethe.hpp"

#include <chrono>
#include <functional>
#include <memory>
#include <numeric>

#include "kbal/errors.hpp"
#include "kbal/parallel.hpp"
#include "kbal/quot.hpp"
#include "kbal/series.hpp"

namespace kbal {

namespace {

Monomial qpow(int m) { return Monomial::variable(var::q, m); }
Monomial Pv(int i) { return Monomial::variable(var::Pi(i)); }
Monomial tv(int a) { return Monomial::variable(var::t(a)); }
Monomial yv() { return Monomial::variable(var::y); }
Monomial hv() { return Monomial::variable(var::hbar); }
Monomial lam() { return Monomial::variable(var::lambda); }

IntVec unit_vec(int r, int i) {
    IntVec e(r, 0);
    e[i] = 1;
    return e;
}

IntVec diff_vec(int r, int i, int j) {
    IntVec e(r, 0);
    e[i] += 1;
    e[j] -= 1;
    return e;
}

int total(const IntVec& v) { return std::accumulate(v.begin(), v.end(), 0); }

void check_shape(int r, int n) {
    if (n < 1 || n > kMaxN || r < 1 || r > kMaxR || r > n) throw UsageError("need 1 <= r <= n with r <= 6, n <= 8");
}

std::pair<OperatorProduct, OperatorProduct> bethe_operators_with(int i, int r, int n, const Monomial& y) {
    OperatorProduct d1{r, {}}, d2{r, {}};
    for (int j = 0; j < r; ++j)
        if (j != i) d1.times(OpFactor::binomial(y * lam() * Pv(i) / Pv(j), diff_vec(r, i, j)));
    for (int j = 0; j < r; ++j)
        if (j != i) d1.times(OpFactor::binomial(-(lam() * qpow(1) * Pv(j) / Pv(i)), diff_vec(r, j, i)));
    for (int a = 0; a < n; ++a) d1.times(OpFactor::binomial(-(Pv(i) / tv(a)), unit_vec(r, i)));

    for (int j = 0; j < r; ++j)
        if (j != i) d2.times(OpFactor::binomial(y * lam() * qpow(1) * Pv(j) / Pv(i), diff_vec(r, j, i)));
    for (int a = 0; a < n; ++a) d2.times(OpFactor::binomial(y * Pv(i) / tv(a), unit_vec(r, i)));
    d2.times(OpFactor::qpower(unit_vec(r, i)));
    for (int j = 0; j < r; ++j)
        if (j != i) d2.times(OpFactor::binomial(-(lam() * qpow(1) * Pv(i) / Pv(j)), diff_vec(r, i, j)));
    return {d1, d2};
}

// T(u, v) block of index i: prod_a prod_{m<=u} (1 + y q^m P_i/t_a) / prod_a prod_{m<=v} (1 - q^m P_i/t_a).
FactoredRational t_block(int i, int n, int u, int v) {
    FactoredRational f;
    for (int a = 0; a < n; ++a) {
        Monomial w = Pv(i) / tv(a);
        for (int m = 1; m <= u; ++m) f.multiply_binomial(yv() * qpow(m) * w, 1);
        for (int m = 1; m <= v; ++m) f.multiply_binomial(-(qpow(m) * w), -1);
    }
    return f;
}

// Lambda(k, l; X, Y) = IR(lambda P_k/P_l, X) / IR_y(lambda P_k/P_l, Y).
FactoredRational lambda_block(int k, int l, int X, int Y) {
    Monomial w = lam() * Pv(k) / Pv(l);
    return infinite_ratio(w, X) / infinite_ratio_y(w, Y, yv());
}

// Factors of the balanced coefficient at d' that do not involve index i.
FactoredRational rest_blocks(int i, int r, int n, const IntVec& d) {
    FactoredRational f;
    for (int k = 0; k < r; ++k) {
        if (k == i) continue;
        f *= t_block(k, n, d[k], d[k]);
        for (int l = 0; l < r; ++l)
            if (l != k && l != i) f *= lambda_block(k, l, d[k] - d[l], d[k] - d[l]);
    }
    return f;
}

double elapsed_ms(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
}

RationalSum single(const FactoredRational& f) { return RationalSum(f); }

}  // namespace

FactoredRational infinite_ratio(const Monomial& w, int N) {
    FactoredRational f;
    if (N >= 0) {
        for (int m = 1; m <= N; ++m) f.multiply_binomial(-(qpow(m) * w), 1);
        return f;
    }
    for (int m = N + 1; m <= 0; ++m) {
        Monomial x = qpow(m) * w;
        if (x.is_constant() && x.coeff() == 1)
            throw DomainError("infinite_ratio: vanishing factor at m = " + std::to_string(m));
        f.multiply_binomial(-x, -1);
    }
    return f;
}

FactoredRational infinite_ratio_y(const Monomial& w, int N, const Monomial& y) {
    FactoredRational f;
    if (N >= 0) {
        for (int m = 1; m <= N; ++m) f.multiply_binomial(y * qpow(m) * w, 1);
        return f;
    }
    for (int m = N + 1; m <= 0; ++m) f.multiply_binomial(y * qpow(m) * w, -1);
    return f;
}

FactoredRational abelian_j_coefficient(int r, int n, const IntVec& dvec, bool balanced) {
    check_shape(r, n);
    if (static_cast<int>(dvec.size()) != r) throw UsageError("degree vector length must equal r");
    FactoredRational f;
    for (int i = 0; i < r; ++i) {
        if (dvec[i] < 0) throw UsageError("degree vector entries must be nonnegative");
        for (int a = 0; a < n; ++a) {
            Monomial w = Pv(i) / tv(a);
            for (int m = 1; m <= dvec[i]; ++m) {
                f.multiply_binomial(-(qpow(m) * w), -1);
                if (balanced) f.multiply_binomial(yv() * qpow(m) * w, 1);
            }
        }
    }
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j) {
            if (i == j) continue;
            Monomial w = lam() * Pv(i) / Pv(j);
            f *= infinite_ratio(w, dvec[i] - dvec[j]);
            if (balanced) f /= infinite_ratio_y(w, dvec[i] - dvec[j], yv());
        }
    return f;
}

TruncatedSeries abelian_series(int r, int n, int trunc, bool balanced) {
    TruncatedSeries s{r, trunc, {}, false};
    for (const auto& d : s.degrees()) s.coeffs[d] = abelian_j_coefficient(r, n, d, balanced);
    return s;
}

FactoredRational abelian_relation(int i, int n) {
    FactoredRational f;
    for (int a = 0; a < n; ++a) f.multiply_binomial(-(Pv(i) / tv(a)), 1);
    return f;
}

std::pair<OperatorProduct, OperatorProduct> build_bethe_operators(int i, int r, int n) {
    check_shape(r, n);
    if (i < 0 || i >= r) throw UsageError("operator index out of range");
    return bethe_operators_with(i, r, n, yv());
}

FactoredRational staged_closed_form(Side side, int stage, int i, int r, int n, const IntVec& dp) {
    const int c = dp[i];
    FactoredRational f = rest_blocks(i, r, n, dp);
    if (side == Side::Left) {
        f *= t_block(i, n, c + 1, c);
        for (int j = 0; j < r; ++j) {
            if (j == i) continue;
            const int dj = dp[j];
            if (stage == 1) {
                f *= lambda_block(i, j, c + 1 - dj, c + 1 - dj) * lambda_block(j, i, dj - c - 1, dj - c - 1);
            } else if (stage == 2) {
                f *= lambda_block(i, j, c + 1 - dj, c + 1 - dj) * lambda_block(j, i, dj - c, dj - c - 1);
            } else {
                f *= lambda_block(i, j, c + 1 - dj, c - dj) * lambda_block(j, i, dj - c, dj - c - 1);
            }
        }
        return f;
    }
    f *= stage == 1 ? t_block(i, n, c, c) : t_block(i, n, c + 1, c);
    for (int j = 0; j < r; ++j) {
        if (j == i) continue;
        const int dj = dp[j];
        if (stage <= 2)
            f *= lambda_block(i, j, c + 1 - dj, c - dj) * lambda_block(j, i, dj - c, dj - c);
        else
            f *= lambda_block(i, j, c + 1 - dj, c - dj) * lambda_block(j, i, dj - c, dj - c - 1);
    }
    return f;
}

FactoredRational staged_direct(Side side, int stage, int i, int r, int n, const IntVec& dp) {
    IntVec d = dp;
    d[i] += 1;
    const int trunc = total(d);
    TruncatedSeries J = abelian_series(r, n, trunc, true);
    OperatorProduct op{r, {}};
    if (side == Side::Left) {
        if (stage >= 3)
            for (int j = 0; j < r; ++j)
                if (j != i) op.times(OpFactor::binomial(yv() * lam() * Pv(i) / Pv(j), diff_vec(r, i, j)));
        if (stage >= 2)
            for (int j = 0; j < r; ++j)
                if (j != i) op.times(OpFactor::binomial(-(lam() * qpow(1) * Pv(j) / Pv(i)), diff_vec(r, j, i)));
        for (int a = 0; a < n; ++a) op.times(OpFactor::binomial(-(Pv(i) / tv(a)), unit_vec(r, i)));
    } else {
        if (stage >= 3)
            for (int j = 0; j < r; ++j)
                if (j != i) op.times(OpFactor::binomial(yv() * lam() * qpow(1) * Pv(j) / Pv(i), diff_vec(r, j, i)));
        if (stage >= 2)
            for (int a = 0; a < n; ++a) op.times(OpFactor::binomial(yv() * Pv(i) / tv(a), unit_vec(r, i)));
        op.times(OpFactor::qpower(unit_vec(r, i)));
        for (int j = 0; j < r; ++j)
            if (j != i) op.times(OpFactor::binomial(-(lam() * qpow(1) * Pv(i) / Pv(j)), diff_vec(r, i, j)));
    }
    RationalSum v = apply(op, J).at(d);
    if (v.terms().size() != 1) throw DomainError("staged coefficient is not a single factored term");
    return v.terms().front();
}

Report verify_abelian_identities(int r, int n, int trunc, const EqualityOptions& opts, int jobs) {
    auto t0 = std::chrono::steady_clock::now();
    check_shape(r, n);
    if (trunc < 1) throw UsageError("trunc must be at least 1");
    Report rep;
    rep.command = "verify-appendix-b";
    rep.params = Json{{"r", r}, {"n", n}, {"trunc", trunc}};
    rep.notes = Json{{"right_operator", "prod_{j!=i}(1 + y lambda q P_j/P_i S_j/S_i) prod_a (1 + y P_i S_i/t_a) Q_i prod_{j!=i}(1 - lambda q P_i/P_j S_i/S_j)"}};

    Json ops = Json::array();
    for (int i = 0; i < r; ++i) {
        auto [d1, d2] = build_bethe_operators(i, r, n);
        ops.push_back(Json{{"i", i + 1}, {"left", d1.expand().to_json()}, {"right", d2.expand().to_json()}});
    }
    rep.notes["operators"] = ops;

    const TruncatedSeries J = abelian_series(r, n, trunc, true);
    const TruncatedSeries Jbar = abelian_series(r, n, trunc, false);
    const auto degrees = J.degrees();
    Substitution y0;
    y0.set_zero(var::y);

    std::vector<std::function<CaseRecord()>> tasks;
    for (int i = 0; i < r; ++i) {
        const std::string tag = "i=" + std::to_string(i + 1) + " ";
        for (bool balanced : {true, false}) {
            auto [d1, d2] = balanced ? build_bethe_operators(i, r, n) : bethe_operators_with(i, r, n, Monomial(Rational(0)));
            const TruncatedSeries& series = balanced ? J : Jbar;
            auto L = std::make_shared<TruncatedSeries>(apply(d1, series));
            auto R = std::make_shared<TruncatedSeries>(apply(d2, series));
            const std::string kind = balanced ? "balanced " : "twisted ";
            for (const auto& d : degrees) {
                tasks.push_back([=, &opts] {
                    std::string id = tag + kind + vector_label(d);
                    if (d[i] >= 1) return compare_sum_case(id, L->at(d), R->at(d), opts);
                    RationalSum diff = L->at(d) - R->at(d);
                    bool ok = zero_modulo_relation(diff, abelian_relation(i, n), var::Pi(i), opts);
                    return flag_case(id + " mod relation", ok);
                });
            }
        }
    }
    for (const auto& d : degrees) {
        tasks.push_back([&, d] {
            return compare_sum_case("y->0 " + vector_label(d), J.at(d).substitute(y0), Jbar.at(d), opts);
        });
        tasks.push_back([&, d] {
            return compare_case("balance " + vector_label(d), balance(Jbar.at(d).terms().front()), J.at(d).terms().front(), opts);
        });
    }
    if (r >= 2) {
        for (int i = 0; i < r; ++i)
            for (int k = 0; k <= trunc - 1; ++k)
                for (const auto& dp : compositions(k, r)) {
                    const std::string tag = "staged i=" + std::to_string(i + 1) + " d'=" + vector_label(dp) + " ";
                    for (int stage = 1; stage <= 3; ++stage) {
                        tasks.push_back([=, &opts] {
                            return compare_case(tag + "A" + std::to_string(stage), staged_closed_form(Side::Left, stage, i, r, n, dp),
                                                staged_direct(Side::Left, stage, i, r, n, dp), opts);
                        });
                        tasks.push_back([=, &opts] {
                            return compare_case(tag + "B" + std::to_string(stage), staged_closed_form(Side::Right, stage, i, r, n, dp),
                                                staged_direct(Side::Right, stage, i, r, n, dp), opts);
                        });
                    }
                    tasks.push_back([=, &opts] {
                        return compare_case(tag + "A3=B3", staged_closed_form(Side::Left, 3, i, r, n, dp),
                                            staged_closed_form(Side::Right, 3, i, r, n, dp), opts);
                    });
                }
    }
    rep.cases = parallel_map<CaseRecord>(tasks.size(), jobs, [&](std::size_t k) { return tasks[k](); });
    rep.wall_ms = elapsed_ms(t0);
    return rep;
}

RationalSum specialize_operator(const DiffOperator& op, int r) {
    Substitution s;
    s.set(var::q, Monomial());
    s.set(var::y, -hv());
    Polynomial acc;
    for (const auto& t : op.terms()) {
        Monomial qs;
        for (int k = 0; k < r; ++k) qs *= Monomial::variable(var::Qi(k), t.qpow[k]);
        for (const auto& m : t.coeff.monomials()) {
            for (int k = 0; k < r; ++k)
                if (m.doubled(var::Pi(k)) != 2 * t.shift[k])
                    throw DomainError("coefficient " + m.to_string() + " does not pair P_" + std::to_string(k + 1) + " with its shift");
            acc += Polynomial(m * qs);
        }
    }
    return RationalSum::from_polynomial(acc.substitute(s));
}

RationalSum bethe_expression(int i, int r, int n) {
    const Monomial k = hv();
    const Monomial s(Rational(1));
    const Monomial xi = Monomial::variable(var::x(i));
    FactoredRational first;
    for (int a = 0; a < n; ++a) {
        first *= FactoredRational::sum_of(xi / tv(a), Monomial(Rational(-1)));
        first /= FactoredRational::sum_of(-s, k * xi / tv(a));
    }
    FactoredRational second(Monomial::variable(var::Q) * Monomial(Rational(r % 2 == 0 ? 1 : -1)));
    for (int j = 0; j < r; ++j) {
        if (j == i) continue;
        const Monomial xj = Monomial::variable(var::x(j));
        second *= FactoredRational::sum_of(-(s * xi), k * xj);
        second /= FactoredRational::sum_of(-(s * xj), k * xi);
    }
    return RationalSum(first) + RationalSum(second);
}

Report bethe_correspondence(int r, int n, const EqualityOptions& opts) {
    auto t0 = std::chrono::steady_clock::now();
    check_shape(r, n);
    Report rep;
    rep.command = "verify-bethe";
    rep.params = Json{{"r", r}, {"n", n}};
    rep.notes = Json{{"k", "hbar"}, {"s", 1}, {"specialization", "P_i S_i -> P_i, q -> 1, y -> -hbar"}};

    Substitution collapse;
    collapse.set(var::lambda, Monomial());
    for (int k = 0; k < r; ++k) collapse.set(var::Qi(k), Monomial::variable(var::Q));
    Substitution to_x;
    for (int k = 0; k < r; ++k) to_x.set(var::Pi(k), Monomial::variable(var::x(k)));
    Substitution hbar0;
    hbar0.set_zero(var::hbar);

    const Monomial h = hv();
    const Monomial Q = Monomial::variable(var::Q);
    const int sign_r1 = (r - 1) % 2 == 0 ? 1 : -1;
    const int sign_r = -sign_r1;

    for (int i = 0; i < r; ++i) {
        const std::string tag = "i=" + std::to_string(i + 1) + " ";
        auto [d1, d2] = build_bethe_operators(i, r, n);
        RationalSum g = specialize_operator(d1.expand() - d2.expand(), r);

        FactoredRational first_full, second_full;
        for (int j = 0; j < r; ++j) {
            if (j == i) continue;
            first_full *= FactoredRational::one_minus(h * lam() * Pv(i) / Pv(j)) * FactoredRational::one_minus(lam() * Pv(j) / Pv(i));
            second_full *= FactoredRational::one_minus(h * lam() * Pv(j) / Pv(i)) * FactoredRational::one_minus(lam() * Pv(i) / Pv(j));
        }
        FactoredRational t_zeros, t_poles;
        for (int a = 0; a < n; ++a) {
            t_zeros *= FactoredRational::one_minus(Pv(i) / tv(a));
            t_poles *= FactoredRational::one_minus(h * Pv(i) / tv(a));
        }
        first_full *= t_zeros;
        second_full *= t_poles;
        RationalSum expected_form = single(first_full) - single(second_full * FactoredRational(Monomial::variable(var::Qi(i))));
        rep.cases.push_back(compare_sum_case(tag + "operator specialization", g, expected_form, opts));

        FactoredRational first_block = first_full.substitute(collapse), second_block = second_full.substitute(collapse);
        RationalSum specialized = single(first_block) - single(second_block * FactoredRational(Q));
        rep.cases.push_back(compare_sum_case(tag + "lambda->1 Q_i->Q", g.substitute(collapse), specialized, opts));

        RationalSum divided = single(first_block / second_block) - single(FactoredRational(Q));
        rep.cases.push_back(compare_sum_case(tag + "divide", specialized, divided * second_block, opts));

        FactoredRational core = t_zeros / t_poles;
        Monomial ratio;
        for (int j = 0; j < r; ++j) {
            if (j == i) continue;
            ratio *= Pv(j) / Pv(i);
            core *= FactoredRational::one_minus(h * Pv(i) / Pv(j)) / FactoredRational::one_minus(h * Pv(j) / Pv(i));
        }
        FactoredRational lead = core * FactoredRational(ratio);
        RationalSum as_ratio = single(lead * FactoredRational(Monomial(Rational(sign_r1)))) - single(FactoredRational(Q));
        rep.cases.push_back(compare_sum_case(tag + "ratio", divided, as_ratio, opts));

        RationalSum sign_flipped = single(lead) + single(FactoredRational(Q * Monomial(Rational(sign_r))));
        rep.cases.push_back(compare_sum_case(tag + "sign", sign_flipped, as_ratio * FactoredRational(Monomial(Rational(sign_r1))), opts));

        FactoredRational weight_ratio;
        for (int j = 0; j < r; ++j) {
            if (j == i) continue;
            weight_ratio *= FactoredRational::sum_of(h * Pv(j), -Pv(i)) / FactoredRational::sum_of(h * Pv(i), -Pv(j));
        }
        RationalSum weighted = single(t_zeros / t_poles) + single(weight_ratio * FactoredRational(Q * Monomial(Rational(sign_r))));
        rep.cases.push_back(compare_sum_case(tag + "weight", weighted, sign_flipped * weight_ratio, opts));

        RationalSum bethe = bethe_expression(i, r, n);
        rep.cases.push_back(compare_sum_case(tag + "bethe", weighted.substitute(to_x), bethe, opts));

        FactoredRational unit_factor = (second_block / weight_ratio * FactoredRational(Monomial(Rational(sign_r1)))).substitute(to_x);
        rep.cases.push_back(compare_sum_case(tag + "unit", g.substitute(collapse).substitute(to_x), bethe * unit_factor, opts));

        FactoredRational limit;
        const Monomial xi = Monomial::variable(var::x(i));
        for (int a = 0; a < n; ++a) limit *= FactoredRational::one_minus(xi / tv(a));
        FactoredRational tail(Q * Monomial(Rational(sign_r)));
        for (int j = 0; j < r; ++j)
            if (j != i) tail *= FactoredRational(-xi / -Monomial::variable(var::x(j)));
        rep.cases.push_back(compare_sum_case(tag + "hbar->0", bethe.substitute(hbar0), single(limit) + single(tail), opts));
    }
    rep.wall_ms = elapsed_ms(t0);
    return rep;
}

}  // namespace kbal
