#include "kbal/series.hpp"

#include <algorithm>
#include <chrono>

#include "kbal/errors.hpp"
#include "kbal/parallel.hpp"
#include "kbal/symbols.hpp"

namespace kbal {

namespace {

Monomial qpow(int m) { return Monomial::variable(var::q, m); }

bool in_subset(const Subset& s, int j) { return std::find(s.begin(), s.end(), j) != s.end(); }

void check_dvec(const GrassFixedPoint& g, const std::vector<int>& dvec) {
    if (static_cast<int>(dvec.size()) != g.r) throw UsageError("degree vector length must equal r");
    for (int d : dvec)
        if (d < 0) throw UsageError("degree vector entries must be nonnegative");
}

struct GridCase {
    GrassFixedPoint g;
    std::vector<int> dvec;
};

std::vector<GridCase> grid(int r, int n, int dmax, const GridFilter& filter = {}) {
    std::vector<GridCase> out;
    for (auto& [g, dv] : coefficient_grid(r, n, dmax, filter)) out.push_back({g, dv});
    return out;
}

std::string case_id(const GrassFixedPoint& g, const std::vector<int>& dvec) {
    return "I=" + subset_label(g.subset) + " d=" + vector_label(dvec);
}

double elapsed_ms(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
}

}  // namespace

FactoredRational i_coefficient_direct(const GrassFixedPoint& g, const std::vector<int>& dvec) {
    check_dvec(g, dvec);
    FactoredRational f;
    for (int k = 0; k < g.r; ++k) {
        const int i = g.subset[k];
        const int di = dvec[k];
        for (int j = 0; j < g.n; ++j) {
            if (in_subset(g.subset, j)) continue;
            for (int m = 1; m <= di; ++m) f.multiply_binomial(-(torus_ratio(i, j) * qpow(m)), -1);
        }
        for (int m = 1; m <= di; ++m) f.multiply_binomial(-qpow(m), -1);
        for (int l = 0; l < g.r; ++l) {
            if (l == k) continue;
            const int j = g.subset[l];
            for (int m = -di; m <= -di + dvec[l] - 1; ++m) f.multiply_binomial(-(torus_ratio(i, j) * qpow(-m)), -1);
        }
    }
    return f;
}

RationalSum i_coefficient_total(const GrassFixedPoint& g, int d) {
    RationalSum s;
    for (const auto& dv : compositions(d, g.r)) s += i_coefficient_direct(g, dv);
    return s;
}

RationalSum j_coefficient_geometric(const GrassFixedPoint& g, int d) {
    const FactoredRational prefactor = grassmannian_cotangent_lambda_minus1(g);
    RationalSum s;
    for (const auto& p : enumerate_fixed_points(g.r, g.n, d, true)) {
        if (rho(p) != g) continue;
        FactoredRational denom = lambda_minus1(tangent_weights(p).dual());
        if (denom.is_zero()) throw DomainError("lambda_{-1} of the cotangent space vanishes");
        s += prefactor / denom;
    }
    return s;
}

FactoredRational balance(const FactoredRational& f, const Monomial& y) {
    FactoredRational out = f;
    for (const auto& x : f.factors()) {
        if (x.cm.coeff() != -1)
            throw DomainError("balance: factor (1 + " + x.cm.to_string() + ") is not of the form (1 - m)");
        out.multiply_binomial(y * (-x.cm), -x.exp);
    }
    return out;
}

FactoredRational balance(const FactoredRational& f) { return balance(f, Monomial::variable(var::y)); }

Substitution vertex_specialization() {
    Substitution s;
    s.set(var::y, Monomial::product({{var::hbar, 1}, {var::q, -1}}, Rational(-1)));
    return s;
}

FactoredRational vertex_coefficient_product(const GrassFixedPoint& g, const std::vector<int>& dvec, bool normalized) {
    check_dvec(g, dvec);
    FactoredRational f;
    int d = 0;
    for (int k = 0; k < g.r; ++k) {
        d += dvec[k];
        for (int l = 0; l < g.r; ++l)
            f /= brace(torus_ratio(g.subset[l], g.subset[k]), dvec[k] - dvec[l], normalized);
        for (int j = 0; j < g.n; ++j) f *= brace(torus_ratio(j, g.subset[k]), dvec[k], normalized);
    }
    if (!normalized) f.multiply_unit(Monomial::half_power(var::q, g.n * d));
    return f;
}

WeightCharacter line_bundle_cohomology(int m) {
    WeightCharacter w;
    if (m >= 0)
        for (int s = 0; s <= m; ++s) w.add(qpow(s));
    else
        for (int s = m + 1; s <= -1; ++s) w.add(qpow(s), -1);
    return w;
}

WeightCharacter cotangent_bundle_tangent(const GrassFixedPoint& g) {
    WeightCharacter w;
    const Monomial hbar = Monomial::variable(var::hbar);
    for (int i : g.subset)
        for (int j = 0; j < g.n; ++j) {
            if (in_subset(g.subset, j)) continue;
            w.add(torus_ratio(j, i));
            w.add(hbar * torus_ratio(i, j));
        }
    return w;
}

WeightCharacter virtual_tangent(const QuasimapFixedPoint& qp) {
    // Summands of T^{1/2} = V^dual (x) W - V^dual (x) V as (weight, degree, sign).
    struct Summand {
        Monomial weight;
        int degree;
        int sign;
    };
    std::vector<Summand> half;
    for (int k = 0; k < qp.r; ++k) {
        const int i = qp.subset[k];
        for (int j = 0; j < qp.n; ++j) half.push_back({torus_ratio(j, i) * qpow(-qp.dvec[k]), qp.dvec[k], 1});
        for (int l = 0; l < qp.r; ++l)
            half.push_back({torus_ratio(qp.subset[l], i) * qpow(qp.dvec[l] - qp.dvec[k]), qp.dvec[k] - qp.dvec[l], -1});
    }
    const Monomial hbar = Monomial::variable(var::hbar);
    WeightCharacter w;
    for (const auto& s : half) {
        WeightCharacter h = line_bundle_cohomology(s.degree) * s.weight;
        WeightCharacter hd = line_bundle_cohomology(-s.degree) * (hbar * s.weight.inverse());
        if (s.sign > 0) {
            w += h;
            w += hd;
        } else {
            w -= h;
            w -= hd;
        }
    }
    return w - cotangent_bundle_tangent({qp.n, qp.r, qp.subset});
}

FactoredRational vertex_coefficient_localization(const QuasimapFixedPoint& qp, bool normalized) {
    FactoredRational f = roof(virtual_tangent(qp));
    if (normalized) f.multiply_unit(brace_unit(qp.n * qp.degree()).inverse());
    return f;
}

std::vector<std::pair<GrassFixedPoint, std::vector<int>>> coefficient_grid(int r, int n, int dmax, const GridFilter& filter) {
    const auto points = grass_fixed_points(r, n);
    if (filter.point) {
        const Subset& p = *filter.point;
        if (static_cast<int>(p.size()) != r || !std::is_sorted(p.begin(), p.end()) ||
            std::adjacent_find(p.begin(), p.end()) != p.end() || p.front() < 0 || p.back() >= n)
            throw UsageError("point must be " + std::to_string(r) + " distinct increasing indices in 1.." + std::to_string(n));
    }
    if (filter.dvec) {
        const auto& dv = *filter.dvec;
        if (static_cast<int>(dv.size()) != r || std::any_of(dv.begin(), dv.end(), [](int x) { return x < 0; }))
            throw UsageError("dvec must have " + std::to_string(r) + " nonnegative entries");
    }
    std::vector<std::pair<GrassFixedPoint, std::vector<int>>> out;
    for (const auto& g : points) {
        if (filter.point && g.subset != *filter.point) continue;
        if (filter.dvec) {
            out.emplace_back(g, *filter.dvec);
            continue;
        }
        for (int d = 0; d <= dmax; ++d)
            for (auto& dv : compositions(d, r)) out.emplace_back(g, dv);
    }
    return out;
}

Report verify_main_theorem(int r, int n, int dmax, const EqualityOptions& opts, int jobs, const GridFilter& filter) {
    auto t0 = std::chrono::steady_clock::now();
    Report rep;
    rep.command = "verify-main";
    rep.params = Json{{"r", r}, {"n", n}, {"dmax", dmax}};
    if (filter.point) rep.params["point"] = subset_label(*filter.point);
    if (filter.dvec) rep.params["dvec"] = vector_label(*filter.dvec);
    auto cases = grid(r, n, dmax, filter);
    const Substitution to_vertex = vertex_specialization();
    rep.cases = parallel_map<CaseRecord>(cases.size(), jobs, [&](std::size_t k) {
        const auto& c = cases[k];
        FactoredRational lhs = balance(i_coefficient_direct(c.g, c.dvec)).substitute(to_vertex);
        FactoredRational rhs = vertex_coefficient_product(c.g, c.dvec, true);
        return compare_case(case_id(c.g, c.dvec), lhs, rhs, opts);
    });
    rep.wall_ms = elapsed_ms(t0);
    return rep;
}

Report verify_cross_paths(int r, int n, int dmax, const EqualityOptions& opts, int jobs) {
    auto t0 = std::chrono::steady_clock::now();
    Report rep;
    rep.command = "verify-cross";
    rep.params = Json{{"r", r}, {"n", n}, {"dmax", dmax}};
    struct Job {
        bool geometric;
        GrassFixedPoint g;
        int d;
        std::vector<int> dvec;
    };
    std::vector<Job> jobs_list;
    for (const auto& g : grass_fixed_points(r, n))
        for (int d = 0; d <= dmax; ++d) jobs_list.push_back({true, g, d, {}});
    for (const auto& c : grid(r, n, dmax)) jobs_list.push_back({false, c.g, 0, c.dvec});
    rep.cases = parallel_map<CaseRecord>(jobs_list.size(), jobs, [&](std::size_t k) {
        const auto& j = jobs_list[k];
        if (j.geometric)
            return compare_sum_case("icoeff I=" + subset_label(j.g.subset) + " d=" + std::to_string(j.d),
                                    i_coefficient_total(j.g, j.d), j_coefficient_geometric(j.g, j.d), opts);
        QuasimapFixedPoint qp{j.g.n, j.g.r, j.g.subset, j.dvec};
        return compare_case("vertex " + case_id(j.g, j.dvec), vertex_coefficient_product(j.g, j.dvec, true),
                            vertex_coefficient_localization(qp, true), opts);
    });
    rep.wall_ms = elapsed_ms(t0);
    return rep;
}

Report verify_degenerations(int r, int n, int dmax, const EqualityOptions& opts, int jobs) {
    auto t0 = std::chrono::steady_clock::now();
    Report rep;
    rep.command = "verify-degenerations";
    rep.params = Json{{"r", r}, {"n", n}, {"dmax", dmax}};
    auto cases = grid(r, n, dmax);
    Substitution hbar0, y0;
    hbar0.set_zero(var::hbar);
    y0.set_zero(var::y);
    auto recs = parallel_map<std::pair<CaseRecord, CaseRecord>>(cases.size(), jobs, [&](std::size_t k) {
        const auto& c = cases[k];
        FactoredRational icoef = i_coefficient_direct(c.g, c.dvec);
        return std::make_pair(
            compare_case("hbar->0 " + case_id(c.g, c.dvec), vertex_coefficient_product(c.g, c.dvec, true).substitute(hbar0), icoef, opts),
            compare_case("y->0 " + case_id(c.g, c.dvec), balance(icoef).substitute(y0), icoef, opts));
    });
    for (auto& [a, b] : recs) {
        rep.cases.push_back(std::move(a));
        rep.cases.push_back(std::move(b));
    }
    rep.wall_ms = elapsed_ms(t0);
    return rep;
}

}  // namespace kbal
