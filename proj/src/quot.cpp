#include "kbal/quot.hpp"

#include <algorithm>
#include <numeric>

#include "kbal/errors.hpp"
#include "kbal/symbols.hpp"

namespace kbal {

namespace {

void check_shape(int r, int n) {
    if (n < 1 || n > kMaxN || r < 1 || r > n) throw UsageError("need 0 < r <= n <= " + std::to_string(kMaxN));
}

Monomial qpow(int m) { return Monomial::variable(var::q, m); }

bool in_subset(const Subset& s, int j) { return std::binary_search(s.begin(), s.end(), j); }

void extend_compositions(int remaining, int parts, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
    if (parts == 1) {
        cur.push_back(remaining);
        out.push_back(cur);
        cur.pop_back();
        return;
    }
    for (int k = remaining; k >= 0; --k) {
        cur.push_back(k);
        extend_compositions(remaining - k, parts - 1, cur, out);
        cur.pop_back();
    }
}

}  // namespace

int QuotFixedPoint::degree() const {
    return std::accumulate(a.begin(), a.end(), 0) + std::accumulate(b.begin(), b.end(), 0);
}

bool QuotFixedPoint::supported_at_zero() const {
    return std::all_of(b.begin(), b.end(), [](int x) { return x == 0; });
}

int QuasimapFixedPoint::degree() const { return std::accumulate(dvec.begin(), dvec.end(), 0); }

Monomial torus_ratio(int j, int i) {
    return Monomial::variable(var::t(j)) * Monomial::variable(var::t(i), -1);
}

std::vector<Subset> subsets(int n, int r) {
    std::vector<Subset> out;
    std::vector<bool> mask(n, false);
    std::fill(mask.begin(), mask.begin() + r, true);
    do {
        Subset s;
        for (int j = 0; j < n; ++j)
            if (mask[j]) s.push_back(j);
        out.push_back(s);
    } while (std::prev_permutation(mask.begin(), mask.end()));
    return out;
}

std::vector<GrassFixedPoint> grass_fixed_points(int r, int n) {
    check_shape(r, n);
    std::vector<GrassFixedPoint> out;
    for (auto& s : subsets(n, r)) out.push_back({n, r, s});
    return out;
}

std::vector<std::vector<int>> compositions(int d, int parts) {
    std::vector<std::vector<int>> out;
    if (parts <= 0) {
        if (d == 0) out.emplace_back();
        return out;
    }
    std::vector<int> cur;
    extend_compositions(d, parts, cur, out);
    return out;
}

std::vector<QuotFixedPoint> enumerate_fixed_points(int r, int n, int d, bool supported_at_zero) {
    check_shape(r, n);
    if (d < 0) throw UsageError("degree must be nonnegative");
    std::vector<QuotFixedPoint> out;
    for (const auto& s : subsets(n, r)) {
        if (supported_at_zero) {
            for (auto& a : compositions(d, r)) out.push_back({n, r, s, a, std::vector<int>(r, 0)});
        } else {
            for (auto& ab : compositions(d, 2 * r))
                out.push_back({n, r, s, std::vector<int>(ab.begin(), ab.begin() + r), std::vector<int>(ab.begin() + r, ab.end())});
        }
    }
    return out;
}

WeightCharacter tangent_weights(const QuotFixedPoint& p) {
    WeightCharacter w;
    for (int k = 0; k < p.r; ++k) {
        const int i = p.delta[k];
        const int top = p.a[k] + p.b[k];
        // (i) i in the subset, j outside it
        for (int j = 0; j < p.n; ++j) {
            if (in_subset(p.delta, j)) continue;
            for (int s = 0; s <= top; ++s) w.add(torus_ratio(j, i) * qpow(-p.a[k] + s));
        }
        // (ii) diagonal, skipping the trivial weight
        for (int s = 0; s <= top; ++s)
            if (s != p.a[k]) w.add(qpow(-p.a[k] + s));
        for (int l = 0; l < p.r; ++l) {
            if (l == k) continue;
            const int j = p.delta[l];
            // (iii) empty when a_j = 0
            for (int s = -p.a[k]; s <= -p.a[k] + p.a[l] - 1; ++s) w.add(torus_ratio(j, i) * qpow(s));
            // (iv) empty when b_j = 0
            if (p.b[l] >= 1)
                for (int s = p.b[k] - p.b[l] + 1; s <= p.b[k]; ++s) w.add(torus_ratio(j, i) * qpow(s));
        }
    }
    return w;
}

FactoredRational cotangent_lambda_y(const QuotFixedPoint& p) { return lambda_y(tangent_weights(p).dual()); }

FactoredRational cotangent_lambda_y_product(const QuotFixedPoint& p) {
    if (!p.supported_at_zero()) throw DomainError("the product formula needs a point supported at zero");
    const Monomial y = Monomial::variable(var::y);
    FactoredRational f;
    for (int k = 0; k < p.r; ++k) {
        const int i = p.delta[k];
        const int di = p.a[k];
        for (int j = 0; j < p.n; ++j) {
            if (in_subset(p.delta, j)) continue;
            for (int m = 0; m <= di; ++m) f.multiply_binomial(y * torus_ratio(i, j) * qpow(m), 1);
        }
        for (int m = 1; m <= di; ++m) f.multiply_binomial(y * qpow(m), 1);
        for (int l = 0; l < p.r; ++l) {
            if (l == k) continue;
            const int j = p.delta[l];
            for (int m = -di; m <= -di + p.a[l] - 1; ++m) f.multiply_binomial(y * torus_ratio(i, j) * qpow(-m), 1);
        }
    }
    return f;
}

GrassFixedPoint rho(const QuotFixedPoint& p) { return {p.n, p.r, p.delta}; }

FactoredRational grassmannian_cotangent_lambda_minus1(const GrassFixedPoint& g) {
    FactoredRational f;
    for (int i : g.subset)
        for (int j = 0; j < g.n; ++j)
            if (!in_subset(g.subset, j)) f.multiply_binomial(-torus_ratio(i, j), 1);
    return f;
}

QuasimapFixedPoint quasimap_bijection(const QuotFixedPoint& p) {
    if (!p.supported_at_zero()) throw DomainError("quasimap bijection needs a point supported at zero");
    return {p.n, p.r, p.delta, p.a};
}

QuotFixedPoint quot_from_quasimap(const QuasimapFixedPoint& qp) {
    return {qp.n, qp.r, qp.subset, qp.dvec, std::vector<int>(qp.r, 0)};
}

}  // namespace kbal
