#include <doctest.h>

#include "kbal/equality.hpp"
#include "kbal/errors.hpp"
#include "kbal/series.hpp"
#include "kbal/symbols.hpp"
#include "oracle.hpp"

using namespace kbal;

namespace {

Monomial v(int slot, int p = 1) { return Monomial::variable(slot, p); }
Monomial q(int p = 1) { return v(var::q, p); }
Monomial t(int a) { return v(var::t(a)); }
Monomial hb() { return v(var::hbar); }
Monomial yv() { return v(var::y); }
FactoredRational om(const Monomial& m, int e = 1) { return FactoredRational::one_minus(m, e); }

// Value of the projective-line vertex coefficient at the first fixed point,
// straight from the product formula.
Rational line_vertex_value(const oracle::Point& pt, int d) {
    Rational h = pt.value(var::hbar), qq = pt.value(var::q), w = pt.value(var::t(0)) / pt.value(var::t(1));
    Rational out = 1;
    for (int m = 0; m < d; ++m) out *= (1 - h * oracle::power(qq, m)) * (1 - h * w * oracle::power(qq, m));
    for (int m = 1; m <= d; ++m) out /= (1 - oracle::power(qq, m)) * (1 - w * oracle::power(qq, m));
    return out;
}

Rational line_icoeff_value(const oracle::Point& pt, int d) {
    Rational qq = pt.value(var::q), w = pt.value(var::t(0)) / pt.value(var::t(1));
    Rational out = 1;
    for (int m = 1; m <= d; ++m) out /= (1 - oracle::power(qq, m)) * (1 - w * oracle::power(qq, m));
    return out;
}

}  // namespace

TEST_CASE("direct I coefficients") {
    GrassFixedPoint p1{2, 1, {0}};
    CHECK(factored_equal(i_coefficient_direct(p1, {1}), om(q(), -1) * om(q() * t(0) / t(1), -1)));
    CHECK(i_coefficient_direct({3, 2, {0, 1}}, {0, 0}).is_one());
    FactoredRational expect = om(q() * t(0) / t(2), -1) * om(q(), -1) * om(t(1) / t(0), -1);
    CHECK(factored_equal(i_coefficient_direct({3, 2, {0, 1}}, {1, 0}), expect));
    oracle::Point pt(1);
    for (int d = 0; d <= 5; ++d) CHECK(*oracle::eval(pt, i_coefficient_direct(p1, {d})) == line_icoeff_value(pt, d));
    CHECK_THROWS_AS(i_coefficient_direct(p1, {1, 0}), UsageError);
}

TEST_CASE("geometric I coefficients") {
    GrassFixedPoint p1{2, 1, {0}};
    CHECK(sum_equal(j_coefficient_geometric(p1, 1), RationalSum(om(q(), -1) * om(q() * t(0) / t(1), -1))));
    CHECK(sum_equal(j_coefficient_geometric(p1, 0), RationalSum(FactoredRational())));
    GrassFixedPoint g{4, 2, {0, 1}};
    RationalSum sum;
    for (auto dv : std::vector<std::vector<int>>{{2, 0}, {1, 1}, {0, 2}}) sum += i_coefficient_direct(g, dv);
    CHECK(sum_equal(j_coefficient_geometric(g, 2), sum));
    CHECK(sum_equal(i_coefficient_total(g, 2), sum));
}

TEST_CASE("balancing classes") {
    FactoredRational f = om(q(), -1) * om(q() * t(0) / t(1), -1);
    FactoredRational expect = f * FactoredRational::binomial(yv() * q()) * FactoredRational::binomial(yv() * q() * t(0) / t(1));
    CHECK(factored_equal(balance(f), expect));
    Substitution y0;
    y0.set_zero(var::y);
    CHECK(factored_equal(balance(f).substitute(y0), f));
    Monomial u = t(0) / t(1), w = hb() * q();
    FactoredRational quotient = om(w) / om(u);
    FactoredRational qexpect = om(w) * FactoredRational::binomial(yv() * u) / (om(u) * FactoredRational::binomial(yv() * w));
    CHECK(factored_equal(balance(quotient), qexpect));
    CHECK_THROWS_AS(balance(FactoredRational::binomial(q())), DomainError);
    // every direct coefficient is balanceable
    for (const auto& g : grass_fixed_points(2, 4))
        for (int d = 0; d <= 3; ++d)
            for (const auto& dv : compositions(d, 2)) CHECK_NOTHROW(balance(i_coefficient_direct(g, dv)));
}

TEST_CASE("vertex coefficients") {
    GrassFixedPoint p1{2, 1, {0}};
    CHECK(vertex_coefficient_product({3, 2, {0, 2}}, {0, 0}).is_one());
    CHECK(factored_equal(vertex_coefficient_product(p1, {1}), om(hb()) * om(hb() * t(0) / t(1)) / (om(q()) * om(q() * t(0) / t(1)))));
    oracle::Point pt(2);
    for (int d = 0; d <= 5; ++d) {
        CHECK(*oracle::eval(pt, vertex_coefficient_product(p1, {d})) == line_vertex_value(pt, d));
        CHECK(*oracle::eval(pt, vertex_coefficient_localization({2, 1, {0}, {d}})) == line_vertex_value(pt, d));
    }
    // unnormalized differs by the unit (-q^{1/2} hbar^{-1/2})^{n d}
    Rational unit = -pt.half(var::q) / pt.half(var::hbar);
    CHECK(*oracle::eval(pt, vertex_coefficient_localization({2, 1, {0}, {2}}, false)) ==
          oracle::power(unit, 4) * line_vertex_value(pt, 2));
}

TEST_CASE("virtual tangent at a projective-line fixed point") {
    WeightCharacter expect;
    expect.add(q().inverse());
    expect.add(t(1) / t(0) / q());
    expect.add(hb(), -1);
    expect.add(hb() * t(0) / t(1), -1);
    CHECK(virtual_tangent({2, 1, {0}, {1}}) == expect);
    CHECK(virtual_tangent({2, 1, {0}, {0}}).empty());
    CHECK(line_bundle_cohomology(2) == WeightCharacter::single(Monomial()) + WeightCharacter::single(q()) + WeightCharacter::single(q(2)));
    CHECK(line_bundle_cohomology(-1).empty());
    CHECK(line_bundle_cohomology(-3) == (WeightCharacter() - WeightCharacter::single(q(-2)) - WeightCharacter::single(q(-1))));
}

TEST_CASE("main theorem at small scale") {
    EqualityOptions opts;
    CHECK(verify_main_theorem(1, 2, 3, opts).all_pass());
    CHECK(verify_main_theorem(2, 4, 2, opts).all_pass());
    Report r = verify_main_theorem(2, 3, 0, opts);
    CHECK(r.cases.size() == 3);
    CHECK(r.all_pass());
    GridFilter f;
    f.point = Subset{0, 2};
    f.dvec = std::vector<int>{1, 1};
    Report one = verify_main_theorem(2, 3, 0, opts, 1, f);
    REQUIRE(one.cases.size() == 1);
    CHECK(one.cases[0].id == "I={1,3} d=(1,1)");
}

TEST_CASE("limits") {
    Substitution h0;
    h0.set_zero(var::hbar);
    for (const auto& g : grass_fixed_points(2, 3))
        for (const auto& dv : compositions(2, 2))
            CHECK(factored_equal(vertex_coefficient_product(g, dv).substitute(h0), i_coefficient_direct(g, dv)));
    CHECK(verify_degenerations(1, 3, 2, {}).all_pass());
    CHECK(verify_cross_paths(2, 3, 2, {}).all_pass());
}

TEST_CASE("a wrong normalization is caught") {
    GrassFixedPoint p1{2, 1, {0}};
    FactoredRational product = vertex_coefficient_product(p1, {1});
    FactoredRational off = product * FactoredRational(q() / hb());
    CHECK_FALSE(factored_equal(off, vertex_coefficient_localization({2, 1, {0}, {1}})));
    CHECK_FALSE(factored_equal(off, vertex_coefficient_localization({2, 1, {0}, {1}}), {0, true, true}));
}
