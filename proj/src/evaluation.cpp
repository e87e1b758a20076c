#include "kbal/evaluation.hpp"

#include <random>

#include "kbal/errors.hpp"

namespace kbal {

namespace modp {

uint64_t add(uint64_t a, uint64_t b) {
    uint64_t s = a + b;
    return s >= kPrime ? s - kPrime : s;
}

uint64_t sub(uint64_t a, uint64_t b) { return a >= b ? a - b : a + kPrime - b; }

uint64_t mul(uint64_t a, uint64_t b) {
    unsigned __int128 p = static_cast<unsigned __int128>(a) * b;
    uint64_t lo = static_cast<uint64_t>(p & kPrime);
    uint64_t hi = static_cast<uint64_t>(p >> 61);
    return add(lo, hi);
}

uint64_t pow(uint64_t a, uint64_t e) {
    uint64_t r = 1;
    while (e) {
        if (e & 1) r = mul(r, a);
        a = mul(a, a);
        e >>= 1;
    }
    return r;
}

uint64_t inv(uint64_t a) { return pow(a, kPrime - 2); }

std::optional<uint64_t> from_rational(const Rational& r) {
    uint64_t d = mpz_fdiv_ui(r.get_den_mpz_t(), kPrime);
    if (d == 0) return std::nullopt;
    uint64_t n = mpz_fdiv_ui(r.get_num_mpz_t(), kPrime);
    return mul(n, inv(d));
}

}  // namespace modp

EvalPoint::EvalPoint(uint64_t seed) {
    std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ULL);
    std::uniform_int_distribution<uint64_t> dist(2, modp::kPrime - 1);
    for (int s = 0; s < kSlots; ++s) {
        root_[s] = dist(rng);
        root_inv_[s] = modp::inv(root_[s]);
    }
}

std::optional<uint64_t> EvalPoint::monomial(const Monomial& m) const {
    auto c = modp::from_rational(m.coeff());
    if (!c) return std::nullopt;
    uint64_t v = *c;
    for (int s = 0; s < kSlots; ++s) {
        int e = m.doubled(s);
        if (e > 0)
            v = modp::mul(v, modp::pow(root_[s], static_cast<uint64_t>(e)));
        else if (e < 0)
            v = modp::mul(v, modp::pow(root_inv_[s], static_cast<uint64_t>(-e)));
    }
    return v;
}

std::optional<uint64_t> EvalPoint::polynomial(const Polynomial& p) const {
    uint64_t acc = 0;
    for (const auto& t : p.terms()) {
        auto v = monomial(Monomial(t.coeff, t.exps));
        if (!v) return std::nullopt;
        acc = modp::add(acc, *v);
    }
    return acc;
}

RationalPoint RationalPoint::sample(uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> num(2, 97);
    std::uniform_int_distribution<int> den(1, 13);
    std::array<Rational, kSlots> roots;
    for (auto& r : roots) r = make_rational(num(rng), den(rng));
    return RationalPoint(roots);
}

Rational RationalPoint::monomial(const Monomial& m) const {
    Rational v = m.coeff();
    for (int s = 0; s < kSlots; ++s) {
        int e = m.doubled(s);
        if (e == 0) continue;
        if (roots_[s] == 0) throw DomainError("evaluation at a zero root of " + slot_name(s));
        Rational b = e > 0 ? roots_[s] : Rational(1 / roots_[s]);
        for (int k = 0; k < (e > 0 ? e : -e); ++k) v *= b;
    }
    return v;
}

Rational RationalPoint::polynomial(const Polynomial& p) const {
    Rational acc = 0;
    for (const auto& t : p.terms()) acc += monomial(Monomial(t.coeff, t.exps));
    return acc;
}

}  // namespace kbal
