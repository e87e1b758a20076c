#include "kbal/variable.hpp"

#include "kbal/errors.hpp"
#include "kbal/rational.hpp"

namespace kbal {

std::string slot_name(int slot) {
    if (slot >= 0 && slot < kMaxN) return "t" + std::to_string(slot + 1);
    switch (slot) {
        case var::q: return "q";
        case var::hbar: return "hbar";
        case var::y: return "y";
        case var::lambda: return "lambda";
        case var::P: return "P";
        case var::Q: return "Q";
        default: break;
    }
    if (slot >= var::Pi(0) && slot < var::Pi(kMaxR)) return "P" + std::to_string(slot - var::Pi(0) + 1);
    if (slot >= var::x(0) && slot < var::x(kMaxR)) return "x" + std::to_string(slot - var::x(0) + 1);
    if (slot >= var::Qi(0) && slot < var::Qi(kMaxR)) return "Q" + std::to_string(slot - var::Qi(0) + 1);
    return "?" + std::to_string(slot);
}

std::optional<int> slot_from_name(std::string_view name) {
    for (int s = 0; s < kSlots; ++s)
        if (slot_name(s) == name) return s;
    return std::nullopt;
}

Alphabet::Alphabet(int r, int n) : r_(r), n_(n) {
    if (n < 1 || n > kMaxN) throw UsageError("n must lie in [1, " + std::to_string(kMaxN) + "]");
    if (r < 1 || r > kMaxR || r > n) throw UsageError("r must satisfy 1 <= r <= min(n, " + std::to_string(kMaxR) + ")");
}

bool Alphabet::admits_slot(int slot) const {
    if (slot >= 0 && slot < kMaxN) return slot < n_;
    if (slot >= var::q && slot <= var::Q) return true;
    if (slot >= var::Pi(0) && slot < var::Pi(kMaxR)) return slot - var::Pi(0) < r_;
    if (slot >= var::x(0) && slot < var::x(kMaxR)) return slot - var::x(0) < r_;
    if (slot >= var::Qi(0) && slot < var::Qi(kMaxR)) return slot - var::Qi(0) < r_;
    return false;
}

bool Alphabet::admits(const Exponents& e) const {
    for (int s = 0; s < kSlots; ++s)
        if (e[s] != 0 && !admits_slot(s)) return false;
    return true;
}

Rational parse_rational(const std::string& text) {
    Rational r;
    if (text.empty() || r.set_str(text, 10) != 0) throw DomainError("not an exact rational: '" + text + "'");
    if (r.get_den() == 0) throw DomainError("zero denominator in '" + text + "'");
    r.canonicalize();
    return r;
}

}  // namespace kbal
