#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace kbal {

// Fixed slot layout shared by every monomial. Exponents are stored doubled so
// that half-integer powers live on the integer lattice.
inline constexpr int kMaxN = 8;
inline constexpr int kMaxR = 6;
inline constexpr int kSlots = 32;

using Exponents = std::array<int32_t, kSlots>;

namespace var {
constexpr int t(int j) { return j; }  // 0-based torus weight index
inline constexpr int q = 8;
inline constexpr int hbar = 9;
inline constexpr int y = 10;
inline constexpr int lambda = 11;
inline constexpr int P = 12;
inline constexpr int Q = 13;
constexpr int Pi(int i) { return 14 + i; }
constexpr int x(int i) { return 20 + i; }
constexpr int Qi(int i) { return 26 + i; }
}  // namespace var

std::string slot_name(int slot);
std::optional<int> slot_from_name(std::string_view name);

// The variables a session may use, fixed from (r, n).
class Alphabet {
public:
    Alphabet() : Alphabet(kMaxR, kMaxN) {}
    Alphabet(int r, int n);

    int r() const { return r_; }
    int n() const { return n_; }
    bool admits_slot(int slot) const;
    bool admits(const Exponents& e) const;

private:
    int r_;
    int n_;
};

}  // namespace kbal
