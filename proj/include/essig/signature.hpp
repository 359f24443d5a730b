#pragma once

#include <array>
#include <compare>
#include <string>
#include <vector>

#include "essig/root_system.hpp"

namespace essig {

// A dominant weight together with one lowering exponent per positive root.
struct Signature {
    DomWeight hw;
    std::array<int, 12> p{};

    friend bool operator==(const Signature&, const Signature&) = default;

    Signature& operator+=(const Signature& o);
    friend Signature operator+(Signature a, const Signature& b) { return a += b; }

    std::string str() const;
};

// Partial-sum key q_i = p_1 + ... + p_{N-i+1}; weakly decreasing,
// q_1 = sum p_j, q_N = p_1.
std::array<int, 12> order_key(const Signature& s);

// Lexicographic comparison of order keys; total within one highest weight.
// Throws std::invalid_argument when the highest weights differ.
std::strong_ordering compare(const Signature& a, const Signature& b);
bool signature_less(const Signature& a, const Signature& b);

EpsWeight signature_weight(const Signature& s);

// All signatures of highest weight hw whose vector weight is mu, ascending.
// Empty when to_eps(hw) - mu is not a nonnegative root combination.
std::vector<Signature> signatures_of_weight(const DomWeight& hw, const EpsWeight& mu);

}  // namespace essig
