#pragma once

#include <array>
#include <compare>
#include <optional>
#include <string>
#include <vector>

#include "essig/rational.hpp"

namespace essig {

// Weight in eps-coordinates. Halves occur for spin weights.
struct EpsWeight {
    std::array<Rational, 4> c{};

    friend bool operator==(const EpsWeight&, const EpsWeight&) = default;

    EpsWeight& operator+=(const EpsWeight& o);
    EpsWeight& operator-=(const EpsWeight& o);
    friend EpsWeight operator+(EpsWeight a, const EpsWeight& b) { return a += b; }
    friend EpsWeight operator-(EpsWeight a, const EpsWeight& b) { return a -= b; }
    EpsWeight operator-() const;
    EpsWeight scaled(const Rational& f) const;

    bool is_zero() const;
    // "e1+e2", "e1-e2", "1/2 e1 - 1/2 e2 ..." style
    std::string str() const;
};

// Coroot pairing; every D4 root has squared length 2, so this is the plain
// dot product in eps-coordinates.
Rational pairing(const EpsWeight& mu, const EpsWeight& v);

// Dominant weight in fundamental coordinates k_1..k_4.
struct DomWeight {
    std::array<int, 4> k{};

    int total() const { return k[0] + k[1] + k[2] + k[3]; }
    bool dominant() const { return k[0] >= 0 && k[1] >= 0 && k[2] >= 0 && k[3] >= 0; }
    bool is_zero() const { return k == std::array<int, 4>{}; }

    friend bool operator==(const DomWeight&, const DomWeight&) = default;
    friend auto operator<=>(const DomWeight&, const DomWeight&) = default;

    std::string str() const;
};

struct Root {
    int index = 0;  // 1-based position in the fixed numbering
    EpsWeight eps;
};

// Rank-4 positive-root datum with a fixed numbering. Written against generic
// rank-4 data; only the D4 instance is shipped.
class RootSystem {
public:
    static const RootSystem& d4();

    int rank() const { return 4; }
    int num_positive() const { return static_cast<int>(positive_.size()); }
    const std::vector<Root>& positive_roots() const { return positive_; }
    const Root& root(int i) const { return positive_.at(static_cast<std::size_t>(i) - 1); }
    // beta_j, j in 1..4
    const Root& simple_root(int j) const { return root(simple_index_.at(static_cast<std::size_t>(j) - 1)); }
    // omega_j in eps-coordinates, j in 1..4
    const EpsWeight& fundamental(int j) const { return fundamental_.at(static_cast<std::size_t>(j) - 1); }

    EpsWeight to_eps(const DomWeight& w) const;
    EpsWeight rho() const;  // sum of the fundamental weights

    // lambda - sum_i p_i alpha_i
    EpsWeight weight_after_lowering(const DomWeight& hw, const std::array<int, 12>& p) const;

    Int weyl_dim(const DomWeight& hw) const;

    // alpha_i in the simple-root basis (nonnegative integers)
    const std::array<int, 4>& root_simple_coords(int i) const {
        return root_in_simple_.at(static_cast<std::size_t>(i) - 1);
    }
    // coordinates of v in the simple-root basis, if they are all integers
    std::optional<std::array<int, 4>> simple_coords(const EpsWeight& v) const;

private:
    RootSystem();

    std::vector<Root> positive_;
    std::array<int, 4> simple_index_{};
    std::array<EpsWeight, 4> fundamental_{};
    std::array<std::array<int, 4>, 12> root_in_simple_{};
    std::array<std::array<Rational, 4>, 4> simple_basis_inverse_{};  // rows give beta-coords
};

}  // namespace essig
