#include "essig/signature.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace essig {

Signature& Signature::operator+=(const Signature& o) {
    for (int i = 0; i < 4; ++i) hw.k[i] += o.hw.k[i];
    for (int i = 0; i < 12; ++i) p[i] += o.p[i];
    return *this;
}

std::string Signature::str() const {
    std::ostringstream os;
    os << hw.str() << ";(";
    for (int i = 0; i < 12; ++i) os << (i ? "," : "") << p[i];
    os << ")";
    return os.str();
}

std::array<int, 12> order_key(const Signature& s) {
    std::array<int, 12> q{};
    // q_i sums p_1..p_{12-i+1}
    int acc = 0;
    for (int i = 0; i < 12; ++i) acc += s.p[i];
    for (int i = 0; i < 12; ++i) {
        q[i] = acc;
        acc -= s.p[12 - i - 1];
    }
    return q;
}

std::strong_ordering compare(const Signature& a, const Signature& b) {
    if (!(a.hw == b.hw))
        throw std::invalid_argument("compare: signatures of different highest weights");
    return order_key(a) <=> order_key(b);
}

bool signature_less(const Signature& a, const Signature& b) {
    return compare(a, b) == std::strong_ordering::less;
}

EpsWeight signature_weight(const Signature& s) {
    return RootSystem::d4().weight_after_lowering(s.hw, s.p);
}

namespace {

// Backtracking over root indices 1..12 in the simple-root coordinate space;
// every alpha_i has nonnegative coordinates there, which bounds each p_i.
void enumerate_rec(const RootSystem& rs, int idx, std::array<int, 4>& residual,
                   std::array<int, 12>& p, const DomWeight& hw, std::vector<Signature>& out) {
    if (idx == 12) {
        if (residual == std::array<int, 4>{}) out.push_back(Signature{hw, p});
        return;
    }
    const auto& alpha = rs.root_simple_coords(idx + 1);
    int bound = -1;  // max multiple of alpha that fits in residual
    for (int t = 0;; ++t) {
        bool fits = true;
        for (int j = 0; j < 4; ++j) {
            if (residual[j] < t * alpha[j]) {
                fits = false;
                break;
            }
        }
        if (!fits) break;
        bound = t;
    }
    for (int t = 0; t <= bound; ++t) {
        p[idx] = t;
        enumerate_rec(rs, idx + 1, residual, p, hw, out);
        for (int j = 0; j < 4; ++j) residual[j] -= alpha[j];
    }
    for (int j = 0; j < 4; ++j) residual[j] += (bound + 1) * alpha[j];
    p[idx] = 0;
}

}  // namespace

std::vector<Signature> signatures_of_weight(const DomWeight& hw, const EpsWeight& mu) {
    const RootSystem& rs = RootSystem::d4();
    std::vector<Signature> out;
    auto coords = rs.simple_coords(rs.to_eps(hw) - mu);
    if (!coords) return out;
    for (int j = 0; j < 4; ++j)
        if ((*coords)[j] < 0) return out;
    std::array<int, 4> residual = *coords;
    std::array<int, 12> p{};
    enumerate_rec(rs, 0, residual, p, hw, out);
    std::sort(out.begin(), out.end(), signature_less);
    return out;
}

}  // namespace essig
