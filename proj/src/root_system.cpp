#include "essig/root_system.hpp"

#include <ostream>
#include <sstream>
#include <stdexcept>

namespace essig {

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

EpsWeight& EpsWeight::operator+=(const EpsWeight& o) {
    for (int i = 0; i < 4; ++i) c[i] += o.c[i];
    return *this;
}

EpsWeight& EpsWeight::operator-=(const EpsWeight& o) {
    for (int i = 0; i < 4; ++i) c[i] -= o.c[i];
    return *this;
}

EpsWeight EpsWeight::operator-() const {
    EpsWeight r;
    for (int i = 0; i < 4; ++i) r.c[i] = -c[i];
    return r;
}

EpsWeight EpsWeight::scaled(const Rational& f) const {
    EpsWeight r;
    for (int i = 0; i < 4; ++i) r.c[i] = c[i] * f;
    return r;
}

bool EpsWeight::is_zero() const {
    for (const auto& x : c)
        if (!x.is_zero()) return false;
    return true;
}

std::string EpsWeight::str() const {
    std::ostringstream os;
    bool first = true;
    for (int i = 0; i < 4; ++i) {
        if (c[i].is_zero()) continue;
        if (c[i].sign() < 0)
            os << "-";
        else if (!first)
            os << "+";
        Rational a = c[i].sign() < 0 ? -c[i] : c[i];
        if (!(a == Rational(1))) os << a.str() << "*";
        os << "e" << (i + 1);
        first = false;
    }
    if (first) return "0";
    return os.str();
}

Rational pairing(const EpsWeight& mu, const EpsWeight& v) {
    Rational s;
    for (int i = 0; i < 4; ++i) s += mu.c[i] * v.c[i];
    return s;
}

std::string DomWeight::str() const {
    std::ostringstream os;
    os << "(" << k[0] << "," << k[1] << "," << k[2] << "," << k[3] << ")";
    return os.str();
}

namespace {

EpsWeight eps_of_ints(int a, int b, int c, int d) {
    return EpsWeight{{Rational(a), Rational(b), Rational(c), Rational(d)}};
}

Rational half() { return Rational(1, 2); }

}  // namespace

RootSystem::RootSystem() {
    // positive roots in the fixed numbering
    const int roots[12][4] = {
        {1, 1, 0, 0},    // alpha_1  = e1+e2
        {0, 1, 1, 0},    // alpha_2  = e2+e3
        {1, 0, 1, 0},    // alpha_3  = e1+e3
        {0, 0, 1, 1},    // alpha_4  = e3+e4
        {0, 1, 0, 1},    // alpha_5  = e2+e4
        {1, 0, 0, 1},    // alpha_6  = e1+e4
        {1, 0, -1, 0},   // alpha_7  = e1-e3
        {1, 0, 0, -1},   // alpha_8  = e1-e4
        {0, 0, 1, -1},   // alpha_9  = e3-e4
        {0, 1, 0, -1},   // alpha_10 = e2-e4
        {0, 1, -1, 0},   // alpha_11 = e2-e3
        {1, -1, 0, 0},   // alpha_12 = e1-e2
    };
    positive_.reserve(12);
    for (int i = 0; i < 12; ++i) {
        positive_.push_back(Root{i + 1, eps_of_ints(roots[i][0], roots[i][1], roots[i][2], roots[i][3])});
    }

    // beta_1 = e1-e2, beta_2 = e2-e3, beta_3 = e3-e4, beta_4 = e3+e4
    simple_index_ = {12, 11, 9, 4};

    fundamental_ = {eps_of_ints(1, 0, 0, 0), eps_of_ints(1, 1, 0, 0),
                    EpsWeight{{half(), half(), half(), -half()}},
                    EpsWeight{{half(), half(), half(), half()}}};

    // Row j extracts the beta_j coordinate of an eps-vector (x1,x2,x3,x4):
    //   c1 = x1, c2 = x1+x2, c3 = (x1+x2+x3-x4)/2, c4 = (x1+x2+x3+x4)/2
    simple_basis_inverse_ = {{
        {Rational(1), Rational(0), Rational(0), Rational(0)},
        {Rational(1), Rational(1), Rational(0), Rational(0)},
        {half(), half(), half(), -half()},
        {half(), half(), half(), half()},
    }};

    for (int i = 1; i <= 12; ++i) {
        auto co = simple_coords(root(i).eps);
        if (!co) throw std::logic_error("root system: root outside the root lattice");
        root_in_simple_[i - 1] = *co;
    }
}

const RootSystem& RootSystem::d4() {
    static const RootSystem instance;
    return instance;
}

EpsWeight RootSystem::to_eps(const DomWeight& w) const {
    EpsWeight r;
    for (int i = 0; i < 4; ++i) r += fundamental_[i].scaled(Rational(w.k[i]));
    return r;
}

EpsWeight RootSystem::rho() const {
    EpsWeight r;
    for (const auto& f : fundamental_) r += f;
    return r;
}

EpsWeight RootSystem::weight_after_lowering(const DomWeight& hw, const std::array<int, 12>& p) const {
    EpsWeight r = to_eps(hw);
    for (int i = 0; i < 12; ++i) {
        if (p[i] != 0) r -= positive_[i].eps.scaled(Rational(p[i]));
    }
    return r;
}

Int RootSystem::weyl_dim(const DomWeight& hw) const {
    if (!hw.dominant()) throw std::invalid_argument("weyl_dim: weight not dominant");
    EpsWeight lr = to_eps(hw) + rho();
    EpsWeight r = rho();
    Rational dim(1);
    for (const auto& alpha : positive_) {
        dim *= pairing(lr, alpha.eps) / pairing(r, alpha.eps);
    }
    if (!dim.is_integer()) throw std::logic_error("weyl_dim: non-integral result");
    return dim.num();
}

std::optional<std::array<int, 4>> RootSystem::simple_coords(const EpsWeight& v) const {
    std::array<int, 4> out{};
    for (int j = 0; j < 4; ++j) {
        Rational c;
        for (int i = 0; i < 4; ++i) c += simple_basis_inverse_[j][i] * v.c[i];
        if (!c.is_integer()) return std::nullopt;
        Int n = c.num();
        if (!n.fits_sint_p()) return std::nullopt;
        out[j] = static_cast<int>(n.get_si());
    }
    return out;
}

}  // namespace essig
