#pragma once

#include <string>

#include "solrep/dyadic.hpp"
#include "solrep/roots.hpp"
#include "solrep/solenoid.hpp"

namespace solrep {

// Element of the additive group Z[1/2]^2 (the Heisenberg quotient by its center).
struct DyadicPair {
    DyadicRational first;
    DyadicRational second;

    friend DyadicPair operator+(const DyadicPair& a, const DyadicPair& b) {
        return {a.first + b.first, a.second + b.second};
    }
    friend DyadicPair operator-(const DyadicPair& a, const DyadicPair& b) {
        return {a.first - b.first, a.second - b.second};
    }
    DyadicPair operator-() const { return {-first, -second}; }

    std::string str() const { return "(" + first.str() + "," + second.str() + ")"; }

    friend bool operator==(const DyadicPair& a, const DyadicPair& b) {
        return a.first == b.first && a.second == b.second;
    }
    friend bool operator!=(const DyadicPair& a, const DyadicPair& b) { return !(a == b); }
};

// Character of (Z[1/2], +) with values in roots of unity, encoded by an exact
// solenoid point p: chi(a/2^n) = e^{2 pi i * theta_n(p) * a}.  The kernel is
// d * Z[1/2] where d is the denominator of p, so every value is an exact d-th root.
class DyadicCharacter {
public:
    DyadicCharacter() : point_(SolenoidPoint::identity()) {}  // trivial character
    explicit DyadicCharacter(SolenoidPoint point);            // requires an exact point

    static DyadicCharacter from_phase(const RootOfUnity& omega);  // chi(1) = omega, odd order

    const SolenoidPoint& point() const { return point_; }
    // d with ker(chi) = d * Z[1/2]
    const BigInt& kernel_scale() const;
    bool is_trivial() const;

    RootOfUnity operator()(const DyadicRational& t) const;

    // chi composed with t -> t/2 (resp. t -> 2^i * t); stays a character
    DyadicCharacter composed_half() const;
    DyadicCharacter composed_double(long i = 1) const;

private:
    SolenoidPoint point_;
};

// g1*h2 - g2*h1, the symplectic form entering the twisting cocycle
DyadicRational symplectic_form(const DyadicPair& g, const DyadicPair& h);

// the 2-cocycle sigma_chi(g, h) = chi(g1*h2 - g2*h1) on Z[1/2]^2
RootOfUnity twisting_cocycle(const DyadicCharacter& chi, const DyadicPair& g,
                             const DyadicPair& h);

}  // namespace solrep
