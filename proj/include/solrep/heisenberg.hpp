#pragma once

#include <string>

#include "solrep/dyadic.hpp"
#include "solrep/modular.hpp"

namespace solrep {

inline std::string ring_str(const DyadicRational& r) { return r.str(); }
inline std::string ring_str(const ModularResidue& r) { return r.value().str(); }

// Upper unitriangular 3x3 matrix over the ring, stored by its free entries:
// multiplication (x,y,z)(x',y',z') = (x+x', y+y', z+z'+x*y'), identity (0,0,0).
template <typename Ring>
struct HeisenbergElement {
    Ring x;
    Ring y;
    Ring z;

    friend HeisenbergElement operator*(const HeisenbergElement& a, const HeisenbergElement& b) {
        return {a.x + b.x, a.y + b.y, a.z + b.z + a.x * b.y};
    }

    HeisenbergElement inverse() const { return {-x, -y, -z + x * y}; }

    bool is_central() const { return x.is_zero() && y.is_zero(); }

    std::string str() const {
        return "(" + ring_str(x) + "," + ring_str(y) + "," + ring_str(z) + ")";
    }

    friend bool operator==(const HeisenbergElement& a, const HeisenbergElement& b) {
        return a.x == b.x && a.y == b.y && a.z == b.z;
    }
    friend bool operator!=(const HeisenbergElement& a, const HeisenbergElement& b) {
        return !(a == b);
    }
};

using DyadicHeisenberg = HeisenbergElement<DyadicRational>;
using ModularHeisenberg = HeisenbergElement<ModularResidue>;

inline DyadicHeisenberg dyadic_heisenberg_identity() { return {0, 0, 0}; }
ModularHeisenberg modular_heisenberg_identity(const BigInt& k);

// commutator a^{-1} b^{-1} a b; always central for this group
template <typename Ring>
HeisenbergElement<Ring> commutator(const HeisenbergElement<Ring>& a,
                                   const HeisenbergElement<Ring>& b) {
    return a.inverse() * b.inverse() * a * b;
}

// coordinatewise ring homomorphism onto the mod-k quotient (k odd)
ModularHeisenberg heisenberg_mod(const DyadicHeisenberg& g, const BigInt& k);

// the automorphism (x,y,z) -> (2x, y/2, z) and its powers
DyadicHeisenberg beta(const DyadicHeisenberg& g);
DyadicHeisenberg beta_inverse(const DyadicHeisenberg& g);
DyadicHeisenberg beta_power(const DyadicHeisenberg& g, long m);

// Element (g, m) of the extension by the automorphism beta:
// (g, m)(g', m') = (g * beta^m(g'), m + m').
struct SemidirectElement {
    DyadicHeisenberg g;
    long m = 0;

    static SemidirectElement identity() { return {dyadic_heisenberg_identity(), 0}; }

    friend SemidirectElement operator*(const SemidirectElement& a, const SemidirectElement& b) {
        return {a.g * beta_power(b.g, a.m), a.m + b.m};
    }

    SemidirectElement inverse() const { return {beta_power(g.inverse(), -m), -m}; }

    std::string str() const { return g.str() + "*t^" + std::to_string(m); }

    friend bool operator==(const SemidirectElement& a, const SemidirectElement& b) {
        return a.g == b.g && a.m == b.m;
    }
    friend bool operator!=(const SemidirectElement& a, const SemidirectElement& b) {
        return !(a == b);
    }
};

}  // namespace solrep
