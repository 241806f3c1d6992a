#pragma once

#include "solrep/bigint.hpp"
#include "solrep/dyadic.hpp"

namespace solrep {

// Residue in Z/kZ for odd k >= 1.  Value is kept in [0, k).
class ModularResidue {
public:
    ModularResidue(BigInt value, BigInt modulus);

    const BigInt& value() const { return value_; }
    const BigInt& modulus() const { return modulus_; }
    bool is_zero() const { return value_ == 0; }

    friend ModularResidue operator+(const ModularResidue& a, const ModularResidue& b);
    friend ModularResidue operator-(const ModularResidue& a, const ModularResidue& b);
    friend ModularResidue operator*(const ModularResidue& a, const ModularResidue& b);
    ModularResidue operator-() const { return ModularResidue(modulus_ - value_, modulus_); }

    ModularResidue pow(const BigInt& e) const;  // negative e via inverse
    ModularResidue inverse() const;             // throws if gcd(value, modulus) != 1

    // the unique s with s + s == *this (modulus odd makes doubling a bijection)
    ModularResidue half() const;

    friend bool operator==(const ModularResidue& a, const ModularResidue& b) {
        return a.modulus_ == b.modulus_ && a.value_ == b.value_;
    }
    friend bool operator!=(const ModularResidue& a, const ModularResidue& b) { return !(a == b); }

private:
    BigInt value_;
    BigInt modulus_;
};

// extended gcd: returns g = gcd(a, b) and x, y with a*x + b*y = g
BigInt egcd(const BigInt& a, const BigInt& b, BigInt& x, BigInt& y);

// inverse of a modulo m; throws std::domain_error if it does not exist
BigInt mod_inverse(const BigInt& a, const BigInt& m);

// the ring homomorphism Z[1/2] -> Z/kZ for odd k: a/2^n -> a * inv(2^n) mod k.
// For 0 < a < k the image of a/2^n is never zero.
ModularResidue reduce_mod(const DyadicRational& x, const BigInt& odd_modulus);

}  // namespace solrep
