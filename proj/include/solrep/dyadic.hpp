#pragma once

#include <string>

#include "solrep/bigint.hpp"

namespace solrep {

// Element of the ring of dyadic rationals: num / 2^exp.
// Canonical form: exp == 0, or num is odd.  Zero is stored as (0, 0).
class DyadicRational {
public:
    DyadicRational() : num_(0), exp_(0) {}
    DyadicRational(BigInt integer) : num_(std::move(integer)), exp_(0) {}  // NOLINT: implicit from integers
    DyadicRational(int integer) : num_(integer), exp_(0) {}                // NOLINT
    DyadicRational(BigInt numerator, unsigned exponent);

    // from a rational whose denominator is a power of two; throws otherwise
    static DyadicRational from_rational(const BigRat& q);

    // 1 / 2^n
    static DyadicRational half_power(unsigned n) { return DyadicRational(1, n); }

    const BigInt& numerator() const { return num_; }
    unsigned exponent() const { return exp_; }

    bool is_zero() const { return num_ == 0; }
    bool is_integer() const { return exp_ == 0; }
    int sign() const { return num_ == 0 ? 0 : (num_ > 0 ? 1 : -1); }

    BigRat rational() const;
    double to_double() const;
    std::string str() const;

    DyadicRational halved(unsigned n = 1) const { return DyadicRational(num_, exp_ + n); }
    DyadicRational doubled(unsigned n = 1) const;

    friend DyadicRational operator+(const DyadicRational& a, const DyadicRational& b);
    friend DyadicRational operator-(const DyadicRational& a, const DyadicRational& b);
    friend DyadicRational operator*(const DyadicRational& a, const DyadicRational& b);
    DyadicRational operator-() const { return DyadicRational(-num_, exp_); }

    friend bool operator==(const DyadicRational& a, const DyadicRational& b) {
        return a.num_ == b.num_ && a.exp_ == b.exp_;
    }
    friend bool operator!=(const DyadicRational& a, const DyadicRational& b) { return !(a == b); }
    friend bool operator<(const DyadicRational& a, const DyadicRational& b);
    friend bool operator<=(const DyadicRational& a, const DyadicRational& b) { return !(b < a); }
    friend bool operator>(const DyadicRational& a, const DyadicRational& b) { return b < a; }
    friend bool operator>=(const DyadicRational& a, const DyadicRational& b) { return !(a < b); }

private:
    void normalize();

    BigInt num_;
    unsigned exp_;
};

// parse "a", "-a", "a/2^n" or "a/m" with m a power of two (e.g. "3/8", "-1/2")
DyadicRational parse_dyadic(const std::string& text);

}  // namespace solrep
