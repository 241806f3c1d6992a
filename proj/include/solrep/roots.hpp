#pragma once

#include <complex>

#include "solrep/bigint.hpp"

namespace solrep {

// Root of unity e^{2*pi*i * index/order}, stored in lowest terms:
// 0 <= index < order and gcd(index, order) == 1 (index 0 forces order 1).
// Products lift to the lcm of the orders, so arithmetic is exact.
class RootOfUnity {
public:
    RootOfUnity() : index_(0), order_(1) {}
    RootOfUnity(BigInt index, BigInt order);

    static RootOfUnity one() { return RootOfUnity(); }

    const BigInt& index() const { return index_; }
    const BigInt& order() const { return order_; }
    bool is_one() const { return index_ == 0; }

    friend RootOfUnity operator*(const RootOfUnity& a, const RootOfUnity& b);
    RootOfUnity inverse() const;
    RootOfUnity pow(const BigInt& e) const;

    std::complex<double> value() const;

    friend bool operator==(const RootOfUnity& a, const RootOfUnity& b) {
        return a.index_ == b.index_ && a.order_ == b.order_;
    }
    friend bool operator!=(const RootOfUnity& a, const RootOfUnity& b) { return !(a == b); }

private:
    BigInt index_;
    BigInt order_;
};

}  // namespace solrep
