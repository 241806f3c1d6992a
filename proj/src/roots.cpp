#include "solrep/roots.hpp"

#include <numbers>
#include <stdexcept>

namespace solrep {

RootOfUnity::RootOfUnity(BigInt index, BigInt order) : order_(std::move(order)) {
    if (order_ < 1) throw std::invalid_argument("RootOfUnity(): order must be positive");
    index_ = index % order_;
    if (index_ < 0) index_ += order_;
    BigInt g = big_gcd(index_, order_);
    if (g > 1) {
        index_ /= g;
        order_ /= g;
    }
    if (index_ == 0) order_ = 1;
}

RootOfUnity operator*(const RootOfUnity& a, const RootOfUnity& b) {
    BigInt order = big_lcm(a.order_, b.order_);
    return RootOfUnity(a.index_ * (order / a.order_) + b.index_ * (order / b.order_), order);
}

RootOfUnity RootOfUnity::inverse() const {
    return RootOfUnity(order_ - index_, order_);
}

RootOfUnity RootOfUnity::pow(const BigInt& e) const {
    return RootOfUnity(index_ * e, order_);
}

std::complex<double> RootOfUnity::value() const {
    double angle = 2.0 * std::numbers::pi * BigRat(index_, order_).convert_to<double>();
    return {std::cos(angle), std::sin(angle)};
}

}  // namespace solrep
