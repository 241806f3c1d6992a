#include "solrep/dyadic.hpp"

#include <stdexcept>

namespace solrep {

DyadicRational::DyadicRational(BigInt numerator, unsigned exponent)
    : num_(std::move(numerator)), exp_(exponent) {
    normalize();
}

void DyadicRational::normalize() {
    if (num_ == 0) {
        exp_ = 0;
        return;
    }
    while (exp_ > 0 && (num_ & 1) == 0) {
        num_ >>= 1;
        --exp_;
    }
}

DyadicRational DyadicRational::from_rational(const BigRat& q) {
    BigInt den = boost::multiprecision::denominator(q);
    unsigned exp = 0;
    while ((den & 1) == 0) {
        den >>= 1;
        ++exp;
    }
    if (den != 1)
        throw std::invalid_argument("DyadicRational::from_rational(): denominator is not a power of two");
    return DyadicRational(boost::multiprecision::numerator(q), exp);
}

BigRat DyadicRational::rational() const {
    return BigRat(num_, pow2(exp_));
}

double DyadicRational::to_double() const {
    return rational().convert_to<double>();
}

std::string DyadicRational::str() const {
    if (exp_ == 0) return num_.str();
    return num_.str() + "/" + pow2(exp_).str();
}

DyadicRational DyadicRational::doubled(unsigned n) const {
    if (exp_ >= n) return DyadicRational(num_, exp_ - n);
    return DyadicRational(num_ << (n - exp_), 0);
}

DyadicRational operator+(const DyadicRational& a, const DyadicRational& b) {
    unsigned exp = std::max(a.exp_, b.exp_);
    return DyadicRational((a.num_ << (exp - a.exp_)) + (b.num_ << (exp - b.exp_)), exp);
}

DyadicRational operator-(const DyadicRational& a, const DyadicRational& b) {
    return a + (-b);
}

DyadicRational operator*(const DyadicRational& a, const DyadicRational& b) {
    return DyadicRational(a.num_ * b.num_, a.exp_ + b.exp_);
}

bool operator<(const DyadicRational& a, const DyadicRational& b) {
    unsigned exp = std::max(a.exp_, b.exp_);
    return (a.num_ << (exp - a.exp_)) < (b.num_ << (exp - b.exp_));
}

DyadicRational parse_dyadic(const std::string& text) {
    auto slash = text.find('/');
    if (slash == std::string::npos) return DyadicRational(BigInt(text), 0);
    BigInt num(text.substr(0, slash));
    std::string den_part = text.substr(slash + 1);
    BigInt den;
    auto caret = den_part.find('^');
    if (caret != std::string::npos) {
        if (den_part.substr(0, caret) != "2")
            throw std::invalid_argument("parse_dyadic(): denominator base must be 2 in '" + text + "'");
        den = pow2(static_cast<unsigned>(std::stoul(den_part.substr(caret + 1))));
    } else {
        den = BigInt(den_part);
    }
    if (den <= 0) throw std::invalid_argument("parse_dyadic(): denominator must be positive in '" + text + "'");
    return DyadicRational::from_rational(BigRat(num, den));
}

}  // namespace solrep
