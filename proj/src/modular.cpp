#include "solrep/modular.hpp"

#include <stdexcept>

namespace solrep {

ModularResidue::ModularResidue(BigInt value, BigInt modulus) : modulus_(std::move(modulus)) {
    if (modulus_ < 1 || (modulus_ & 1) == 0)
        throw std::invalid_argument("ModularResidue(): modulus must be odd and positive");
    value_ = value % modulus_;
    if (value_ < 0) value_ += modulus_;
}

ModularResidue operator+(const ModularResidue& a, const ModularResidue& b) {
    if (a.modulus_ != b.modulus_)
        throw std::invalid_argument("ModularResidue: modulus mismatch");
    return ModularResidue(a.value_ + b.value_, a.modulus_);
}

ModularResidue operator-(const ModularResidue& a, const ModularResidue& b) {
    if (a.modulus_ != b.modulus_)
        throw std::invalid_argument("ModularResidue: modulus mismatch");
    return ModularResidue(a.value_ - b.value_, a.modulus_);
}

ModularResidue operator*(const ModularResidue& a, const ModularResidue& b) {
    if (a.modulus_ != b.modulus_)
        throw std::invalid_argument("ModularResidue: modulus mismatch");
    return ModularResidue(a.value_ * b.value_, a.modulus_);
}

ModularResidue ModularResidue::pow(const BigInt& e) const {
    if (e < 0) return inverse().pow(-e);
    if (modulus_ == 1) return ModularResidue(0, modulus_);
    return ModularResidue(BigInt(boost::multiprecision::powm(value_, e, modulus_)), modulus_);
}

ModularResidue ModularResidue::inverse() const {
    return ModularResidue(mod_inverse(value_, modulus_), modulus_);
}

ModularResidue ModularResidue::half() const {
    // inv(2) mod k = (k+1)/2 for odd k
    return ModularResidue(value_ * ((modulus_ + 1) >> 1), modulus_);
}

BigInt egcd(const BigInt& a, const BigInt& b, BigInt& x, BigInt& y) {
    BigInt old_r = a, r = b;
    BigInt old_x = 1, cur_x = 0;
    BigInt old_y = 0, cur_y = 1;
    while (r != 0) {
        BigInt q = old_r / r;
        BigInt tmp = old_r - q * r;
        old_r = r;
        r = tmp;
        tmp = old_x - q * cur_x;
        old_x = cur_x;
        cur_x = tmp;
        tmp = old_y - q * cur_y;
        old_y = cur_y;
        cur_y = tmp;
    }
    if (old_r < 0) {
        old_r = -old_r;
        old_x = -old_x;
        old_y = -old_y;
    }
    x = old_x;
    y = old_y;
    return old_r;
}

BigInt mod_inverse(const BigInt& a, const BigInt& m) {
    if (m == 1) return 0;
    BigInt x, y;
    BigInt g = egcd(a % m, m, x, y);
    if (g != 1) throw std::domain_error("mod_inverse(): inverse does not exist");
    x %= m;
    if (x < 0) x += m;
    return x;
}

ModularResidue reduce_mod(const DyadicRational& x, const BigInt& odd_modulus) {
    ModularResidue num(x.numerator(), odd_modulus);
    if (x.exponent() == 0) return num;
    // multiply by inv(2)^exp; (k+1)/2 is inv(2) mod k
    ModularResidue inv2((odd_modulus + 1) >> 1, odd_modulus);
    return num * inv2.pow(x.exponent());
}

}  // namespace solrep
