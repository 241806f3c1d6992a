#include "solrep/subgroup.hpp"

#include <stdexcept>

namespace solrep {

DyadicSubgroup classify_subgroup(const std::vector<DyadicRational>& generators,
                                 bool closed_under_halving) {
    unsigned exp = 0;
    bool any_nonzero = false;
    for (const auto& g : generators) {
        if (!g.is_zero()) {
            any_nonzero = true;
            exp = std::max(exp, g.exponent());
        }
    }
    if (!any_nonzero)
        throw std::invalid_argument("classify_subgroup(): generating set is zero");

    // lift everything to a common denominator 2^exp and take the integer gcd
    BigInt g = 0;
    for (const auto& gen : generators) {
        if (gen.is_zero()) continue;
        g = big_gcd(g, gen.numerator() << (exp - gen.exponent()));
    }

    if (!closed_under_halving)
        return {DyadicSubgroup::Kind::Cyclic, DyadicRational(g, exp)};

    // halving closure absorbs all powers of two: the subgroup is (odd part of g) * Z[1/2]
    while ((g & 1) == 0) g >>= 1;
    return {DyadicSubgroup::Kind::FullScaled, DyadicRational(g, 0)};
}

}  // namespace solrep
