#pragma once

#include <vector>

#include "solrep/dyadic.hpp"

namespace solrep {

// Classification of a subgroup of the dyadic rationals given by finitely many
// generators, optionally closed under halving.
//
// Without the halving closure the subgroup is cyclic and `generator` is its least
// positive element.  With the closure the subgroup equals k0 * Z[1/2] for a unique
// odd positive integer k0, returned in `generator` (kind FullScaled).
struct DyadicSubgroup {
    enum class Kind { Cyclic, FullScaled };
    Kind kind;
    DyadicRational generator;

    friend bool operator==(const DyadicSubgroup& a, const DyadicSubgroup& b) {
        return a.kind == b.kind && a.generator == b.generator;
    }
};

DyadicSubgroup classify_subgroup(const std::vector<DyadicRational>& generators,
                                 bool closed_under_halving);

}  // namespace solrep
