#include "solrep/heisenberg.hpp"

namespace solrep {

ModularHeisenberg modular_heisenberg_identity(const BigInt& k) {
    return {ModularResidue(0, k), ModularResidue(0, k), ModularResidue(0, k)};
}

ModularHeisenberg heisenberg_mod(const DyadicHeisenberg& g, const BigInt& k) {
    return {reduce_mod(g.x, k), reduce_mod(g.y, k), reduce_mod(g.z, k)};
}

DyadicHeisenberg beta(const DyadicHeisenberg& g) { return {g.x.doubled(), g.y.halved(), g.z}; }

DyadicHeisenberg beta_inverse(const DyadicHeisenberg& g) {
    return {g.x.halved(), g.y.doubled(), g.z};
}

DyadicHeisenberg beta_power(const DyadicHeisenberg& g, long m) {
    if (m == 0) return g;
    unsigned n = static_cast<unsigned>(m > 0 ? m : -m);
    if (m > 0) return {g.x.doubled(n), g.y.halved(n), g.z};
    return {g.x.halved(n), g.y.doubled(n), g.z};
}

}  // namespace solrep
