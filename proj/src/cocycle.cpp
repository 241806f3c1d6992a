#include "solrep/cocycle.hpp"

#include <stdexcept>

#include "solrep/modular.hpp"

namespace solrep {

DyadicCharacter::DyadicCharacter(SolenoidPoint point) : point_(std::move(point)) {
    if (!point_.is_exact())
        throw std::invalid_argument("DyadicCharacter: point must be exact");
}

DyadicCharacter DyadicCharacter::from_phase(const RootOfUnity& omega) {
    if ((omega.order() & 1) == 0)
        throw std::invalid_argument("DyadicCharacter::from_phase(): order must be odd");
    return DyadicCharacter(SolenoidPoint::exact(omega.index(), omega.order()));
}

const BigInt& DyadicCharacter::kernel_scale() const { return point_.exact_form().den; }

bool DyadicCharacter::is_trivial() const { return kernel_scale() == 1; }

RootOfUnity DyadicCharacter::operator()(const DyadicRational& t) const {
    const auto& e = point_.exact_form();
    ModularResidue r = reduce_mod(t, e.den);
    return RootOfUnity(BigInt(e.num * r.value()), e.den);
}

DyadicCharacter DyadicCharacter::composed_half() const {
    return DyadicCharacter(shift_backward(point_));
}

DyadicCharacter DyadicCharacter::composed_double(long i) const {
    return DyadicCharacter(shift(point_, i));
}

DyadicRational symplectic_form(const DyadicPair& g, const DyadicPair& h) {
    return g.first * h.second - g.second * h.first;
}

RootOfUnity twisting_cocycle(const DyadicCharacter& chi, const DyadicPair& g,
                             const DyadicPair& h) {
    return chi(symplectic_form(g, h));
}

}  // namespace solrep
