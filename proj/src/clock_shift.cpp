#include "solrep/clock_shift.hpp"

#include <stdexcept>

#include "solrep/measures.hpp"
#include "solrep/modular.hpp"

namespace solrep {

namespace {

constexpr long kMaxDenseLevel = 4096;

long checked_level(const BigInt& k, const char* where) {
    if (k < 1 || k % 2 == 0)
        throw std::invalid_argument(std::string(where) + "(): level must be odd and positive");
    if (k > kMaxDenseLevel)
        throw std::invalid_argument(std::string(where) + "(): level too large for dense matrices");
    return k.convert_to<long>();
}

}  // namespace

Eigen::MatrixXcd clock_matrix(long k, const RootOfUnity& zeta) {
    if (k < 1) throw std::invalid_argument("clock_matrix(): dimension must be positive");
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(k, k);
    for (long j = 0; j < k; ++j) m(j, j) = zeta.pow(j).value();
    return m;
}

Eigen::MatrixXcd shift_matrix(long k) {
    if (k < 1) throw std::invalid_argument("shift_matrix(): dimension must be positive");
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(k, k);
    for (long j = 0; j < k; ++j) m((j + k - 1) % k, j) = 1.0;
    return m;
}

Eigen::MatrixXcd FiniteHeisenbergRep::matrix(const ModularHeisenberg& g) const {
    if (g.x.modulus() != k_)
        throw std::invalid_argument("FiniteHeisenbergRep::matrix(): element modulus mismatch");
    long x = g.x.value().convert_to<long>();
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(dim_, dim_);
    for (long j = 0; j < dim_; ++j) {
        long row = (j + dim_ - x) % dim_;
        BigInt e = g.z.value() + BigInt(row) * g.y.value();
        m(row, j) = omega_.pow(e).value();
    }
    return m;
}

std::complex<double> FiniteHeisenbergRep::trace_value(const ModularHeisenberg& g) const {
    if (g.x.modulus() != k_)
        throw std::invalid_argument("FiniteHeisenbergRep::trace_value(): element modulus mismatch");
    if (!g.x.is_zero()) return 0.0;
    if (!omega_.pow(g.y.value()).is_one()) return 0.0;
    return omega_.pow(g.z.value()).value();
}

UnitaryRep FiniteHeisenbergRep::to_unitary_rep() const {
    UnitaryRep rep(static_cast<int>(dim_));
    ModularResidue zero(0, k_), one(1, k_);
    rep.set_generator("x", matrix({one, zero, zero}));
    rep.set_generator("y", matrix({zero, one, zero}));
    rep.set_generator("z", matrix({zero, zero, one}));
    return rep;
}

FiniteHeisenbergRep heisenberg_rep(const BigInt& k, const RootOfUnity& omega) {
    FiniteHeisenbergRep rep;
    rep.dim_ = checked_level(k, "heisenberg_rep");
    rep.k_ = k;
    if (k % omega.order() != 0)
        throw std::invalid_argument("heisenberg_rep(): central phase order must divide the level");
    rep.omega_ = omega;
    return rep;
}

SpectrumPoint identity_spectrum(const BigInt& k) {
    return {SolenoidPoint::identity(), SolenoidPoint::identity(), k};
}

RootOfUnity TwistedPairRep::phase(const DyadicPair& g) const {
    BigInt r1 = reduce_mod(g.first, k_).value();
    BigInt r2 = reduce_mod(g.second, k_).value();
    return e1_(g.first) * e2_(g.second) * omega_.pow(-BigInt(r1 * r2));
}

Eigen::MatrixXcd TwistedPairRep::matrix(const DyadicPair& g) const {
    long r1 = reduce_mod(g.first, k_).value().convert_to<long>();
    long r2 = reduce_mod(g.second, k_).value().convert_to<long>();
    RootOfUnity ph = phase(g);
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(dim_, dim_);
    for (long j = 0; j < dim_; ++j) {
        long row = (j + dim_ - r2) % dim_;
        m(row, j) = (ph * zeta_.pow(BigInt(r1) * BigInt(row))).value();
    }
    return m;
}

UnitaryRep TwistedPairRep::to_unitary_rep(unsigned depth) const {
    UnitaryRep rep(static_cast<int>(dim_));
    for (unsigned n = 0; n <= depth; ++n) {
        DyadicRational h = DyadicRational::half_power(n);
        DyadicPair a{h, DyadicRational()};
        DyadicPair b{DyadicRational(), h};
        rep.set_generator("u" + a.str(), matrix(a));
        rep.set_generator("u" + b.str(), matrix(b));
    }
    return rep;
}

TwistedPairRep clock_shift_rep(const BigInt& k, const RootOfUnity& central_phase,
                               const SpectrumPoint& spectrum) {
    TwistedPairRep rep;
    rep.dim_ = checked_level(k, "clock_shift_rep");
    rep.k_ = k;
    if (k % central_phase.order() != 0)
        throw std::invalid_argument("clock_shift_rep(): central phase order must divide the level");
    if (spectrum.level != k)
        throw std::invalid_argument("clock_shift_rep(): spectrum level mismatch");
    rep.omega_ = central_phase;
    rep.zeta_ = central_phase.pow(-2);
    rep.chi_ = DyadicCharacter::from_phase(central_phase);
    rep.e1_ = DyadicCharacter(scale_relabel(spectrum.first, k));
    rep.e2_ = DyadicCharacter(scale_relabel(spectrum.second, k));
    return rep;
}

RootOfUnity HeisenbergFiberRep::phase(const DyadicHeisenberg& g) const {
    return chi_(g.z) * half_(-(g.x * g.y)) * twisted_.phase({g.x, g.y});
}

Eigen::MatrixXcd HeisenbergFiberRep::matrix(const DyadicHeisenberg& g) const {
    long r1 = reduce_mod(g.x, k_).value().convert_to<long>();
    long r2 = reduce_mod(g.y, k_).value().convert_to<long>();
    RootOfUnity ph = phase(g);
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(twisted_.dim_, twisted_.dim_);
    for (long j = 0; j < twisted_.dim_; ++j) {
        long row = (j + twisted_.dim_ - r2) % twisted_.dim_;
        m(row, j) = (ph * twisted_.zeta_.pow(BigInt(r1) * BigInt(row))).value();
    }
    return m;
}

std::complex<double> HeisenbergFiberRep::trace_value(const DyadicHeisenberg& g) const {
    if (!reduce_mod(g.x, k_).is_zero()) return 0.0;
    if (!reduce_mod(g.y, k_).is_zero()) return 0.0;
    return phase(g).value();
}

UnitaryRep HeisenbergFiberRep::to_unitary_rep(unsigned depth) const {
    UnitaryRep rep(static_cast<int>(twisted_.dim_));
    DyadicRational zero;
    for (unsigned n = 0; n <= depth; ++n) {
        DyadicRational h = DyadicRational::half_power(n);
        DyadicHeisenberg gx{h, zero, zero}, gy{zero, h, zero}, gz{zero, zero, h};
        rep.set_generator("pi" + gx.str(), matrix(gx));
        rep.set_generator("pi" + gy.str(), matrix(gy));
        rep.set_generator("pi" + gz.str(), matrix(gz));
    }
    return rep;
}

HeisenbergFiberRep heisenberg_fiber_rep(const SolenoidPoint& central,
                                        const SpectrumPoint& spectrum) {
    if (!central.is_exact())
        throw std::invalid_argument("heisenberg_fiber_rep(): central character point must be exact");
    HeisenbergFiberRep rep;
    rep.k_ = central.exact_form().den;
    if (spectrum.level != rep.k_)
        throw std::invalid_argument("heisenberg_fiber_rep(): spectrum level mismatch");
    rep.chi_ = DyadicCharacter(central);
    rep.half_ = rep.chi_.composed_half();
    rep.twisted_ = clock_shift_rep(rep.k_, rep.half_(DyadicRational(1)), spectrum);
    rep.spectrum_ = spectrum;
    return rep;
}

}  // namespace solrep
