#pragma once

#include <Eigen/Dense>
#include <complex>

#include "solrep/cocycle.hpp"
#include "solrep/heisenberg.hpp"
#include "solrep/roots.hpp"
#include "solrep/unitary_rep.hpp"

namespace solrep {

// diag(zeta^0, zeta^1, ..., zeta^{k-1})
Eigen::MatrixXcd clock_matrix(long k, const RootOfUnity& zeta);
// cyclic shift S e_j = e_{(j-1) mod k}; satisfies S * clock(zeta) = zeta * clock(zeta) * S
Eigen::MatrixXcd shift_matrix(long k);

// The k-dimensional representation of the mod-k Heisenberg group:
// pi(x,y,z) = omega^z * C_omega^y * S^x.  Exactly multiplicative whenever the
// order of omega divides k; the normalized trace is omega^z on elements with
// x = 0 and omega^y = 1, and 0 otherwise.
class FiniteHeisenbergRep {
public:
    const BigInt& level() const { return k_; }
    const RootOfUnity& central_phase() const { return omega_; }

    Eigen::MatrixXcd matrix(const ModularHeisenberg& g) const;
    std::complex<double> trace_value(const ModularHeisenberg& g) const;  // closed form

    UnitaryRep to_unitary_rep() const;  // generators "x", "y", "z"

private:
    friend FiniteHeisenbergRep heisenberg_rep(const BigInt& k, const RootOfUnity& omega);
    BigInt k_;
    long dim_ = 1;
    RootOfUnity omega_;
};

FiniteHeisenbergRep heisenberg_rep(const BigInt& k, const RootOfUnity& omega);

// A point of the spectrum of the level-k twisted pair algebra: a pair of
// characters of k*Z[1/2], each encoded as a solenoid point under the relabeling
// t -> kt (see scale_relabel).
struct SpectrumPoint {
    SolenoidPoint first = SolenoidPoint::identity();
    SolenoidPoint second = SolenoidPoint::identity();
    BigInt level = 1;
};

SpectrumPoint identity_spectrum(const BigInt& k);

// The k-dimensional twisted representation of Z[1/2]^2 at odd level k:
//   u_g  ->  e1(g1) * e2(g2) * omega^{-r1*r2} * C_zeta^{r1} * S^{r2},
// with (r1, r2) the mod-k residues of g, omega the value of the twisting
// character at 1, zeta = omega^{-2}, and e1, e2 the extension characters
// carrying the spectrum point.  Satisfies
//   u_g u_h = cocycle(g,h) * u_{g+h},  cocycle(g,h) = chi(g1 h2 - g2 h1).
class TwistedPairRep {
public:
    const BigInt& level() const { return k_; }
    const DyadicCharacter& twisting_character() const { return chi_; }
    const DyadicCharacter& extension_first() const { return e1_; }
    const DyadicCharacter& extension_second() const { return e2_; }

    // exact scalar in front of the clock/shift word
    RootOfUnity phase(const DyadicPair& g) const;
    Eigen::MatrixXcd matrix(const DyadicPair& g) const;

    // generators u_{(1/2^n, 0)}, u_{(0, 1/2^n)} for n = 0..depth
    UnitaryRep to_unitary_rep(unsigned depth = 6) const;

private:
    friend TwistedPairRep clock_shift_rep(const BigInt& k, const RootOfUnity& central_phase,
                                          const SpectrumPoint& spectrum);
    friend class HeisenbergFiberRep;
    TwistedPairRep() = default;

    BigInt k_;
    long dim_ = 1;
    RootOfUnity omega_;  // chi(1)
    RootOfUnity zeta_;   // omega^{-2}
    DyadicCharacter chi_;
    DyadicCharacter e1_, e2_;
};

TwistedPairRep clock_shift_rep(const BigInt& k, const RootOfUnity& central_phase,
                               const SpectrumPoint& spectrum);

// The k-dimensional representation of the dyadic Heisenberg group with central
// character chi (kernel k*Z[1/2]) and prescribed spectrum point:
//   rho(x,y,z) = chi(z) * chi'(-xy) * W(x,y)
// where chi' = chi composed with halving and W is the chi'-twisted pair
// representation above.  Exactly multiplicative; the normalized trace vanishes
// unless both mod-k residues of (x, y) are zero.
class HeisenbergFiberRep {
public:
    const BigInt& level() const { return k_; }
    long dimension() const { return twisted_.dim_; }
    const DyadicCharacter& central_character() const { return chi_; }
    const SpectrumPoint& spectrum() const { return spectrum_; }
    const TwistedPairRep& twisted_part() const { return twisted_; }

    RootOfUnity phase(const DyadicHeisenberg& g) const;  // scalar in front of clock/shift
    Eigen::MatrixXcd matrix(const DyadicHeisenberg& g) const;
    std::complex<double> trace_value(const DyadicHeisenberg& g) const;  // closed form

    UnitaryRep to_unitary_rep(unsigned depth = 2) const;  // images of coordinate generators

private:
    friend HeisenbergFiberRep heisenberg_fiber_rep(const SolenoidPoint& central,
                                                   const SpectrumPoint& spectrum);
    BigInt k_;
    DyadicCharacter chi_;   // central character
    DyadicCharacter half_;  // chi composed with halving
    TwistedPairRep twisted_;
    SpectrumPoint spectrum_;
};

HeisenbergFiberRep heisenberg_fiber_rep(const SolenoidPoint& central,
                                        const SpectrumPoint& spectrum);

}  // namespace solrep
