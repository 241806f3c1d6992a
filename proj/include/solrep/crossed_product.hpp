#pragma once

#include <Eigen/Dense>
#include <complex>
#include <vector>

#include "solrep/clock_shift.hpp"
#include "solrep/heisenberg.hpp"

namespace solrep {

// Representation of the extension of the dyadic Heisenberg group by the
// doubling automorphism, built from a k-dimensional fiber representation rho
// whose spectrum has period dividing n and a corner unitary V implementing
// rho(beta^n g) = V rho(g) V^*:
//   fiber_block(g) = diag(rho(g), rho(beta g), ..., rho(beta^{n-1} g)),
//   implementing_unitary() = block cyclic shift with V in the lower-left corner,
//   matrix((g, m)) = fiber_block(g) * implementing_unitary()^m.
class CrossedProductRep {
public:
    long period() const { return n_; }
    long fiber_dimension() const { return fiber_.dimension(); }
    long dimension() const { return n_ * fiber_.dimension(); }
    const HeisenbergFiberRep& fiber() const { return fiber_; }
    const Eigen::MatrixXcd& corner() const { return corner_; }

    Eigen::MatrixXcd fiber_block(const DyadicHeisenberg& g) const;
    Eigen::MatrixXcd implementing_unitary() const;
    Eigen::MatrixXcd matrix(const SemidirectElement& s) const;

    UnitaryRep to_unitary_rep() const;  // generators "x", "y", "z", "u"

private:
    friend CrossedProductRep build_crossed_rep(const HeisenbergFiberRep& fiber, long n,
                                               Eigen::MatrixXcd corner, double tol);
    CrossedProductRep(HeisenbergFiberRep fiber, long n, Eigen::MatrixXcd corner)
        : fiber_(std::move(fiber)), n_(n), corner_(std::move(corner)) {}

    HeisenbergFiberRep fiber_;
    long n_;
    Eigen::MatrixXcd corner_;
};

// Validates the corner (unitarity, the conjugation relation on a generator
// window, spectrum period dividing n) and assembles the crossed-product
// representation.  The output satisfies U D(g) U^* = D(beta g) by construction.
CrossedProductRep build_crossed_rep(const HeisenbergFiberRep& fiber, long n,
                                    Eigen::MatrixXcd corner, double tol = 1e-10);

// End-to-end construction at level k: picks a spectrum point whose period
// divides n (denominator = the largest divisor of 2^n - 1 coprime to k),
// builds the fiber at the given central character, solves for the corner
// unitary on the standard generator window, and assembles the crossed product.
CrossedProductRep semidirect_rep_pipeline(const BigInt& k, long n, const SolenoidPoint& central);

// The invariant trace that vanishes off the fiber: (g, m) maps to 0 for m != 0
// and to the average of the fiber trace over the beta-orbit of g for m = 0.
// Matches the normalized trace of the crossed-product matrices for |m| < n.
std::complex<double> trivial_extension_trace(const HeisenbergFiberRep& fiber, long n,
                                             const SemidirectElement& s);

// default verification window: coordinates in {0, +-1, +-1/2}, |m| <= m_max
std::vector<DyadicHeisenberg> heisenberg_coordinate_window();
std::vector<SemidirectElement> semidirect_window(long m_max = 2);

}  // namespace solrep
