#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "solrep/bigint.hpp"

namespace solrep {

// Point of the inverse limit of circle doubling: a compatible sequence of angles
// theta_0, theta_1, ... in [0,1) with theta_n = 2*theta_{n+1} mod 1.
//
// Exact form: theta_0 = num/den with den odd, 0 <= num < den, gcd(num, den) = 1
// (or num = 0, den = 1); then theta_n = num * inv(2^n mod den) / den mod 1.
// Truncated form: a finite consistent prefix theta_0..theta_K; every statement about
// such a point carries the tail slack 2^{-K-1}.
class SolenoidPoint {
public:
    struct Exact {
        BigInt num;
        BigInt den;
    };
    struct Truncated {
        std::vector<double> prefix;
    };

    static SolenoidPoint exact(BigInt num, BigInt den);
    static SolenoidPoint identity() { return exact(0, 1); }
    // validates theta_n = 2*theta_{n+1} mod 1 within consistency_tol
    static SolenoidPoint truncated(std::vector<double> prefix, double consistency_tol = 1e-9);

    bool is_exact() const { return std::holds_alternative<Exact>(form_); }
    const Exact& exact_form() const;
    const Truncated& truncated_form() const;

    // largest coordinate index available (Exact: unbounded)
    bool has_coordinate(unsigned n) const;
    unsigned max_coordinate() const;  // Truncated: K; throws for Exact

    BigRat angle_rational(unsigned n) const;  // Truncated doubles convert exactly
    double angle(unsigned n) const;
    double tail_bound() const;  // Exact: 0, Truncated: 2^{-K-1}

    std::string str() const;

    friend bool operator==(const SolenoidPoint& a, const SolenoidPoint& b);
    friend bool operator!=(const SolenoidPoint& a, const SolenoidPoint& b) { return !(a == b); }
    // canonical order, used to keep measure atom lists deterministic
    friend bool operator<(const SolenoidPoint& a, const SolenoidPoint& b);

private:
    explicit SolenoidPoint(std::variant<Exact, Truncated> form) : form_(std::move(form)) {}
    std::variant<Exact, Truncated> form_;
};

// the shift automorphism (coordinatewise squaring): angles (t_0, t_1, ...) -> (2*t_0, t_0, t_1, ...)
SolenoidPoint shift_forward(const SolenoidPoint& p);
// its inverse: drop the head angle; throws when a truncated prefix is exhausted
SolenoidPoint shift_backward(const SolenoidPoint& p);
SolenoidPoint shift(const SolenoidPoint& p, long n);  // n-fold, either direction

// whether the forward shift has period dividing N (Exact only: den | 2^N - 1)
bool is_periodic(const SolenoidPoint& p, unsigned N);

// smallest N >= 1 with den | 2^N - 1; throws std::domain_error beyond the cap
unsigned minimal_period(const SolenoidPoint& p, unsigned cap = 1u << 20);

// Certified enclosure of the metric rho(a,b) = sum_n 2^{-n} d(theta_n(a), theta_n(b)),
// d = arc distance on the circle (range [0,1/2]).  The enclosure is
// [partial sum to depth T, partial sum + 2^{-T-1}]; truncated inputs cap T at their
// prefix length.
struct RhoBounds {
    BigRat lower;
    BigRat upper;
    double upper_double() const { return upper.convert_to<double>(); }
};
RhoBounds rho_bounds(const SolenoidPoint& a, const SolenoidPoint& b, unsigned depth = 96);

// Exact value of rho via one period of the coordinate distance sequence
// (period = ord_2 mod lcm of the denominators; throws beyond period_cap).
BigRat rho_exact(const SolenoidPoint& a, const SolenoidPoint& b, unsigned period_cap = 1u << 20);

// convenience double upper bound
double rho(const SolenoidPoint& a, const SolenoidPoint& b);

// Nearest point whose shift period divides 2N+1: with m = 2^{2N+1}-1, round
// theta_N * m to the nearest integer j (ties toward zero) and rebuild the unique
// m-denominator point through coordinate N.  Guarantees rho(p, result) <= (7/3) 2^{-N};
// inputs already of denominator dividing m are returned unchanged.
SolenoidPoint nearest_periodic(const SolenoidPoint& p, unsigned N);

}  // namespace solrep
