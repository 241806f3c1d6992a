#pragma once

#include <functional>
#include <string>
#include <vector>

#include "solrep/solenoid.hpp"

namespace solrep {

// Point of the product of two solenoids (the phase space of the mixed shift).
struct SolenoidPair {
    SolenoidPoint first;
    SolenoidPoint second;

    std::string str() const { return "(" + first.str() + "|" + second.str() + ")"; }

    friend bool operator==(const SolenoidPair& a, const SolenoidPair& b) {
        return a.first == b.first && a.second == b.second;
    }
    friend bool operator!=(const SolenoidPair& a, const SolenoidPair& b) { return !(a == b); }
    friend bool operator<(const SolenoidPair& a, const SolenoidPair& b) {
        if (a.first != b.first) return a.first < b.first;
        return a.second < b.second;
    }
};

// component access shared by single points and pairs
template <typename Point>
struct PointTraits;

template <>
struct PointTraits<SolenoidPoint> {
    static constexpr int kComponents = 1;
    static const SolenoidPoint& component(const SolenoidPoint& p, int) { return p; }
    static SolenoidPoint nearest(const SolenoidPoint& p, unsigned N) {
        return nearest_periodic(p, N);
    }
    static std::string label(const SolenoidPoint& p) { return p.str(); }
};

template <>
struct PointTraits<SolenoidPair> {
    static constexpr int kComponents = 2;
    static const SolenoidPoint& component(const SolenoidPair& p, int c) {
        return c == 0 ? p.first : p.second;
    }
    static SolenoidPair nearest(const SolenoidPair& p, unsigned N);
    static std::string label(const SolenoidPair& p) { return p.str(); }
};

// componentwise periodic approximation at the common period 2N+1
SolenoidPair product_periodic(const SolenoidPair& p, unsigned N);

// Finitely supported probability measure.  Atom order is kept canonical
// (sorted, duplicates merged) so that reports and float summation are deterministic.
template <typename Point>
struct FiniteMeasure {
    std::vector<std::pair<Point, double>> atoms;

    void validate(double weight_tol = 1e-12) const;
    void canonicalize();  // sort atoms, merge equal points, drop zero weights
};

using PointMeasure = FiniteMeasure<SolenoidPoint>;
using PairMeasure = FiniteMeasure<SolenoidPair>;

// invertible dynamics on the space of `Point`, with a Lipschitz bound valid for
// the map and its inverse
template <typename Point>
struct DynamicalSystem {
    std::string name;
    double lipschitz;
    std::function<Point(const Point&)> forward;
    std::function<Point(const Point&)> backward;
};

DynamicalSystem<SolenoidPoint> doubling_system();   // shift_forward
DynamicalSystem<SolenoidPoint> halving_system();    // shift_backward
DynamicalSystem<SolenoidPair> pair_mixed_system();  // shift_forward x shift_backward

template <typename Point>
Point iterate(const DynamicalSystem<Point>& sys, Point p, long n) {
    for (; n > 0; --n) p = sys.forward(p);
    for (; n < 0; ++n) p = sys.backward(p);
    return p;
}

// Trigonometric test function: a product of at most two factors
// cos/sin(2 pi h * theta_n(component)).  The Lipschitz constant with respect to rho
// (sum metric on pairs) is the sum of the factor constants 2 pi h 2^n, using
// |cos/sin| <= 1 for the product splitting.
struct TestFunction {
    struct Factor {
        bool cosine;
        int component;        // 0 = first/only, 1 = second
        unsigned coordinate;  // angle index n
        unsigned harmonic;    // h >= 1

        double lipschitz() const;
        double evaluate(double theta) const;
        std::string label() const;
    };

    std::vector<Factor> factors;  // size 1 or 2

    double lipschitz() const;
    double operator()(const SolenoidPoint& p) const;
    double operator()(const SolenoidPair& p) const;
    std::string label() const;
};

// documented default families used by discrepancy checks and reports:
// per component {cos,sin} x coordinate 0..4 x harmonic 1..3; the pair family adds
// the 8 cross products {cos,sin}(first,n,1)*{cos,sin}(second,n,1) for n in {0,1}
std::vector<TestFunction> default_solenoid_family();
std::vector<TestFunction> default_pair_family();

template <typename Point>
double integrate(const FiniteMeasure<Point>& mu, const TestFunction& f) {
    double sum = 0.0;
    for (const auto& [p, w] : mu.atoms) sum += w * f(p);
    return sum;
}

template <typename Point>
FiniteMeasure<Point> pushforward(const FiniteMeasure<Point>& mu,
                                 const DynamicalSystem<Point>& sys) {
    FiniteMeasure<Point> out;
    out.atoms.reserve(mu.atoms.size());
    for (const auto& [p, w] : mu.atoms) out.atoms.emplace_back(sys.forward(p), w);
    out.canonicalize();
    return out;
}

// max_f |mu(f) - nu(f)| over the test family; throws on an empty family
template <typename Point>
double discrepancy(const FiniteMeasure<Point>& mu, const FiniteMeasure<Point>& nu,
                   const std::vector<TestFunction>& family);

// uniform measure on the forward orbit; requires iterate(sys, p, period) == p
template <typename Point>
FiniteMeasure<Point> orbit_measure(const Point& p, unsigned period,
                                   const DynamicalSystem<Point>& sys);

struct BirkhoffRow {
    std::string label;
    double lipschitz;
    double measured;
    double bound;
    bool pass;
};

struct AtomCertificate {
    std::string label;
    int component;
    BigRat orbit_sum_upper;  // certified upper bound for sum_{|i|<=N} rho(g^i x, g^i y)
    bool pass;               // 9 * sum^2 <= 392, i.e. sum <= 14 sqrt(2) / 3
};

template <typename Point>
struct DensifyResult {
    FiniteMeasure<Point> output;
    unsigned n = 0;
    unsigned period = 0;
    double invariance_slack = 0.0;
    std::vector<AtomCertificate> certificates;
    std::vector<BirkhoffRow> birkhoff;
    bool certified = false;  // all certificates and Birkhoff rows pass
};

// Replace every atom by the uniform orbit measure of its nearest (2N+1)-periodic
// point.  Requires the input to be invariant within `slack` over the family.
// Certifies the per-component orbit sums in exact arithmetic and reports the
// measured Birkhoff discrepancy per family member against K * (14 sqrt 2 / 3)/(2N+1).
template <typename Point>
DensifyResult<Point> densify(const FiniteMeasure<Point>& mu, const DynamicalSystem<Point>& sys,
                             unsigned N, double slack = 1e-9,
                             const std::vector<TestFunction>& family = {});

// relabeling along the dual of multiplication by odd k: angle j/d -> j*inv(k mod d)/d;
// requires gcd(k, d) = 1 and an exact point
SolenoidPoint scale_relabel(const SolenoidPoint& p, const BigInt& k);

// atom-wise relabeling of a pair measure; commutes with the product dynamics
PairMeasure scaled_embedding(const PairMeasure& mu, const BigInt& k);

}  // namespace solrep
