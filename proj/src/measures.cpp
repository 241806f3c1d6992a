#include "solrep/measures.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "solrep/modular.hpp"

namespace solrep {

SolenoidPair PointTraits<SolenoidPair>::nearest(const SolenoidPair& p, unsigned N) {
    return product_periodic(p, N);
}

SolenoidPair product_periodic(const SolenoidPair& p, unsigned N) {
    return {nearest_periodic(p.first, N), nearest_periodic(p.second, N)};
}

template <typename Point>
void FiniteMeasure<Point>::validate(double weight_tol) const {
    double sum = 0.0;
    for (const auto& [p, w] : atoms) {
        (void)p;
        if (!(w >= 0.0))
            throw std::invalid_argument("FiniteMeasure::validate(): negative weight");
        sum += w;
    }
    if (std::fabs(sum - 1.0) > weight_tol)
        throw std::invalid_argument("FiniteMeasure::validate(): weights must sum to 1");
}

template <typename Point>
void FiniteMeasure<Point>::canonicalize() {
    std::sort(atoms.begin(), atoms.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    std::vector<std::pair<Point, double>> merged;
    for (auto& [p, w] : atoms) {
        if (!merged.empty() && merged.back().first == p)
            merged.back().second += w;
        else
            merged.emplace_back(std::move(p), w);
    }
    std::erase_if(merged, [](const auto& a) { return a.second == 0.0; });
    atoms = std::move(merged);
}

DynamicalSystem<SolenoidPoint> doubling_system() {
    return {"doubling", 2.0, [](const SolenoidPoint& p) { return shift_forward(p); },
            [](const SolenoidPoint& p) { return shift_backward(p); }};
}

DynamicalSystem<SolenoidPoint> halving_system() {
    return {"halving", 2.0, [](const SolenoidPoint& p) { return shift_backward(p); },
            [](const SolenoidPoint& p) { return shift_forward(p); }};
}

DynamicalSystem<SolenoidPair> pair_mixed_system() {
    return {"doubling x halving", 2.0,
            [](const SolenoidPair& p) {
                return SolenoidPair{shift_forward(p.first), shift_backward(p.second)};
            },
            [](const SolenoidPair& p) {
                return SolenoidPair{shift_backward(p.first), shift_forward(p.second)};
            }};
}

double TestFunction::Factor::lipschitz() const {
    return 2.0 * std::numbers::pi * harmonic * std::ldexp(1.0, static_cast<int>(coordinate));
}

double TestFunction::Factor::evaluate(double theta) const {
    double arg = 2.0 * std::numbers::pi * harmonic * theta;
    return cosine ? std::cos(arg) : std::sin(arg);
}

std::string TestFunction::Factor::label() const {
    return std::string(cosine ? "cos" : "sin") + std::to_string(coordinate) + ".h" +
           std::to_string(harmonic) + "[" + std::to_string(component) + "]";
}

double TestFunction::lipschitz() const {
    double sum = 0.0;
    for (const auto& f : factors) sum += f.lipschitz();
    return sum;
}

double TestFunction::operator()(const SolenoidPoint& p) const {
    double prod = 1.0;
    for (const auto& f : factors) {
        if (f.component != 0)
            throw std::invalid_argument("TestFunction: pair factor applied to a single point");
        prod *= f.evaluate(p.angle(f.coordinate));
    }
    return prod;
}

double TestFunction::operator()(const SolenoidPair& p) const {
    double prod = 1.0;
    for (const auto& f : factors)
        prod *= f.evaluate(PointTraits<SolenoidPair>::component(p, f.component).angle(f.coordinate));
    return prod;
}

std::string TestFunction::label() const {
    std::string out;
    for (const auto& f : factors) {
        if (!out.empty()) out += "*";
        out += f.label();
    }
    return out;
}

namespace {

void append_component_family(std::vector<TestFunction>& out, int component) {
    for (unsigned n = 0; n <= 4; ++n)
        for (unsigned h = 1; h <= 3; ++h)
            for (bool cosine : {true, false})
                out.push_back({{{cosine, component, n, h}}});
}

}  // namespace

std::vector<TestFunction> default_solenoid_family() {
    std::vector<TestFunction> out;
    append_component_family(out, 0);
    return out;
}

std::vector<TestFunction> default_pair_family() {
    std::vector<TestFunction> out;
    append_component_family(out, 0);
    append_component_family(out, 1);
    for (unsigned n = 0; n <= 1; ++n)
        for (bool c0 : {true, false})
            for (bool c1 : {true, false})
                out.push_back({{{c0, 0, n, 1}, {c1, 1, n, 1}}});
    return out;
}

template <typename Point>
double discrepancy(const FiniteMeasure<Point>& mu, const FiniteMeasure<Point>& nu,
                   const std::vector<TestFunction>& family) {
    if (family.empty()) throw std::invalid_argument("discrepancy(): empty test family");
    double worst = 0.0;
    for (const auto& f : family)
        worst = std::max(worst, std::fabs(integrate(mu, f) - integrate(nu, f)));
    return worst;
}

template <typename Point>
FiniteMeasure<Point> orbit_measure(const Point& p, unsigned period,
                                   const DynamicalSystem<Point>& sys) {
    if (period == 0) throw std::invalid_argument("orbit_measure(): period must be positive");
    FiniteMeasure<Point> out;
    Point cur = p;
    for (unsigned i = 0; i < period; ++i) {
        out.atoms.emplace_back(cur, 1.0 / period);
        cur = sys.forward(cur);
    }
    if (!(cur == p))
        throw std::invalid_argument(
            "orbit_measure(): point is not periodic with the declared period");
    out.canonicalize();
    return out;
}

namespace {

// sum <= 14 sqrt(2) / 3, compared exactly via 9 * sum^2 <= 392
bool certify_orbit_sum(const BigRat& sum) {
    BigRat scaled = 9 * sum * sum;
    return scaled <= 392;
}

}  // namespace

template <typename Point>
DensifyResult<Point> densify(const FiniteMeasure<Point>& mu, const DynamicalSystem<Point>& sys,
                             unsigned N, double slack,
                             const std::vector<TestFunction>& family_in) {
    using Traits = PointTraits<Point>;
    if (N == 0) throw std::invalid_argument("densify(): N must be positive");
    mu.validate();

    std::vector<TestFunction> family = family_in;
    if (family.empty()) {
        if constexpr (Traits::kComponents == 1)
            family = default_solenoid_family();
        else
            family = default_pair_family();
    }

    DensifyResult<Point> result;
    result.n = N;
    result.period = 2 * N + 1;
    result.invariance_slack = discrepancy(mu, pushforward(mu, sys), family);
    if (result.invariance_slack > slack)
        throw std::invalid_argument("densify(): input measure is not invariant within slack");

    const unsigned P = 2 * N + 1;
    const unsigned depth = 2 * N + 40;  // rho enclosure depth; tail 2^{-2N-41}

    // per atom: orbit of the input point and of its periodic approximation
    std::vector<double> birkhoff_mu(family.size(), 0.0);
    bool all_cert = true;
    for (const auto& [x, w] : mu.atoms) {
        Point y = Traits::nearest(x, N);
        auto orbit = orbit_measure(y, P, sys);
        for (const auto& [q, v] : orbit.atoms) result.output.atoms.emplace_back(q, w * v);

        // walk i = -N..N once, accumulating Birkhoff averages and the certified sums
        Point xi = iterate(sys, x, -static_cast<long>(N));
        Point yi = iterate(sys, y, -static_cast<long>(N));
        std::vector<BigRat> sums(Traits::kComponents, BigRat(0, 1));
        std::vector<double> favg(family.size(), 0.0);
        for (unsigned step = 0; step < P; ++step) {
            for (int c = 0; c < Traits::kComponents; ++c)
                sums[c] += rho_bounds(Traits::component(xi, c), Traits::component(yi, c), depth)
                               .upper;
            for (size_t fi = 0; fi < family.size(); ++fi) favg[fi] += family[fi](xi);
            if (step + 1 < P) {
                xi = sys.forward(xi);
                yi = sys.forward(yi);
            }
        }
        for (int c = 0; c < Traits::kComponents; ++c) {
            bool pass = certify_orbit_sum(sums[c]);
            all_cert = all_cert && pass;
            result.certificates.push_back({Traits::label(x), c, sums[c], pass});
        }
        for (size_t fi = 0; fi < family.size(); ++fi)
            birkhoff_mu[fi] += w * favg[fi] / P;
    }
    result.output.canonicalize();
    result.output.validate(1e-9);

    // measured Birkhoff discrepancy per family member vs K * (14 sqrt 2 / 3) / (2N+1)
    const double orbit_bound = 14.0 * std::sqrt(2.0) / 3.0;
    bool all_birkhoff = true;
    for (size_t fi = 0; fi < family.size(); ++fi) {
        const auto& f = family[fi];
        double measured = std::fabs(birkhoff_mu[fi] - integrate(result.output, f));
        double bound = f.lipschitz() * orbit_bound / P;
        bool pass = measured <= bound;
        all_birkhoff = all_birkhoff && pass;
        result.birkhoff.push_back({f.label(), f.lipschitz(), measured, bound, pass});
    }
    result.certified = all_cert && all_birkhoff;
    return result;
}

SolenoidPoint scale_relabel(const SolenoidPoint& p, const BigInt& k) {
    if (k < 1 || (k & 1) == 0)
        throw std::invalid_argument("scale_relabel(): k must be odd and positive");
    if (!p.is_exact())
        throw std::invalid_argument("scale_relabel(): requires an exact point");
    const auto& e = p.exact_form();
    if (big_gcd(BigInt(k % e.den), e.den) != 1)
        throw std::domain_error("scale_relabel(): k not invertible modulo atom denominator");
    if (e.den == 1) return p;
    return SolenoidPoint::exact(BigInt(e.num * mod_inverse(BigInt(k % e.den), e.den)), e.den);
}

PairMeasure scaled_embedding(const PairMeasure& mu, const BigInt& k) {
    PairMeasure out;
    out.atoms.reserve(mu.atoms.size());
    for (const auto& [p, w] : mu.atoms)
        out.atoms.emplace_back(SolenoidPair{scale_relabel(p.first, k), scale_relabel(p.second, k)},
                               w);
    out.canonicalize();
    return out;
}

// explicit instantiations for the two phase spaces
template struct FiniteMeasure<SolenoidPoint>;
template struct FiniteMeasure<SolenoidPair>;
template double discrepancy<SolenoidPoint>(const FiniteMeasure<SolenoidPoint>&,
                                           const FiniteMeasure<SolenoidPoint>&,
                                           const std::vector<TestFunction>&);
template double discrepancy<SolenoidPair>(const FiniteMeasure<SolenoidPair>&,
                                          const FiniteMeasure<SolenoidPair>&,
                                          const std::vector<TestFunction>&);
template FiniteMeasure<SolenoidPoint> orbit_measure<SolenoidPoint>(
    const SolenoidPoint&, unsigned, const DynamicalSystem<SolenoidPoint>&);
template FiniteMeasure<SolenoidPair> orbit_measure<SolenoidPair>(
    const SolenoidPair&, unsigned, const DynamicalSystem<SolenoidPair>&);
template DensifyResult<SolenoidPoint> densify<SolenoidPoint>(const FiniteMeasure<SolenoidPoint>&,
                                                             const DynamicalSystem<SolenoidPoint>&,
                                                             unsigned, double,
                                                             const std::vector<TestFunction>&);
template DensifyResult<SolenoidPair> densify<SolenoidPair>(const FiniteMeasure<SolenoidPair>&,
                                                           const DynamicalSystem<SolenoidPair>&,
                                                           unsigned, double,
                                                           const std::vector<TestFunction>&);

}  // namespace solrep
