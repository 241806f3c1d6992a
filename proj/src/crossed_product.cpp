#include "solrep/crossed_product.hpp"

#include <stdexcept>

#include "solrep/hs.hpp"
#include "solrep/intertwiner.hpp"

namespace solrep {

namespace {

// the window pinning down the fiber representation up to phase
std::vector<DyadicHeisenberg> corner_solve_window() {
    DyadicRational zero, one(1), half = DyadicRational::half_power(1);
    return {{one, zero, zero}, {zero, one, zero}, {half, zero, zero}, {zero, half, zero}};
}

bool divides_two_power_minus_one(const BigInt& d, long n) {
    if (d == 1) return true;
    return BigInt(boost::multiprecision::powm(BigInt(2), BigInt(n), d)) == 1;
}

Eigen::MatrixXcd unitary_power(const Eigen::MatrixXcd& u, long m) {
    if (m < 0) return unitary_power(u, -m).adjoint();
    Eigen::MatrixXcd p = Eigen::MatrixXcd::Identity(u.rows(), u.cols());
    for (long i = 0; i < m; ++i) p = p * u;
    return p;
}

}  // namespace

Eigen::MatrixXcd CrossedProductRep::fiber_block(const DyadicHeisenberg& g) const {
    const long k = fiber_.dimension();
    Eigen::MatrixXcd d = Eigen::MatrixXcd::Zero(n_ * k, n_ * k);
    for (long i = 0; i < n_; ++i) d.block(i * k, i * k, k, k) = fiber_.matrix(beta_power(g, i));
    return d;
}

Eigen::MatrixXcd CrossedProductRep::implementing_unitary() const {
    const long k = fiber_.dimension();
    if (n_ == 1) return corner_;
    Eigen::MatrixXcd u = Eigen::MatrixXcd::Zero(n_ * k, n_ * k);
    for (long i = 0; i + 1 < n_; ++i)
        u.block(i * k, (i + 1) * k, k, k) = Eigen::MatrixXcd::Identity(k, k);
    u.block((n_ - 1) * k, 0, k, k) = corner_;
    return u;
}

Eigen::MatrixXcd CrossedProductRep::matrix(const SemidirectElement& s) const {
    Eigen::MatrixXcd d = fiber_block(s.g);
    if (s.m == 0) return d;
    return d * unitary_power(implementing_unitary(), s.m);
}

UnitaryRep CrossedProductRep::to_unitary_rep() const {
    UnitaryRep rep(static_cast<int>(dimension()));
    DyadicRational zero, one(1);
    rep.set_generator("x", matrix({{one, zero, zero}, 0}));
    rep.set_generator("y", matrix({{zero, one, zero}, 0}));
    rep.set_generator("z", matrix({{zero, zero, one}, 0}));
    rep.set_generator("u", matrix({dyadic_heisenberg_identity(), 1}));
    return rep;
}

CrossedProductRep build_crossed_rep(const HeisenbergFiberRep& fiber, long n,
                                    Eigen::MatrixXcd corner, double tol) {
    if (n < 1) throw std::invalid_argument("build_crossed_rep(): period must be positive");
    const long k = fiber.dimension();
    if (corner.rows() != k || corner.cols() != k)
        throw std::invalid_argument("build_crossed_rep(): corner dimension mismatch");
    for (const SolenoidPoint& s : {fiber.spectrum().first, fiber.spectrum().second})
        if (!divides_two_power_minus_one(s.exact_form().den, n))
            throw std::runtime_error(
                "build_crossed_rep(): spectrum period does not divide the period");
    if (hs_norm(corner.adjoint() * corner - Eigen::MatrixXcd::Identity(k, k)) > tol)
        throw std::runtime_error("build_crossed_rep(): corner is not unitary");
    DyadicRational zero, one(1);
    auto window = corner_solve_window();
    window.push_back({zero, zero, one});
    for (const DyadicHeisenberg& g : window)
        if (hs_norm(corner * fiber.matrix(g) * corner.adjoint() -
                    fiber.matrix(beta_power(g, n))) > tol)
            throw std::runtime_error(
                "build_crossed_rep(): corner does not implement the period automorphism");
    return CrossedProductRep(fiber, n, std::move(corner));
}

CrossedProductRep semidirect_rep_pipeline(const BigInt& k, long n, const SolenoidPoint& central) {
    if (n < 1 || n > 32)
        throw std::invalid_argument("semidirect_rep_pipeline(): period must be in [1, 32]");
    if (!central.is_exact() || central.exact_form().den != k)
        throw std::invalid_argument(
            "semidirect_rep_pipeline(): central character denominator must equal the level");

    // largest divisor of 2^n - 1 coprime to the level
    BigInt d = pow2(static_cast<unsigned>(n)) - 1;
    for (BigInt g = big_gcd(d, k); g > 1; g = big_gcd(d, k)) d /= g;
    SpectrumPoint spectrum{SolenoidPoint::exact(1, d), SolenoidPoint::exact(1, d), k};

    HeisenbergFiberRep fiber = heisenberg_fiber_rep(central, spectrum);
    std::vector<Eigen::MatrixXcd> source, target;
    for (const DyadicHeisenberg& g : corner_solve_window()) {
        source.push_back(fiber.matrix(g));
        target.push_back(fiber.matrix(beta_power(g, n)));
    }
    Eigen::MatrixXcd corner = solve_intertwiner(source, target);
    return build_crossed_rep(fiber, n, std::move(corner));
}

std::complex<double> trivial_extension_trace(const HeisenbergFiberRep& fiber, long n,
                                             const SemidirectElement& s) {
    if (n < 1) throw std::invalid_argument("trivial_extension_trace(): period must be positive");
    if (s.m != 0) return 0.0;
    std::complex<double> sum = 0.0;
    for (long i = 0; i < n; ++i) sum += fiber.trace_value(beta_power(s.g, i));
    return sum / static_cast<double>(n);
}

std::vector<DyadicHeisenberg> heisenberg_coordinate_window() {
    DyadicRational half = DyadicRational::half_power(1);
    std::vector<DyadicRational> coords = {DyadicRational(0), DyadicRational(1), DyadicRational(-1),
                                          half, -half};
    std::vector<DyadicHeisenberg> window;
    window.reserve(coords.size() * coords.size() * coords.size());
    for (const auto& x : coords)
        for (const auto& y : coords)
            for (const auto& z : coords) window.push_back({x, y, z});
    return window;
}

std::vector<SemidirectElement> semidirect_window(long m_max) {
    std::vector<SemidirectElement> window;
    auto base = heisenberg_coordinate_window();
    window.reserve(base.size() * static_cast<size_t>(2 * m_max + 1));
    for (const auto& g : base)
        for (long m = -m_max; m <= m_max; ++m) window.push_back({g, m});
    return window;
}

}  // namespace solrep
