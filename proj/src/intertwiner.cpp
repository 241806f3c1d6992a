#include "solrep/intertwiner.hpp"

#include <stdexcept>

#include "solrep/hs.hpp"

namespace solrep {

Eigen::MatrixXcd solve_intertwiner(const std::vector<Eigen::MatrixXcd>& source_images,
                                   const std::vector<Eigen::MatrixXcd>& target_images,
                                   double tol) {
    if (source_images.empty())
        throw std::invalid_argument("solve_intertwiner(): empty image family");
    if (source_images.size() != target_images.size())
        throw std::invalid_argument("solve_intertwiner(): image counts differ");
    const long k = source_images.front().rows();
    for (const auto& family : {source_images, target_images})
        for (const auto& m : family)
            if (m.rows() != k || m.cols() != k)
                throw std::invalid_argument(
                    "solve_intertwiner(): images must be square matrices of equal dimension");

    // joint nullspace of X -> B_i X - X A_i on column-major vec(X)
    const long kk = k * k;
    Eigen::MatrixXcd stacked = Eigen::MatrixXcd::Zero(static_cast<long>(source_images.size()) * kk, kk);
    for (size_t i = 0; i < source_images.size(); ++i) {
        const Eigen::MatrixXcd& a = source_images[i];
        const Eigen::MatrixXcd& b = target_images[i];
        const long base = static_cast<long>(i) * kk;
        for (long c = 0; c < k; ++c)
            for (long r = 0; r < k; ++r) {
                const long row = base + c * k + r;
                for (long p = 0; p < k; ++p) stacked(row, c * k + p) += b(r, p);
                for (long q = 0; q < k; ++q) stacked(row, q * k + r) -= a(q, c);
            }
    }

    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(stacked, Eigen::ComputeFullV);
    const auto& sigma = svd.singularValues();
    const double cutoff = tol * std::max(1.0, sigma.size() > 0 ? sigma(0) : 0.0);
    long null_dim = 0;
    for (long i = sigma.size() - 1; i >= 0 && sigma(i) <= cutoff; --i) ++null_dim;
    null_dim += kk - sigma.size();  // columns beyond the rank bound are exact kernel

    if (null_dim == 0) throw std::runtime_error("solve_intertwiner(): no intertwiner");
    if (null_dim > 1) throw std::runtime_error("solve_intertwiner(): not irreducibly intertwined");

    Eigen::VectorXcd flat = svd.matrixV().col(kk - 1);
    Eigen::MatrixXcd v = Eigen::Map<const Eigen::MatrixXcd>(flat.data(), k, k);
    const double scale = std::sqrt((v.adjoint() * v).trace().real() / static_cast<double>(k));
    if (!(scale > 0)) throw std::runtime_error("solve_intertwiner(): no intertwiner");
    v /= scale;

    const double check = std::max(10.0 * tol, 1e-12);
    if (hs_norm(v.adjoint() * v - Eigen::MatrixXcd::Identity(k, k)) > check)
        throw std::runtime_error("solve_intertwiner(): no intertwiner");
    for (size_t i = 0; i < source_images.size(); ++i)
        if (hs_norm(target_images[i] - v * source_images[i] * v.adjoint()) > check)
            throw std::runtime_error("solve_intertwiner(): no intertwiner");

    // fix the free phase: first nonzero entry in row-major order made real positive
    for (long r = 0; r < k; ++r)
        for (long c = 0; c < k; ++c)
            if (std::abs(v(r, c)) > 1e-8) {
                v *= std::conj(v(r, c)) / std::abs(v(r, c));
                return v;
            }
    throw std::runtime_error("solve_intertwiner(): no intertwiner");
}

Eigen::MatrixXcd solve_intertwiner(const UnitaryRep& source, const UnitaryRep& target,
                                   double tol) {
    if (source.dimension() != target.dimension())
        throw std::invalid_argument("solve_intertwiner(): representation dimensions differ");
    if (source.generators().size() != target.generators().size())
        throw std::invalid_argument("solve_intertwiner(): generator sets differ");
    std::vector<Eigen::MatrixXcd> a, b;
    for (const auto& [label, image] : source.generators()) {
        if (!target.has_generator(label))
            throw std::invalid_argument("solve_intertwiner(): generator sets differ");
        a.push_back(image);
        b.push_back(target.image(label));
    }
    return solve_intertwiner(a, b, tol);
}

}  // namespace solrep
