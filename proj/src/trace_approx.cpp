#include "solrep/trace_approx.hpp"

#include <stdexcept>

#include "solrep/induced_trace.hpp"
#include "solrep/modular.hpp"

namespace solrep {

TraceApproxResult nilpotent_trace_approx(const SolenoidPoint& central,
                                         const std::vector<DyadicHeisenberg>& window,
                                         const std::vector<unsigned>& level_indices) {
    if (!central.is_exact())
        throw std::invalid_argument("nilpotent_trace_approx(): central character must be exact");
    for (const DyadicHeisenberg& g : window)
        for (const DyadicRational* c : {&g.x, &g.y, &g.z})
            if (c->exponent() > 64)
                throw std::invalid_argument(
                    "nilpotent_trace_approx(): window element denominator exceeds the "
                    "representable depth");

    DyadicCharacter chi(central);
    TraceApproxResult result;
    result.target.provenance = "central character " + central.str();
    result.target.rows.reserve(window.size());
    for (const DyadicHeisenberg& g : window)
        result.target.rows.emplace_back(g, induced_trace_central(g, chi));

    for (unsigned j : level_indices) {
        TraceApproxLevel level;
        level.index = j;
        level.modulus = pow2(2 * j + 1) - 1;
        level.approx_character = nearest_periodic(central, j);
        DyadicCharacter chi_j(level.approx_character);
        level.table.provenance = "induced trace of the quotient mod " + level.modulus.str() +
                                 " at " + level.approx_character.str();
        level.table.rows.reserve(window.size());
        level.errors.reserve(window.size());
        for (size_t i = 0; i < window.size(); ++i) {
            const DyadicHeisenberg& g = window[i];
            bool central_mod = reduce_mod(g.x, level.modulus).is_zero() &&
                               reduce_mod(g.y, level.modulus).is_zero();
            std::complex<double> value = central_mod ? chi_j(g.z).value() : 0.0;
            level.table.rows.emplace_back(g, value);
            double err = std::abs(result.target.rows[i].second - value);
            level.errors.push_back(err);
            level.max_error = std::max(level.max_error, err);
            if (g.is_central())
                level.max_central_error = std::max(level.max_central_error, err);
            else
                level.max_noncentral_error = std::max(level.max_noncentral_error, err);
        }
        result.levels.push_back(std::move(level));
    }
    return result;
}

CornerReport corner_trace_check(const std::vector<Eigen::MatrixXcd>& images, long corner_dim) {
    if (images.empty()) throw std::invalid_argument("corner_trace_check(): empty window");
    const long m = images.front().rows();
    for (const auto& a : images)
        if (a.rows() != m || a.cols() != m)
            throw std::invalid_argument(
                "corner_trace_check(): images must be square matrices of equal dimension");
    if (corner_dim < 1 || corner_dim > m)
        throw std::invalid_argument("corner_trace_check(): corner dimension out of range");

    const long n = corner_dim;
    const double slack = 1e-12;
    CornerReport report;
    report.dim = m;
    report.corner_dim = n;
    report.rows.reserve(images.size());
    for (const auto& a : images) {
        CornerRow row;
        std::complex<double> tr_full = normalized_trace(a);
        std::complex<double> tr_corner = normalized_trace(a.topLeftCorner(n, n));
        row.corner_gap = std::abs(tr_corner - tr_full);
        row.corner_bound = 2.0 * (1.0 - static_cast<double>(n) / static_cast<double>(m));
        row.corner_pass = row.corner_gap <= row.corner_bound + slack;

        std::complex<double> split = static_cast<double>(n) * tr_corner;
        if (n < m)
            split += static_cast<double>(m - n) *
                     normalized_trace(a.bottomRightCorner(m - n, m - n));
        row.convexity_residual = std::abs(tr_full - split / static_cast<double>(m));

        report.all_pass = report.all_pass && row.corner_pass && row.convexity_residual <= 1e-10;
        report.rows.push_back(row);
    }
    for (size_t i = 0; i < images.size(); ++i)
        for (size_t j = i + 1; j < images.size(); ++j) {
            CornerPair pair;
            Eigen::MatrixXcd ac = images[i].topLeftCorner(n, n);
            Eigen::MatrixXcd bc = images[j].topLeftCorner(n, n);
            pair.difference = std::abs(normalized_trace(ac) - normalized_trace(bc));
            pair.bound = hs_norm(ac - bc);
            pair.pass = pair.difference <= pair.bound + slack;
            report.all_pass = report.all_pass && pair.pass;
            report.pairs.push_back(pair);
        }
    return report;
}

}  // namespace solrep
