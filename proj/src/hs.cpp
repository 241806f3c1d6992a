#include "solrep/hs.hpp"

#include <cmath>
#include <stdexcept>

namespace solrep {

double hs_norm(const Eigen::MatrixXcd& T) {
    if (T.rows() != T.cols()) throw std::invalid_argument("hs_norm(): matrix is not square");
    if (T.rows() == 0) throw std::invalid_argument("hs_norm(): matrix is empty");
    return std::sqrt(T.squaredNorm() / static_cast<double>(T.rows()));
}

std::complex<double> normalized_trace(const Eigen::MatrixXcd& T) {
    if (T.rows() != T.cols())
        throw std::invalid_argument("normalized_trace(): matrix is not square");
    if (T.rows() == 0) throw std::invalid_argument("normalized_trace(): matrix is empty");
    return T.trace() / static_cast<double>(T.rows());
}

double unitarity_residual(const std::vector<Eigen::MatrixXcd>& images) {
    double worst = 0.0;
    for (const auto& U : images) {
        Eigen::MatrixXcd gap =
            U.adjoint() * U - Eigen::MatrixXcd::Identity(U.cols(), U.cols());
        double d = hs_norm(gap);
        if (d > worst) worst = d;
    }
    return worst;
}

}  // namespace solrep
