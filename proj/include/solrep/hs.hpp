#pragma once

#include <Eigen/Dense>
#include <complex>
#include <utility>
#include <vector>

namespace solrep {

// normalized Hilbert-Schmidt norm (tr_n(T*T))^{1/2}, with tr_n(I) = 1
double hs_norm(const Eigen::MatrixXcd& T);

// trace divided by the dimension, so the identity has trace 1
std::complex<double> normalized_trace(const Eigen::MatrixXcd& T);

// worst ||U*U - I||_2 over the images
double unitarity_residual(const std::vector<Eigen::MatrixXcd>& images);

// worst multiplicativity failure hs_norm(image(g*h) - image(g)*image(h)) over the pairs
template <typename Element, typename ImageFn>
double multiplicativity_defect(ImageFn&& image,
                               const std::vector<std::pair<Element, Element>>& pairs) {
    double worst = 0.0;
    for (const auto& [g, h] : pairs) {
        double d = hs_norm(image(g * h) - image(g) * image(h));
        if (d > worst) worst = d;
    }
    return worst;
}

}  // namespace solrep
