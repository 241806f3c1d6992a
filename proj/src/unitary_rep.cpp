#include "solrep/unitary_rep.hpp"

#include <algorithm>
#include <stdexcept>

#include "solrep/hs.hpp"

namespace solrep {

namespace {
constexpr double kUnitaryTol = 1e-10;
}

UnitaryRep::UnitaryRep(int dimension) : dimension_(dimension) {
    if (dimension < 1) throw std::invalid_argument("UnitaryRep: dimension must be positive");
}

void UnitaryRep::set_generator(const std::string& label, Eigen::MatrixXcd image) {
    if (image.rows() != dimension_ || image.cols() != dimension_)
        throw std::invalid_argument("UnitaryRep::set_generator(): dimension mismatch");
    if (hs_norm(Eigen::MatrixXcd(image.adjoint() * image -
                                 Eigen::MatrixXcd::Identity(dimension_, dimension_))) >
        kUnitaryTol)
        throw std::invalid_argument("UnitaryRep::set_generator(): image is not unitary");
    auto it = std::lower_bound(generators_.begin(), generators_.end(), label,
                               [](const auto& a, const std::string& l) { return a.first < l; });
    if (it != generators_.end() && it->first == label)
        it->second = std::move(image);
    else
        generators_.emplace(it, label, std::move(image));
}

bool UnitaryRep::has_generator(const std::string& label) const {
    auto it = std::lower_bound(generators_.begin(), generators_.end(), label,
                               [](const auto& a, const std::string& l) { return a.first < l; });
    return it != generators_.end() && it->first == label;
}

const Eigen::MatrixXcd& UnitaryRep::image(const std::string& label) const {
    auto it = std::lower_bound(generators_.begin(), generators_.end(), label,
                               [](const auto& a, const std::string& l) { return a.first < l; });
    if (it == generators_.end() || it->first != label)
        throw std::invalid_argument("UnitaryRep::image(): unknown generator " + label);
    return it->second;
}

Eigen::MatrixXcd UnitaryRep::evaluate(const Word& word) const {
    Eigen::MatrixXcd out = Eigen::MatrixXcd::Identity(dimension_, dimension_);
    for (const auto& [label, exponent] : word) {
        if (exponent == 0) continue;
        const Eigen::MatrixXcd& U = image(label);
        Eigen::MatrixXcd factor = exponent > 0 ? U : Eigen::MatrixXcd(U.adjoint());
        for (int i = std::abs(exponent); i > 0; --i) out = out * factor;
    }
    return out;
}

double relation_defect(const UnitaryRep& rep, const UnitaryRep::Word& lhs,
                       const UnitaryRep::Word& rhs) {
    return hs_norm(rep.evaluate(lhs) - rep.evaluate(rhs));
}

}  // namespace solrep
