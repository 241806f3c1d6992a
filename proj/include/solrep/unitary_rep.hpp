#pragma once

#include <Eigen/Dense>
#include <string>
#include <utility>
#include <vector>

namespace solrep {

// A representation presented concretely: unitary images of a declared generator
// window plus a word evaluator.  Images are validated on insertion and the
// generator list is kept sorted by label so exports and reports are deterministic.
class UnitaryRep {
public:
    using Word = std::vector<std::pair<std::string, int>>;  // (generator label, exponent)

    explicit UnitaryRep(int dimension);

    int dimension() const { return dimension_; }
    const std::vector<std::pair<std::string, Eigen::MatrixXcd>>& generators() const {
        return generators_;
    }

    // inserts or replaces; rejects wrong dimension and images with ||U*U - I||_2 > 1e-10
    void set_generator(const std::string& label, Eigen::MatrixXcd image);
    bool has_generator(const std::string& label) const;
    const Eigen::MatrixXcd& image(const std::string& label) const;

    // product of image(label)^exponent over the word; empty word gives the identity
    Eigen::MatrixXcd evaluate(const Word& word) const;

private:
    int dimension_;
    std::vector<std::pair<std::string, Eigen::MatrixXcd>> generators_;  // sorted by label
};

// hs_norm(evaluate(lhs) - evaluate(rhs)); zero iff the relation holds
double relation_defect(const UnitaryRep& rep, const UnitaryRep::Word& lhs,
                       const UnitaryRep::Word& rhs);

}  // namespace solrep
