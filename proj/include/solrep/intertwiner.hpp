#pragma once

#include <Eigen/Dense>
#include <vector>

#include "solrep/unitary_rep.hpp"

namespace solrep {

// Solve for a unitary V with target_images[i] = V * source_images[i] * V^* for
// every i, by computing the joint nullspace of the Sylvester operators
// X -> B_i X - X A_i.  Throws if the images do not pin V down to a single ray
// ("no intertwiner" when the nullspace is trivial or the candidate is not
// unitary, "not irreducibly intertwined" when the nullspace has dimension
// greater than one).  The returned V has its first nonzero entry (row-major)
// real and positive.
Eigen::MatrixXcd solve_intertwiner(const std::vector<Eigen::MatrixXcd>& source_images,
                                   const std::vector<Eigen::MatrixXcd>& target_images,
                                   double tol = 1e-9);

// Same, matching up the images of two representations with identical generator sets.
Eigen::MatrixXcd solve_intertwiner(const UnitaryRep& source, const UnitaryRep& target,
                                   double tol = 1e-9);

}  // namespace solrep
