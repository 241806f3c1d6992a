#pragma once

#include <Eigen/Dense>
#include <vector>

#include "solrep/cocycle.hpp"
#include "solrep/heisenberg.hpp"
#include "solrep/solenoid.hpp"
#include "solrep/trace_table.hpp"

namespace solrep {

// One level of the finite-quotient trace approximation: reduction modulo
// m = 2^(2j+1) - 1 paired with the nearest periodic central character at
// depth j.
struct TraceApproxLevel {
    unsigned index = 0;                                         // depth j
    BigInt modulus = 1;                                         // 2^(2j+1) - 1
    SolenoidPoint approx_character = SolenoidPoint::identity();  // nearest periodic point
    TraceTable<DyadicHeisenberg> table;  // finite-quotient induced trace on the window
    std::vector<double> errors;          // |target(g) - table(g)|, aligned with the window
    double max_error = 0.0;
    double max_central_error = 0.0;
    double max_noncentral_error = 0.0;
};

struct TraceApproxResult {
    TraceTable<DyadicHeisenberg> target;  // chi(z) on the center, 0 elsewhere
    std::vector<TraceApproxLevel> levels;
};

// For an exact central character chi, tabulates the induced traces of the
// finite quotients mod 2^(2j+1) - 1 (with chi replaced by its nearest periodic
// point at depth j) over the window, together with pointwise errors against
// the dyadic-group trace.  Window coordinates may not use denominators beyond
// 2^64.
TraceApproxResult nilpotent_trace_approx(const SolenoidPoint& central,
                                         const std::vector<DyadicHeisenberg>& window,
                                         const std::vector<unsigned>& level_indices);

// Corner inequalities for a window of m-dimensional unitary images and an
// n-dimensional leading corner: per image, the gap |tr_n(corner) - tr_m(full)|
// against the bound 2(1 - n/m) plus the exact block-convexity identity
// residual; per image pair, the Cauchy-Schwarz bound
// |tr_n(A) - tr_n(B)| <= hs_norm(A - B) on the corners.
struct CornerRow {
    double corner_gap = 0.0;
    double corner_bound = 0.0;
    bool corner_pass = false;
    double convexity_residual = 0.0;
};

struct CornerPair {
    double difference = 0.0;
    double bound = 0.0;
    bool pass = false;
};

struct CornerReport {
    long dim = 0;
    long corner_dim = 0;
    std::vector<CornerRow> rows;
    std::vector<CornerPair> pairs;
    bool all_pass = true;
};

CornerReport corner_trace_check(const std::vector<Eigen::MatrixXcd>& images, long corner_dim);

}  // namespace solrep
