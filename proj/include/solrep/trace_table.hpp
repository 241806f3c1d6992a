#pragma once

#include <Eigen/Dense>
#include <complex>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "solrep/hs.hpp"

namespace solrep {

// A trace presented concretely: values on a finite window of group elements,
// tagged with how they were produced.
template <typename Element>
struct TraceTable {
    std::vector<std::pair<Element, std::complex<double>>> rows;
    std::string provenance;

    bool contains(const Element& g) const {
        for (const auto& [h, v] : rows)
            if (h == g) return true;
        return false;
    }

    std::complex<double> value(const Element& g) const {
        for (const auto& [h, v] : rows)
            if (h == g) return v;
        throw std::out_of_range("TraceTable::value(): element not in window");
    }
};

// Checks the trace axioms as far as the window allows: value 1 at the identity,
// Hermitian symmetry on inverse pairs, conjugation invariance whenever the
// conjugate lands back in the window.
template <typename Element>
void validate_trace_table(const TraceTable<Element>& table, const Element& identity,
                          double tol = 1e-9) {
    if (std::abs(table.value(identity) - 1.0) > tol)
        throw std::runtime_error("validate_trace_table(): identity value must be 1");
    for (const auto& [g, v] : table.rows) {
        Element inv = g.inverse();
        if (table.contains(inv) && std::abs(table.value(inv) - std::conj(v)) > tol)
            throw std::runtime_error("validate_trace_table(): Hermitian symmetry violated");
        for (const auto& [h, unused] : table.rows) {
            Element conjugate = h * g * h.inverse();
            if (table.contains(conjugate) && std::abs(table.value(conjugate) - v) > tol)
                throw std::runtime_error(
                    "validate_trace_table(): conjugation invariance violated");
        }
    }
}

// per-element error |table(g) - tr_dim(image(g))|, aligned with table.rows
template <typename Element, typename ImageFn>
std::vector<double> trace_match(const TraceTable<Element>& table, ImageFn&& image) {
    std::vector<double> errors;
    errors.reserve(table.rows.size());
    for (const auto& [g, v] : table.rows)
        errors.push_back(std::abs(v - normalized_trace(image(g))));
    return errors;
}

// smallest eigenvalue of the Gram matrix [tau(g_i^{-1} g_j)]; the trace is
// positive semidefinite on the window within tol iff this is >= -tol
template <typename Element, typename TraceFn>
double gram_min_eigenvalue(const std::vector<Element>& window, TraceFn&& tau) {
    if (window.empty()) throw std::invalid_argument("gram_min_eigenvalue(): empty window");
    const long w = static_cast<long>(window.size());
    Eigen::MatrixXcd gram(w, w);
    for (long i = 0; i < w; ++i)
        for (long j = 0; j < w; ++j)
            gram(i, j) = tau(window[i].inverse() * window[j]);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver((gram + gram.adjoint()) / 2.0);
    return solver.eigenvalues().minCoeff();
}

// measured snapshot of an approximate representation on a finite window
struct ApproxRep {
    long dimension = 0;
    std::vector<Eigen::MatrixXcd> images;  // aligned with an external window
    double defect = 0.0;                   // measured multiplicativity defect
    double unitarity = 0.0;                // worst unitarity residual
};

}  // namespace solrep
