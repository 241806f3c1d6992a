#pragma once

#include <complex>
#include <vector>

#include "solrep/cocycle.hpp"
#include "solrep/heisenberg.hpp"
#include "solrep/roots.hpp"
#include "solrep/trace_table.hpp"

namespace solrep {

// all k^3 elements of the mod-k Heisenberg group, lexicographic in (x, y, z)
std::vector<ModularHeisenberg> heisenberg_group_elements(const BigInt& k);

// The trace induced from a character omega of the center, evaluated by
// exhaustive conjugacy enumeration: the extended character (omega on the
// center, 0 elsewhere) averaged over the conjugacy class of x.
std::complex<double> induced_trace_enumerated(const ModularHeisenberg& x,
                                              const RootOfUnity& omega);

// closed form of the same trace: omega^z on the center, 0 elsewhere
std::complex<double> induced_trace_closed(const ModularHeisenberg& x, const RootOfUnity& omega);

// dyadic-group counterpart, inducing from the center: chi(z) on central
// elements, 0 elsewhere
std::complex<double> induced_trace_central(const DyadicHeisenberg& x, const DyadicCharacter& chi);

// fixed 12-element window used for positive-semidefiniteness checks (needs k >= 3)
std::vector<ModularHeisenberg> psd_window(const BigInt& k);

// the enumerated induced trace tabulated over a window
TraceTable<ModularHeisenberg> induced_trace_table(const std::vector<ModularHeisenberg>& window,
                                                  const RootOfUnity& omega);

}  // namespace solrep
