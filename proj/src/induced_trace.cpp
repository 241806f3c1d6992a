#include "solrep/induced_trace.hpp"

#include <algorithm>
#include <stdexcept>

namespace solrep {

namespace {

void check_center_character(const BigInt& k, const RootOfUnity& omega, const char* where) {
    if (k % omega.order() != 0)
        throw std::invalid_argument(std::string(where) +
                                    "(): character order must divide the level");
}

}  // namespace

std::vector<ModularHeisenberg> heisenberg_group_elements(const BigInt& k) {
    if (k < 1 || k % 2 == 0)
        throw std::invalid_argument("heisenberg_group_elements(): level must be odd and positive");
    if (k > 15)
        throw std::invalid_argument("heisenberg_group_elements(): level too large for enumeration");
    const long kl = k.convert_to<long>();
    std::vector<ModularHeisenberg> elements;
    elements.reserve(static_cast<size_t>(kl) * kl * kl);
    for (long x = 0; x < kl; ++x)
        for (long y = 0; y < kl; ++y)
            for (long z = 0; z < kl; ++z)
                elements.push_back(
                    {ModularResidue(x, k), ModularResidue(y, k), ModularResidue(z, k)});
    return elements;
}

std::complex<double> induced_trace_enumerated(const ModularHeisenberg& x,
                                              const RootOfUnity& omega) {
    const BigInt& k = x.x.modulus();
    check_center_character(k, omega, "induced_trace_enumerated");
    std::vector<ModularHeisenberg> conjugacy_class;
    for (const ModularHeisenberg& a : heisenberg_group_elements(k)) {
        ModularHeisenberg c = a * x * a.inverse();
        if (std::find(conjugacy_class.begin(), conjugacy_class.end(), c) == conjugacy_class.end())
            conjugacy_class.push_back(c);
    }
    std::complex<double> sum = 0.0;
    for (const ModularHeisenberg& c : conjugacy_class)
        if (c.is_central()) sum += omega.pow(c.z.value()).value();
    return sum / static_cast<double>(conjugacy_class.size());
}

std::complex<double> induced_trace_closed(const ModularHeisenberg& x, const RootOfUnity& omega) {
    check_center_character(x.x.modulus(), omega, "induced_trace_closed");
    if (!x.is_central()) return 0.0;
    return omega.pow(x.z.value()).value();
}

std::complex<double> induced_trace_central(const DyadicHeisenberg& x,
                                           const DyadicCharacter& chi) {
    if (!x.is_central()) return 0.0;
    return chi(x.z).value();
}

std::vector<ModularHeisenberg> psd_window(const BigInt& k) {
    if (k < 3 || k % 2 == 0)
        throw std::invalid_argument("psd_window(): level must be odd and at least 3");
    auto element = [&k](long x, long y, long z) -> ModularHeisenberg {
        return {ModularResidue(x, k), ModularResidue(y, k), ModularResidue(z, k)};
    };
    std::vector<ModularHeisenberg> window;
    for (long x = 0; x <= 1; ++x)
        for (long y = 0; y <= 1; ++y)
            for (long z = 0; z <= 1; ++z) window.push_back(element(x, y, z));
    window.push_back(element(2, 0, 0));
    window.push_back(element(0, 2, 0));
    window.push_back(element(0, 0, 2));
    window.push_back(element(2, 2, 2));
    return window;
}

TraceTable<ModularHeisenberg> induced_trace_table(const std::vector<ModularHeisenberg>& window,
                                                  const RootOfUnity& omega) {
    TraceTable<ModularHeisenberg> table;
    table.provenance =
        "induced(center, omega = " + omega.index().str() + "/" + omega.order().str() + ")";
    table.rows.reserve(window.size());
    for (const ModularHeisenberg& g : window)
        table.rows.emplace_back(g, induced_trace_enumerated(g, omega));
    return table;
}

}  // namespace solrep
