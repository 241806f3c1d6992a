#pragma once

#include <Eigen/Dense>
#include <array>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "solrep/heisenberg.hpp"
#include "solrep/json_io.hpp"
#include "solrep/solenoid.hpp"

namespace solrep {

// window behind the nilpotent command when the config gives none: identity,
// central elements of several depths, and noncentral representatives
std::vector<DyadicHeisenberg> nilpotent_default_window();

// Seeded randomness used by the batch commands and the property harness:
// every draw derives from one mt19937_64 stream so a recorded seed reproduces
// a run bit for bit.
class DeterministicRng {
public:
    explicit DeterministicRng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t raw() { return engine_(); }
    // uniform in [0, 1), 53-bit mantissa
    double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
    // standard normal via Box-Muller
    double normal();
    // uniform integer in [0, bound)
    std::uint64_t below(std::uint64_t bound);

    // random exact solenoid point with odd denominator <= 2*half_den_bound + 1
    SolenoidPoint exact_point(std::uint64_t half_den_bound = 500000);

private:
    std::mt19937_64 engine_;
    bool have_spare_ = false;
    double spare_ = 0.0;
};

// dim x dim Haar-distributed unitary: QR of a complex Ginibre matrix with the
// R-diagonal phases folded into Q
Eigen::MatrixXcd haar_unitary(long dim, DeterministicRng& rng);

// One batch run, mirrored verbatim by the JSON config file.  Zero / empty
// fields mean "use the command's default".
struct RunConfig {
    std::string command;  // approx-point | densify | nilpotent | semidirect
    unsigned n_min = 0;
    unsigned n_max = 0;
    std::vector<long> levels;  // semidirect: odd k values; nilpotent: moduli 2^(2j+1)-1
    double tolerance = 0.0;
    std::string out_dir = ".";
    std::uint64_t seed = 1;
    unsigned samples = 0;
    bool self_test = false;  // corrupt the certified bound by 0.5 to prove the harness can fail
    std::string point;    // approx-point: "num/den" (default: sampled points)
    std::string central;  // nilpotent: central character "num/den"
    std::string measure;  // densify: "", "dirac", or a path to a measure JSON
    std::vector<std::array<std::string, 3>> window;  // nilpotent: dyadic coordinate triples
};

RunConfig config_from_json(const Json& j);
Json config_to_json(const RunConfig& c);
void apply_command_defaults(RunConfig& c);

struct CommandReport {
    bool all_pass = false;
    Json summary;
};

CommandReport cmd_approx_point(const RunConfig& config);
CommandReport cmd_densify(const RunConfig& config);
CommandReport cmd_nilpotent_pipeline(const RunConfig& config);
CommandReport cmd_semidirect_pipeline(const RunConfig& config);

// dispatch on config.command after applying defaults; writes reports under
// config.out_dir and returns the in-memory summary
CommandReport run_command(RunConfig config);

}  // namespace solrep
