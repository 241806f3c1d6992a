#include <CLI11.hpp>
#include <cstdio>
#include <cstdint>
#include <exception>
#include <string>
#include <utility>
#include <vector>

#include "solrep/commands.hpp"

int main(int argc, char** argv) {
    CLI::App app{"certified pipelines: periodic approximation, measure densification, "
                 "finite-quotient traces, crossed-product representations"};
    app.require_subcommand(1);

    std::string config_path;
    std::string out_dir;
    std::uint64_t seed = 0;
    unsigned n_min = 0;
    unsigned n_max = 0;
    std::vector<long> levels;
    double tolerance = 0.0;
    unsigned samples = 0;
    bool self_test = false;
    std::string point;
    std::string central;
    std::string measure;

    const std::vector<std::pair<std::string, std::string>> commands = {
        {"approx-point", "certify nearest periodic approximations of sampled exact points"},
        {"densify", "replace an invariant measure by periodic orbit measures, with certificates"},
        {"nilpotent", "trace error curves of the finite quotients against the dyadic trace"},
        {"semidirect", "build crossed-product representations and check their invariants"},
    };
    for (const auto& [name, description] : commands) {
        CLI::App* sub = app.add_subcommand(name, description);
        sub->add_option("--config", config_path, "JSON config file; explicit flags override it");
        sub->add_option("--out", out_dir, "output directory for reports (default: .)");
        sub->add_option("--seed", seed, "seed for all randomness, recorded in the report");
        sub->add_option("--n-min", n_min, "smallest N / period exponent (0 = command default)");
        sub->add_option("--n-max", n_max, "largest N / period exponent (0 = command default)");
        sub->add_option("--levels", levels,
                        "levels: odd k values (semidirect) or moduli 2^(2j+1)-1 (nilpotent)")
            ->delimiter(',');
        sub->add_option("--tolerance", tolerance, "numeric tolerance (0 = command default)");
        sub->add_option("--samples", samples, "sample count (0 = command default)");
        sub->add_flag("--self-test", self_test,
                      "corrupt the certified bound by 0.5 to exercise failure reporting");
        sub->add_option("--point", point, "exact point \"num/den\" (approx-point only)");
        sub->add_option("--central", central, "central character \"num/den\" (nilpotent only)");
        sub->add_option("--measure", measure,
                        "input measure: JSON path, \"dirac\", or empty for the default");
    }
    CLI11_PARSE(app, argc, argv);

    try {
        CLI::App* sub = app.get_subcommands().front();
        solrep::RunConfig config;
        if (sub->count("--config") > 0)
            config = solrep::config_from_json(solrep::read_json_file(config_path));
        if (!config.command.empty() && config.command != sub->get_name())
            throw std::runtime_error("config command \"" + config.command +
                                     "\" does not match subcommand \"" + sub->get_name() + "\"");
        config.command = sub->get_name();
        if (sub->count("--out") > 0) config.out_dir = out_dir;
        if (sub->count("--seed") > 0) config.seed = seed;
        if (sub->count("--n-min") > 0) config.n_min = n_min;
        if (sub->count("--n-max") > 0) config.n_max = n_max;
        if (sub->count("--levels") > 0) config.levels = levels;
        if (sub->count("--tolerance") > 0) config.tolerance = tolerance;
        if (sub->count("--samples") > 0) config.samples = samples;
        if (sub->count("--self-test") > 0) config.self_test = self_test;
        if (sub->count("--point") > 0) config.point = point;
        if (sub->count("--central") > 0) config.central = central;
        if (sub->count("--measure") > 0) config.measure = measure;

        const solrep::CommandReport report = solrep::run_command(std::move(config));
        return report.all_pass ? 0 : 2;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "solrep: %s\n", e.what());
        return 1;
    }
}
