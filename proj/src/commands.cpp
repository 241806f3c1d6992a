#include "solrep/commands.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <limits>
#include <stdexcept>
#include <utility>

#include "solrep/crossed_product.hpp"
#include "solrep/dyadic.hpp"
#include "solrep/heisenberg.hpp"
#include "solrep/hs.hpp"
#include "solrep/measures.hpp"
#include "solrep/trace_approx.hpp"

namespace solrep {

namespace {

// shortest exact round-trip would differ across libcs; %.17g is lossless and stable
std::string format_double(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

void write_csv(const std::filesystem::path& path, const std::vector<std::string>& header,
               const std::vector<std::vector<std::string>>& rows) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("write_csv(): cannot open " + path.string());
    for (std::size_t i = 0; i < header.size(); ++i) out << (i ? "," : "") << header[i];
    out << "\n";
    for (const auto& row : rows) {
        for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << row[i];
        out << "\n";
    }
}

SolenoidPoint parse_exact_point(const std::string& text, const std::string& what) {
    try {
        const auto slash = text.find('/');
        if (slash == std::string::npos) return SolenoidPoint::exact(BigInt(text), 1);
        return SolenoidPoint::exact(BigInt(text.substr(0, slash)),
                                    BigInt(text.substr(slash + 1)));
    } catch (const std::exception&) {
        throw std::runtime_error(what + ": expected \"num/den\" with odd positive den, got \"" +
                                 text + "\"");
    }
}

std::string command_slug(const std::string& command) {
    std::string slug = command;
    std::replace(slug.begin(), slug.end(), '-', '_');
    return slug;
}

bool is_heisenberg_identity(const DyadicHeisenberg& g) {
    return g.x.sign() == 0 && g.y.sign() == 0 && g.z.sign() == 0;
}

// least-squares slope of y against x
double fitted_slope(const std::vector<double>& x, const std::vector<double>& y) {
    const double n = static_cast<double>(x.size());
    double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        sx += x[i];
        sy += y[i];
        sxx += x[i] * x[i];
        sxy += x[i] * y[i];
    }
    return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

// (1/3) delta_{(id,id)} + (2/3) uniform on the period-2 orbit of (1/3, 1/3)
PairMeasure default_pair_measure() {
    const auto sys = pair_mixed_system();
    const SolenoidPoint third = SolenoidPoint::exact(1, 3);
    PairMeasure mu;
    mu.atoms.emplace_back(SolenoidPair{SolenoidPoint::identity(), SolenoidPoint::identity()},
                          1.0 / 3.0);
    const PairMeasure orbit = orbit_measure(SolenoidPair{third, third}, 2, sys);
    for (const auto& [p, w] : orbit.atoms) mu.atoms.emplace_back(p, (2.0 / 3.0) * w);
    mu.canonicalize();
    return mu;
}

}  // namespace

std::vector<DyadicHeisenberg> nilpotent_default_window() {
    const auto d = [](const char* s) { return parse_dyadic(s); };
    return {
        {d("0"), d("0"), d("0")},       {d("0"), d("0"), d("1")},
        {d("0"), d("0"), d("1/2")},     {d("0"), d("0"), d("3/4")},
        {d("0"), d("0"), d("2")},       {d("1"), d("0"), d("0")},
        {d("0"), d("1"), d("0")},       {d("1"), d("1"), d("0")},
        {d("1/2"), d("0"), d("0")},     {d("0"), d("1/2"), d("1/2")},
        {d("1"), d("3"), d("1/4")},
    };
}

double DeterministicRng::normal() {
    if (have_spare_) {
        have_spare_ = false;
        return spare_;
    }
    double u1 = 0.0;
    do {
        u1 = uniform();
    } while (u1 <= 0.0);
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double a = 6.283185307179586476925286766559 * uniform();
    spare_ = r * std::sin(a);
    have_spare_ = true;
    return r * std::cos(a);
}

std::uint64_t DeterministicRng::below(std::uint64_t bound) {
    if (bound == 0) throw std::invalid_argument("DeterministicRng::below(): bound must be positive");
    // rejection sampling on the largest multiple of bound below 2^64
    const std::uint64_t rem = (std::numeric_limits<std::uint64_t>::max() % bound + 1) % bound;
    for (;;) {
        const std::uint64_t v = engine_();
        if (rem == 0 || v < std::uint64_t{0} - rem) return v % bound;
    }
}

SolenoidPoint DeterministicRng::exact_point(std::uint64_t half_den_bound) {
    const std::uint64_t den = 2 * below(half_den_bound) + 1;
    const std::uint64_t num = below(den);
    return SolenoidPoint::exact(BigInt(num), BigInt(den));
}

Eigen::MatrixXcd haar_unitary(long dim, DeterministicRng& rng) {
    if (dim <= 0) throw std::invalid_argument("haar_unitary(): dimension must be positive");
    Eigen::MatrixXcd g(dim, dim);
    for (long r = 0; r < dim; ++r)
        for (long c = 0; c < dim; ++c)
            g(r, c) = std::complex<double>(rng.normal(), rng.normal()) / std::sqrt(2.0);
    const Eigen::HouseholderQR<Eigen::MatrixXcd> qr(g);
    Eigen::MatrixXcd q = qr.householderQ();
    const Eigen::MatrixXcd r = qr.matrixQR().triangularView<Eigen::Upper>();
    // fold the R-diagonal phases into Q so the distribution is Haar, not QR-convention biased
    for (long j = 0; j < dim; ++j) {
        const std::complex<double> d = r(j, j);
        q.col(j) *= std::abs(d) > 0.0 ? d / std::abs(d) : 1.0;
    }
    return q;
}

RunConfig config_from_json(const Json& j) {
    if (!j.is_object()) throw std::runtime_error("config_from_json(): config must be a JSON object");
    RunConfig c;
    for (const auto& [key, value] : j.items()) {
        if (key == "command") c.command = value.get<std::string>();
        else if (key == "n_min") c.n_min = value.get<unsigned>();
        else if (key == "n_max") c.n_max = value.get<unsigned>();
        else if (key == "levels") c.levels = value.get<std::vector<long>>();
        else if (key == "tolerance") c.tolerance = value.get<double>();
        else if (key == "out_dir") c.out_dir = value.get<std::string>();
        else if (key == "seed") c.seed = value.get<std::uint64_t>();
        else if (key == "samples") c.samples = value.get<unsigned>();
        else if (key == "self_test") c.self_test = value.get<bool>();
        else if (key == "point") c.point = value.get<std::string>();
        else if (key == "central") c.central = value.get<std::string>();
        else if (key == "measure") c.measure = value.get<std::string>();
        else if (key == "window") c.window = value.get<std::vector<std::array<std::string, 3>>>();
        else throw std::runtime_error("config_from_json(): unknown key \"" + key + "\"");
    }
    return c;
}

Json config_to_json(const RunConfig& c) {
    Json j;
    j["command"] = c.command;
    j["n_min"] = c.n_min;
    j["n_max"] = c.n_max;
    j["levels"] = c.levels;
    j["tolerance"] = c.tolerance;
    j["out_dir"] = c.out_dir;
    j["seed"] = c.seed;
    j["samples"] = c.samples;
    j["self_test"] = c.self_test;
    j["point"] = c.point;
    j["central"] = c.central;
    j["measure"] = c.measure;
    j["window"] = c.window;
    return j;
}

void apply_command_defaults(RunConfig& c) {
    if (c.command == "approx-point") {
        if (c.n_min == 0) c.n_min = 1;
        if (c.n_max == 0) c.n_max = 10;
        if (c.samples == 0) c.samples = 1000;
    } else if (c.command == "densify") {
        if (c.n_min == 0) c.n_min = 2;
        if (c.n_max == 0) c.n_max = 10;
        if (c.tolerance == 0.0) c.tolerance = 1e-9;  // invariance slack
    } else if (c.command == "nilpotent") {
        if (c.levels.empty()) c.levels = {7, 31, 127};
        if (c.tolerance == 0.0) c.tolerance = 1e-12;
        if (c.central.empty()) c.central = "1/127";
    } else if (c.command == "semidirect") {
        if (c.levels.empty()) c.levels = {3, 5};
        if (c.n_min == 0) c.n_min = 1;
        if (c.n_max == 0) c.n_max = 2;
        if (c.tolerance == 0.0) c.tolerance = 1e-10;
        if (c.samples == 0) c.samples = 200;
    } else {
        throw std::runtime_error("run_command(): unknown command \"" + c.command + "\"");
    }
    if (c.n_max < c.n_min) throw std::runtime_error("run_command(): n_max must be at least n_min");
}

CommandReport cmd_approx_point(const RunConfig& config) {
    DeterministicRng rng(config.seed);
    std::vector<SolenoidPoint> points;
    if (!config.point.empty()) {
        points.push_back(parse_exact_point(config.point, "cmd_approx_point(): --point"));
    } else {
        points.reserve(config.samples);
        for (unsigned i = 0; i < config.samples; ++i) points.push_back(rng.exact_point());
    }

    std::vector<std::vector<std::string>> rows;
    Json failures = Json::array();
    bool all = true;
    for (std::size_t idx = 0; idx < points.size(); ++idx) {
        const SolenoidPoint& x = points[idx];
        for (unsigned N = config.n_min; N <= config.n_max; ++N) {
            const SolenoidPoint q = nearest_periodic(x, N);
            const unsigned period = 2 * N + 1;
            const bool periodic = is_periodic(q, period);
            const RhoBounds d = rho_bounds(x, q, 2 * N + 40);
            // certified bound (7/3) 2^{-N}; the self test swaps the multiplier for 1/2,
            // which the construction genuinely violates, so failure reporting is exercised
            const BigRat bound = config.self_test
                                     ? BigRat(BigInt(1), pow2(N + 1))
                                     : BigRat(BigInt(7), BigInt(BigInt(3) * pow2(N)));
            const bool pass = periodic && d.upper <= bound;
            all = all && pass;
            rows.push_back({std::to_string(idx), x.str(), std::to_string(N),
                            std::to_string(period), periodic ? "1" : "0",
                            format_double(d.upper_double()),
                            format_double(bound.convert_to<double>()), pass ? "1" : "0"});
            if (!pass)
                failures.push_back(Json{{"point", x.str()},
                                        {"N", N},
                                        {"periodic", periodic},
                                        {"distance_upper", d.upper_double()},
                                        {"bound", bound.convert_to<double>()}});
        }
    }
    write_csv(std::filesystem::path(config.out_dir) / "approx_point.csv",
              {"point_index", "point", "N", "period", "periodic", "distance_upper", "bound",
               "pass"},
              rows);

    CommandReport report;
    report.all_pass = all;
    report.summary = Json{{"points", points.size()},
                          {"checks", rows.size()},
                          {"bound", "rho(x, q_N) <= 7 / (3 * 2^N), certified in exact arithmetic"},
                          {"failures", std::move(failures)}};
    return report;
}

CommandReport cmd_densify(const RunConfig& config) {
    PairMeasure mu;
    if (config.measure.empty()) mu = default_pair_measure();
    else if (config.measure == "dirac")
        mu.atoms.emplace_back(SolenoidPair{SolenoidPoint::identity(), SolenoidPoint::identity()},
                              1.0);
    else
        mu = pair_measure_from_json(read_json_file(config.measure));

    const auto sys = pair_mixed_system();
    const auto family = default_pair_family();

    std::vector<std::vector<std::string>> rows;
    Json per_level = Json::array();
    std::vector<double> log_period, log_measured;
    bool all_certified = true;
    PairMeasure last_output;
    for (unsigned N = config.n_min; N <= config.n_max; ++N) {
        const auto result = densify(mu, sys, N, config.tolerance, family);
        all_certified = all_certified && result.certified;
        double max_measured = 0.0;
        for (const auto& row : result.birkhoff) {
            max_measured = std::max(max_measured, row.measured);
            rows.push_back({std::to_string(N), row.label, format_double(row.lipschitz),
                            format_double(row.measured), format_double(row.bound),
                            row.pass ? "1" : "0"});
        }
        Json certs = Json::array();
        for (const auto& cert : result.certificates)
            certs.push_back(Json{{"atom", cert.label},
                                 {"component", cert.component},
                                 {"orbit_sum_upper", cert.orbit_sum_upper.convert_to<double>()},
                                 {"pass", cert.pass}});
        per_level.push_back(Json{{"N", N},
                                 {"period", result.period},
                                 {"atoms", result.output.atoms.size()},
                                 {"invariance_slack", result.invariance_slack},
                                 {"max_discrepancy", max_measured},
                                 {"certified", result.certified},
                                 {"certificates", std::move(certs)}});
        // points at float-noise level carry no decay information and would skew the fit
        if (max_measured > 1e-13) {
            log_period.push_back(std::log(static_cast<double>(result.period)));
            log_measured.push_back(std::log(max_measured));
        }
        if (N == config.n_max) last_output = result.output;
    }
    write_csv(std::filesystem::path(config.out_dir) / "densify.csv",
              {"N", "function", "lipschitz", "measured", "bound", "pass"}, rows);
    write_json_file((std::filesystem::path(config.out_dir) / "densified_measure.json").string(),
                    measure_to_json(last_output));

    // discrepancy should fall off like 1/period; degenerate (all-zero) curves pass vacuously
    const bool fit_possible = log_period.size() >= 2;
    const double slope = fit_possible ? fitted_slope(log_period, log_measured) : 0.0;
    const bool slope_pass = !fit_possible || std::abs(slope + 1.0) <= 0.2;

    CommandReport report;
    report.all_pass = all_certified && slope_pass;
    report.summary = Json{{"input_atoms", mu.atoms.size()},
                          {"levels", std::move(per_level)},
                          {"slope", slope},
                          {"slope_fitted", fit_possible},
                          {"slope_pass", slope_pass}};
    return report;
}

CommandReport cmd_nilpotent_pipeline(const RunConfig& config) {
    const SolenoidPoint central =
        parse_exact_point(config.central, "cmd_nilpotent_pipeline(): --central");

    std::vector<unsigned> level_indices;
    for (long v : config.levels) {
        // accepted levels are the moduli the approximation is stated for: 2^(2j+1) - 1
        unsigned j = 0;
        for (unsigned cand = 1; cand <= 31; ++cand)
            if (BigInt(pow2(2 * cand + 1) - 1) == v) {
                j = cand;
                break;
            }
        if (j == 0)
            throw std::runtime_error(
                "cmd_nilpotent_pipeline(): levels must be of the form 2^(2j+1)-1 (7, 31, 127, "
                "...)");
        level_indices.push_back(j);
    }
    std::sort(level_indices.begin(), level_indices.end());
    level_indices.erase(std::unique(level_indices.begin(), level_indices.end()),
                        level_indices.end());

    std::vector<DyadicHeisenberg> window;
    if (config.window.empty()) {
        window = nilpotent_default_window();
    } else {
        for (const auto& triple : config.window)
            window.push_back(
                {parse_dyadic(triple[0]), parse_dyadic(triple[1]), parse_dyadic(triple[2])});
    }

    const TraceApproxResult result = nilpotent_trace_approx(central, window, level_indices);

    std::vector<std::vector<std::string>> rows;
    Json levels = Json::array();
    bool identity_exact = true;
    bool noncentral_within = true;
    bool central_monotone = true;
    bool matching_level_exact = true;
    const BigInt den = central.exact_form().den;
    double previous_central = std::numeric_limits<double>::infinity();
    for (const auto& level : result.levels) {
        for (std::size_t i = 0; i < window.size(); ++i) {
            const auto target = result.target.rows[i].second;
            const auto approx = level.table.rows[i].second;
            rows.push_back({std::to_string(level.index), level.modulus.str(), window[i].str(),
                            format_double(target.real()), format_double(target.imag()),
                            format_double(approx.real()), format_double(approx.imag()),
                            format_double(level.errors[i])});
            if (is_heisenberg_identity(window[i]) && level.errors[i] != 0.0)
                identity_exact = false;
        }
        noncentral_within = noncentral_within && level.max_noncentral_error <= config.tolerance;
        central_monotone = central_monotone && level.max_central_error <= previous_central + 1e-15;
        previous_central = level.max_central_error;
        if (BigInt(level.modulus % den) == 0 && level.max_central_error > config.tolerance)
            matching_level_exact = false;
        levels.push_back(Json{{"index", level.index},
                              {"modulus", level.modulus.str()},
                              {"approx_character", level.approx_character.str()},
                              {"max_error", level.max_error},
                              {"max_central_error", level.max_central_error},
                              {"max_noncentral_error", level.max_noncentral_error}});
    }
    write_csv(std::filesystem::path(config.out_dir) / "nilpotent.csv",
              {"level", "modulus", "element", "target_re", "target_im", "approx_re", "approx_im",
               "error"},
              rows);

    CommandReport report;
    // certified claims only; monotonicity of the central error is reported as a
    // diagnostic (an early matching level makes later levels worse again)
    report.all_pass = identity_exact && noncentral_within && matching_level_exact;
    report.summary = Json{{"central", central.str()},
                          {"window_size", window.size()},
                          {"levels", std::move(levels)},
                          {"identity_exact", identity_exact},
                          {"noncentral_within_tolerance", noncentral_within},
                          {"central_monotone", central_monotone},
                          {"matching_level_exact", matching_level_exact}};
    return report;
}

CommandReport cmd_semidirect_pipeline(const RunConfig& config) {
    DeterministicRng rng(config.seed);
    const auto base_window = heisenberg_coordinate_window();

    std::vector<std::vector<std::string>> rows;
    Json cases = Json::array();
    bool all = true;
    for (long k : config.levels) {
        if (k <= 0 || k % 2 == 0)
            throw std::runtime_error("cmd_semidirect_pipeline(): levels must be odd and positive");
        for (unsigned n = config.n_min; n <= config.n_max; ++n) {
            const auto rep =
                semidirect_rep_pipeline(BigInt(k), static_cast<long>(n), SolenoidPoint::exact(1, k));

            // covariance of the implementing unitary over the coordinate window
            const Eigen::MatrixXcd u = rep.implementing_unitary();
            double covariance = 0.0;
            for (const auto& g : base_window)
                covariance = std::max(
                    covariance,
                    hs_norm(u * rep.fiber_block(g) * u.adjoint() - rep.fiber_block(beta(g))));

            // multiplicativity and unitarity over seeded sampled pairs
            const auto sample = [&]() {
                const DyadicHeisenberg& g = base_window[rng.below(base_window.size())];
                const long m = static_cast<long>(rng.below(2 * n + 1)) - static_cast<long>(n);
                return SemidirectElement{g, m};
            };
            double defect = 0.0;
            double unitarity = 0.0;
            for (unsigned i = 0; i < config.samples; ++i) {
                const SemidirectElement s = sample();
                const SemidirectElement t = sample();
                const Eigen::MatrixXcd ms = rep.matrix(s);
                const Eigen::MatrixXcd mt = rep.matrix(t);
                defect = std::max(defect, hs_norm(rep.matrix(s * t) - ms * mt));
                unitarity = std::max(unitarity, unitarity_residual({ms}));
            }

            // normalized trace against the fiber-averaged trace on the |m| < n window
            double trace_error = 0.0;
            for (const auto& s : semidirect_window(static_cast<long>(n) - 1))
                trace_error = std::max(
                    trace_error, std::abs(normalized_trace(rep.matrix(s)) -
                                          trivial_extension_trace(rep.fiber(), n, s)));

            const bool pass = covariance <= config.tolerance && defect <= config.tolerance &&
                              unitarity <= config.tolerance && trace_error <= config.tolerance;
            all = all && pass;
            rows.push_back({std::to_string(k), std::to_string(n), std::to_string(rep.dimension()),
                            format_double(covariance), format_double(defect),
                            format_double(unitarity), format_double(trace_error),
                            pass ? "1" : "0"});

            const std::string rep_name =
                "rep_k" + std::to_string(k) + "_n" + std::to_string(n) + ".json";
            write_json_file((std::filesystem::path(config.out_dir) / rep_name).string(),
                            rep_to_json(rep.to_unitary_rep()));
            cases.push_back(Json{{"k", k},
                                 {"n", n},
                                 {"dimension", rep.dimension()},
                                 {"covariance", covariance},
                                 {"defect", defect},
                                 {"unitarity", unitarity},
                                 {"trace_error", trace_error},
                                 {"rep_file", rep_name},
                                 {"pass", pass}});
        }
    }
    write_csv(std::filesystem::path(config.out_dir) / "semidirect.csv",
              {"k", "n", "dimension", "covariance", "defect", "unitarity", "trace_error", "pass"},
              rows);

    CommandReport report;
    report.all_pass = all;
    report.summary = Json{{"cases", std::move(cases)}};
    return report;
}

CommandReport run_command(RunConfig config) {
    apply_command_defaults(config);
    std::filesystem::create_directories(config.out_dir);

    CommandReport report;
    if (config.command == "approx-point") report = cmd_approx_point(config);
    else if (config.command == "densify") report = cmd_densify(config);
    else if (config.command == "nilpotent") report = cmd_nilpotent_pipeline(config);
    else report = cmd_semidirect_pipeline(config);

    Json out;
    out["command"] = config.command;
    out["seed"] = config.seed;
    out["config"] = config_to_json(config);
    out["all_pass"] = report.all_pass;
    out["summary"] = std::move(report.summary);
    const std::string name = "report_" + command_slug(config.command) + ".json";
    write_json_file((std::filesystem::path(config.out_dir) / name).string(), out);

    report.summary = std::move(out);
    return report;
}

}  // namespace solrep
