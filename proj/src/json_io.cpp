#include "solrep/json_io.hpp"

#include <fstream>
#include <stdexcept>

namespace solrep {

Json point_to_json(const SolenoidPoint& p) {
    Json j;
    if (p.is_exact()) {
        const auto& e = p.exact_form();
        j["num"] = e.num.str();
        j["den"] = e.den.str();
    } else {
        j["prefix"] = p.truncated_form().prefix;
    }
    return j;
}

SolenoidPoint point_from_json(const Json& j) {
    if (j.contains("prefix"))
        return SolenoidPoint::truncated(j.at("prefix").get<std::vector<double>>());
    if (!j.contains("num") || !j.contains("den"))
        throw std::invalid_argument("point_from_json(): expected num/den or prefix");
    return SolenoidPoint::exact(BigInt(j.at("num").get<std::string>()),
                                BigInt(j.at("den").get<std::string>()));
}

Json pair_to_json(const SolenoidPair& p) {
    Json j;
    j["first"] = point_to_json(p.first);
    j["second"] = point_to_json(p.second);
    return j;
}

SolenoidPair pair_from_json(const Json& j) {
    return {point_from_json(j.at("first")), point_from_json(j.at("second"))};
}

namespace {

template <typename Point, typename ToJson>
Json measure_to_json_impl(const FiniteMeasure<Point>& mu, const char* space, ToJson to_json) {
    Json j;
    j["space"] = space;
    j["atoms"] = Json::array();
    for (const auto& [p, w] : mu.atoms) {
        Json atom;
        atom["point"] = to_json(p);
        atom["weight"] = w;
        j["atoms"].push_back(std::move(atom));
    }
    return j;
}

template <typename Point, typename FromJson>
FiniteMeasure<Point> measure_from_json_impl(const Json& j, const char* space, FromJson from_json) {
    if (j.at("space").get<std::string>() != space)
        throw std::invalid_argument(std::string("measure_from_json(): expected space ") + space);
    FiniteMeasure<Point> mu;
    for (const auto& atom : j.at("atoms"))
        mu.atoms.emplace_back(from_json(atom.at("point")), atom.at("weight").get<double>());
    mu.canonicalize();
    mu.validate();
    return mu;
}

}  // namespace

Json measure_to_json(const PointMeasure& mu) {
    return measure_to_json_impl(mu, "solenoid", point_to_json);
}

Json measure_to_json(const PairMeasure& mu) {
    return measure_to_json_impl(mu, "solenoid_pair", pair_to_json);
}

PointMeasure point_measure_from_json(const Json& j) {
    return measure_from_json_impl<SolenoidPoint>(j, "solenoid", point_from_json);
}

PairMeasure pair_measure_from_json(const Json& j) {
    return measure_from_json_impl<SolenoidPair>(j, "solenoid_pair", pair_from_json);
}

Json rep_to_json(const UnitaryRep& rep) {
    Json out;
    out["dimension"] = rep.dimension();
    Json gens = Json::array();
    for (const auto& [label, image] : rep.generators()) {
        Json rows = Json::array();
        for (long r = 0; r < image.rows(); ++r) {
            Json row = Json::array();
            for (long c = 0; c < image.cols(); ++c)
                row.push_back(Json::array({image(r, c).real(), image(r, c).imag()}));
            rows.push_back(std::move(row));
        }
        gens.push_back(Json{{"label", label}, {"matrix", std::move(rows)}});
    }
    out["generators"] = std::move(gens);
    return out;
}

Json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("read_json_file(): cannot open " + path);
    return Json::parse(in);
}

void write_json_file(const std::string& path, const Json& j) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("write_json_file(): cannot open " + path);
    out << j.dump(2) << "\n";
}

}  // namespace solrep
