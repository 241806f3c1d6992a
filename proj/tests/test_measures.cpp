#include <doctest.h>

#include <cmath>
#include <numbers>
#include <sstream>

#include "solrep/json_io.hpp"
#include "solrep/measures.hpp"

using namespace solrep;

namespace {

SolenoidPoint ex(long num, long den) { return SolenoidPoint::exact(num, den); }

PointMeasure seven_cycle() {
    return orbit_measure(ex(1, 7), 3, doubling_system());
}

// fixed pair measure: identity atom plus the 2-cycle of (1/3, 1/3) under the mixed shift
PairMeasure mixed_invariant() {
    PairMeasure mu;
    mu.atoms.emplace_back(SolenoidPair{SolenoidPoint::identity(), SolenoidPoint::identity()},
                          1.0 / 3.0);
    auto orbit = orbit_measure(SolenoidPair{ex(1, 3), ex(1, 3)}, 2, pair_mixed_system());
    for (const auto& [p, w] : orbit.atoms) mu.atoms.emplace_back(p, (2.0 / 3.0) * w);
    mu.canonicalize();
    return mu;
}

}  // namespace

TEST_CASE("finite measure validation and canonical form") {
    PointMeasure mu;
    mu.atoms.emplace_back(ex(2, 3), 0.25);
    mu.atoms.emplace_back(ex(1, 3), 0.5);
    mu.atoms.emplace_back(ex(2, 3), 0.25);
    mu.atoms.emplace_back(ex(1, 7), 0.0);
    mu.canonicalize();
    REQUIRE(mu.atoms.size() == 2);
    CHECK(mu.atoms[0].first == ex(1, 3));
    CHECK(mu.atoms[1].first == ex(2, 3));
    CHECK(mu.atoms[1].second == doctest::Approx(0.5));
    mu.validate();

    PointMeasure bad;
    bad.atoms.emplace_back(ex(0, 1), 0.5);
    CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
    bad.atoms.emplace_back(ex(1, 3), -0.1);
    CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
}

TEST_CASE("orbit measure of a periodic point is shift invariant") {
    auto sys = doubling_system();
    auto mu = seven_cycle();
    REQUIRE(mu.atoms.size() == 3);
    CHECK(mu.atoms[0].first == ex(1, 7));
    CHECK(mu.atoms[1].first == ex(2, 7));
    CHECK(mu.atoms[2].first == ex(4, 7));

    auto push = pushforward(mu, sys);
    CHECK(discrepancy(mu, push, default_solenoid_family()) == 0.0);

    CHECK_THROWS_WITH_AS(orbit_measure(ex(1, 7), 2, sys),
                         "orbit_measure(): point is not periodic with the declared period",
                         std::invalid_argument);
    CHECK_THROWS_AS(orbit_measure(ex(1, 7), 0, sys), std::invalid_argument);
}

TEST_CASE("mixed pair system composes the two shifts") {
    auto sys = pair_mixed_system();
    SolenoidPair p{ex(1, 3), ex(1, 3)};
    auto q = sys.forward(p);
    CHECK(q.first == ex(2, 3));
    CHECK(q.second == ex(2, 3));  // backward shift: 1 * inv(2) = 2 mod 3
    CHECK(sys.backward(q) == p);
    CHECK(iterate(sys, p, 2) == p);

    auto mu = mixed_invariant();
    REQUIRE(mu.atoms.size() == 3);
    mu.validate();
    CHECK(discrepancy(mu, pushforward(mu, sys), default_pair_family()) == 0.0);
}

TEST_CASE("test function factors, labels and Lipschitz constants") {
    TestFunction f{{{true, 0, 2, 3}}};
    CHECK(f.lipschitz() == doctest::Approx(2.0 * std::numbers::pi * 3 * 4));
    CHECK(f.label() == "cos2.h3[0]");
    CHECK(f(ex(0, 1)) == doctest::Approx(1.0));

    TestFunction g{{{false, 0, 0, 1}, {true, 1, 1, 2}}};
    CHECK(g.lipschitz() ==
          doctest::Approx(2.0 * std::numbers::pi * 1 + 2.0 * std::numbers::pi * 2 * 2));
    CHECK(g.label() == "sin0.h1[0]*cos1.h2[1]");
    SolenoidPair p{ex(1, 3), ex(1, 7)};
    double expect = std::sin(2.0 * std::numbers::pi / 3.0) *
                    std::cos(2.0 * std::numbers::pi * 2.0 * ex(1, 7).angle(1));
    CHECK(g(p) == doctest::Approx(expect));

    // pair-component factor rejected on a single point
    CHECK_THROWS_AS(g(ex(1, 3)), std::invalid_argument);

    CHECK(default_solenoid_family().size() == 30);
    CHECK(default_pair_family().size() == 68);
}

TEST_CASE("family members satisfy their declared Lipschitz bound") {
    std::vector<SolenoidPair> pts = {
        {ex(1, 3), ex(2, 5)}, {ex(4, 9), ex(1, 1)}, {ex(3, 11), ex(5, 7)}, {ex(0, 1), ex(1, 15)}};
    for (const auto& f : default_pair_family()) {
        for (size_t i = 0; i < pts.size(); ++i)
            for (size_t j = i + 1; j < pts.size(); ++j) {
                double dist = rho_exact(pts[i].first, pts[j].first).convert_to<double>() +
                              rho_exact(pts[i].second, pts[j].second).convert_to<double>();
                CHECK(std::fabs(f(pts[i]) - f(pts[j])) <= f.lipschitz() * dist * (1 + 1e-12));
            }
    }
}

TEST_CASE("discrepancy separates distinct measures and rejects empty families") {
    auto mu = seven_cycle();
    PointMeasure nu;
    nu.atoms.emplace_back(ex(0, 1), 1.0);
    auto family = default_solenoid_family();
    CHECK(discrepancy(mu, mu, family) == 0.0);
    CHECK(discrepancy(mu, nu, family) > 0.1);
    CHECK_THROWS_AS(discrepancy(mu, nu, {}), std::invalid_argument);
}

TEST_CASE("densify reproduces a measure already supported on compatible periods") {
    // atoms of denominator 7 and P = 3: the periodic approximation is the identity map
    auto mu = seven_cycle();
    auto res = densify(mu, doubling_system(), 1);
    CHECK(res.period == 3);
    CHECK(res.invariance_slack == 0.0);
    REQUIRE(res.output.atoms.size() == 3);
    for (size_t i = 0; i < 3; ++i) {
        CHECK(res.output.atoms[i].first == mu.atoms[i].first);
        CHECK(res.output.atoms[i].second == doctest::Approx(mu.atoms[i].second));
    }
    CHECK(res.certified);
    REQUIRE(res.certificates.size() == 3);
    for (const auto& c : res.certificates) {
        CHECK(c.pass);
        // identical orbits: only the enclosure tails remain
        CHECK(c.orbit_sum_upper.convert_to<double>() < 1e-11);
    }
    REQUIRE(res.birkhoff.size() == default_solenoid_family().size());
    for (const auto& row : res.birkhoff) {
        CHECK(row.pass);
        CHECK(row.measured <= 1e-12);
    }
}

TEST_CASE("densify moves unsupported atoms onto certified periodic orbits") {
    auto sys = pair_mixed_system();
    auto mu = mixed_invariant();
    for (unsigned N : {2u, 4u}) {
        auto res = densify(mu, sys, N);
        CHECK(res.period == 2 * N + 1);
        CHECK(res.certified);
        res.output.validate(1e-9);
        // output is a mixture of genuine orbits, hence exactly invariant again
        CHECK(discrepancy(res.output, pushforward(res.output, sys), default_pair_family()) ==
              0.0);
        for (const auto& [p, w] : res.output.atoms) {
            (void)w;
            CHECK(is_periodic(p.first, res.period));
            CHECK(is_periodic(p.second, res.period));
        }
        // denominator 3 never divides 2^(2N+1)-1, so the support really moved
        CHECK(res.invariance_slack == 0.0);
        bool moved = true;
        for (const auto& [p, w] : res.output.atoms) {
            (void)w;
            if (p.first == ex(1, 3)) moved = false;
        }
        CHECK(moved);
    }
}

TEST_CASE("densify rejects measures that are not invariant") {
    PointMeasure mu;
    mu.atoms.emplace_back(ex(1, 7), 0.9);
    mu.atoms.emplace_back(ex(2, 7), 0.1);
    CHECK_THROWS_WITH_AS(densify(mu, doubling_system(), 2),
                         "densify(): input measure is not invariant within slack",
                         std::invalid_argument);
}

TEST_CASE("scale relabeling inverts multiplication by k on compatible denominators") {
    CHECK(scale_relabel(ex(1, 5), 3) == ex(2, 5));  // 3 * 2 = 6 = 1 mod 5
    CHECK(scale_relabel(ex(1, 5), 1) == ex(1, 5));
    CHECK(scale_relabel(ex(0, 1), 9) == ex(0, 1));

    // relabeling commutes with both shifts
    for (long k : {3L, 5L, 9L}) {
        SolenoidPoint p = ex(4, 11);
        CHECK(scale_relabel(shift_forward(p), k) == shift_forward(scale_relabel(p, k)));
        CHECK(scale_relabel(shift_backward(p), k) == shift_backward(scale_relabel(p, k)));
    }

    CHECK_THROWS_AS(scale_relabel(ex(1, 5), 4), std::invalid_argument);
    CHECK_THROWS_AS(scale_relabel(ex(1, 15), 3), std::domain_error);
    auto trunc = SolenoidPoint::truncated({0.5, 0.25});
    CHECK_THROWS_AS(scale_relabel(trunc, 3), std::invalid_argument);
}

TEST_CASE("scaled embedding relabels pair measures atomwise") {
    auto mu = mixed_invariant();
    auto emb = scaled_embedding(mu, 5);
    REQUIRE(emb.atoms.size() == 3);
    emb.validate();
    // 5 inverts to 2 mod 3, so the two denominator-3 atoms trade places
    CHECK(emb.atoms[1].first == SolenoidPair{ex(1, 3), ex(1, 3)});
    CHECK(emb.atoms[2].first == SolenoidPair{ex(2, 3), ex(2, 3)});
    CHECK(scale_relabel(ex(1, 3), 5) == ex(2, 3));
    CHECK(scaled_embedding(mu, 1).atoms == mu.atoms);
    // embedding commutes with the product dynamics
    auto sys = pair_mixed_system();
    auto lhs = pushforward(emb, sys);
    auto rhs = scaled_embedding(pushforward(mu, sys), 5);
    CHECK(discrepancy(lhs, rhs, default_pair_family()) == 0.0);
}

TEST_CASE("points and measures round-trip through json") {
    auto p = ex(3, 11);
    CHECK(point_from_json(point_to_json(p)) == p);

    auto t = SolenoidPoint::truncated({0.75, 0.375, 0.1875});
    CHECK(point_from_json(point_to_json(t)) == t);

    SolenoidPair pr{ex(1, 3), t};
    CHECK(pair_from_json(pair_to_json(pr)) == pr);

    auto mu = seven_cycle();
    auto back = point_measure_from_json(measure_to_json(mu));
    REQUIRE(back.atoms.size() == mu.atoms.size());
    for (size_t i = 0; i < mu.atoms.size(); ++i) {
        CHECK(back.atoms[i].first == mu.atoms[i].first);
        CHECK(back.atoms[i].second == doctest::Approx(mu.atoms[i].second));
    }

    auto pm = mixed_invariant();
    auto pback = pair_measure_from_json(measure_to_json(pm));
    CHECK(pback.atoms.size() == pm.atoms.size());
    CHECK(discrepancy(pm, pback, default_pair_family()) == 0.0);

    CHECK_THROWS_AS(point_measure_from_json(measure_to_json(pm)), std::invalid_argument);
    CHECK_THROWS_AS(point_from_json(Json{{"num", "1"}}), std::invalid_argument);
}
