#include <vector>

#include "doctest.h"
#include "solrep/solenoid.hpp"

using namespace solrep;

namespace {

std::vector<double> exact_prefix(const SolenoidPoint& p, unsigned len) {
    std::vector<double> out;
    for (unsigned n = 0; n < len; ++n) out.push_back(p.angle(n));
    return out;
}

BigRat bound_7_3(unsigned N) { return BigRat(7, 3) / BigRat(pow2(N), 1); }

}  // namespace

TEST_CASE("exact points are canonical and consistent") {
    auto p = SolenoidPoint::exact(5, 3);  // reduces mod 1 to 2/3
    CHECK(p.exact_form().num == 2);
    CHECK(p.exact_form().den == 3);
    CHECK(SolenoidPoint::exact(3, 9) == SolenoidPoint::exact(1, 3));
    CHECK(SolenoidPoint::exact(-1, 3) == SolenoidPoint::exact(2, 3));
    CHECK(SolenoidPoint::exact(0, 9) == SolenoidPoint::identity());
    CHECK_THROWS(SolenoidPoint::exact(1, 4));
    CHECK_THROWS(SolenoidPoint::exact(1, 0));

    // doubling consistency of the angle sequence
    auto q = SolenoidPoint::exact(3, 11);
    for (unsigned n = 0; n < 20; ++n) {
        BigRat twice = q.angle_rational(n + 1) * 2;
        BigInt whole = boost::multiprecision::numerator(twice) /
                       boost::multiprecision::denominator(twice);
        CHECK(q.angle_rational(n) == twice - BigRat(whole, 1));
    }
}

TEST_CASE("truncated points validate their prefix") {
    auto p = SolenoidPoint::exact(2, 3);
    auto t = SolenoidPoint::truncated(exact_prefix(p, 8));
    CHECK_FALSE(t.is_exact());
    CHECK(t.max_coordinate() == 7);
    CHECK(t.tail_bound() == doctest::Approx(std::ldexp(1.0, -9)));
    CHECK(t.angle(3) == doctest::Approx(p.angle(3)));

    CHECK_THROWS(SolenoidPoint::truncated({}));
    CHECK_THROWS(SolenoidPoint::truncated({0.5, 1.5}));
    CHECK_THROWS(SolenoidPoint::truncated({0.25, 0.3}));  // 2*0.3 != 0.25 mod 1
}

TEST_CASE("shifts relabel exact points and are mutually inverse") {
    auto third = SolenoidPoint::exact(1, 3);
    CHECK(shift_forward(third) == SolenoidPoint::exact(2, 3));
    CHECK(shift_backward(third) == SolenoidPoint::exact(2, 3));  // inv(2) = 2 mod 3

    for (auto p : {SolenoidPoint::exact(1, 7), SolenoidPoint::exact(4, 15),
                   SolenoidPoint::exact(2, 9), SolenoidPoint::identity()}) {
        CHECK(shift_backward(shift_forward(p)) == p);
        CHECK(shift_forward(shift_backward(p)) == p);
        CHECK(shift(p, 5) == shift(shift(p, 2), 3));
        CHECK(shift(shift(p, -4), 4) == p);
    }

    // truncated: forward gains a coordinate, backward consumes one
    auto t = SolenoidPoint::truncated(exact_prefix(SolenoidPoint::exact(2, 3), 4));
    CHECK(shift_forward(t).max_coordinate() == 4);
    CHECK(shift_backward(t).max_coordinate() == 2);
    auto one = SolenoidPoint::truncated({0.0});
    CHECK_THROWS(shift_backward(one));
}

TEST_CASE("periodicity of exact points") {
    auto seventh = SolenoidPoint::exact(1, 7);  // 7 | 2^3 - 1
    CHECK(is_periodic(seventh, 3));
    CHECK(is_periodic(seventh, 6));
    CHECK_FALSE(is_periodic(seventh, 1));
    CHECK_FALSE(is_periodic(seventh, 2));
    CHECK(minimal_period(seventh) == 3);
    CHECK(shift(seventh, 3) == seventh);
    CHECK(shift(seventh, 1) != seventh);

    CHECK(is_periodic(SolenoidPoint::identity(), 1));
    CHECK(minimal_period(SolenoidPoint::exact(1, 3)) == 2);
    CHECK(minimal_period(SolenoidPoint::exact(1, 31)) == 5);

    CHECK_THROWS(is_periodic(SolenoidPoint::truncated({0.0, 0.5}), 1));
    CHECK_THROWS(is_periodic(SolenoidPoint::identity(), 0));
}

TEST_CASE("rho closed form: distance from identity to 2/3 is 2/3") {
    auto p = SolenoidPoint::exact(2, 3);
    auto id = SolenoidPoint::identity();
    CHECK(rho_exact(p, id) == BigRat(2, 3));
    CHECK(rho_exact(id, p) == BigRat(2, 3));
    CHECK(rho_exact(p, p) == 0);

    auto bounds = rho_bounds(p, id);
    CHECK(bounds.lower <= BigRat(2, 3));
    CHECK(bounds.upper >= BigRat(2, 3));
    CHECK(bounds.upper - bounds.lower <= BigRat(1, pow2(90)));
}

TEST_CASE("rho enclosure brackets the exact value and is symmetric") {
    std::vector<SolenoidPoint> pts = {
        SolenoidPoint::identity(),     SolenoidPoint::exact(1, 3),
        SolenoidPoint::exact(2, 7),    SolenoidPoint::exact(3, 5),
        SolenoidPoint::exact(5, 9),    SolenoidPoint::exact(11, 31),
    };
    for (const auto& a : pts)
        for (const auto& b : pts) {
            BigRat exact = rho_exact(a, b);
            auto bd = rho_bounds(a, b);
            CHECK(bd.lower <= exact);
            CHECK(exact <= bd.upper);
            auto rev = rho_bounds(b, a);
            CHECK(bd.lower == rev.lower);
            CHECK(bd.upper == rev.upper);
            // triangle inequality in exact arithmetic
            for (const auto& c : pts)
                CHECK(rho_exact(a, c) <= rho_exact(a, b) + rho_exact(b, c));
        }

    // mixed exact/truncated enclosure is still an enclosure of the truncated surrogate
    auto a = SolenoidPoint::exact(2, 7);
    auto t = SolenoidPoint::truncated(exact_prefix(SolenoidPoint::exact(1, 3), 10));
    auto bd = rho_bounds(a, t);
    BigRat exact = rho_exact(a, SolenoidPoint::exact(1, 3));
    CHECK(bd.lower <= exact);
    // tail slack dominated by the prefix length
    CHECK(bd.upper - exact <= BigRat(1, pow2(10)) + BigRat(1, pow2(48)));
}

TEST_CASE("coordinate distances obey the doubling estimate") {
    auto a = SolenoidPoint::exact(3, 11);
    auto b = SolenoidPoint::exact(2, 9);
    for (unsigned k = 0; k < 24; ++k) {
        auto arc = [&](unsigned n) {
            BigRat f = a.angle_rational(n) - b.angle_rational(n);
            BigInt w = boost::multiprecision::numerator(f) /
                       boost::multiprecision::denominator(f);
            f -= BigRat(w, 1);
            if (f < 0) f += 1;
            return std::min(f, BigRat(1, 1) - f);
        };
        CHECK(arc(k) <= 2 * arc(k + 1));
    }
}

TEST_CASE("both shifts are 2-Lipschitz for rho") {
    std::vector<SolenoidPoint> pts = {SolenoidPoint::identity(), SolenoidPoint::exact(1, 3),
                                      SolenoidPoint::exact(2, 7), SolenoidPoint::exact(4, 21)};
    for (const auto& a : pts)
        for (const auto& b : pts) {
            BigRat d = rho_exact(a, b);
            CHECK(rho_exact(shift_forward(a), shift_forward(b)) <= 2 * d);
            CHECK(rho_exact(shift_backward(a), shift_backward(b)) <= 2 * d);
        }
}

TEST_CASE("nearest_periodic: identity and reproduction cases") {
    for (unsigned N = 1; N <= 5; ++N)
        CHECK(nearest_periodic(SolenoidPoint::identity(), N) == SolenoidPoint::identity());

    // inputs whose denominator already divides 2^{2N+1}-1 come back unchanged
    CHECK(nearest_periodic(SolenoidPoint::exact(1, 7), 1) == SolenoidPoint::exact(1, 7));
    CHECK(nearest_periodic(SolenoidPoint::exact(3, 7), 1) == SolenoidPoint::exact(3, 7));
    CHECK(nearest_periodic(SolenoidPoint::exact(5, 31), 2) == SolenoidPoint::exact(5, 31));
    CHECK(nearest_periodic(SolenoidPoint::exact(1, 127), 3) == SolenoidPoint::exact(1, 127));
    CHECK(nearest_periodic(SolenoidPoint::exact(6, 7), 4) == SolenoidPoint::exact(6, 7));  // 7 | 2^9 - 1

    CHECK_THROWS(nearest_periodic(SolenoidPoint::exact(1, 3), 0));
}

TEST_CASE("nearest_periodic: period and certified distance bound") {
    std::vector<SolenoidPoint> pts = {SolenoidPoint::exact(1, 3), SolenoidPoint::exact(2, 5),
                                      SolenoidPoint::exact(3, 11), SolenoidPoint::exact(7, 9),
                                      SolenoidPoint::exact(12, 13), SolenoidPoint::exact(100, 201)};
    for (const auto& p : pts)
        for (unsigned N = 1; N <= 8; ++N) {
            auto b = nearest_periodic(p, N);
            CHECK(is_periodic(b, 2 * N + 1));
            CHECK(rho_bounds(p, b).upper <= bound_7_3(N));
        }
}

TEST_CASE("nearest_periodic accepts truncated prefixes") {
    auto p = SolenoidPoint::exact(3, 11);
    auto t = SolenoidPoint::truncated(exact_prefix(p, 7));
    for (unsigned N = 1; N <= 6; ++N)
        CHECK(nearest_periodic(t, N) == nearest_periodic(p, N));
    CHECK_THROWS(nearest_periodic(t, 7));  // prefix has no coordinate 7
}
