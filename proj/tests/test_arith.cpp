#include <complex>
#include <vector>

#include "doctest.h"
#include "solrep/dyadic.hpp"
#include "solrep/modular.hpp"
#include "solrep/roots.hpp"
#include "solrep/subgroup.hpp"

using namespace solrep;

TEST_CASE("dyadic rational canonical form and arithmetic") {
    DyadicRational a(6, 4);  // 6/16 = 3/8
    CHECK(a.numerator() == 3);
    CHECK(a.exponent() == 3);

    DyadicRational zero(0, 7);
    CHECK(zero.is_zero());
    CHECK(zero.exponent() == 0);

    DyadicRational half(1, 1), quarter(1, 2);
    CHECK(half + quarter == DyadicRational(3, 2));
    CHECK(half - quarter == quarter);
    CHECK(half * quarter == DyadicRational(1, 3));
    CHECK(half * DyadicRational(2) == DyadicRational(1));
    CHECK((-half).numerator() == -1);

    CHECK(quarter < half);
    CHECK(DyadicRational(-1) < quarter);
    CHECK(half.doubled() == DyadicRational(1));
    CHECK(DyadicRational(3).halved(2) == DyadicRational(3, 2));

    CHECK(DyadicRational(5, 3).str() == "5/8");
    CHECK(parse_dyadic("5/8") == DyadicRational(5, 3));
    CHECK(parse_dyadic("-1/2") == DyadicRational(-1, 1));
    CHECK(parse_dyadic("3/2^4") == DyadicRational(3, 4));
    CHECK(parse_dyadic("7") == DyadicRational(7));
    CHECK_THROWS(parse_dyadic("1/3"));

    CHECK(DyadicRational::from_rational(BigRat(10, 4)) == DyadicRational(5, 1));
    CHECK(DyadicRational(7, 2).to_double() == doctest::Approx(1.75));
}

TEST_CASE("extended gcd and modular inverse against brute force") {
    for (int m = 3; m <= 45; m += 2) {
        for (int a = 0; a < m; ++a) {
            // brute-force inverse
            int found = -1;
            for (int x = 0; x < m; ++x)
                if ((a * x) % m == 1) found = x;
            if (found >= 0) {
                CHECK(mod_inverse(a, m) == found);
            } else {
                CHECK_THROWS_AS((void)mod_inverse(a, m), std::domain_error);
            }
        }
    }
    BigInt x, y;
    BigInt g = egcd(240, 46, x, y);
    CHECK(g == 2);
    CHECK(240 * x + 46 * y == 2);
}

TEST_CASE("modular residue ring operations") {
    ModularResidue a(5, 7), b(4, 7);
    CHECK((a + b).value() == 2);
    CHECK((a - b).value() == 1);
    CHECK((a * b).value() == 6);
    CHECK((-a).value() == 2);
    CHECK(a.pow(3).value() == 6);  // 125 mod 7
    CHECK(a.pow(-1).value() == 3);
    CHECK((a.inverse() * a).value() == 1);
    CHECK_THROWS(ModularResidue(1, 4));
    CHECK_THROWS(ModularResidue(1, 0));
    CHECK_THROWS((void)(a + ModularResidue(1, 5)));
}

TEST_CASE("additive halving is the unique square root mod odd k") {
    for (int k = 3; k <= 31; k += 2) {
        for (int r = 0; r < k; ++r) {
            int unique = -1, count = 0;
            for (int s = 0; s < k; ++s)
                if ((2 * s) % k == r) {
                    unique = s;
                    ++count;
                }
            REQUIRE(count == 1);
            CHECK(ModularResidue(r, k).half().value() == unique);
        }
    }
    CHECK(ModularResidue(1, 3).half().value() == 2);
    CHECK(ModularResidue(1, 5).half().value() == 3);
}

TEST_CASE("reduce_mod is the ring homomorphism sending 1/2 to inv(2)") {
    CHECK(reduce_mod(DyadicRational(1, 1), 3).value() == 2);   // 1/2 -> 2 (mod 3)
    CHECK(reduce_mod(DyadicRational(1, 2), 5).value() == 4);   // 1/4 -> 4 (mod 5)
    CHECK(reduce_mod(DyadicRational(0), 7).is_zero());
    CHECK(reduce_mod(DyadicRational(-1, 1), 3).value() == 1);  // -1/2 -> 1 (mod 3)

    // homomorphism property on a grid of dyadics
    std::vector<DyadicRational> xs;
    for (int num = -6; num <= 6; ++num)
        for (unsigned e = 0; e <= 3; ++e) xs.emplace_back(num, e);
    for (BigInt k : {3, 5, 9, 15}) {
        for (const auto& x : xs)
            for (const auto& y : xs) {
                CHECK(reduce_mod(x + y, k) == reduce_mod(x, k) + reduce_mod(y, k));
                CHECK(reduce_mod(x * y, k) == reduce_mod(x, k) * reduce_mod(y, k));
            }
    }
}

TEST_CASE("reduce_mod never kills a/2^n for 0 < a < k") {
    for (int k = 3; k <= 99; k += 2)
        for (int a = 1; a < k; ++a)
            for (unsigned n = 0; n <= 8; ++n)
                CHECK_FALSE(reduce_mod(DyadicRational(a, n), k).is_zero());
}

TEST_CASE("roots of unity form an exact abelian group") {
    RootOfUnity a(1, 2), b(1, 3);
    RootOfUnity c = a * b;  // e^{2 pi i * 5/6}
    CHECK(c.index() == 5);
    CHECK(c.order() == 6);
    CHECK((c * c.inverse()).is_one());
    CHECK(c.pow(6).is_one());
    CHECK(c.pow(2) == RootOfUnity(5, 3));

    // canonical reduction
    CHECK(RootOfUnity(2, 6) == RootOfUnity(1, 3));
    CHECK(RootOfUnity(0, 9).order() == 1);
    CHECK(RootOfUnity(9, 6) == RootOfUnity(1, 2));
    CHECK_THROWS(RootOfUnity(1, 0));

    // numeric agreement with complex arithmetic
    for (int j = 0; j < 12; ++j) {
        RootOfUnity w(j, 12);
        std::complex<double> expect = std::polar(1.0, 2.0 * 3.14159265358979323846 * j / 12.0);
        CHECK(std::abs(w.value() - expect) < 1e-12);
        CHECK(std::abs(w.value() * w.inverse().value() - 1.0) < 1e-12);
    }
    RootOfUnity w(3, 7), v(2, 5);
    CHECK(std::abs((w * v).value() - w.value() * v.value()) < 1e-12);
}

TEST_CASE("subgroup classification: cyclic case") {
    auto sub = classify_subgroup({DyadicRational(1, 1), DyadicRational(1, 3)}, false);
    CHECK(sub.kind == DyadicSubgroup::Kind::Cyclic);
    CHECK(sub.generator == DyadicRational(1, 3));  // <1/2, 1/8> = (1/8) Z

    // oracle: the generator divides every input generator with integer quotient,
    // and is itself an integer combination of them (Bezout through lifted integers)
    std::vector<std::vector<DyadicRational>> cases = {
        {DyadicRational(3, 1), DyadicRational(5, 2)},
        {DyadicRational(4), DyadicRational(6)},
        {DyadicRational(-9, 3), DyadicRational(6, 1)},
        {DyadicRational(7, 4)},
    };
    for (const auto& gens : cases) {
        auto s = classify_subgroup(gens, false);
        REQUIRE(s.kind == DyadicSubgroup::Kind::Cyclic);
        unsigned e = 0;
        for (const auto& g : gens) e = std::max(e, g.exponent());
        BigInt gcd_lift = 0;
        for (const auto& g : gens)
            gcd_lift = big_gcd(gcd_lift, g.numerator() << (e - g.exponent()));
        CHECK(s.generator == DyadicRational(gcd_lift, e));
        for (const auto& g : gens) {
            BigInt lifted = g.numerator() << (e - g.exponent());
            CHECK(lifted % gcd_lift == 0);
        }
    }
}

TEST_CASE("subgroup classification: halving closure gives odd scale") {
    auto s = classify_subgroup({DyadicRational(3)}, true);
    CHECK(s.kind == DyadicSubgroup::Kind::FullScaled);
    CHECK(s.generator == DyadicRational(3));

    CHECK(classify_subgroup({DyadicRational(3, 1), DyadicRational(5)}, true).generator ==
          DyadicRational(1));
    CHECK(classify_subgroup({DyadicRational(6)}, true).generator == DyadicRational(3));
    CHECK(classify_subgroup({DyadicRational(12, 2), DyadicRational(18)}, true).generator ==
          DyadicRational(3));

    CHECK_THROWS(classify_subgroup({DyadicRational(0)}, false));
    CHECK_THROWS(classify_subgroup({}, true));
}
