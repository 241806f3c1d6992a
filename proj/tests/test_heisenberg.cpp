#include <doctest.h>

#include <random>

#include "solrep/cocycle.hpp"
#include "solrep/heisenberg.hpp"

using namespace solrep;

namespace {

DyadicRational random_dyadic(std::mt19937_64& rng) {
    std::uniform_int_distribution<long> num(-100, 100);
    std::uniform_int_distribution<unsigned> exp(0, 8);
    return DyadicRational(BigInt(num(rng)), exp(rng));
}

DyadicHeisenberg random_element(std::mt19937_64& rng) {
    return {random_dyadic(rng), random_dyadic(rng), random_dyadic(rng)};
}

DyadicPair random_pair(std::mt19937_64& rng) {
    return {random_dyadic(rng), random_dyadic(rng)};
}

}  // namespace

TEST_CASE("heisenberg group law") {
    DyadicHeisenberg e = dyadic_heisenberg_identity();
    DyadicHeisenberg a{1, 2, 3}, b{DyadicRational::half_power(1), 1, -2};

    CHECK(a * e == a);
    CHECK(e * a == a);
    CHECK(a * a.inverse() == e);
    CHECK(a.inverse() * a == e);
    CHECK(a.str() == "(1,2,3)");

    // x-coordinate of the left factor multiplies the y-coordinate of the right
    DyadicHeisenberg ab = a * b;
    CHECK(ab.x == DyadicRational(3, 1));
    CHECK(ab.y == DyadicRational(3));
    CHECK(ab.z == DyadicRational(2));  // 3 + (-2) + 1*1

    std::mt19937_64 rng(11);
    for (int i = 0; i < 200; ++i) {
        DyadicHeisenberg p = random_element(rng), q = random_element(rng),
                         r = random_element(rng);
        CHECK((p * q) * r == p * (q * r));
        CHECK((p * q).inverse() == q.inverse() * p.inverse());
    }
}

TEST_CASE("commutators are central and bilinear in the off-diagonal entries") {
    std::mt19937_64 rng(12);
    for (int i = 0; i < 200; ++i) {
        DyadicHeisenberg p = random_element(rng), q = random_element(rng);
        DyadicHeisenberg c = commutator(p, q);
        CHECK(c.is_central());
        CHECK(c.z == p.x * q.y - p.y * q.x);
    }
    CHECK(commutator(DyadicHeisenberg{1, 0, 0}, DyadicHeisenberg{0, 1, 0}) ==
          DyadicHeisenberg{0, 0, 1});
}

TEST_CASE("doubling automorphism") {
    DyadicHeisenberg g{1, 2, 3};
    CHECK(beta(g) == DyadicHeisenberg{2, 1, 3});
    CHECK(beta_inverse(beta(g)) == g);
    CHECK(beta_power(g, 0) == g);
    CHECK(beta_power(g, 3) == beta(beta(beta(g))));
    CHECK(beta_power(beta_power(g, -4), 4) == g);

    std::mt19937_64 rng(13);
    for (int i = 0; i < 200; ++i) {
        DyadicHeisenberg p = random_element(rng), q = random_element(rng);
        CHECK(beta(p * q) == beta(p) * beta(q));
        CHECK(beta_inverse(p * q) == beta_inverse(p) * beta_inverse(q));
    }
}

TEST_CASE("semidirect extension by the automorphism") {
    SemidirectElement e = SemidirectElement::identity();
    SemidirectElement s{{1, 0, 0}, 1}, t{{0, 1, 0}, -2};

    CHECK(s * e == s);
    CHECK(e * s == s);
    CHECK(s * s.inverse() == e);
    CHECK(s.inverse() * s == e);
    CHECK((s * t).m == -1);
    CHECK((s * t).g == DyadicHeisenberg{1, 0, 0} * beta(DyadicHeisenberg{0, 1, 0}));
    CHECK(s.str() == "(1,0,0)*t^1");

    std::mt19937_64 rng(14);
    std::uniform_int_distribution<long> shift(-5, 5);
    for (int i = 0; i < 200; ++i) {
        SemidirectElement p{random_element(rng), shift(rng)};
        SemidirectElement q{random_element(rng), shift(rng)};
        SemidirectElement r{random_element(rng), shift(rng)};
        CHECK((p * q) * r == p * (q * r));
        CHECK(p * p.inverse() == e);
    }
}

TEST_CASE("reduction to the mod-k quotient is a homomorphism") {
    BigInt three(3);
    ModularHeisenberg half = heisenberg_mod({DyadicRational::half_power(1), 0, 0}, three);
    CHECK(half == ModularHeisenberg{ModularResidue(2, three), ModularResidue(0, three),
                                    ModularResidue(0, three)});
    CHECK(heisenberg_mod(dyadic_heisenberg_identity(), three) ==
          modular_heisenberg_identity(three));

    std::mt19937_64 rng(15);
    for (int i = 0; i < 1000; ++i) {
        DyadicHeisenberg p = random_element(rng), q = random_element(rng);
        for (long k : {3, 5, 7, 9, 15}) {
            BigInt kk(k);
            CHECK(heisenberg_mod(p * q, kk) == heisenberg_mod(p, kk) * heisenberg_mod(q, kk));
            CHECK(heisenberg_mod(p.inverse(), kk) == heisenberg_mod(p, kk).inverse());
        }
    }
}

TEST_CASE("dyadic characters from exact solenoid points") {
    DyadicCharacter trivial;
    CHECK(trivial.is_trivial());
    CHECK(trivial(DyadicRational(5, 3)) == RootOfUnity::one());

    DyadicCharacter chi(SolenoidPoint::exact(1, 3));
    CHECK(chi.kernel_scale() == 3);
    CHECK(chi(DyadicRational(1)) == RootOfUnity(1, 3));
    CHECK(chi(DyadicRational::half_power(1)) == RootOfUnity(2, 3));  // 1/2 -> inv(2) mod 3
    CHECK(chi(DyadicRational(3)) == RootOfUnity::one());
    CHECK(chi(DyadicRational(3, 1)) == RootOfUnity::one());  // kernel is all of 3*Z[1/2]

    CHECK(DyadicCharacter::from_phase(RootOfUnity(2, 5))(DyadicRational(1)) == RootOfUnity(2, 5));
    CHECK_THROWS_WITH_AS(DyadicCharacter::from_phase(RootOfUnity(1, 2)),
                         "DyadicCharacter::from_phase(): order must be odd",
                         std::invalid_argument);
    CHECK_THROWS_WITH_AS(DyadicCharacter(SolenoidPoint::truncated({0.3})),
                         "DyadicCharacter: point must be exact", std::invalid_argument);

    std::mt19937_64 rng(16);
    for (int i = 0; i < 300; ++i) {
        DyadicRational s = random_dyadic(rng), t = random_dyadic(rng);
        CHECK(chi(s + t) == chi(s) * chi(t));
        CHECK(chi(-s) == chi(s).inverse());
    }
}

TEST_CASE("character composed with halving undoes doubling") {
    DyadicCharacter chi(SolenoidPoint::exact(3, 7));
    DyadicCharacter half = chi.composed_half();
    DyadicCharacter doubled = chi.composed_double();

    std::mt19937_64 rng(17);
    for (int i = 0; i < 300; ++i) {
        DyadicRational t = random_dyadic(rng);
        CHECK(half(t.doubled()) == chi(t));
        CHECK(half(t) == chi(t.halved()));
        CHECK(doubled(t) == chi(t.doubled()));
        CHECK(chi.composed_double(-1)(t) == half(t));
        CHECK(chi.composed_double(3)(t) == chi(t.doubled(3)));
    }
}

TEST_CASE("twisting cocycle identity and antisymmetry of the form") {
    DyadicCharacter chi(SolenoidPoint::exact(2, 9));
    std::mt19937_64 rng(18);
    for (int i = 0; i < 300; ++i) {
        DyadicPair g = random_pair(rng), h = random_pair(rng), l = random_pair(rng);
        CHECK(symplectic_form(g, h) == -symplectic_form(h, g));
        // sigma(g,h) sigma(g+h,l) = sigma(h,l) sigma(g,h+l), exactly
        CHECK(twisting_cocycle(chi, g, h) * twisting_cocycle(chi, g + h, l) ==
              twisting_cocycle(chi, h, l) * twisting_cocycle(chi, g, h + l));
        CHECK(twisting_cocycle(chi, g, g) == RootOfUnity::one());
    }
}
