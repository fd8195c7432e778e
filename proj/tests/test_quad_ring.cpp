#include <doctest.h>

#include <algorithm>

#include "oracles.hpp"
#include "scissors/errors.hpp"
#include "scissors/harness.hpp"
#include "scissors/quad_ring.hpp"

using namespace scissors;

namespace {

QuadInt Q(int m, long a, long b = 0) { return QuadInt(RingDesc::make(m), a, b); }

}  // namespace

TEST_CASE("ring descriptors") {
    CHECK_THROWS_AS(RingDesc::make(5), DomainError);
    CHECK(RingDesc::make(7).omega_norm() == 2);
    CHECK(RingDesc::make(11).omega_norm() == 3);
    CHECK(RingDesc::make(2).discriminant() == -8);
    CHECK(RingDesc::make(3).discriminant() == -3);
}

TEST_CASE("parse and print") {
    RingDesc r = RingDesc::make(1);
    CHECK(QuadInt::parse(r, "3+2*w") == Q(1, 3, 2));
    CHECK(QuadInt::parse(r, "w") == Q(1, 0, 1));
    CHECK(QuadInt::parse(r, "2-w") == Q(1, 2, -1));
    CHECK(QuadInt::parse(r, "-7") == Q(1, -7, 0));
    CHECK(Q(1, 3, -1).to_string() == "3-1*w");
    CHECK(Q(1, 0, 1).to_string() == "0+1*w");
    CHECK_THROWS(QuadInt::parse(r, "3+*"));
}

TEST_CASE("conjugate and norm examples") {
    CHECK(Q(2, 3, 1).conj() == Q(2, 3, -1));
    CHECK(Q(7, 2, 3).conj() == Q(7, 5, -3));
    CHECK(Q(1, 3, 2).norm() == 13);
    CHECK(Q(7, 0, 1).norm() == 2);
    CHECK(Q(3, 0, 1).norm() == 1);
    CHECK_THROWS_AS(Q(1, 1) + Q(2, 1), DescriptorError);
}

TEST_CASE("arithmetic against the complex embedding") {
    Rng rng(11);
    for (int m : kSupportedRings) {
        RingDesc ring = RingDesc::make(m);
        for (int i = 0; i < 300; ++i) {
            QuadInt a = random_quadint(rng, ring, 200), b = random_quadint(rng, ring, 200),
                    c = random_quadint(rng, ring, 200);
            CHECK(oracle::norm(a) == a.norm().get_si());
            auto prod = oracle::embed(a * b), want = oracle::embed(a) * oracle::embed(b);
            CHECK(std::abs(prod - want) < 1e-6 * (1 + std::abs(want)));
            CHECK((a * b * c).norm() == a.norm() * b.norm() * c.norm());
            CHECK((a * b).conj() == a.conj() * b.conj());
            CHECK((a + b).conj() == a.conj() + b.conj());
            CHECK(a * a.conj() == QuadInt(ring, a.norm()));
            CHECK(a.conj().conj() == a);
        }
    }
}

TEST_CASE("euclidean division examples") {
    DivResult d = euclid_div(Q(1, 7, 2), Q(1, 3));
    CHECK(d.quotient == Q(1, 2, 1));
    CHECK(d.remainder == Q(1, 1, -1));
    CHECK(d.remainder.norm() == 2);
    DivResult e = euclid_div(Q(3, 5), Q(3, 2));
    CHECK(e.quotient == Q(3, 2));
    CHECK(e.remainder == Q(3, 1));
    for (int m : kSupportedRings) {
        QuadInt a = Q(m, 17, -4);
        DivResult u = euclid_div(a, Q(m, 1));
        CHECK(u.quotient == a);
        CHECK(u.remainder.is_zero());
    }
    CHECK_THROWS_AS(euclid_div(Q(1, 1), Q(1, 0)), DomainError);
}

TEST_CASE("euclidean property, random pairs") {
    Rng rng(5);
    for (int m : kSupportedRings) {
        RingDesc ring = RingDesc::make(m);
        for (int i = 0; i < 1000; ++i) {
            QuadInt a = random_quadint(rng, ring, 5000);
            QuadInt b = random_nonzero(rng, ring, Int(100000));
            DivResult d = euclid_div(a, b);
            CHECK(d.quotient * b + d.remainder == a);
            CHECK(d.remainder.norm() < b.norm());
        }
        // the rounding candidates near a/b always contain a valid quotient
        for (int i = 0; i < 100; ++i) {
            QuadInt a = random_quadint(rng, ring, 300), b = random_nonzero(rng, ring, Int(2000));
            CHECK(oracle::euclid_candidate_exists(a, b));
        }
    }
}

TEST_CASE("gcd") {
    CHECK(gcd(Q(1, 1, 1), Q(1, 2)) == Q(1, 1, 1));
    CHECK(gcd(Q(1, 3), Q(1, 7)) == Q(1, 1));
    CHECK(gcd(Q(1, -3, -1), Q(1, 0)) == canonical_associate(Q(1, -3, -1)).value);
    CHECK_THROWS(gcd(Q(1, 0), Q(1, 0)));
    Rng rng(3);
    for (int m : kSupportedRings) {
        RingDesc ring = RingDesc::make(m);
        for (int i = 0; i < 100; ++i) {
            QuadInt c = random_nonzero(rng, ring, Int(200));
            QuadInt a = c * random_quadint(rng, ring, 30), b = c * random_quadint(rng, ring, 30);
            if (a.is_zero() && b.is_zero()) continue;
            QuadInt g = gcd(a, b);
            CHECK(divides(g, a));
            CHECK(divides(g, b));
            CHECK(divides(c, g));
        }
    }
}

TEST_CASE("units") {
    CHECK(units(RingDesc::make(2)).size() == 2);
    CHECK(units(RingDesc::make(7)).size() == 2);
    CHECK(units(RingDesc::make(3)).size() == 6);
    auto u1 = units(RingDesc::make(1));
    CHECK(u1.size() == 4);
    // exactly the solutions of a^2 + b^2 = 1
    for (long a = -1; a <= 1; ++a)
        for (long b = -1; b <= 1; ++b)
            if (a * a + b * b == 1) CHECK(std::find(u1.begin(), u1.end(), Q(1, a, b)) != u1.end());
    for (const auto& u : units(RingDesc::make(3))) {
        CHECK(u.norm() == 1);
        QuadInt p = u * u * u * u * u * u;
        CHECK(p.is_one());
    }
}

TEST_CASE("primality") {
    auto w = is_prime(Q(1, 1, 1));
    CHECK(w.prime);
    CHECK(w.criterion == PrimalityCriterion::NormIsRationalPrime);
    auto three = is_prime(Q(1, 3));
    CHECK(three.prime);
    CHECK(three.kind == PrimeKind::Inert);
    CHECK(legendre(Int(-4), Int(3)) == -1);
    auto two = is_prime(Q(3, 2));
    CHECK(two.prime);
    CHECK(two.criterion == PrimalityCriterion::InertTwo);
    CHECK_FALSE(is_prime(Q(1, 5)).prime);
    CHECK_THROWS_AS(is_prime(Q(1, 0)), DomainError);
    CHECK_THROWS_AS(is_prime(Q(1, 0, 1)), DomainError);
}

TEST_CASE("primality agrees with brute force for norm <= 200") {
    for (int m : kSupportedRings) {
        RingDesc ring = RingDesc::make(m);
        for (long a = -30; a <= 30; ++a)
            for (long b = -30; b <= 30; ++b) {
                QuadInt x(ring, a, b);
                if (x.is_zero() || x.is_unit() || x.norm() > 200) continue;
                CAPTURE(x.to_string());
                CHECK(is_prime(x).prime == oracle::brute_prime(x));
            }
    }
}

TEST_CASE("canonical primes") {
    CHECK(canonical_prime(Q(1, -3)) == Q(1, 3));
    CHECK(canonical_prime(Q(1, 0, 1) * Q(1, 1, 1)) == Q(1, 1, 1));
    CHECK(canonical_prime(Q(2, 0, -1)) == Q(2, 0, 1));
    CHECK_THROWS_AS(canonical_prime(Q(1, 6)), DomainError);
    for (int m : kSupportedRings) {
        RingDesc ring = RingDesc::make(m);
        for (const auto& p : canonical_primes(ring, 300)) {
            CHECK(canonical_prime(p) == p);
            for (const auto& u : units(ring)) CHECK(canonical_prime(u * p) == p);
        }
    }
}

TEST_CASE("factorization") {
    Factorization f = factor(Q(1, 2));
    CHECK(f.unit == Q(1, 0, -1));
    REQUIRE(f.primes.size() == 1);
    CHECK(f.primes[0].first == Q(1, 1, 1));
    CHECK(f.primes[0].second == 2);
    Factorization u = factor(Q(1, 0, 1));
    CHECK(u.primes.empty());
    CHECK(u.unit == Q(1, 0, 1));
    Factorization five = factor(Q(1, 5));
    CHECK(five.primes.size() == 2);
    CHECK(five.expand() == Q(1, 5));
    CHECK_THROWS_AS(factor(Q(1, 1000003)), CapacityError);
    CHECK_THROWS_AS(factor(Q(1, 0)), DomainError);

    Rng rng(8);
    for (int m : kSupportedRings) {
        RingDesc ring = RingDesc::make(m);
        auto primes = canonical_primes(ring, 30);
        for (int i = 0; i < 100; ++i) {
            QuadInt x = units(ring)[rng.uniform(0, static_cast<long>(units(ring).size()) - 1)];
            auto k = rng.uniform(0, 4);
            for (long j = 0; j < k; ++j) x *= primes[rng.uniform(0, static_cast<long>(primes.size()) - 1)];
            Factorization g = factor(x);
            CHECK(g.expand() == x);
            long total = 0;
            for (const auto& [p, e] : g.primes) {
                CHECK(canonical_prime(p) == p);
                total += e;
            }
            CHECK(total == k);
        }
    }
}

TEST_CASE("R(alpha) lemma instances") {
    CHECK(check_r_alpha_lemma(Q(2, 0, 1)));
    CHECK(associated(Q(2, 0, 1), Q(2, 0, -1)));
    CHECK(check_r_alpha_lemma(Q(1, 2, 1)));
    CHECK(check_r_alpha_lemma(Q(2, 1, 1)));
    CHECK_THROWS_AS(check_r_alpha_lemma(Q(1, 3)), DomainError);
    CHECK_THROWS_AS(check_r_alpha_lemma(Q(7, 0, 1)), DomainError);
    // read on -m, the statement fails: N(w) = 2 divides R(w) = 0 but m = 7
    CHECK_FALSE(check_r_alpha_lemma(Q(7, 0, 1), LemmaConvention::OnNegM));
    CHECK_FALSE(check_r_alpha_lemma(Q(3, 1, 1), LemmaConvention::OnNegM));
    CHECK(check_r_alpha_lemma(Q(2, 0, 1), LemmaConvention::OnNegM));
}
