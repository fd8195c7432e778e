#include <doctest.h>

#include "scissors/errors.hpp"
#include "scissors/harness.hpp"
#include "scissors/rewrite.hpp"

using namespace scissors;

namespace {

QuadInt Q(int m, long a, long b = 0) { return QuadInt(RingDesc::make(m), a, b); }
FieldElem F(int m, std::string_view s) { return FieldElem::parse(RingDesc::make(m), s); }
P1Point P(int m, std::string_view s) { return P1Point::parse(RingDesc::make(m), s); }

}  // namespace

TEST_CASE("shift lattices") {
    ShiftLattice a = shift_lattice(Q(1, 1, 1));
    CHECK(a.basis == (std::vector<QuadInt>{Q(1, 2), Q(1, 1, 1)}));
    CHECK(hermite(a.hnf()).basis == hermite(IntMatrix::from_rows({{2, 0}, {1, 1}}, 2)).basis);
    ShiftLattice b = shift_lattice(Q(1, 3));
    CHECK(b.basis == std::vector<QuadInt>{Q(1, 3)});
    CHECK_FALSE(is_full_lattice(b.hnf()));
    CHECK(is_full_lattice(shift_lattice(Q(3, 0, 1)).hnf()));
    CHECK_THROWS_AS(shift_lattice(Q(1, 0)), DomainError);
    CHECK(coords(Q(7, 4, -2)) == Vec{4, -2});
    // the ideal (l) contains l Z[l] and equals it when l is not rational
    for (int m : kSupportedRings)
        for (const auto& p : canonical_primes(RingDesc::make(m), 40)) {
            HNFResult h = hermite(shift_lattice(p).hnf());
            HNFResult pw = hermite(power_span(p, 4));
            for (std::size_t i = 0; i < pw.rank(); ++i) CHECK(in_lattice(h, pw.basis.row(i)));
        }
}

TEST_CASE("coverings") {
    CoveringResult a = check_covering(Q(1, 3), Q(1, 7), CoverMode::FourTerm);
    CHECK(a.covers);
    CHECK(a.lattices.size() == 4);
    CHECK(a.witness == IntMatrix::identity(2));
    CoveringResult b = check_covering(Q(2, 0, 1), Q(2, 1, 1), CoverMode::ThreeTerm);
    CHECK(b.covers);
    CHECK_THROWS_AS(check_covering(Q(1, 3), Q(1, -3), CoverMode::FourTerm), PreconditionError);
    CHECK_THROWS_AS(check_covering(Q(1, 3), Q(1, 6), CoverMode::FourTerm), PreconditionError);
    CHECK(to_string(CoverMode::ThreeTerm) == "ThreeTerm");
}

TEST_CASE("unsupported characters") {
    RingDesc g = RingDesc::make(1);
    P1Point x = P(1, "2+1*w");
    CHECK_THROWS_AS(reduce_to_zero(x, Character::trivial(g)), UnsupportedCharacter);
    CHECK_THROWS_AS(reduce_to_zero(x, Character::parse(g, "3")), UnsupportedCharacter);
    CHECK_THROWS_AS(reduce_to_zero(x, Character::parse(g, "3,7", -1)), UnsupportedCharacter);
    CHECK_NOTHROW(find_moves(Character::parse(g, "3,7")));
}

TEST_CASE("trivial certificates") {
    Character chi = Character::parse(RingDesc::make(1), "3,2+1*w");
    Certificate s = shift(F(1, "5/7"), Q(1, 0), chi);
    CHECK(s.moves.empty());
    CHECK_FALSE(s.claims_zero);
    CHECK(check_certificate(s).ok);
    Certificate one = reduce_to_zero(P(1, "1"), chi);
    CHECK(one.moves.empty());
    CHECK(one.claims_zero);
    CHECK(check_certificate(one).ok);

    Certificate bogus = one;
    bogus.start = P(1, "2");
    CheckResult r = check_certificate(bogus);
    CHECK_FALSE(r.ok);
    CHECK(r.failed_at == std::optional<std::size_t>(0));
}

TEST_CASE("reduction certificates check and tampering is caught") {
    Character chi = Character::parse(RingDesc::make(1), "3,2+1*w");
    Certificate c = reduce_to_zero(P(1, "7/3+2*w"), chi);
    REQUIRE(check_certificate(c).ok);
    REQUIRE_FALSE(c.moves.empty());
    std::size_t i = 0;
    while (i < c.moves.size() && !c.moves[i].ell) ++i;
    REQUIRE(i < c.moves.size());
    Certificate bad = c;
    bad.moves[i].ell = F(1, "2");  // chi(2) = 1, recorded -1
    CheckResult r = check_certificate(bad);
    CHECK_FALSE(r.ok);
    CHECK(r.failed_at == std::optional<std::size_t>(i));

    Certificate wrong_end = c;
    wrong_end.claims_zero = false;
    wrong_end.end = P(1, "5");
    CheckResult e = check_certificate(wrong_end);
    CHECK_FALSE(e.ok);
    CHECK(e.failed_at == std::optional<std::size_t>(c.moves.size()));
}

TEST_CASE("shift certificates") {
    Rng rng(67);
    for (int m : kSupportedRings) {
        RingDesc ring = RingDesc::make(m);
        for (int i = 0; i < 10; ++i) {
            Character chi = random_pair_character(rng, ring, 40);
            if (classify(chi).kind != CharacterKind::MultiPrime) continue;
            MovePlan plan = find_moves(chi);
            FieldElem a(random_quadint(rng, ring, 20), random_nonzero(rng, ring, Int(100)));
            QuadInt t = random_quadint(rng, ring, 20);
            Certificate c = shift(a, t, plan);
            CHECK(check_certificate(c).ok);
            REQUIRE(c.end);
            CHECK(c.end->value() == a + FieldElem(t));
            CHECK(c.end_sign == 1);
        }
    }
}

TEST_CASE("reduction terminates with decreasing trace") {
    Rng rng(71);
    for (int m : kSupportedRings) {
        RingDesc ring = RingDesc::make(m);
        for (int i = 0; i < 8; ++i) {
            Character chi = random_pair_character(rng, ring, 40);
            FieldElem x(random_quadint(rng, ring, 40), random_nonzero(rng, ring, Int(500)));
            P1Point p = x.is_zero() ? P1Point::infinity(ring) : P1Point(x);
            Certificate c = reduce_to_zero(p, chi);
            CHECK(check_certificate(c).ok);
            for (std::size_t k = 1; k < c.trace.size(); ++k) CHECK(c.trace[k] < c.trace[k - 1]);
        }
    }
    CHECK_THROWS_AS(reduce_to_zero(P(1, "7/3+2*w"), Character::parse(RingDesc::make(1), "3,2+1*w"), 1),
                    BudgetExceeded);
}

TEST_CASE("specialization") {
    RingDesc g = RingDesc::make(1);
    Valuation v3 = Valuation::at(Q(1, 3));
    ResidueTarget t3(v3);
    const BlochContext& k9 = t3.context();
    CHECK(k9.q() == 9);
    CHECK(t3.solver().equal(specialize(P(1, "3"), t3), k9.p_c()));
    CHECK(t3.solver().equal(specialize(P(1, "1/3"), t3), vec_sub(t3.prebloch().zero(), k9.p_c())));
    CHECK(t3.solver().equal(specialize(P(1, "0"), t3), k9.p_c()));
    CHECK(t3.solver().equal(specialize(P1Point::infinity(g), t3), vec_sub(t3.prebloch().zero(), k9.p_c())));
    Valuation v5 = Valuation::at(Q(1, 2, 1));
    ResidueTarget t5(v5);
    CHECK(specialize(P(1, "w"), t5) == t5.context().p_symbol(t5.context().field().from_int(3)));
    CHECK(valuation_sign(F(1, "3"), v3) == -1);
    CHECK(valuation_sign(F(1, "9/2"), v3) == 1);
    FFElem z{2, 1};
    CHECK(reduce_mod(residue_lift(z, v3), v3) == z);
    CHECK_THROWS_AS(fiveterm_specializes(F(1, "1"), F(1, "2"), v3), PreconditionError);
}

TEST_CASE("five-term relations specialize after inverting 2") {
    Rng rng(73);
    std::size_t integral_failures = 0, total = 0;
    for (int m : kSupportedRings) {
        RingDesc ring = RingDesc::make(m);
        for (const Valuation& v : valuations_up_to(ring, 13)) {
            ResidueTarget t(v);
            for (int i = 0; i < 15; ++i) {
                FieldElem x(random_nonzero(rng, ring, Int(300)), random_nonzero(rng, ring, Int(300)));
                FieldElem y(random_nonzero(rng, ring, Int(300)), random_nonzero(rng, ring, Int(300)));
                if (x.is_one() || y.is_one() || x == y) continue;
                ++total;
                CHECK(fiveterm_specializes(x, y, t));
                if (!fiveterm_specializes(x, y, t, true)) ++integral_failures;
            }
        }
    }
    MESSAGE("integral five-term failures: " << integral_failures << " of " << total);
    CHECK(total > 100);
}
