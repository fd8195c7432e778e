#include <doctest.h>

#include "scissors/errors.hpp"
#include "scissors/harness.hpp"
#include "scissors/quad_field.hpp"

using namespace scissors;

namespace {

FieldElem F(int m, std::string_view s) { return FieldElem::parse(RingDesc::make(m), s); }

}  // namespace

TEST_CASE("field elements are kept reduced") {
    RingDesc r = RingDesc::make(1);
    FieldElem a(QuadInt(r, 2), QuadInt(r, 4));
    CHECK(a == F(1, "1/2"));
    CHECK(F(1, "2+2*w/2") == F(1, "1+w"));
    CHECK(F(1, "0/5").is_zero());
    CHECK(F(1, "0/5") == F(1, "0"));
    CHECK_THROWS_AS(F(1, "1/0"), DomainError);
    CHECK_THROWS_AS(F(1, "0").inverse(), DomainError);
    CHECK(F(1, "w").inverse() == F(1, "-w"));
    CHECK((F(3, "1/3") + F(3, "2/3")).is_one());
}

TEST_CASE("field arithmetic properties") {
    Rng rng(17);
    for (int m : kSupportedRings) {
        RingDesc ring = RingDesc::make(m);
        auto sample = [&] {
            return FieldElem(random_quadint(rng, ring, 40), random_nonzero(rng, ring, Int(400)));
        };
        for (int i = 0; i < 200; ++i) {
            FieldElem a = sample(), b = sample(), c = sample();
            CHECK((a + b) * c == a * c + b * c);
            CHECK(a - a == FieldElem::from_int(ring, 0));
            if (!b.is_zero()) CHECK(a / b * b == a);
            if (!a.is_zero()) CHECK((a * a.inverse()).is_one());
            CHECK(FieldElem::parse(ring, a.to_string()) == a);
        }
    }
}

TEST_CASE("projective line") {
    RingDesc r = RingDesc::make(2);
    P1Point inf = P1Point::infinity(r);
    P1Point zero(FieldElem::from_int(r, 0));
    CHECK(inf.inverse() == zero);
    CHECK(zero.inverse() == inf);
    CHECK(P1Point::parse(r, "inf") == inf);
    CHECK(P1Point::parse(r, "1/3").inverse() == P1Point(FieldElem::from_int(r, 3)));
    CHECK_THROWS_AS(inf.value(), PreconditionError);
}

TEST_CASE("valuations") {
    RingDesc g = RingDesc::make(1);
    Valuation v2 = Valuation::at(QuadInt(g, 1, 1));
    Valuation v3 = Valuation::at(QuadInt(g, 3));
    CHECK(valuation_of(F(1, "2"), v2) == 2);
    CHECK(valuation_of(F(1, "1/3"), v3) == -1);
    CHECK(valuation_of(F(1, "5/7"), v3) == 0);
    CHECK_THROWS_AS(Valuation::at(QuadInt(g, 5)), DomainError);

    Rng rng(23);
    for (int m : kSupportedRings) {
        RingDesc ring = RingDesc::make(m);
        for (const Valuation& v : valuations_up_to(ring, 50)) {
            for (int i = 0; i < 50; ++i) {
                FieldElem a(random_nonzero(rng, ring, Int(500)), random_nonzero(rng, ring, Int(500)));
                FieldElem b(random_nonzero(rng, ring, Int(500)), random_nonzero(rng, ring, Int(500)));
                CHECK(valuation_of(a * b, v) == valuation_of(a, v) + valuation_of(b, v));
                long va = valuation_of(a, v), vb = valuation_of(b, v);
                if (!(a + b).is_zero()) CHECK(valuation_of(a + b, v) >= std::min(va, vb));
                if (va != vb && !(a + b).is_zero()) CHECK(valuation_of(a + b, v) == std::min(va, vb));
            }
        }
    }
}

TEST_CASE("residue fields") {
    RingDesc g = RingDesc::make(1);
    FiniteField k3 = residue_field(Valuation::at(QuadInt(g, 3)));
    CHECK(k3.order() == 9);
    Valuation v5 = Valuation::at(QuadInt(g, 2, 1));
    CHECK(residue_field(v5).order() == 5);
    CHECK(residue_field(Valuation::at(QuadInt(g, 1, 1))).order() == 2);
    CHECK(reduce_mod(F(1, "w"), v5) == FFElem{3, 0});
    CHECK(reduce_mod(F(1, "w"), Valuation::at(QuadInt(g, 3))) == FFElem{0, 1});
    CHECK_THROWS_AS(reduce_mod(F(1, "3"), Valuation::at(QuadInt(g, 3))), DomainError);
    CHECK(reduce_mod(F(1, "1/2"), v5) == FFElem{3, 0});
}

TEST_CASE("reduction is a ring homomorphism on the valuation ring") {
    Rng rng(29);
    for (int m : kSupportedRings) {
        RingDesc ring = RingDesc::make(m);
        for (const Valuation& v : valuations_up_to(ring, 30)) {
            FiniteField k = residue_field(v);
            CHECK(k.order() == v.residue_order());
            int done = 0;
            while (done < 40) {
                FieldElem a(random_quadint(rng, ring, 50), random_nonzero(rng, ring, Int(300)));
                FieldElem b(random_quadint(rng, ring, 50), random_nonzero(rng, ring, Int(300)));
                auto ok = [&](const FieldElem& x) { return x.is_zero() || valuation_of(x, v) >= 0; };
                auto unit = [&](const FieldElem& x) { return !x.is_zero() && valuation_of(x, v) == 0; };
                if (!unit(a) || !unit(b) || !ok(a + b)) continue;
                ++done;
                FFElem ra = reduce_mod(a, v, k), rb = reduce_mod(b, v, k);
                CHECK(reduce_mod(a * b, v, k) == k.mul(ra, rb));
                CHECK(reduce_mod(a.inverse(), v, k) == k.inv(ra));
                if (unit(a + b)) CHECK(reduce_mod(a + b, v, k) == k.add(ra, rb));
                else if (!(a + b).is_zero()) CHECK(k.add(ra, rb) == k.zero());
            }
        }
    }
}
