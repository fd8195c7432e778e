#include <doctest.h>

#include "scissors/errors.hpp"
#include "scissors/rewrite.hpp"
#include "scissors/serialize.hpp"

using namespace scissors;

TEST_CASE("scalar and matrix round trips") {
    Int big("123456789012345678901234567890");
    CHECK(int_from_json(int_to_json(big)) == big);
    QuadInt x(RingDesc::make(7), -4, 9);
    CHECK(quadint_from_json(to_json(x)) == x);
    IntMatrix m = IntMatrix::from_rows({{1, -2}, {0, 5}}, 2);
    CHECK(matrix_from_json(to_json(m)) == m);
    Structure s = structure_from_factors({2, 6, 0});
    CHECK(structure_from_json(to_json(s)) == s);
    Character chi = Character::parse(RingDesc::make(2), "5,1+1*w", -1);
    CHECK(character_from_json(to_json(chi)) == chi);
}

TEST_CASE("certificate round trip") {
    RingDesc g = RingDesc::make(1);
    Character chi = Character::parse(g, "3,2+1*w");
    Certificate c = reduce_to_zero(P1Point::parse(g, "7/3+2*w"), chi);
    Json j = to_json(c);
    Certificate back = certificate_from_json(Json::parse(j.dump()));
    CHECK(to_json(back) == j);
    CHECK(check_certificate(back).ok);
    CHECK(back.moves.size() == c.moves.size());

    Certificate s = shift(FieldElem::parse(g, "1/2"), QuadInt(g, 3, 3), chi);
    Certificate sb = certificate_from_json(to_json(s));
    CHECK(check_certificate(sb).ok);
    REQUIRE(sb.end);
    CHECK(*sb.end == *s.end);
}
