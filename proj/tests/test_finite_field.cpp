#include <doctest.h>

#include <set>

#include "scissors/errors.hpp"
#include "scissors/finite_field.hpp"

using namespace scissors;

namespace {

const std::int64_t kOrders[] = {2, 3, 4, 5, 7, 9, 11, 13, 17, 25, 49, 121};

}  // namespace

TEST_CASE("small examples") {
    FiniteField f5 = FiniteField::prime(5);
    CHECK(f5.inv(f5.from_int(2)) == f5.from_int(3));
    CHECK_THROWS_AS(f5.inv(f5.zero()), DomainError);
    FiniteField f9 = FiniteField::of_order(9);
    CHECK(f9.modulus_a0() == 1);
    CHECK(f9.modulus_a1() == 0);
    FFElem t = f9.gen_t();
    CHECK(f9.mul(t, t) == f9.from_int(-1));
    CHECK_THROWS_AS(FiniteField::quadratic(5, 1, 0), DomainError);
    CHECK_THROWS(FiniteField::of_order(6));
    CHECK(f9.to_string(f9.element(1, 2)) == "1+2*t");
}

TEST_CASE("field axioms and tables") {
    for (std::int64_t q : kOrders) {
        CAPTURE(q);
        FiniteField k = FiniteField::of_order(q);
        CHECK(k.order() == q);
        auto all = k.elements();
        CHECK(static_cast<std::int64_t>(all.size()) == q);
        for (std::int64_t i = 0; i < q; ++i) CHECK(k.index(k.at(i)) == i);
        std::size_t squares = 0;
        for (const FFElem& x : k.units()) {
            CHECK(k.pow(x, q - 1) == k.one());
            CHECK(k.mul(x, k.inv(x)) == k.one());
            CHECK(k.pow(k.generator(), k.dlog(x)) == x);
            if (k.is_square(x)) ++squares;
        }
        if (q % 2 == 1) CHECK(static_cast<std::int64_t>(squares) == (q - 1) / 2);
        else CHECK(static_cast<std::int64_t>(squares) == q - 1);
        // generator has order exactly q-1
        std::set<std::int64_t> seen;
        FFElem g = k.one();
        for (std::int64_t i = 0; i < q - 1; ++i) {
            seen.insert(k.index(g));
            g = k.mul(g, k.generator());
        }
        CHECK(static_cast<std::int64_t>(seen.size()) == q - 1);
        // distributivity and Frobenius additivity on a sample
        for (std::int64_t i = 0; i < q; i += 1 + q / 7)
            for (std::int64_t j = 0; j < q; j += 1 + q / 5) {
                FFElem a = k.at(i), b = k.at(j), c = k.at((i + j) % q);
                CHECK(k.mul(k.add(a, b), c) == k.add(k.mul(a, c), k.mul(b, c)));
                CHECK(k.frobenius(k.add(a, b)) == k.add(k.frobenius(a), k.frobenius(b)));
                CHECK(k.sub(k.add(a, b), b) == a);
            }
    }
}
