#include <doctest.h>

#include <fstream>

#include "oracles.hpp"
#include "scissors/bloch.hpp"
#include "scissors/errors.hpp"
#include "scissors/serialize.hpp"

using namespace scissors;

namespace {

const std::int64_t kOdd[] = {3, 5, 7, 9, 11, 13};

Structure by_minors(const FPModule& m) {
    std::vector<Int> f = m.relations.rows() == 0 ? std::vector<Int>{}
                                                 : oracle::invariant_factors_by_minors(m.relations);
    while (f.size() < m.num_gens()) f.push_back(0);
    return structure_from_factors(f);
}

Json golden() {
    std::ifstream in(SCISSORS_GOLDEN_FILE);
    return Json::parse(in);
}

}  // namespace

TEST_CASE("group names") {
    for (auto g : {BlochGroup::P, BlochGroup::B, BlochGroup::RP, BlochGroup::RP1, BlochGroup::RB,
                   BlochGroup::RPplus, BlochGroup::RPtilde, BlochGroup::EPlus})
        CHECK(parse_bloch_group(to_string(g)) == g);
    CHECK_THROWS(parse_bloch_group("Q"));
    CHECK_THROWS_AS(BlochContext(6), DomainError);
    CHECK_THROWS_AS(BlochContext(67), DomainError);
    CHECK_THROWS_AS(BlochContext(1), DomainError);
}

TEST_CASE("pre-Bloch groups of the smallest fields") {
    CHECK(structure(BlochContext(2).prebloch()).factors() == std::vector<Int>{3});
    CHECK(structure(BlochContext(3).prebloch()).factors() == std::vector<Int>{4});
    BlochSuite s3 = derived_groups(3);
    CHECK(structure(s3.b.module).factors() == std::vector<Int>{2});
    CHECK(structure(s3.rp).factors() == (std::vector<Int>{2, 0}));
}

TEST_CASE("pre-Bloch group agrees with the minors oracle") {
    for (std::int64_t q : {4, 5, 7}) {
        FPModule p = BlochContext(q).prebloch();
        CHECK(structure(p) == by_minors(p));
    }
}

TEST_CASE("frozen structures") {
    Json g = golden()["bloch"];
    for (auto& [qs, groups] : g.items()) {
        std::int64_t q = std::stoll(qs);
        BlochSuite s = derived_groups(q);
        for (auto& [name, value] : groups.items()) {
            CAPTURE(qs);
            CAPTURE(name);
            bool odd = name.size() > 4 && name.substr(name.size() - 4) == "_odd";
            BlochGroup which = parse_bloch_group(odd ? name.substr(0, name.size() - 4) : name);
            Structure st = structure(s.module(which));
            CHECK((odd ? odd_part(st) : st) == structure_from_json(value));
        }
    }
}

TEST_CASE("closed forms for odd q") {
    for (std::int64_t q : kOdd) {
        CAPTURE(q);
        BlochSuite s = derived_groups(q);
        Int h = (q + 1) / 2;
        CHECK(structure(s.p).factors() == std::vector<Int>{q + 1});
        CHECK(structure(s.b.module).factors() == std::vector<Int>{h});
        CHECK(structure(s.rb.module) == structure(s.rb_via_rp1.module));
        Structure rb_odd = odd_part(structure(s.rb.module));
        CHECK(rb_odd.rank == 0);
        CHECK(rb_odd.torsion.size() <= 1);
    }
}

TEST_CASE("symbols and lambda maps") {
    BlochContext c(5);
    const FiniteField& k = c.field();
    FPModule rp = c.refined();
    ModuleSolver solver(rp);
    CHECK(solver.is_zero(c.psi2(k.one())));
    FFElem m1 = k.from_int(-1);
    CHECK(solver.equal(c.rp_act(c.psi1(m1), m1), c.psi1(m1)));
    CHECK(solver.equal(c.c_element(k.from_int(2)), c.c_element(k.from_int(3))));
    CHECK_THROWS_AS(c.p_symbol(k.zero()), DomainError);
    CHECK(vec_is_zero(c.p_symbol(k.one())));

    // lambda2([2]) = (-1) o 2 = dlog(4) dlog(2) (g o g)
    FPModule s2 = c.s2(1);
    Vec image = row_times(c.rp_symbol(k.from_int(2)), c.lambda2());
    Int want = Int(k.dlog(k.from_int(4))) * k.dlog(k.from_int(2));
    CHECK(ModuleSolver(s2).equal(image, s2.gen(0, want)));
}

TEST_CASE("C is independent of x and the lambda maps are well defined") {
    for (std::int64_t q : {5, 7, 9, 11, 13}) {
        CAPTURE(q);
        BlochContext c(q);
        const FiniteField& k = c.field();
        FPModule rp = c.refined(), p = c.prebloch();
        ModuleSolver srp(rp), sp(p);
        Vec c0 = c.c_element(k.at(2));
        Vec pc = c.p_c();
        for (const FFElem& x : k.units()) {
            if (x == k.one()) continue;
            CHECK(srp.equal(c.c_element(x), c0));
            // C = [x] + [1-x] in P
            Vec rest = vec_sub(vec_sub(pc, c.p_symbol(x)), c.p_symbol(k.sub(k.one(), x)));
            CHECK(sp.is_zero(rest));
        }
        CHECK_NOTHROW(check_well_defined(c.lambda1(), rp, c.i2()));
        CHECK_NOTHROW(check_well_defined(c.lambda2(), rp, c.s2(c.k())));
        CHECK_NOTHROW(check_well_defined(c.lambda_p(), p, c.s2(0)));
        CHECK(is_equivariant(c.lambda2(), rp, c.s2(c.k())));
    }
}

TEST_CASE("trivial-character coinvariants of RP recover P") {
    for (std::int64_t q : kOdd) {
        CAPTURE(q);
        BlochContext c(q);
        CHECK(structure(character_quotient(c.refined(), {1})) == structure(c.prebloch()));
    }
}
