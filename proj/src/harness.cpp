#include "scissors/harness.hpp"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <sstream>
#include <thread>

#include "scissors/errors.hpp"

namespace scissors {

std::int64_t Rng::uniform(std::int64_t lo, std::int64_t hi) {
    if (hi < lo) throw std::invalid_argument("empty range");
    const std::uint64_t span = static_cast<std::uint64_t>(hi) - static_cast<std::uint64_t>(lo) + 1;
    if (span == 0) return static_cast<std::int64_t>(next());
    // rejection sampling on the largest multiple of span
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % span;
    std::uint64_t x;
    do {
        x = next();
    } while (x >= limit);
    return lo + static_cast<std::int64_t>(x % span);
}

Rng Rng::fork(std::uint64_t i) {
    std::uint64_t s = next() ^ (0x9e3779b97f4a7c15ULL * (i + 1));
    return Rng(s);
}

unsigned worker_count() {
    if (const char* env = std::getenv("SCISSORS_WORKERS")) {
        int n = std::atoi(env);
        if (n > 0) return static_cast<unsigned>(n);
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : hw;
}

void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body, unsigned workers) {
    workers = std::max(1u, std::min<unsigned>(workers, static_cast<unsigned>(std::max<std::size_t>(n, 1))));
    if (workers == 1) {
        for (std::size_t i = 0; i < n; ++i) body(i);
        return;
    }
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) {
        pool.emplace_back([&, w] {
            for (std::size_t i = w; i < n; i += workers) body(i);
        });
    }
    for (auto& t : pool) t.join();
}

// ---------------------------------------------------------------- samples

QuadInt random_quadint(Rng& rng, RingDesc ring, std::int64_t coord_bound) {
    return QuadInt(ring, rng.uniform(-coord_bound, coord_bound), rng.uniform(-coord_bound, coord_bound));
}

QuadInt random_nonzero(Rng& rng, RingDesc ring, const Int& norm_bound) {
    // N(a + b w) >= a^2/4 and >= b^2 * (m/4) > b^2/4 for every supported ring
    Int root = sqrt(Int(4) * norm_bound);
    std::int64_t bound = to_i64(root);
    while (true) {
        QuadInt x = random_quadint(rng, ring, bound);
        if (!x.is_zero() && x.norm() <= norm_bound) return x;
    }
}

std::vector<QuadInt> canonical_primes(RingDesc ring, long norm_bound) {
    std::vector<QuadInt> out;
    for (const auto& v : valuations_up_to(ring, norm_bound)) out.push_back(v.prime);
    return out;
}

namespace {

QuadInt random_prime_from(Rng& rng, const std::vector<QuadInt>& primes) {
    auto us = units(primes.front().ring());
    const QuadInt& p = primes[static_cast<std::size_t>(rng.uniform(0, static_cast<std::int64_t>(primes.size()) - 1))];
    return p * us[static_cast<std::size_t>(rng.uniform(0, static_cast<std::int64_t>(us.size()) - 1))];
}

}  // namespace

QuadInt random_prime(Rng& rng, RingDesc ring, long norm_bound) {
    return random_prime_from(rng, canonical_primes(ring, norm_bound));
}

Character random_pair_character(Rng& rng, RingDesc ring, long norm_bound) {
    auto primes = canonical_primes(ring, norm_bound);
    const auto n = static_cast<std::int64_t>(primes.size());
    std::size_t i = static_cast<std::size_t>(rng.uniform(0, n - 1));
    std::size_t j = static_cast<std::size_t>(rng.uniform(0, n - 2));
    if (j >= i) ++j;
    return Character(ring, {primes[i], primes[j]});
}

namespace {

GroupRingPresentation random_presentation(Rng& rng, std::size_t k, std::size_t gens, std::size_t rels) {
    GroupRingPresentation g;
    g.k = k;
    for (std::size_t i = 0; i < gens; ++i) g.gen_labels.push_back("e" + std::to_string(i));
    const auto hmax = static_cast<std::int64_t>((1u << k) - 1);
    for (std::size_t r = 0; r < rels; ++r) {
        std::vector<GRTerm> rel;
        auto terms = rng.uniform(1, 3);
        for (std::int64_t t = 0; t < terms; ++t) {
            rel.push_back({static_cast<std::size_t>(rng.uniform(0, static_cast<std::int64_t>(gens) - 1)),
                           static_cast<unsigned>(rng.uniform(0, hmax)), Int(rng.uniform(-6, 6))});
        }
        g.relations.push_back(std::move(rel));
    }
    return g;
}

}  // namespace

RandomMap random_equivariant_map(Rng& rng, std::size_t k) {
    RandomMap r;
    auto ng = static_cast<std::size_t>(rng.uniform(1, 3));
    r.target = flatten(random_presentation(rng, k, ng, static_cast<std::size_t>(rng.uniform(0, 3))));
    auto mg = static_cast<std::size_t>(rng.uniform(1, 3));
    r.source = flatten(random_presentation(rng, k, mg, 0));
    const std::size_t g = std::size_t{1} << k;
    r.f = IntMatrix(mg * g, r.target.num_gens());
    for (std::size_t j = 0; j < mg; ++j) {
        Vec img(r.target.num_gens());
        for (auto& c : img) c = rng.uniform(-3, 3);
        for (unsigned h = 0; h < g; ++h) r.f.set_row(flat_index(j, h, k), r.target.act(img, h));
    }
    IntMatrix pre = preimage_lattice(r.f, r.target.relations);
    if (pre.rows() > 0) {
        if (rng.coin()) {
            for (std::size_t i = 0; i < pre.rows(); ++i) r.source.add_relation(pre.row(i));
        } else {
            auto n = rng.uniform(0, 3);
            for (std::int64_t t = 0; t < n; ++t) {
                Vec v(r.source.num_gens());
                for (std::size_t i = 0; i < pre.rows(); ++i) {
                    Int c = rng.uniform(-2, 2);
                    Vec row = pre.row(i);
                    for (std::size_t c2 = 0; c2 < v.size(); ++c2) v[c2] += c * row[c2];
                }
                r.source.add_relation_orbit(v);
            }
        }
    }
    return r;
}

// ---------------------------------------------------------------- suites

namespace {

using Clock = std::chrono::steady_clock;

double since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

// Runs check(i) for i < n and tallies; a thrown exception counts as failure.
SuiteResult run_suite(const std::string& name, std::size_t n,
                      const std::function<std::string(std::size_t)>& check) {
    SuiteResult s;
    s.name = name;
    auto t0 = Clock::now();
    std::vector<std::string> out(n);
    parallel_for(n, [&](std::size_t i) {
        try {
            out[i] = check(i);
        } catch (const std::exception& e) {
            out[i] = std::string("exception: ") + e.what();
        }
    });
    for (const auto& o : out) {
        if (o.empty()) {
            ++s.passed;
        } else {
            if (s.failed == 0) s.first_failure = o;
            ++s.failed;
        }
    }
    s.seconds = since(t0);
    return s;
}

std::string euclid_check(const QuadInt& a, const QuadInt& b) {
    DivResult d = euclid_div(a, b);
    if (d.quotient * b + d.remainder != a) return "a != q b + r for " + a.to_string() + ", " + b.to_string();
    if (!(d.remainder.norm() < b.norm())) return "N(r) >= N(b) for " + a.to_string() + ", " + b.to_string();
    return {};
}

QuadInt degree_two(Rng& rng, RingDesc ring, std::int64_t bound) {
    while (true) {
        QuadInt x = random_quadint(rng, ring, bound);
        if (!x.is_rational()) return x;
    }
}

std::pair<QuadInt, QuadInt> prime_pair(Rng& rng, const std::vector<QuadInt>& primes) {
    while (true) {
        QuadInt p = random_prime_from(rng, primes), q = random_prime_from(rng, primes);
        if (!associated(p, q)) return {p, q};
    }
}

FieldElem random_elem(Rng& rng, RingDesc ring, const Int& norm_bound) {
    QuadInt n = random_nonzero(rng, ring, norm_bound);
    QuadInt d = random_nonzero(rng, ring, norm_bound);
    return FieldElem(n, d);
}

std::string cert_check(const P1Point& x, const Character& chi) {
    Certificate c = reduce_to_zero(x, chi);
    CheckResult r = check_certificate(c);
    if (!r.ok) return "certificate for " + x.to_string() + " rejected: " + r.reason;
    for (std::size_t i = 1; i < c.trace.size(); ++i)
        if (!(c.trace[i] < c.trace[i - 1])) return "norm descent fails for " + x.to_string();
    return {};
}

// Samples x, y for the five-term check at v.
std::string fiveterm_check(Rng& rng, const ResidueTarget& t, RingDesc ring) {
    while (true) {
        FieldElem x = random_elem(rng, ring, Int(400));
        FieldElem y = random_elem(rng, ring, Int(400));
        if (x.is_one() || y.is_one() || x == y) continue;
        if (!fiveterm_specializes(x, y, t))
            return "S_{x,y} not sent to zero for x = " + x.to_string() + ", y = " + y.to_string() +
                   " at " + t.valuation().prime.to_string();
        return {};
    }
}

std::string surjectivity_check(const ResidueTarget& t) {
    const BlochContext& ctx = t.context();
    const FiniteField& k = ctx.field();
    for (const auto& z : k.units()) {
        if (z == k.one()) continue;
        FieldElem lift = residue_lift(z, t.valuation());
        if (!(reduce_mod(lift, t.valuation(), k) == z)) return "lift of " + k.to_string(z) + " does not reduce back";
        if (!t.solver().equal(specialize(P1Point(lift), t), ctx.p_symbol(z)))
            return "generator [" + k.to_string(z) + "] not hit at " + t.valuation().prime.to_string();
    }
    return {};
}

}  // namespace

std::vector<SuiteResult> verify_lemmas(int m, std::size_t samples, std::uint64_t seed) {
    const RingDesc ring = RingDesc::make(m);
    Rng master(seed ^ (static_cast<std::uint64_t>(m) << 32));
    std::vector<SuiteResult> out;
    auto seeded = [&](const std::string& name, std::size_t n, auto per_sample) {
        Rng base = master.fork(out.size());
        std::uint64_t s0 = base.next();
        out.push_back(run_suite(name, n, [&](std::size_t i) {
            Rng rng(s0 + 0x2545f4914f6cdd1dULL * (i + 1));
            return per_sample(rng);
        }));
    };

    seeded("euclid_div", samples, [&](Rng& rng) {
        QuadInt a = random_quadint(rng, ring, 10000);
        QuadInt b = random_nonzero(rng, ring, Int(1000000));
        return euclid_check(a, b);
    });
    seeded("factor_roundtrip", samples, [&](Rng& rng) -> std::string {
        QuadInt a = random_nonzero(rng, ring, Int(100000));
        Factorization f = factor(a);
        if (f.expand() != a) return "factorization does not expand to " + a.to_string();
        for (const auto& [p, e] : f.primes)
            if (canonical_prime(p) != p) return "non-canonical prime in factorization";
        return {};
    });
    seeded("shift_lattice", samples, [&](Rng& rng) -> std::string {
        QuadInt l = degree_two(rng, ring, 40);
        if (!(shift_lattice(l).hnf() == power_span(l, 4))) return "lZ[l] != NZ + lZ for " + l.to_string();
        return {};
    });
    const auto primes2000 = canonical_primes(ring, 2000);
    const auto primes200 = canonical_primes(ring, 200);
    for (CoverMode mode : {CoverMode::FourTerm, CoverMode::ThreeTerm}) {
        seeded("covering_" + std::string(to_string(mode)), samples, [&](Rng& rng) -> std::string {
            auto [p, q] = prime_pair(rng, primes2000);
            if (!check_covering(p, q, mode).covers)
                return "no covering for " + p.to_string() + ", " + q.to_string();
            return {};
        });
    }
    seeded("character_multiplicative", samples, [&](Rng& rng) -> std::string {
        std::vector<QuadInt> sup;
        auto n = rng.uniform(0, 3);
        for (std::int64_t i = 0; i < n; ++i) sup.push_back(random_prime_from(rng, primes200));
        int us = (m == 1 || rng.coin()) ? 1 : -1;
        Character chi(ring, sup, us);
        FieldElem x = random_elem(rng, ring, Int(1000)), y = random_elem(rng, ring, Int(1000));
        if (char_eval(chi, x * y) != char_eval(chi, x) * char_eval(chi, y))
            return "chi(xy) != chi(x) chi(y) for " + x.to_string() + ", " + y.to_string();
        if (!(square_class(x) * square_class(y) == square_class(x * y)))
            return "square classes not multiplicative";
        if (!square_class(x * x).is_trivial()) return "square class of a square is nontrivial";
        return {};
    });
    seeded("certificates", samples, [&](Rng& rng) {
        Character chi = random_pair_character(rng, ring, 100);
        auto kind = rng.uniform(0, 19);
        P1Point x = kind == 0 ? P1Point::infinity(ring) : P1Point(random_elem(rng, ring, Int(10000)));
        return cert_check(x, chi);
    });
    {
        auto vals = valuations_up_to(ring, 50);
        std::vector<ResidueTarget> targets;
        for (const auto& v : vals) targets.emplace_back(v);
        seeded("fiveterm_specializes", samples, [&](Rng& rng) {
            const auto& t = targets[static_cast<std::size_t>(rng.uniform(0, static_cast<std::int64_t>(targets.size()) - 1))];
            return fiveterm_check(rng, t, ring);
        });
        out.push_back(run_suite("specialize_surjective", targets.size(),
                                [&](std::size_t i) { return surjectivity_check(targets[i]); }));
    }
    out.push_back(run_suite("unit_omega", 1, [&](std::size_t) -> std::string {
        const QuadInt w = QuadInt::omega(ring);
        const FieldElem minus_one = FieldElem::from_int(ring, -1);
        if (w.is_unit()) {
            if (!is_full_lattice(lattice_sum({shift_lattice(w)}))) return "unit w does not give O_F";
            // the cube root of unity w^2 (m = 3) is a square class representative of 1
            if (m == 3 && !square_class(FieldElem(w * w)).is_trivial()) return "<w^2> != <1>";
            if (m == 3 && !(square_class(FieldElem(w)) == square_class(minus_one))) return "<w> != <-1>";
        } else {
            if (!is_prime(w).prime) return "w is not prime";
            ShiftLattice l = shift_lattice(w);
            if (l.basis.front() != QuadInt(ring, w.norm())) return "lattice of w is not N Z + w Z";
        }
        return {};
    }));
    out.push_back(run_suite("r_alpha_lemma", 1, [&](std::size_t) -> std::string {
        for (const auto& p : canonical_primes(ring, 1000)) {
            if (!is_rational_prime(p.norm())) continue;
            // read on -m the lemma has counterexamples (w for m = 7), so only
            // the reading on m is asserted
            try {
                if (!check_r_alpha_lemma(p, LemmaConvention::OnM)) return "lemma fails at " + p.to_string();
            } catch (const DomainError&) {
            }
        }
        return {};
    }));
    return out;
}

SuiteResult local_global_trials(std::size_t k, std::size_t trials, std::uint64_t seed) {
    Rng master(seed ^ (0xabcdefULL + k));
    std::uint64_t s0 = master.next();
    return run_suite("local_global_k" + std::to_string(k), trials + 3, [&](std::size_t i) -> std::string {
        Rng rng(s0 + 0x2545f4914f6cdd1dULL * (i + 1));
        RandomMap r;
        if (i < 3) {
            // identity, 2x, 3x on a random module
            RandomMap base = random_equivariant_map(rng, k);
            r.source = r.target = base.target;
            r.f = IntMatrix::identity(base.target.num_gens());
            for (std::size_t d = 0; d < r.f.rows(); ++d) r.f(d, d) = Int(static_cast<long>(i + 1));
        } else {
            r = random_equivariant_map(rng, k);
        }
        LocalGlobalReport rep = local_global_check(r.f, r.source, r.target);
        if (!rep.agree()) return "verdicts disagree on trial " + std::to_string(i);
        if (i == 0 && !rep.direct.bijective()) return "identity not bijective";
        if (i == 1 && !rep.direct.bijective()) return "2x not bijective after inverting 2";
        return {};
    });
}

FPModule twisted_residue_prebloch(const Valuation& v) {
    BlochContext ctx(residue_field(v));
    FPModule p = ctx.prebloch();
    IntMatrix minus = IntMatrix::identity(p.num_gens());
    for (std::size_t i = 0; i < p.num_gens(); ++i) minus(i, i) = -1;
    p.action = {minus, IntMatrix::identity(p.num_gens())};
    return p;
}

// ---------------------------------------------------------------- acceptance

namespace {

const char* const kTitles[kCriteria] = {
    "P(F2), P(F3), B(F3) special cases",
    "RP(F3) relation and RB(F3) generator",
    "C(x) constancy, q in {5,7,9,11,13}",
    "RP1[1/2] = e+ RP~[1/2], q in {5,7,9,11,13}",
    "Euclidean division, 1000 instances per ring",
    "lZ[l] = NZ + lZ, 100 elements per ring",
    "covering lemmas, 50 pairs per ring, both modes",
    "reduce_to_zero certificates, 1000 per ring",
    "specialization five-term and surjectivity, norm <= 50",
    "local-global verdicts, 200 maps, k <= 2",
    "character pruning on P(k(v)){v}, norm <= 50",
};

struct Acc {
    bool ok = true;
    std::ostringstream detail;
    void fail(const std::string& s) {
        if (ok) detail << s;
        ok = false;
    }
};

void criterion1(Acc& a) {
    BlochContext f2(2), f3(3);
    Structure s2 = structure(f2.prebloch());
    if (!(s2 == structure_from_factors({Int(3)}))) a.fail("P(F2) = " + s2.to_string());
    FPModule p3 = f3.prebloch();
    ModuleSolver m3(p3);
    if (!(m3.structure() == structure_from_factors({Int(4)}))) a.fail("P(F3) = " + m3.structure().to_string());
    Vec g = f3.p_symbol(f3.field().neg(f3.field().one()));
    if (m3.order(g) != Int(4)) a.fail("[-1] does not have order 4");
    Submodule b = map_kernel(f3.lambda_p(), p3, f3.s2(0));
    IntMatrix two = IntMatrix::from_rows({f3.p_c()}, 1);
    if (!same_subgroup(p3, b.embedding, two)) a.fail("B(F3) != <2[-1]>");
    Structure sb = structure(b.module);
    if (sb.order() * 2 != m3.structure().order()) a.fail("B(F3) index is not 2");
    if (a.ok) a.detail << "P(F2)=" << s2.to_string() << " P(F3)=" << m3.structure().to_string()
                       << " B(F3)=" << sb.to_string();
}

void criterion2(Acc& a) {
    BlochSuite s = derived_groups(3);
    BlochContext c(3);
    const FFElem m1 = c.field().neg(c.field().one());
    Vec psi = c.psi1(m1);
    ModuleSolver rp(s.rp);
    Vec twice = psi;
    for (auto& e : twice) e *= 2;
    if (!rp.is_zero(twice)) a.fail("2 psi1(-1) != 0 in RP(F3)");
    if (rp.is_zero(psi)) a.fail("psi1(-1) = 0 in RP(F3)");
    if (!same_subgroup(s.rp, s.rb.embedding, IntMatrix::from_rows({psi}, psi.size())))
        a.fail("RB(F3) != <psi1(-1)>");
    if (!same_subgroup(s.rp, s.rb.embedding, s.rb_via_rp1.embedding * s.rp1.embedding))
        a.fail("RB computed two ways differs");
    if (a.ok) a.detail << "RP(F3)=" << rp.structure().to_string() << " RB(F3)=" << structure(s.rb.module).to_string();
}

void criterion3(Acc& a) {
    for (int q : {5, 7, 9, 11, 13}) {
        BlochContext c(q);
        ModuleSolver rp(c.refined());
        const FiniteField& f = c.field();
        std::vector<Vec> cs;
        for (const auto& x : f.units())
            if (!(x == f.one())) cs.push_back(c.c_element(x));
        for (std::size_t i = 0; i < cs.size(); ++i)
            for (std::size_t j = i + 1; j < cs.size(); ++j)
                if (!rp.equal(cs[i], cs[j])) a.fail("C(x) not constant for q = " + std::to_string(q));
    }
    if (a.ok) a.detail << "all pairs equal";
}

void criterion4(Acc& a) {
    for (int q : {5, 7, 9, 11, 13}) {
        BlochSuite s = derived_groups(q);
        Structure l = odd_part(structure(s.rp1.module)), r = odd_part(structure(s.e_plus));
        if (!(l == r)) a.fail("q = " + std::to_string(q) + ": " + l.to_string() + " vs " + r.to_string());
        else a.detail << "q=" << q << ":" << l.to_string() << " ";
    }
}

std::uint64_t fnv1a(const std::string& s) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : s) h = (h ^ c) * 0x100000001b3ULL;
    return h;
}

template <class F>
void per_ring(Acc& a, std::uint64_t seed, std::size_t n, F check) {
    for (int m : kSupportedRings) {
        RingDesc ring = RingDesc::make(m);
        Rng master(seed ^ (static_cast<std::uint64_t>(m) * 0x100000001b3ULL));
        std::uint64_t s0 = master.next();
        SuiteResult r = run_suite("m" + std::to_string(m), n, [&](std::size_t i) {
            Rng rng(s0 + 0x2545f4914f6cdd1dULL * (i + 1));
            return check(rng, ring, i);
        });
        a.detail << "m=" << m << ":" << r.passed << "/" << n << " ";
        if (!r.ok()) a.fail("m=" + std::to_string(m) + ": " + r.first_failure + "; ");
    }
}

void criterion8(Acc& a, std::uint64_t seed) {
    for (int m : kSupportedRings) {
        RingDesc ring = RingDesc::make(m);
        Rng master(seed ^ (static_cast<std::uint64_t>(m) * 0x9e3779b9ULL));
        std::vector<Character> chis;
        for (int i = 0; i < 10; ++i) chis.push_back(random_pair_character(master, ring, 100));
        std::vector<P1Point> xs;
        xs.push_back(P1Point::infinity(ring));
        xs.push_back(P1Point(FieldElem::from_int(ring, 0)));
        while (xs.size() < 100) xs.push_back(P1Point(random_elem(master, ring, Int(10000))));
        SuiteResult r = run_suite("m" + std::to_string(m), chis.size() * xs.size(), [&](std::size_t i) {
            return cert_check(xs[i % xs.size()], chis[i / xs.size()]);
        });
        a.detail << "m=" << m << ":" << r.passed << "/" << chis.size() * xs.size() << " ";
        if (!r.ok()) a.fail("m=" + std::to_string(m) + ": " + r.first_failure + "; ");
    }
}

void criterion9(Acc& a, std::uint64_t seed) {
    for (int m : kSupportedRings) {
        RingDesc ring = RingDesc::make(m);
        std::size_t total = 0, bad = 0;
        for (const auto& v : valuations_up_to(ring, 50)) {
            ResidueTarget t(v);
            Rng master(seed ^ fnv1a(v.prime.to_string() + "/" + std::to_string(m)));
            std::uint64_t s0 = master.next();
            SuiteResult r = run_suite(v.prime.to_string(), 500, [&](std::size_t i) {
                Rng rng(s0 + 0x2545f4914f6cdd1dULL * (i + 1));
                return fiveterm_check(rng, t, ring);
            });
            std::string s = surjectivity_check(t);
            total += 500;
            bad += r.failed;
            if (!r.ok()) a.fail("m=" + std::to_string(m) + ": " + r.first_failure + "; ");
            if (!s.empty()) a.fail("m=" + std::to_string(m) + ": " + s + "; ");
        }
        a.detail << "m=" << m << ":" << (total - bad) << "/" << total << " ";
    }
}

void criterion10(Acc& a, std::uint64_t seed) {
    std::size_t agree = 0, total = 0;
    for (std::size_t k = 0; k <= 2; ++k) {
        // 200 random maps split over k = 0, 1, 2 (67 + 67 + 66) plus the fixed maps
        std::size_t n = k < 2 ? 67 : 66;
        SuiteResult r = local_global_trials(k, n, seed);
        agree += r.passed;
        total += r.passed + r.failed;
        if (!r.ok()) a.fail("k=" + std::to_string(k) + ": " + r.first_failure + "; ");
    }
    a.detail << agree << "/" << total << " agree";
}

void criterion11(Acc& a) {
    std::size_t checked = 0;
    for (int m : kSupportedRings) {
        RingDesc ring = RingDesc::make(m);
        for (const auto& v : valuations_up_to(ring, 50)) {
            FPModule pk = twisted_residue_prebloch(v);
            const Structure full = structure(pk);
            const FieldElem pi(v.prime);
            const FieldElem minus_one = FieldElem::from_int(ring, -1);
            const std::string where = "m=" + std::to_string(m) + " v=" + v.prime.to_string();
            // chi_0: <pi> acts by -1
            Character chi0 = Character::trivial(ring);
            bool predicted = sign_clash_vanishes(chi0, pi, -1);
            bool vanished = odd_part(structure(character_quotient(pk, {1, 1}))).is_trivial();
            if (!predicted || !vanished) a.fail(where + ": chi_0 summand survives; ");
            // chi_p: same as P(k(v))
            if (!(structure(character_quotient(pk, {-1, 1})) == full)) a.fail(where + ": chi_p quotient differs from P(k); ");
            if (m != 1) {
                Character neg(ring, {}, -1);
                for (int s : {1, -1}) {
                    bool pred = sign_clash_vanishes(neg, minus_one, 1);
                    bool gone = odd_part(structure(character_quotient(pk, {s, -1}))).is_trivial();
                    if (!pred || !gone) a.fail(where + ": unit-negative summand survives; ");
                }
            }
            ++checked;
        }
    }
    a.detail << checked << " primes";
}

}  // namespace

CriterionResult run_criterion(int id, std::uint64_t seed) {
    if (id < 1 || id > kCriteria) throw std::invalid_argument("criterion id out of range");
    CriterionResult r;
    r.id = id;
    r.title = kTitles[id - 1];
    auto t0 = Clock::now();
    Acc a;
    try {
        switch (id) {
            case 1: criterion1(a); break;
            case 2: criterion2(a); break;
            case 3: criterion3(a); break;
            case 4: criterion4(a); break;
            case 5:
                per_ring(a, seed, 1000, [](Rng& rng, RingDesc ring, std::size_t) {
                    return euclid_check(random_quadint(rng, ring, 10000), random_nonzero(rng, ring, Int(1000000)));
                });
                break;
            case 6:
                per_ring(a, seed, 100, [](Rng& rng, RingDesc ring, std::size_t) -> std::string {
                    QuadInt l = degree_two(rng, ring, 60);
                    if (!(shift_lattice(l).hnf() == power_span(l, 4))) return "mismatch at " + l.to_string();
                    return {};
                });
                break;
            case 7:
                per_ring(a, seed, 50, [](Rng& rng, RingDesc ring, std::size_t) -> std::string {
                    thread_local std::vector<QuadInt> primes;
                    if (primes.empty() || !(primes.front().ring() == ring)) primes = canonical_primes(ring, 2000);
                    auto [p, q] = prime_pair(rng, primes);
                    for (CoverMode mode : {CoverMode::FourTerm, CoverMode::ThreeTerm})
                        if (!check_covering(p, q, mode).covers)
                            return std::string(to_string(mode)) + " fails for " + p.to_string() + ", " + q.to_string();
                    return {};
                });
                break;
            case 8: criterion8(a, seed); break;
            case 9: criterion9(a, seed); break;
            case 10: criterion10(a, seed); break;
            case 11: criterion11(a); break;
        }
    } catch (const std::exception& e) {
        a.fail(std::string("exception: ") + e.what());
    }
    r.passed = a.ok;
    r.detail = a.detail.str();
    r.seconds = since(t0);
    return r;
}

std::vector<CriterionResult> run_acceptance(std::uint64_t seed) {
    std::vector<CriterionResult> out;
    for (int i = 1; i <= kCriteria; ++i) out.push_back(run_criterion(i, seed));
    return out;
}

}  // namespace scissors
