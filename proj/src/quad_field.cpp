#include "scissors/quad_field.hpp"

#include <algorithm>

#include "scissors/errors.hpp"

namespace scissors {

FieldElem::FieldElem(const QuadInt& num) : num_(num), den_(num.ring(), 1) {}

FieldElem::FieldElem(const QuadInt& num, const QuadInt& den) : num_(num), den_(den) {
    if (!(num.ring() == den.ring())) throw DescriptorError("ring mismatch in fraction");
    if (den.is_zero()) throw DomainError("zero denominator");
    if (num.is_zero()) {
        den_ = QuadInt(num.ring(), 1);
        return;
    }
    QuadInt g = gcd(num, den);
    QuadInt n = *divide_exact(num, g);
    QuadInt d = *divide_exact(den, g);
    CanonicalForm c = canonical_associate(d);
    den_ = c.value;
    num_ = n * c.unit;
}

FieldElem FieldElem::parse(RingDesc ring, std::string_view text) {
    auto slash = text.find('/');
    if (slash == std::string_view::npos) return FieldElem(QuadInt::parse(ring, text));
    return FieldElem(QuadInt::parse(ring, text.substr(0, slash)),
                     QuadInt::parse(ring, text.substr(slash + 1)));
}

FieldElem FieldElem::inverse() const {
    if (is_zero()) throw DomainError("inverse of zero");
    return FieldElem(den_, num_);
}

std::string FieldElem::to_string() const {
    if (den_.is_one()) return num_.to_string();
    return num_.to_string() + "/" + den_.to_string();
}

FieldElem operator+(const FieldElem& a, const FieldElem& b) {
    if (a.den_.is_one() && b.den_.is_one()) return FieldElem(a.num_ + b.num_);
    return FieldElem(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

FieldElem operator-(const FieldElem& a, const FieldElem& b) { return a + (-b); }

FieldElem operator*(const FieldElem& a, const FieldElem& b) {
    return FieldElem(a.num_ * b.num_, a.den_ * b.den_);
}

FieldElem operator/(const FieldElem& a, const FieldElem& b) {
    if (b.is_zero()) throw DomainError("division by zero");
    return FieldElem(a.num_ * b.den_, a.den_ * b.num_);
}

P1Point P1Point::parse(RingDesc ring, std::string_view text) {
    if (text == "inf" || text == "oo" || text == "∞") return infinity(ring);
    return P1Point(FieldElem::parse(ring, text));
}

const FieldElem& P1Point::value() const {
    if (!value_) throw PreconditionError("point at infinity has no field value");
    return *value_;
}

P1Point P1Point::inverse() const {
    if (!value_) return P1Point(FieldElem::from_int(ring_, 0));
    if (value_->is_zero()) return infinity(ring_);
    return P1Point(value_->inverse());
}

std::string P1Point::to_string() const { return value_ ? value_->to_string() : "inf"; }

Valuation Valuation::at(const QuadInt& pi) {
    QuadInt c = canonical_prime(pi);
    PrimalityWitness w = is_prime(c);
    Valuation v{c, w.rational_prime, w.kind == PrimeKind::Inert ? 2 : 1, 0};
    if (v.residue_deg == 1) {
        // pi = a + b*w = 0 mod pi, so w = -a/b; p does not divide b
        Int binv;
        Int b = c.im();
        if (mpz_invert(binv.get_mpz_t(), b.get_mpz_t(), v.residue_char.get_mpz_t()) == 0) {
            throw std::logic_error("degree-1 prime with p | I(pi)");
        }
        Int r = -c.re() * binv;
        mpz_fdiv_r(r.get_mpz_t(), r.get_mpz_t(), v.residue_char.get_mpz_t());
        v.omega_residue = r;
    }
    return v;
}

Int Valuation::residue_order() const {
    return residue_deg == 2 ? Int(residue_char * residue_char) : residue_char;
}

std::vector<Valuation> valuations_up_to(RingDesc ring, long norm_bound) {
    std::vector<QuadInt> primes;
    for (long p = 2; p <= norm_bound; ++p) {
        if (!is_rational_prime(Int(p))) continue;
        PrimeKind kind = classify_rational_prime(ring, Int(p));
        if (kind == PrimeKind::Inert) {
            if (p * p <= norm_bound) primes.emplace_back(ring, p);
            continue;
        }
        QuadInt pi = prime_above(ring, Int(p));
        primes.push_back(pi);
        if (kind == PrimeKind::Split) primes.push_back(canonical_associate(pi.conj()).value);
    }
    std::sort(primes.begin(), primes.end(), canonical_order_less);
    std::vector<Valuation> out;
    for (const auto& pi : primes) out.push_back(Valuation::at(pi));
    return out;
}

long valuation_of(const FieldElem& x, const Valuation& v) {
    if (x.is_zero()) throw DomainError("valuation of zero");
    return valuation(x.num(), v.prime) - valuation(x.den(), v.prime);
}

FiniteField residue_field(const Valuation& v) {
    std::int64_t p = to_i64(v.residue_char);
    if (v.residue_deg == 1) return FiniteField::prime(p);
    RingDesc ring = v.prime.ring();
    if (ring.half_integral()) return FiniteField::quadratic(p, to_i64(ring.omega_norm()), -1);
    return FiniteField::quadratic(p, ring.m(), 0);
}

namespace {

FFElem image(const QuadInt& a, const Valuation& v, const FiniteField& k) {
    const Int& p = v.residue_char;
    Int re = a.re(), im = a.im();
    if (v.residue_deg == 1) {
        Int r = re + im * v.omega_residue;
        mpz_fdiv_r(r.get_mpz_t(), r.get_mpz_t(), p.get_mpz_t());
        return k.element(to_i64(r));
    }
    mpz_fdiv_r(re.get_mpz_t(), re.get_mpz_t(), p.get_mpz_t());
    mpz_fdiv_r(im.get_mpz_t(), im.get_mpz_t(), p.get_mpz_t());
    return k.element(to_i64(re), to_i64(im));
}

}  // namespace

FFElem reduce_mod(const FieldElem& x, const Valuation& v, const FiniteField& k) {
    if (x.is_zero() || valuation_of(x, v) != 0) {
        throw DomainError("reduction needs valuation 0: " + x.to_string());
    }
    return k.div(image(x.num(), v, k), image(x.den(), v, k));
}

FFElem reduce_mod(const FieldElem& x, const Valuation& v) {
    return reduce_mod(x, v, residue_field(v));
}

}  // namespace scissors
