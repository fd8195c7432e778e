#include "scissors/quad_ring.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

#include "scissors/errors.hpp"

namespace scissors {

RingDesc RingDesc::make(int m) {
    for (int s : kSupportedRings) {
        if (s == m) return RingDesc(m);
    }
    throw DomainError("unsupported ring Q(sqrt(-" + std::to_string(m) +
                      ")); expected m in {1, 2, 3, 7, 11}");
}

Int RingDesc::omega_norm() const { return half_integral() ? Int((1 + m_) / 4) : Int(m_); }

Int RingDesc::omega_trace() const { return half_integral() ? Int(1) : Int(0); }

Int RingDesc::discriminant() const { return half_integral() ? Int(-m_) : Int(-4 * m_); }

void QuadInt::require_same_ring(const QuadInt& o) const {
    if (!(ring_ == o.ring_)) {
        throw DescriptorError("ring mismatch: m=" + std::to_string(ring_.m()) +
                              " vs m=" + std::to_string(o.ring_.m()));
    }
}

QuadInt& QuadInt::operator+=(const QuadInt& o) {
    require_same_ring(o);
    re_ += o.re_;
    im_ += o.im_;
    return *this;
}

QuadInt& QuadInt::operator-=(const QuadInt& o) {
    require_same_ring(o);
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
}

QuadInt& QuadInt::operator*=(const QuadInt& o) {
    require_same_ring(o);
    // w^2 = -m, or w^2 = w - n with n = N(w)
    Int bd = im_ * o.im_;
    Int re = re_ * o.re_;
    Int im = re_ * o.im_ + im_ * o.re_;
    if (ring_.half_integral()) {
        re -= ring_.omega_norm() * bd;
        im += bd;
    } else {
        re -= ring_.m() * bd;
    }
    re_ = std::move(re);
    im_ = std::move(im);
    return *this;
}

QuadInt QuadInt::conj() const {
    if (ring_.half_integral()) return QuadInt(ring_, re_ + im_, -im_);
    return QuadInt(ring_, re_, -im_);
}

Int QuadInt::norm() const {
    if (ring_.half_integral()) return re_ * re_ + re_ * im_ + ring_.omega_norm() * im_ * im_;
    return re_ * re_ + ring_.m() * im_ * im_;
}

Int QuadInt::trace() const {
    if (ring_.half_integral()) return 2 * re_ + im_;
    return 2 * re_;
}

std::string QuadInt::to_string() const {
    std::string s = scissors::to_string(re_);
    if (im_ < 0) {
        s += "-" + scissors::to_string(Int(-im_));
    } else {
        s += "+" + scissors::to_string(im_);
    }
    return s + "*w";
}

QuadInt QuadInt::parse(RingDesc ring, std::string_view text) {
    std::string s;
    for (char c : text) {
        if (!std::isspace(static_cast<unsigned char>(c))) s += c;
    }
    if (s.empty()) throw std::invalid_argument("empty ring element");
    Int re = 0, im = 0;
    std::size_t i = 0;
    bool any = false;
    while (i < s.size()) {
        int sign = 1;
        if (s[i] == '+' || s[i] == '-') {
            sign = s[i] == '-' ? -1 : 1;
            ++i;
        } else if (any) {
            throw std::invalid_argument("bad ring element: " + s);
        }
        std::size_t j = i;
        while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
        Int coeff = 1;
        bool has_digits = j > i;
        if (has_digits) coeff = Int(s.substr(i, j - i), 10);
        i = j;
        bool omega = false;
        if (i < s.size() && s[i] == '*') {
            ++i;
            if (i >= s.size() || s[i] != 'w' || !has_digits) {
                throw std::invalid_argument("bad ring element: " + s);
            }
        }
        if (i < s.size() && s[i] == 'w') {
            omega = true;
            ++i;
        }
        if (!has_digits && !omega) throw std::invalid_argument("bad ring element: " + s);
        (omega ? im : re) += sign * coeff;
        any = true;
    }
    return QuadInt(ring, re, im);
}

bool canonical_order_less(const QuadInt& a, const QuadInt& b) {
    Int na = a.norm(), nb = b.norm();
    if (na != nb) return na < nb;
    if (a.im() != b.im()) return a.im() < b.im();
    return a.re() < b.re();
}

DivResult euclid_div(const QuadInt& a, const QuadInt& b) {
    if (!(a.ring() == b.ring())) throw DescriptorError("ring mismatch in euclid_div");
    if (b.is_zero()) throw DomainError("division by zero");
    const RingDesc ring = a.ring();
    QuadInt num = a * b.conj();
    Int n = b.norm();
    Int nb = n;

    Int r0 = round_half_down(num.re(), n), r1 = round_half_down(num.im(), n);
    Int f0 = floor_div(num.re(), n), f1 = floor_div(num.im(), n);
    Int c0 = ceil_div(num.re(), n), c1 = ceil_div(num.im(), n);

    std::vector<std::pair<Int, Int>> candidates{{r0, r1}, {f0, f1}, {f0, c1}, {c0, f1}, {c0, c1}};
    for (std::size_t i = 0; i < candidates.size(); ++i) {
        if (i > 0 && candidates[i] == candidates[0]) continue;
        QuadInt q(ring, candidates[i].first, candidates[i].second);
        QuadInt r = a - q * b;
        if (r.norm() < nb) return {q, r};
    }
    throw std::logic_error("no Euclidean quotient among rounding candidates");
}

std::optional<QuadInt> divide_exact(const QuadInt& a, const QuadInt& b) {
    if (!(a.ring() == b.ring())) throw DescriptorError("ring mismatch in divide_exact");
    if (b.is_zero()) throw DomainError("division by zero");
    QuadInt num = a * b.conj();
    Int n = b.norm();
    if (!divides(n, num.re()) || !divides(n, num.im())) return std::nullopt;
    return QuadInt(a.ring(), num.re() / n, num.im() / n);
}

bool divides(const QuadInt& d, const QuadInt& a) {
    if (d.is_zero()) return a.is_zero();
    return divide_exact(a, d).has_value();
}

QuadInt gcd(const QuadInt& a, const QuadInt& b) {
    if (a.is_zero() && b.is_zero()) throw DomainError("gcd(0, 0) is undefined");
    QuadInt x = a, y = b;
    while (!y.is_zero()) {
        QuadInt r = euclid_div(x, y).remainder;
        x = std::move(y);
        y = std::move(r);
    }
    return canonical_associate(x).value;
}

QuadInt unit_generator(RingDesc ring) {
    if (ring.m() == 1 || ring.m() == 3) return QuadInt::omega(ring);
    return QuadInt(ring, -1, 0);
}

std::vector<QuadInt> units(RingDesc ring) {
    std::vector<QuadInt> out;
    QuadInt g = unit_generator(ring);
    QuadInt u(ring, 1, 0);
    do {
        out.push_back(u);
        u *= g;
    } while (!u.is_one());
    return out;
}

int unit_exponent(const QuadInt& u) {
    auto all = units(u.ring());
    for (std::size_t k = 0; k < all.size(); ++k) {
        if (all[k] == u) return static_cast<int>(k);
    }
    throw DomainError("not a unit: " + u.to_string());
}

bool associated(const QuadInt& a, const QuadInt& b) {
    if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
    for (const auto& u : units(a.ring())) {
        if (u * a == b) return true;
    }
    return false;
}

CanonicalForm canonical_associate(const QuadInt& a) {
    if (a.is_zero()) throw DomainError("zero has no canonical associate");
    const bool sector = a.ring().m() == 1 || a.ring().m() == 3;
    for (const auto& u : units(a.ring())) {
        QuadInt c = u * a;
        bool ok = sector ? (c.re() > 0 && c.im() >= 0)
                         : (c.im() > 0 || (c.im() == 0 && c.re() > 0));
        if (ok) return {c, u};
    }
    throw std::logic_error("no canonical associate found");
}

PrimeKind classify_rational_prime(RingDesc ring, const Int& p) {
    if (!is_rational_prime(p)) throw DomainError("not a rational prime: " + to_string(p));
    Int disc = ring.discriminant();
    if (divides(p, disc)) return PrimeKind::Ramified;
    if (p == 2) {
        // 2 is inert exactly when the discriminant is 5 mod 8
        Int r = disc % 8;
        if (r < 0) r += 8;
        return r == 5 ? PrimeKind::Inert : PrimeKind::Split;
    }
    return legendre(disc, p) == -1 ? PrimeKind::Inert : PrimeKind::Split;
}

PrimalityWitness is_prime(const QuadInt& a) {
    if (a.is_zero()) throw DomainError("zero is not a candidate prime");
    if (a.is_unit()) throw DomainError("unit is not a candidate prime: " + a.to_string());
    PrimalityWitness w;
    Int n = a.norm();
    if (is_rational_prime(n)) {
        w.prime = true;
        w.kind = PrimeKind::NormPrime;
        w.criterion = PrimalityCriterion::NormIsRationalPrime;
        w.rational_prime = n;
        return w;
    }
    Int p;
    mpz_sqrt(p.get_mpz_t(), n.get_mpz_t());
    if (p * p != n || !is_rational_prime(p)) return w;
    QuadInt pp(a.ring(), p, 0);
    auto q = divide_exact(a, pp);
    if (!q || !q->is_unit()) return w;
    if (classify_rational_prime(a.ring(), p) != PrimeKind::Inert) return w;
    w.prime = true;
    w.kind = PrimeKind::Inert;
    w.criterion = p == 2 ? PrimalityCriterion::InertTwo : PrimalityCriterion::InertOddPrime;
    w.rational_prime = p;
    return w;
}

QuadInt canonical_prime(const QuadInt& a) {
    if (a.is_zero() || a.is_unit() || !is_prime(a).prime) {
        throw DomainError("not a prime: " + a.to_string());
    }
    return canonical_associate(a).value;
}

QuadInt prime_above(RingDesc ring, const Int& p) {
    PrimeKind kind = classify_rational_prime(ring, p);
    if (kind == PrimeKind::Inert) return QuadInt(ring, p, 0);
    for (Int b = 0;; ++b) {
        if (ring.half_integral()) {
            Int d = 4 * p - ring.m() * b * b;
            if (d < 0) break;
            Int s;
            mpz_sqrt(s.get_mpz_t(), d.get_mpz_t());
            if (s * s == d && divides(Int(2), Int(s - b))) {
                return canonical_associate(QuadInt(ring, (s - b) / 2, b)).value;
            }
        } else {
            Int d = p - ring.m() * b * b;
            if (d < 0) break;
            Int s;
            mpz_sqrt(s.get_mpz_t(), d.get_mpz_t());
            if (s * s == d) return canonical_associate(QuadInt(ring, s, b)).value;
        }
    }
    throw std::logic_error("no element of norm " + to_string(p));
}

long valuation(const QuadInt& a, const QuadInt& pi) {
    if (a.is_zero()) throw DomainError("valuation of zero");
    long v = 0;
    QuadInt x = a;
    while (auto q = divide_exact(x, pi)) {
        x = std::move(*q);
        ++v;
    }
    return v;
}

QuadInt Factorization::expand() const {
    QuadInt x = unit;
    for (const auto& [pi, e] : primes) {
        for (long i = 0; i < e; ++i) x *= pi;
    }
    return x;
}

namespace {

long strip_prime(QuadInt& x, const QuadInt& pi) {
    long e = 0;
    while (auto q = divide_exact(x, pi)) {
        x = std::move(*q);
        ++e;
    }
    return e;
}

}  // namespace

Factorization factor(const QuadInt& a, const Int& norm_bound) {
    if (a.is_zero()) throw DomainError("cannot factor zero");
    Int n = a.norm();
    if (n > norm_bound) {
        throw CapacityError("norm " + to_string(n) + " exceeds factor bound " +
                            to_string(norm_bound));
    }
    const RingDesc ring = a.ring();
    std::vector<Int> rational;
    Int rest = n;
    for (Int d = 2; d * d <= rest; ++d) {
        if (divides(d, rest)) {
            rational.push_back(d);
            while (divides(d, rest)) rest /= d;
        }
    }
    if (rest > 1) rational.push_back(rest);

    Factorization f{QuadInt(ring, 1, 0), {}};
    QuadInt x = a;
    for (const Int& p : rational) {
        QuadInt pi = prime_above(ring, p);
        long e = strip_prime(x, pi);
        if (e > 0) f.primes.emplace_back(pi, e);
        if (classify_rational_prime(ring, p) == PrimeKind::Split) {
            QuadInt other = canonical_associate(pi.conj()).value;
            long e2 = strip_prime(x, other);
            if (e2 > 0) f.primes.emplace_back(other, e2);
        }
    }
    if (!x.is_unit()) throw std::logic_error("factorization left a non-unit cofactor");
    f.unit = x;
    std::sort(f.primes.begin(), f.primes.end(),
              [](const auto& l, const auto& r) { return canonical_order_less(l.first, r.first); });
    return f;
}

bool check_r_alpha_lemma(const QuadInt& a, LemmaConvention convention) {
    const int m = a.ring().m();
    const int residue = convention == LemmaConvention::OnM ? m % 4 : ((-m) % 4 + 4) % 4;
    if (residue != 1 && residue != 2) {
        throw DomainError("m=" + std::to_string(m) + " outside the lemma's congruence class");
    }
    Int p = a.norm();
    if (!is_rational_prime(p)) throw DomainError("norm is not a rational prime: " + a.to_string());
    bool antecedent = divides(p, a.re()) || divides(p, Int(m));
    if (!antecedent) return true;
    return p == m && associated(a, QuadInt::omega(a.ring()));
}

}  // namespace scissors
