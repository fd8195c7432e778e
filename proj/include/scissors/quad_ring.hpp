#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "scissors/bigint.hpp"

namespace scissors {

/// One of the five norm-Euclidean imaginary quadratic rings Z[w], w = w_m.
///
/// For -m = 2,3 (mod 4) (m = 1, 2) w = sqrt(-m) with minimal polynomial
/// t^2 + m. For -m = 1 (mod 4) (m = 3, 7, 11) w = (1 + sqrt(-m))/2 with
/// minimal polynomial t^2 - t + (1+m)/4.
class RingDesc {
public:
    /// Throws DomainError unless m is in {1, 2, 3, 7, 11}.
    static RingDesc make(int m);

    int m() const noexcept { return m_; }

    /// True when w = (1 + sqrt(-m))/2.
    bool half_integral() const noexcept { return m_ % 4 == 3; }

    /// N(w): m for the sqrt form, (1+m)/4 otherwise.
    Int omega_norm() const;

    /// w + conj(w): 0 or 1.
    Int omega_trace() const;

    /// -m when -m = 1 (mod 4), -4m otherwise.
    Int discriminant() const;

    friend bool operator==(RingDesc a, RingDesc b) noexcept { return a.m_ == b.m_; }

private:
    explicit RingDesc(int m) : m_(m) {}
    int m_;
};

inline constexpr int kSupportedRings[] = {1, 2, 3, 7, 11};

/// Element re + im*w of Z[w_m].
class QuadInt {
public:
    explicit QuadInt(RingDesc ring, Int re = 0, Int im = 0)
        : re_(std::move(re)), im_(std::move(im)), ring_(ring) {}

    static QuadInt omega(RingDesc ring) { return QuadInt(ring, 0, 1); }

    /// Parses "a+b*w" style text: a sum of integer terms and integer
    /// multiples of w, e.g. "3+2*w", "-1+0*w", "w", "2-w", "7".
    static QuadInt parse(RingDesc ring, std::string_view text);

    const Int& re() const noexcept { return re_; }
    const Int& im() const noexcept { return im_; }
    RingDesc ring() const noexcept { return ring_; }

    bool is_zero() const { return re_ == 0 && im_ == 0; }
    bool is_one() const { return re_ == 1 && im_ == 0; }
    bool is_rational() const { return im_ == 0; }
    bool is_unit() const { return norm() == 1; }

    QuadInt conj() const;
    Int norm() const;
    Int trace() const;

    /// Canonical text "a+b*w" (always both terms, e.g. "3-1*w", "0+1*w").
    std::string to_string() const;

    QuadInt operator-() const { return QuadInt(ring_, -re_, -im_); }
    QuadInt& operator+=(const QuadInt& o);
    QuadInt& operator-=(const QuadInt& o);
    QuadInt& operator*=(const QuadInt& o);

    friend QuadInt operator+(QuadInt a, const QuadInt& b) { return a += b; }
    friend QuadInt operator-(QuadInt a, const QuadInt& b) { return a -= b; }
    friend QuadInt operator*(QuadInt a, const QuadInt& b) { return a *= b; }
    friend QuadInt operator*(QuadInt a, const Int& k) {
        a.re_ *= k;
        a.im_ *= k;
        return a;
    }
    friend QuadInt operator*(const Int& k, QuadInt a) { return std::move(a) * k; }

    friend bool operator==(const QuadInt& a, const QuadInt& b) {
        return a.ring_ == b.ring_ && a.re_ == b.re_ && a.im_ == b.im_;
    }
    friend bool operator!=(const QuadInt& a, const QuadInt& b) { return !(a == b); }

private:
    void require_same_ring(const QuadInt& o) const;

    Int re_;
    Int im_;
    RingDesc ring_;
};

/// Total order used for deterministic prime lists: (norm, im, re).
bool canonical_order_less(const QuadInt& a, const QuadInt& b);

struct DivResult {
    QuadInt quotient;
    QuadInt remainder;
};

/// a = q*b + r with N(r) < N(b). Candidate quotients come from the exact
/// coordinates of a/b: the half-down rounded point first, then the
/// remaining floor/ceil combinations in (floor, ceil) order per coordinate.
DivResult euclid_div(const QuadInt& a, const QuadInt& b);

/// a/b when b divides a exactly.
std::optional<QuadInt> divide_exact(const QuadInt& a, const QuadInt& b);

bool divides(const QuadInt& d, const QuadInt& a);

/// Greatest common divisor in canonical associate form. gcd(0, 0) throws.
QuadInt gcd(const QuadInt& a, const QuadInt& b);

/// Unit group as the powers g^0, g^1, ... of unit_generator.
std::vector<QuadInt> units(RingDesc ring);

/// i for m = 1, w for m = 3, -1 otherwise.
QuadInt unit_generator(RingDesc ring);

/// k with u = unit_generator^k, 0 <= k < |units|. Throws on non-units.
int unit_exponent(const QuadInt& u);

bool associated(const QuadInt& a, const QuadInt& b);

struct CanonicalForm {
    QuadInt value;  // unit * a
    QuadInt unit;
};

/// Canonical associate of a nonzero element. For m in {1, 3} the unique
/// associate with re > 0 and im >= 0; otherwise the sign with im > 0, or
/// im == 0 and re > 0.
CanonicalForm canonical_associate(const QuadInt& a);

enum class PrimeKind { NormPrime, Inert, Split, Ramified };

enum class PrimalityCriterion {
    None,
    NormIsRationalPrime,
    InertOddPrime,
    InertTwo,
};

struct PrimalityWitness {
    bool prime = false;
    PrimeKind kind = PrimeKind::NormPrime;
    PrimalityCriterion criterion = PrimalityCriterion::None;
    Int rational_prime = 0;  // the rational prime below
};

/// Splitting type of a rational prime p in Z[w].
PrimeKind classify_rational_prime(RingDesc ring, const Int& p);

/// Primality in Z[w]. Throws DomainError on zero or units.
PrimalityWitness is_prime(const QuadInt& a);

/// Canonical associate of a prime; throws DomainError if a is not prime.
QuadInt canonical_prime(const QuadInt& a);

/// Canonical prime of norm p over a split or ramified p, or p itself when
/// p is inert.
QuadInt prime_above(RingDesc ring, const Int& p);

/// Number of times the prime pi divides a (a != 0).
long valuation(const QuadInt& a, const QuadInt& pi);

inline const Int kDefaultFactorBound{1000000};

struct Factorization {
    QuadInt unit;
    std::vector<std::pair<QuadInt, long>> primes;  // canonical, sorted

    QuadInt expand() const;
};

/// Unit times canonical prime powers. Throws CapacityError when N(a)
/// exceeds the trial-division bound and DomainError for a = 0.
Factorization factor(const QuadInt& a, const Int& norm_bound = kDefaultFactorBound);

/// Congruence convention for the R(alpha) lemma, whose hypothesis
/// "m = 1,2 (mod 4)" can be read on m or on -m.
enum class LemmaConvention { OnM, OnNegM };

/// Instance check of: if N(a) = p is prime and p | R(a) or p | m, then
/// m = p and a ~ w. Throws DomainError when m falls outside the
/// convention or N(a) is not a rational prime.
bool check_r_alpha_lemma(const QuadInt& a, LemmaConvention convention = LemmaConvention::OnM);

}  // namespace scissors
