#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "scissors/finite_field.hpp"
#include "scissors/quad_ring.hpp"

namespace scissors {

/// Element num/den of F = Q(sqrt(-m)), kept reduced with a canonical
/// denominator so equality is coordinate-wise. Zero is 0/1.
class FieldElem {
public:
    explicit FieldElem(const QuadInt& num);
    /// Throws DomainError for den = 0.
    FieldElem(const QuadInt& num, const QuadInt& den);
    static FieldElem from_int(RingDesc ring, const Int& n) { return FieldElem(QuadInt(ring, n)); }

    /// "num" or "num/den", each side in the ring's "a+b*w" format.
    static FieldElem parse(RingDesc ring, std::string_view text);

    const QuadInt& num() const noexcept { return num_; }
    const QuadInt& den() const noexcept { return den_; }
    RingDesc ring() const noexcept { return num_.ring(); }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_.is_one() && den_.is_one(); }
    bool is_integral() const { return den_.is_one(); }

    /// Throws DomainError for zero.
    FieldElem inverse() const;

    std::string to_string() const;

    FieldElem operator-() const { return FieldElem(-num_, den_); }
    friend FieldElem operator+(const FieldElem& a, const FieldElem& b);
    friend FieldElem operator-(const FieldElem& a, const FieldElem& b);
    friend FieldElem operator*(const FieldElem& a, const FieldElem& b);
    friend FieldElem operator/(const FieldElem& a, const FieldElem& b);

    friend bool operator==(const FieldElem& a, const FieldElem& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const FieldElem& a, const FieldElem& b) { return !(a == b); }

private:
    struct Raw {};
    FieldElem(Raw, QuadInt num, QuadInt den) : num_(std::move(num)), den_(std::move(den)) {}

    QuadInt num_;
    QuadInt den_;
};

/// A point of P^1(F): a field element or infinity.
class P1Point {
public:
    explicit P1Point(FieldElem x) : ring_(x.ring()), value_(std::move(x)) {}
    static P1Point infinity(RingDesc ring) { return P1Point(ring); }

    /// Field element text or "inf".
    static P1Point parse(RingDesc ring, std::string_view text);

    bool is_infinity() const noexcept { return !value_.has_value(); }
    /// Throws PreconditionError at infinity.
    const FieldElem& value() const;
    RingDesc ring() const noexcept { return ring_; }

    /// 1/x with 1/0 = inf and 1/inf = 0.
    P1Point inverse() const;

    std::string to_string() const;

    friend bool operator==(const P1Point& a, const P1Point& b) {
        return a.ring_ == b.ring_ && a.value_ == b.value_;
    }

private:
    explicit P1Point(RingDesc ring) : ring_(ring) {}

    RingDesc ring_ = RingDesc::make(1);
    std::optional<FieldElem> value_;
};

/// The discrete valuation of F attached to a canonical prime.
struct Valuation {
    QuadInt prime;
    Int residue_char;
    int residue_deg = 1;
    /// Residue of w mod prime when residue_deg = 1.
    Int omega_residue = 0;

    /// Throws DomainError if pi is not prime.
    static Valuation at(const QuadInt& pi);

    /// |k(v)| = p^residue_deg.
    Int residue_order() const;
};

/// Valuations of all canonical primes with N(pi) <= bound, in canonical order.
std::vector<Valuation> valuations_up_to(RingDesc ring, long norm_bound);

/// v(x) for x != 0.
long valuation_of(const FieldElem& x, const Valuation& v);

/// F_p for residue degree 1; for degree 2, F_p[t] modulo the minimal
/// polynomial of w reduced mod p, so that w reduces to t.
FiniteField residue_field(const Valuation& v);

/// Image in k(v) of an element of valuation 0. Throws DomainError otherwise.
FFElem reduce_mod(const FieldElem& x, const Valuation& v, const FiniteField& k);
FFElem reduce_mod(const FieldElem& x, const Valuation& v);

}  // namespace scissors
