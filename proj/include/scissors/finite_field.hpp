#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace scissors {

/// Element c0 + c1*t of F_p or F_{p^2}; c1 is 0 in the prime field.
struct FFElem {
    std::int64_t c0 = 0;
    std::int64_t c1 = 0;

    friend bool operator==(const FFElem&, const FFElem&) = default;
};

/// F_p, or F_p[t]/(t^2 + a1*t + a0) with the quadratic irreducible mod p.
///
/// Elements are indexed in (c0, c1) lexicographic order, so index(x) is
/// c0*p + c1 for degree 2 and c0 for degree 1. Logarithm tables are built
/// at construction, so the field size is capped at kMaxFieldOrder.
class FiniteField {
public:
    static constexpr std::int64_t kMaxFieldOrder = 1 << 16;

    static FiniteField prime(std::int64_t p);

    /// F_p[t]/(t^2 + a1*t + a0). Throws DomainError if reducible.
    static FiniteField quadratic(std::int64_t p, std::int64_t a0, std::int64_t a1);

    /// F_q with q = p or p^2; the modulus is the first irreducible
    /// t^2 + a1*t + a0 in (a0, a1) order.
    static FiniteField of_order(std::int64_t q);

    std::int64_t characteristic() const noexcept { return p_; }
    int degree() const noexcept { return deg_; }
    std::int64_t order() const noexcept { return q_; }
    /// (a0, a1) of the modulus; (0, 0) for the prime field.
    std::int64_t modulus_a0() const noexcept { return a0_; }
    std::int64_t modulus_a1() const noexcept { return a1_; }

    FFElem zero() const { return {0, 0}; }
    FFElem one() const { return {1, 0}; }
    /// t itself; throws for the prime field.
    FFElem gen_t() const;
    FFElem element(std::int64_t c0, std::int64_t c1 = 0) const;
    FFElem from_int(std::int64_t n) const { return element(n, 0); }

    std::int64_t index(const FFElem& x) const;
    FFElem at(std::int64_t index) const;
    /// All q elements in index order.
    std::vector<FFElem> elements() const;
    /// Nonzero elements in index order.
    std::vector<FFElem> units() const;

    FFElem add(const FFElem& a, const FFElem& b) const;
    FFElem sub(const FFElem& a, const FFElem& b) const;
    FFElem neg(const FFElem& a) const;
    FFElem mul(const FFElem& a, const FFElem& b) const;
    /// Throws DomainError for zero.
    FFElem inv(const FFElem& a) const;
    FFElem div(const FFElem& a, const FFElem& b) const { return mul(a, inv(b)); }
    /// Negative exponents need a nonzero base.
    FFElem pow(const FFElem& a, std::int64_t e) const;
    FFElem frobenius(const FFElem& a) const { return pow(a, p_); }

    /// Throws DomainError for zero. Always true in characteristic 2.
    bool is_square(const FFElem& a) const;
    /// 0 for squares, 1 otherwise: the class in F^x / (F^x)^2.
    int square_class(const FFElem& a) const { return is_square(a) ? 0 : 1; }

    /// The first element in index order of multiplicative order q-1.
    FFElem generator() const { return at(gen_index_); }
    /// k with generator()^k = a, 0 <= k < q-1. Throws for zero.
    std::int64_t dlog(const FFElem& a) const;

    std::string to_string(const FFElem& a) const;

    friend bool operator==(const FiniteField& x, const FiniteField& y) {
        return x.p_ == y.p_ && x.deg_ == y.deg_ && x.a0_ == y.a0_ && x.a1_ == y.a1_;
    }

private:
    FiniteField(std::int64_t p, int deg, std::int64_t a0, std::int64_t a1);
    std::int64_t mod(std::int64_t x) const {
        x %= p_;
        return x < 0 ? x + p_ : x;
    }

    std::int64_t p_;
    int deg_;
    std::int64_t q_;
    std::int64_t a0_;
    std::int64_t a1_;
    std::int64_t gen_index_ = 0;
    std::vector<std::int64_t> exp_;  // exp_[k] = index of g^k
    std::vector<std::int64_t> log_;  // log_[index] = k, -1 for zero
};

}  // namespace scissors
