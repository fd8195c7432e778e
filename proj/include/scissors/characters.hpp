#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "scissors/quad_field.hpp"

namespace scissors {

/// Class of x in F^x/(F^x)^2: the unit part in U/U^2 and the canonical
/// primes of odd valuation.
struct SquareClass {
    RingDesc ring = RingDesc::make(1);
    /// 1 when the unit part is a non-square unit.
    unsigned unit_bit = 0;
    /// Canonical primes with odd exponent, in canonical order.
    std::vector<QuadInt> odd_primes;

    bool is_trivial() const { return unit_bit == 0 && odd_primes.empty(); }
    friend SquareClass operator*(const SquareClass& a, const SquareClass& b);
    friend bool operator==(const SquareClass& a, const SquareClass& b) {
        return a.ring == b.ring && a.unit_bit == b.unit_bit && a.odd_primes == b.odd_primes;
    }
};

/// Class of a unit in U/U^2, which is cyclic of order 2 for every supported m.
unsigned unit_class_bit(const QuadInt& u);

/// Throws DomainError for 0 and CapacityError past the factor bound.
SquareClass square_class(const FieldElem& x, const Int& norm_bound = kDefaultFactorBound);

/// chi_S times a sign on U/U^2: chi(p) = -1 exactly for p in the support,
/// chi(u) = unit_sign for a non-square unit u.
class Character {
public:
    /// Primes are replaced by their canonical associates and deduplicated.
    /// Throws DomainError for non-primes or unit_sign outside {1, -1}.
    Character(RingDesc ring, std::vector<QuadInt> support, int unit_sign = 1);

    static Character trivial(RingDesc ring) { return Character(ring, {}); }
    /// Comma separated primes, e.g. "3,2+1*w"; empty text is the trivial support.
    static Character parse(RingDesc ring, std::string_view support, int unit_sign = 1);

    RingDesc ring() const noexcept { return ring_; }
    const std::vector<QuadInt>& support() const noexcept { return support_; }
    int unit_sign() const noexcept { return unit_sign_; }
    bool in_support(const QuadInt& canonical) const;

    /// Support as text in the parse format.
    std::string support_string() const;

    friend bool operator==(const Character& a, const Character& b) {
        return a.ring_ == b.ring_ && a.support_ == b.support_ && a.unit_sign_ == b.unit_sign_;
    }

private:
    RingDesc ring_;
    std::vector<QuadInt> support_;
    int unit_sign_;
};

/// chi(x) in {1, -1}. Throws DomainError for x = 0.
int char_eval(const Character& chi, const FieldElem& x);
int char_eval(const Character& chi, const QuadInt& x);
int char_eval(const Character& chi, const SquareClass& c);

enum class CharacterKind { Trivial, UnitNegative, SinglePrime, MultiPrime };

std::string_view to_string(CharacterKind k);

struct Classification {
    CharacterKind kind;
    /// The prime for SinglePrime.
    std::optional<QuadInt> prime;
};

/// A negative unit sign wins over the support size.
Classification classify(const Character& chi);

/// True when <a> acts as eps on a module M and chi(a) = -eps, so M[1/2]_chi = 0.
bool sign_clash_vanishes(const Character& chi, const FieldElem& a, int eps);

}  // namespace scissors
