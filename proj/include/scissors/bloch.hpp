#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "scissors/finite_field.hpp"
#include "scissors/zmodkit.hpp"

namespace scissors {

inline constexpr std::int64_t kDefaultBlochBound = 64;

enum class BlochGroup { P, B, RP, RP1, RB, RPplus, RPtilde, EPlus };

std::string_view to_string(BlochGroup g);
/// Accepts P, B, RP, RP1, RB, RPplus, RPtilde, Eplus. Throws std::invalid_argument.
BlochGroup parse_bloch_group(std::string_view name);

/// Presentations attached to one finite field F_q.
///
/// P(F_q) has generators [x], x in F_q \ {0,1}, in index order. RP(F_q) is
/// presented over Z[F^x/(F^x)^2] on [x], x in F_q^x (including [1]), and
/// flattened: the symbol <h>[x] sits at flat_index(index(x) - 1, h, k) with
/// k = 1 for odd q and k = 0 for even q. F_2 and F_3 use their special
/// presentations.
class BlochContext {
public:
    /// Throws DomainError unless q is a prime or prime square with
    /// 2 <= q <= bound.
    explicit BlochContext(std::int64_t q, std::int64_t bound = kDefaultBlochBound);
    explicit BlochContext(FiniteField field, std::int64_t bound = kDefaultBlochBound);

    const FiniteField& field() const noexcept { return field_; }
    std::int64_t q() const noexcept { return field_.order(); }
    /// Number of involutions in the square class group: 1 for odd q.
    std::size_t k() const noexcept { return k_; }

    /// Class of a in F^x/(F^x)^2 as a group bitmask.
    unsigned square_bit(const FFElem& a) const;

    // P(F)
    FPModule prebloch() const;
    /// [x] in P(F); zero for x = 1. Throws DomainError for x = 0.
    Vec p_symbol(const FFElem& x) const;
    /// C_F in P(F): the generator for F_2, 2[-1] for F_3, [x] + [1-x] otherwise.
    Vec p_c() const;
    std::size_t p_gens() const;

    // RP(F)
    GroupRingPresentation refined_presentation() const;
    FPModule refined() const;
    std::size_t rp_gens() const;
    /// <a>[x] in RP(F), x in F^x.
    Vec rp_symbol(const FFElem& x, const FFElem& a) const;
    Vec rp_symbol(const FFElem& x) const { return rp_symbol(x, field_.one()); }
    /// <a> * v.
    Vec rp_act(const Vec& v, const FFElem& a) const;

    /// [x] + <-1>[1/x].
    Vec psi1(const FFElem& x) const;
    /// <1/x - 1>[x] + <1-x>[1/x]; zero at x = 1.
    Vec psi2(const FFElem& x) const;
    /// [x] + <-1>[1-x] + <<1-x>> psi1(x), x not in {0, 1}.
    Vec c_element(const FFElem& x) const;

    /// I_F^2: one generator on which the nontrivial class acts by -1; the
    /// zero module for even q.
    FPModule i2() const;
    /// S^2_Z(F^x) for F^x cyclic on dlog generator g, with k trivial involutions.
    FPModule s2(std::size_t involutions) const;
    /// [x] -> <<1-x>><<x>>, as an rp_gens x i2().num_gens() matrix.
    IntMatrix lambda1() const;
    /// [x] -> (1-x) o x on RP(F).
    IntMatrix lambda2() const;
    /// [x] -> (1-x) o x on P(F).
    IntMatrix lambda_p() const;

private:
    void init(std::int64_t bound);
    std::size_t p_index(const FFElem& x) const;
    std::size_t rp_index(const FFElem& x, unsigned h) const;
    Int lambda2_value(const FFElem& x) const;

    FiniteField field_;
    std::size_t k_ = 0;
    unsigned minus_one_bit_ = 0;
};

/// Everything computed for one field. RB is the kernel of (lambda1, lambda2)
/// on RP; rb_via_rp1 recomputes it as the kernel of lambda2 on RP1.
struct BlochSuite {
    std::int64_t q = 0;
    FPModule p;
    Submodule b;
    FPModule rp;
    Submodule rp1;
    Submodule rb;
    Submodule rb_via_rp1;
    FPModule rp_plus;
    FPModule rp_tilde;
    /// RP~ with <-1> forced to act trivially: the e+ part after inverting 2.
    FPModule e_plus;
    IntMatrix lambda1;
    IntMatrix lambda2;

    const FPModule& module(BlochGroup g) const;
};

BlochSuite derived_groups(std::int64_t q, std::int64_t bound = kDefaultBlochBound);

}  // namespace scissors
