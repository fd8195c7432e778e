#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "scissors/bloch.hpp"
#include "scissors/characters.hpp"
#include "scissors/quad_field.hpp"
#include "scissors/zmodkit.hpp"

namespace scissors {

/// Rewriting steps on a signed symbol s[a], a in P^1(F), in RP+(F)[1/2]_chi.
enum class MoveKind {
    Annihilate,             // chi(a) = 1, chi(1-a) = -1: [a] = 0
    ScaleByEll,             // chi(l) = 1, chi(1-l) = -1: a -> l^e a
    ScaleByOneMinusInvEll,  // chi(l) = chi(1-l) = -1: a -> (1 - 1/l)^e a
    PowerScale,             // chi(l) = -1, chi(1-l) = 1: a -> (1-l)^e a
    ShiftStep,              // chi(l) = -1, chi(1-l) = 1: a -> a + t l, t in Z
    InvertNegate,           // s[a] -> -s[1/a]
    BaseZero,               // [1] = 0
};

std::string_view to_string(MoveKind k);
/// Throws std::invalid_argument.
MoveKind parse_move_kind(std::string_view name);

struct Move {
    MoveKind kind = MoveKind::BaseZero;
    std::optional<FieldElem> ell;
    /// Integer shift for ShiftStep.
    Int t = 0;
    /// Exponent in {-1, 0, 1} for the scaling kinds.
    int exponent = 1;
    /// Recorded chi(l) and chi(1-l); 0 when the move has no l.
    int chi_ell = 0;
    int chi_one_minus_ell = 0;
};

struct Certificate {
    Character chi;
    P1Point start;
    std::vector<Move> moves;
    /// Zero claim, or s[start] = end_sign [end].
    bool claims_zero = true;
    std::optional<P1Point> end;
    int end_sign = 1;
    /// Set when some l is a unit.
    bool uses_unit_ell = false;
    /// min(N(num), N(den)) before each Euclidean step.
    std::vector<Int> trace;
};

/// Basis (over Z) of lZ[l] inside O_F: {N(l), l} for l not in Z, {l} for l in Z.
struct ShiftLattice {
    QuadInt ell;
    std::vector<QuadInt> basis;
    /// HNF of the basis in (re, im) coordinates.
    IntMatrix hnf() const;
};

/// Throws DomainError for l = 0.
ShiftLattice shift_lattice(const QuadInt& ell);
/// Lattice spanned by l, l^2, ..., l^k.
IntMatrix power_span(const QuadInt& ell, int k = 4);
/// The coordinates (re, im) of x.
Vec coords(const QuadInt& x);
/// Sum of lattices given as generators.
IntMatrix lattice_sum(const std::vector<ShiftLattice>& ls);
bool is_full_lattice(const IntMatrix& gens);

enum class CoverMode { FourTerm, ThreeTerm };

std::string_view to_string(CoverMode m);

struct CoveringResult {
    bool covers = false;
    std::vector<ShiftLattice> lattices;
    /// HNF of the summed lattice; the identity when the sum is O_F.
    IntMatrix witness;
};

/// FourTerm uses {p, w p, q, w q}, ThreeTerm {p, q, w}. Throws
/// PreconditionError for associated or non-prime inputs.
CoveringResult check_covering(const QuadInt& p, const QuadInt& q, CoverMode mode);

/// One candidate base b and the element l in {b, 1/b} with chi(l) = -1,
/// chi(1-l) = 1 when it exists.
struct EnabledMove {
    QuadInt base;
    int chi_base = 0;
    int chi_one_minus_base = 0;
    /// Remark table entry for l = base.
    std::optional<MoveKind> base_kind;
    std::optional<FieldElem> ell;
    bool inverted = false;
    ShiftLattice lattice;
};

struct MovePlan {
    Character chi;
    QuadInt p, q;
    CoverMode mode = CoverMode::FourTerm;
    std::vector<EnabledMove> moves;
};

/// Requires chi(-1) = 1, two support primes, and for m = 1 trivial unit
/// sign. Picks the first support pair whose lattices cover O_F. Throws
/// UnsupportedCharacter or PreconditionError.
MovePlan find_moves(const Character& chi);

inline constexpr std::size_t kDefaultMoveBudget = 100000;

/// Certificate for [a] = [a + t].
Certificate shift(const FieldElem& a, const QuadInt& t, const Character& chi);
Certificate shift(const FieldElem& a, const QuadInt& t, const MovePlan& plan);

/// Certificate for [x]_chi = 0. Throws UnsupportedCharacter for characters
/// outside the MultiPrime class and BudgetExceeded past the budget.
Certificate reduce_to_zero(const P1Point& x, const Character& chi,
                           std::size_t budget = kDefaultMoveBudget);

struct CheckResult {
    bool ok = false;
    /// Index of the first failing move; moves.size() for a failed claim.
    std::optional<std::size_t> failed_at;
    std::string reason;
};

CheckResult check_certificate(const Certificate& c);

/// Residue field of v with its pre-Bloch presentation, prepared for
/// repeated membership queries.
class ResidueTarget {
public:
    explicit ResidueTarget(const Valuation& v, std::int64_t bound = kDefaultBlochBound);

    const Valuation& valuation() const noexcept { return v_; }
    const BlochContext& context() const noexcept { return ctx_; }
    const FPModule& prebloch() const noexcept { return p_; }
    const ModuleSolver& solver() const noexcept { return solver_; }

private:
    Valuation v_;
    BlochContext ctx_;
    FPModule p_;
    ModuleSolver solver_;
};

/// Image of [x] in P(k(v)): [x mod v] for v(x) = 0, C_k for v(x) > 0 or
/// x = 0, -C_k for v(x) < 0 or x = inf.
Vec specialize(const P1Point& x, const ResidueTarget& target);
Vec specialize(const P1Point& x, const Valuation& v);

/// (-1)^v(a).
int valuation_sign(const FieldElem& a, const Valuation& v);

/// Image of S_{x,y} under specialization with the (-1)^v twist on the
/// coefficients is zero in P(k(v))[1/2], or in P(k(v)) itself when integral
/// is set (this stronger form fails in general). Throws PreconditionError
/// unless x, y are nonzero, different, and not 1.
bool fiveterm_specializes(const FieldElem& x, const FieldElem& y, const ResidueTarget& target,
                          bool integral = false);
bool fiveterm_specializes(const FieldElem& x, const FieldElem& y, const Valuation& v,
                          bool integral = false);

/// c0 + c1*w for z = c0 + c1*t in k(v).
FieldElem residue_lift(const FFElem& z, const Valuation& v);

}  // namespace scissors
