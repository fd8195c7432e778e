#include "scissors/rewrite.hpp"

#include <stdexcept>

#include "scissors/errors.hpp"

namespace scissors {

std::string_view to_string(MoveKind k) {
    switch (k) {
        case MoveKind::Annihilate: return "Annihilate";
        case MoveKind::ScaleByEll: return "ScaleByEll";
        case MoveKind::ScaleByOneMinusInvEll: return "ScaleByOneMinusInvEll";
        case MoveKind::PowerScale: return "PowerScale";
        case MoveKind::ShiftStep: return "ShiftStep";
        case MoveKind::InvertNegate: return "InvertNegate";
        case MoveKind::BaseZero: return "BaseZero";
    }
    return "?";
}

MoveKind parse_move_kind(std::string_view name) {
    for (auto k : {MoveKind::Annihilate, MoveKind::ScaleByEll, MoveKind::ScaleByOneMinusInvEll,
                   MoveKind::PowerScale, MoveKind::ShiftStep, MoveKind::InvertNegate,
                   MoveKind::BaseZero}) {
        if (to_string(k) == name) return k;
    }
    throw std::invalid_argument("unknown move kind '" + std::string(name) + "'");
}

std::string_view to_string(CoverMode m) {
    return m == CoverMode::FourTerm ? "FourTerm" : "ThreeTerm";
}

// ---------------------------------------------------------------- lattices

Vec coords(const QuadInt& x) { return {x.re(), x.im()}; }

namespace {

IntMatrix rows_of(const std::vector<QuadInt>& xs) {
    IntMatrix m(0, 2);
    for (const auto& x : xs) m.append_row(coords(x));
    return m;
}

}  // namespace

IntMatrix ShiftLattice::hnf() const { return hermite(rows_of(basis)).basis; }

ShiftLattice shift_lattice(const QuadInt& ell) {
    if (ell.is_zero()) throw DomainError("shift lattice of 0");
    ShiftLattice l{ell, {}};
    if (ell.is_rational()) {
        l.basis = {ell};
    } else {
        l.basis = {QuadInt(ell.ring(), ell.norm()), ell};
    }
    return l;
}

IntMatrix power_span(const QuadInt& ell, int k) {
    std::vector<QuadInt> pw;
    QuadInt x = ell;
    for (int i = 0; i < k; ++i) {
        pw.push_back(x);
        x *= ell;
    }
    return hermite(rows_of(pw)).basis;
}

IntMatrix lattice_sum(const std::vector<ShiftLattice>& ls) {
    IntMatrix g(0, 2);
    for (const auto& l : ls) g.append_rows(rows_of(l.basis));
    return g;
}

bool is_full_lattice(const IntMatrix& gens) {
    return hermite(gens).basis == IntMatrix::identity(2);
}

CoveringResult check_covering(const QuadInt& p, const QuadInt& q, CoverMode mode) {
    for (const auto* x : {&p, &q}) {
        if (x->is_zero() || x->is_unit() || !is_prime(*x).prime)
            throw PreconditionError(x->to_string() + " is not prime");
    }
    if (associated(p, q)) throw PreconditionError(p.to_string() + " and " + q.to_string() + " are associated");
    const QuadInt w = QuadInt::omega(p.ring());
    std::vector<QuadInt> bases;
    if (mode == CoverMode::FourTerm) {
        bases = {p, w * p, q, w * q};
    } else {
        bases = {p, q, w};
    }
    CoveringResult r;
    for (const auto& b : bases) r.lattices.push_back(shift_lattice(b));
    r.witness = hermite(lattice_sum(r.lattices)).basis;
    r.covers = r.witness == IntMatrix::identity(2);
    return r;
}

// ---------------------------------------------------------------- moves

namespace {

std::optional<MoveKind> remark_kind(int chi_l, int chi_1ml) {
    if (chi_l == -1 && chi_1ml == 1) return MoveKind::PowerScale;
    if (chi_l == 1 && chi_1ml == -1) return MoveKind::ScaleByEll;
    if (chi_l == -1 && chi_1ml == -1) return MoveKind::ScaleByOneMinusInvEll;
    return std::nullopt;
}

EnabledMove enable(const Character& chi, const QuadInt& b) {
    EnabledMove e{b, 0, 0, std::nullopt, std::nullopt, false, shift_lattice(b)};
    const QuadInt one(b.ring(), 1);
    e.chi_base = char_eval(chi, b);
    e.chi_one_minus_base = char_eval(chi, one - b);
    e.base_kind = remark_kind(e.chi_base, e.chi_one_minus_base);
    if (e.chi_base == -1) {
        if (e.chi_one_minus_base == 1) {
            e.ell = FieldElem(b);
        } else {
            // chi(1/b) = -1 and chi(1 - 1/b) = chi(-1) chi(1-b) chi(b) = 1
            e.ell = FieldElem(b).inverse();
            e.inverted = true;
        }
    }
    return e;
}

void require_supported(const Character& chi) {
    Classification c = classify(chi);
    switch (c.kind) {
        case CharacterKind::Trivial:
            throw UnsupportedCharacter("trivial character: the summand is not zero in general");
        case CharacterKind::UnitNegative:
            throw UnsupportedCharacter(
                "character negative on a unit: handled by the unit coinvariants, not by rewriting");
        case CharacterKind::SinglePrime:
            throw UnsupportedCharacter("support {" + c.prime->to_string() +
                                       "} has one prime: the summand is P(k(v)), not zero");
        case CharacterKind::MultiPrime: break;
    }
    if (char_eval(chi, QuadInt(chi.ring(), -1)) != 1) throw PreconditionError("chi(-1) must be 1");
}

}  // namespace

MovePlan find_moves(const Character& chi) {
    require_supported(chi);
    const RingDesc ring = chi.ring();
    const QuadInt w = QuadInt::omega(ring);
    const CoverMode mode = char_eval(chi, w) == 1 ? CoverMode::FourTerm : CoverMode::ThreeTerm;
    const auto& s = chi.support();
    for (std::size_t i = 0; i < s.size(); ++i) {
        for (std::size_t j = i + 1; j < s.size(); ++j) {
            if (!check_covering(s[i], s[j], mode).covers) continue;
            MovePlan plan{chi, s[i], s[j], mode, {}};
            std::vector<QuadInt> bases;
            if (mode == CoverMode::FourTerm) {
                bases = {s[i], s[j], w * s[i], w * s[j]};
            } else {
                bases = {s[i], s[j], w};
            }
            for (const auto& b : bases) {
                EnabledMove e = enable(chi, b);
                if (!e.ell) throw PreconditionError("no enabled l for base " + b.to_string());
                plan.moves.push_back(std::move(e));
            }
            return plan;
        }
    }
    throw PreconditionError("no pair of support primes covers O_F");
}

// ---------------------------------------------------------------- replay

namespace {

struct State {
    int sign = 1;
    P1Point point;
    bool zero = false;
};

FieldElem pow_pm(const FieldElem& x, int e) {
    if (e == 0) return FieldElem::from_int(x.ring(), 1);
    return e > 0 ? x : x.inverse();
}

// Applies m to s. With check set, recomputes every side condition.
std::optional<std::string> apply(State& s, const Move& m, const Character& chi, bool check) {
    if (s.zero) return "move after the symbol was already shown to be zero";
    const RingDesc ring = chi.ring();
    const FieldElem one = FieldElem::from_int(ring, 1);
    auto need_ell = [&]() -> std::optional<std::string> {
        if (!m.ell) return "missing l";
        if (!(m.ell->ring() == ring)) return "l from another ring";
        if (m.ell->is_zero() || m.ell->is_one()) return "l must avoid 0 and 1";
        if (!check) return std::nullopt;
        int cl = char_eval(chi, *m.ell);
        int c1 = char_eval(chi, one - *m.ell);
        if (cl != m.chi_ell || c1 != m.chi_one_minus_ell) return "recorded chi values do not match";
        if (m.exponent < -1 || m.exponent > 1) return "exponent outside {-1, 0, 1}";
        return std::nullopt;
    };
    auto need = [&](int cl, int c1) -> std::optional<std::string> {
        if (m.chi_ell != cl || m.chi_one_minus_ell != c1) return "side condition fails for this kind";
        if (check && char_eval(chi, FieldElem::from_int(ring, -1)) != 1) return "chi(-1) != 1";
        return std::nullopt;
    };
    auto scale = [&](const FieldElem& f) {
        if (!s.point.is_infinity()) s.point = P1Point(s.point.value() * f);
    };
    switch (m.kind) {
        case MoveKind::PowerScale:
        case MoveKind::ShiftStep:
        case MoveKind::ScaleByEll:
        case MoveKind::ScaleByOneMinusInvEll: {
            if (auto e = need_ell()) return e;
            break;
        }
        default: break;
    }
    switch (m.kind) {
        case MoveKind::PowerScale:
            if (auto e = need(-1, 1)) return e;
            scale(pow_pm(one - *m.ell, m.exponent));
            return std::nullopt;
        case MoveKind::ShiftStep:
            if (auto e = need(-1, 1)) return e;
            if (s.point.is_infinity()) return "shift applied at infinity";
            s.point = P1Point(s.point.value() + FieldElem::from_int(ring, m.t) * *m.ell);
            return std::nullopt;
        case MoveKind::ScaleByEll:
            if (auto e = need(1, -1)) return e;
            scale(pow_pm(*m.ell, m.exponent));
            return std::nullopt;
        case MoveKind::ScaleByOneMinusInvEll:
            if (auto e = need(-1, -1)) return e;
            scale(pow_pm(one - m.ell->inverse(), m.exponent));
            return std::nullopt;
        case MoveKind::InvertNegate:
            s.sign = -s.sign;
            s.point = s.point.inverse();
            return std::nullopt;
        case MoveKind::BaseZero:
            if (s.point.is_infinity() || !s.point.value().is_one()) return "BaseZero needs the symbol [1]";
            s.zero = true;
            return std::nullopt;
        case MoveKind::Annihilate: {
            if (s.point.is_infinity()) return "Annihilate at infinity";
            const FieldElem& a = s.point.value();
            if (a.is_zero() || a.is_one()) return "Annihilate needs a outside {0, 1}";
            if (m.ell && !(*m.ell == a)) return "recorded element differs from the symbol";
            if (check && (char_eval(chi, a) != 1 || char_eval(chi, one - a) != -1))
                return "Annihilate needs chi(a) = 1 and chi(1-a) = -1";
            s.zero = true;
            return std::nullopt;
        }
    }
    return "unknown move";
}

class Builder {
public:
    Builder(const Character& chi, const P1Point& start, std::size_t budget)
        : chi_(chi), state_{1, start, false}, budget_(budget) {
        cert_.chi = chi;
        cert_.start = start;
    }

    void push(Move m) {
        if (cert_.moves.size() >= budget_)
            throw BudgetExceeded("move budget of " + std::to_string(budget_) + " exceeded");
        if (auto err = apply(state_, m, chi_, false)) throw std::logic_error("internal move error: " + *err);
        cert_.moves.push_back(std::move(m));
    }

    void shift(const QuadInt& t, const MovePlan& plan);

    const State& state() const { return state_; }
    Certificate& cert() { return cert_; }

private:
    Character chi_;
    State state_;
    std::size_t budget_;
    Certificate cert_{Character::trivial(chi_.ring()), P1Point::infinity(chi_.ring()), {}, true, std::nullopt, 1, false, {}};
};

Move ell_move(MoveKind kind, const EnabledMove& e, int exponent, const Int& t = 0) {
    Move m;
    m.kind = kind;
    m.ell = e.ell;
    m.t = t;
    m.exponent = exponent;
    m.chi_ell = -1;
    m.chi_one_minus_ell = 1;
    return m;
}

void Builder::shift(const QuadInt& t, const MovePlan& plan) {
    if (t.is_zero()) return;
    // rational lattices first, then everything
    std::vector<std::size_t> order;
    for (std::size_t i = 0; i < plan.moves.size(); ++i)
        if (plan.moves[i].base.is_rational()) order.push_back(i);
    std::optional<Vec> coeff;
    std::vector<std::size_t> used;
    for (int pass = 0; pass < 2 && !coeff; ++pass) {
        if (pass == 1) {
            order.clear();
            for (std::size_t i = 0; i < plan.moves.size(); ++i) order.push_back(i);
        }
        if (order.empty()) continue;
        IntMatrix g(0, 2);
        for (auto i : order)
            for (const auto& b : plan.moves[i].lattice.basis) g.append_row(coords(b));
        coeff = express(g, coords(t));
        used = order;
    }
    if (!coeff) throw PreconditionError("shift " + t.to_string() + " not in the covered lattice");

    std::size_t k = 0;
    for (auto i : used) {
        const EnabledMove& e = plan.moves[i];
        const QuadInt& b = e.base;
        Int b1, b2;
        if (b.is_rational()) {
            const Int c = (*coeff)[k++];
            b1 = e.inverted ? Int(c * b.re() * b.re()) : c;
            b2 = 0;
        } else {
            const Int c0 = (*coeff)[k++];
            const Int c1 = (*coeff)[k++];
            const Int n = b.norm(), tr = b.trace();
            if (!e.inverted) {
                // N = T b - b^2
                b1 = c0 * tr + c1;
                b2 = -c0;
            } else {
                // with l = 1/b: 1 = T l - N l^2 and b = (T^2 - N) l - T N l^2
                b1 = c0 * n * tr + c1 * (tr * tr - n);
                b2 = -c0 * n * n - c1 * tr * n;
            }
        }
        if (b1 == 0 && b2 == 0) continue;
        if (e.base.is_unit()) cert_.uses_unit_ell = true;
        if (b2 != 0) {
            // a -> a/(1-l) -> a/(1-l) - b2 l -> a - b2 l + b2 l^2 -> a + b1 l + b2 l^2
            push(ell_move(MoveKind::PowerScale, e, -1));
            push(ell_move(MoveKind::ShiftStep, e, 1, -b2));
            push(ell_move(MoveKind::PowerScale, e, 1));
            if (b1 + b2 != 0) push(ell_move(MoveKind::ShiftStep, e, 1, b1 + b2));
        } else {
            push(ell_move(MoveKind::ShiftStep, e, 1, b1));
        }
    }
}

}  // namespace

Certificate shift(const FieldElem& a, const QuadInt& t, const MovePlan& plan) {
    Builder b(plan.chi, P1Point(a), kDefaultMoveBudget);
    b.shift(t, plan);
    Certificate c = std::move(b.cert());
    c.claims_zero = false;
    c.end = P1Point(a + FieldElem(t));
    c.end_sign = 1;
    return c;
}

Certificate shift(const FieldElem& a, const QuadInt& t, const Character& chi) {
    if (t.is_zero()) {
        Certificate c{chi, P1Point(a), {}, false, P1Point(a), 1, false, {}};
        return c;
    }
    return shift(a, t, find_moves(chi));
}

Certificate reduce_to_zero(const P1Point& x, const Character& chi, std::size_t budget) {
    const RingDesc ring = chi.ring();
    if (!(x.ring() == ring)) throw DescriptorError("point and character from different rings");
    MovePlan plan = find_moves(chi);
    Builder b(chi, x, budget);
    const QuadInt one(ring, 1);
    while (true) {
        const State& s = b.state();
        if (s.point.is_infinity()) {
            b.push(Move{MoveKind::InvertNegate, std::nullopt, 0, 1, 0, 0});
            continue;
        }
        FieldElem a = s.point.value();
        if (a.is_one()) {
            if (!b.cert().moves.empty()) b.push(Move{MoveKind::BaseZero, std::nullopt, 0, 1, 0, 0});
            break;
        }
        if (a.is_integral()) {
            b.shift(one - a.num(), plan);
            b.push(Move{MoveKind::BaseZero, std::nullopt, 0, 1, 0, 0});
            break;
        }
        if (a.num().norm() < a.den().norm()) {
            b.push(Move{MoveKind::InvertNegate, std::nullopt, 0, 1, 0, 0});
            a = b.state().point.value();
            if (a.is_integral()) continue;
        }
        b.cert().trace.push_back(std::min(a.num().norm(), a.den().norm()));
        DivResult d = euclid_div(a.num(), a.den());
        b.shift(-d.quotient, plan);
    }
    Certificate c = std::move(b.cert());
    c.claims_zero = true;
    return c;
}

CheckResult check_certificate(const Certificate& c) {
    CheckResult r;
    const RingDesc ring = c.chi.ring();
    if (!(c.start.ring() == ring)) {
        r.failed_at = 0;
        r.reason = "start point from another ring";
        return r;
    }
    State s{1, c.start, false};
    for (std::size_t i = 0; i < c.moves.size(); ++i) {
        std::optional<std::string> err;
        try {
            err = apply(s, c.moves[i], c.chi, true);
        } catch (const std::exception& e) {
            err = e.what();
        }
        if (err) {
            r.failed_at = i;
            r.reason = std::string(to_string(c.moves[i].kind)) + ": " + *err;
            return r;
        }
    }
    if (c.claims_zero) {
        bool zero = s.zero || (!s.point.is_infinity() && s.point.value().is_one());
        if (!zero) {
            r.failed_at = c.moves.size();
            r.reason = "final symbol " + s.point.to_string() + " is not shown to be zero";
            return r;
        }
    } else {
        if (!c.end || s.zero || !(s.point == *c.end) || s.sign != c.end_sign) {
            r.failed_at = c.moves.size();
            r.reason = "final symbol does not match the claimed end";
            return r;
        }
    }
    r.ok = true;
    return r;
}

// ---------------------------------------------------------------- specialization

ResidueTarget::ResidueTarget(const Valuation& v, std::int64_t bound)
    : v_(v), ctx_(residue_field(v), bound), p_(ctx_.prebloch()), solver_(p_) {}

int valuation_sign(const FieldElem& a, const Valuation& v) {
    return valuation_of(a, v) % 2 == 0 ? 1 : -1;
}

Vec specialize(const P1Point& x, const ResidueTarget& target) {
    const BlochContext& ctx = target.context();
    Vec c = ctx.p_c();
    auto neg = [](Vec v) {
        for (auto& e : v) e = -e;
        return v;
    };
    if (x.is_infinity()) return neg(c);
    const FieldElem& a = x.value();
    if (a.is_zero()) return c;
    long val = valuation_of(a, target.valuation());
    if (val > 0) return c;
    if (val < 0) return neg(c);
    return ctx.p_symbol(reduce_mod(a, target.valuation(), ctx.field()));
}

Vec specialize(const P1Point& x, const Valuation& v) { return specialize(x, ResidueTarget(v)); }

bool fiveterm_specializes(const FieldElem& x, const FieldElem& y, const ResidueTarget& target,
                          bool integral) {
    if (x.is_zero() || y.is_zero() || x.is_one() || y.is_one() || x == y)
        throw PreconditionError("five-term relation needs x, y outside {0, 1} and x != y");
    const FieldElem one = FieldElem::from_int(x.ring(), 1);
    const FieldElem xi = x.inverse(), yi = y.inverse();
    struct Term {
        int coeff;
        FieldElem twist;
        FieldElem point;
    };
    const Term terms[] = {
        {1, one, x},
        {-1, one, y},
        {1, x, y / x},
        {-1, xi - one, (one - xi) / (one - yi)},
        {1, one - x, (one - x) / (one - y)},
    };
    Vec total = target.prebloch().zero();
    for (const auto& t : terms) {
        int c = t.coeff * valuation_sign(t.twist, target.valuation());
        Vec img = specialize(P1Point(t.point), target);
        for (std::size_t i = 0; i < total.size(); ++i) total[i] += c * img[i];
    }
    return integral ? target.solver().is_zero(total) : target.solver().is_zero_odd(total);
}

bool fiveterm_specializes(const FieldElem& x, const FieldElem& y, const Valuation& v,
                          bool integral) {
    return fiveterm_specializes(x, y, ResidueTarget(v), integral);
}

FieldElem residue_lift(const FFElem& z, const Valuation& v) {
    const RingDesc ring = v.prime.ring();
    return FieldElem(QuadInt(ring, z.c0, v.residue_deg == 2 ? z.c1 : 0));
}

}  // namespace scissors
