#include "scissors/bloch.hpp"

#include <stdexcept>

#include "scissors/errors.hpp"

namespace scissors {

std::string_view to_string(BlochGroup g) {
    switch (g) {
        case BlochGroup::P: return "P";
        case BlochGroup::B: return "B";
        case BlochGroup::RP: return "RP";
        case BlochGroup::RP1: return "RP1";
        case BlochGroup::RB: return "RB";
        case BlochGroup::RPplus: return "RPplus";
        case BlochGroup::RPtilde: return "RPtilde";
        case BlochGroup::EPlus: return "Eplus";
    }
    return "?";
}

BlochGroup parse_bloch_group(std::string_view name) {
    for (auto g : {BlochGroup::P, BlochGroup::B, BlochGroup::RP, BlochGroup::RP1, BlochGroup::RB,
                   BlochGroup::RPplus, BlochGroup::RPtilde, BlochGroup::EPlus}) {
        if (to_string(g) == name) return g;
    }
    throw std::invalid_argument("unknown group '" + std::string(name) +
                                "'; expected P, B, RP, RP1, RB, RPplus, RPtilde or Eplus");
}

BlochContext::BlochContext(std::int64_t q, std::int64_t bound)
    : field_((q < 2 || q > bound) ? throw DomainError("field order " + std::to_string(q) +
                                                      " outside [2, " + std::to_string(bound) + "]")
                                  : FiniteField::of_order(q)) {
    init(bound);
}

BlochContext::BlochContext(FiniteField field, std::int64_t bound) : field_(std::move(field)) {
    init(bound);
}

void BlochContext::init(std::int64_t bound) {
    if (field_.order() > bound) {
        throw DomainError("field order " + std::to_string(field_.order()) + " exceeds bound " +
                          std::to_string(bound));
    }
    k_ = field_.characteristic() == 2 ? 0 : 1;
    minus_one_bit_ = square_bit(field_.neg(field_.one()));
}

unsigned BlochContext::square_bit(const FFElem& a) const {
    if (k_ == 0) return 0;
    return static_cast<unsigned>(field_.square_class(a));
}

// ---------------------------------------------------------------- P(F)

std::size_t BlochContext::p_gens() const {
    if (q() <= 3) return 1;
    return static_cast<std::size_t>(q() - 2);
}

std::size_t BlochContext::p_index(const FFElem& x) const {
    std::int64_t i = field_.index(x);
    std::int64_t one = field_.index(field_.one());
    if (i == 0 || i == one) throw DomainError("no generator for " + field_.to_string(x));
    // skip 0 and 1 in index order
    return static_cast<std::size_t>(i - 1 - (i > one ? 1 : 0));
}

Vec BlochContext::p_symbol(const FFElem& x) const {
    if (x == field_.zero()) throw DomainError("[0] is not a symbol of P(F)");
    Vec v(p_gens());
    if (x == field_.one()) return v;
    if (q() == 2) return v;
    if (q() == 3) {
        v[0] = 1;
        return v;
    }
    v[p_index(x)] = 1;
    return v;
}

Vec BlochContext::p_c() const {
    Vec v(p_gens());
    if (q() == 2) {
        v[0] = 1;
        return v;
    }
    if (q() == 3) {
        v[0] = 2;
        return v;
    }
    FFElem x = field_.at(1);
    if (x == field_.one()) x = field_.at(2);
    Vec a = p_symbol(x), b = p_symbol(field_.sub(field_.one(), x));
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = a[i] + b[i];
    return v;
}

FPModule BlochContext::prebloch() const {
    FPModule m;
    if (q() == 2) {
        m.gen_labels = {"C"};
        m.relations = IntMatrix::from_rows({{Int(3)}}, 1);
        return m;
    }
    if (q() == 3) {
        m.gen_labels = {"[2]"};
        m.relations = IntMatrix::from_rows({{Int(4)}}, 1);
        return m;
    }
    const FiniteField& f = field_;
    std::vector<FFElem> gens;
    for (const auto& x : f.units())
        if (!(x == f.one())) gens.push_back(x);
    for (const auto& x : gens) m.gen_labels.push_back("[" + f.to_string(x) + "]");
    m.relations = IntMatrix(0, gens.size());
    const FFElem one = f.one();
    for (const auto& x : gens)
        for (const auto& y : gens) {
            if (x == y) continue;
            Vec r(gens.size());
            FFElem xi = f.inv(x), yi = f.inv(y);
            r[p_index(x)] += 1;
            r[p_index(y)] -= 1;
            r[p_index(f.div(y, x))] += 1;
            r[p_index(f.div(f.sub(one, xi), f.sub(one, yi)))] -= 1;
            r[p_index(f.div(f.sub(one, x), f.sub(one, y)))] += 1;
            m.relations.append_row(r);
        }
    return m;
}

// ---------------------------------------------------------------- RP(F)

std::size_t BlochContext::rp_gens() const {
    if (q() == 2) return 1;
    return static_cast<std::size_t>(q() - 1) << k_;
}

std::size_t BlochContext::rp_index(const FFElem& x, unsigned h) const {
    if (x == field_.zero()) throw DomainError("[0] is not a generator of RP(F)");
    return flat_index(static_cast<std::size_t>(field_.index(x) - 1), h, k_);
}

Vec BlochContext::rp_symbol(const FFElem& x, const FFElem& a) const {
    Vec v(rp_gens());
    if (q() == 2) {
        if (x == field_.zero()) throw DomainError("[0] is not a generator of RP(F)");
        return v;
    }
    v[rp_index(x, square_bit(a))] = 1;
    return v;
}

Vec BlochContext::rp_act(const Vec& v, const FFElem& a) const {
    unsigned h = square_bit(a);
    if (h == 0) return v;
    Vec out(v.size());
    for (const auto& x : field_.units())
        for (unsigned g = 0; g < (1u << k_); ++g) out[rp_index(x, g ^ h)] = v[rp_index(x, g)];
    return out;
}

GroupRingPresentation BlochContext::refined_presentation() const {
    GroupRingPresentation g;
    g.k = k_;
    const FiniteField& f = field_;
    if (q() == 2) {
        g.gen_labels = {"C"};
        g.relations.push_back({{0, 0, Int(3)}});
        return g;
    }
    for (const auto& x : f.units()) g.gen_labels.push_back("[" + f.to_string(x) + "]");
    auto gen = [&](const FFElem& x) { return static_cast<std::size_t>(f.index(x) - 1); };
    const FFElem one = f.one();
    g.relations.push_back({{gen(one), 0, Int(1)}});
    if (q() == 3) {
        // 2 psi1(-1) = 2([-1] + <-1>[-1])
        FFElem m1 = f.neg(one);
        g.relations.push_back({{gen(m1), 0, Int(2)}, {gen(m1), square_bit(m1), Int(2)}});
        return g;
    }
    for (const auto& x : f.units()) {
        if (x == one) continue;
        for (const auto& y : f.units()) {
            if (y == one) continue;
            FFElem xi = f.inv(x), yi = f.inv(y);
            FFElem xi1 = f.sub(xi, one);
            FFElem ox = f.sub(one, x);
            g.relations.push_back({
                {gen(x), 0, Int(1)},
                {gen(y), 0, Int(-1)},
                {gen(f.div(y, x)), square_bit(x), Int(1)},
                {gen(f.div(f.sub(one, xi), f.sub(one, yi))), square_bit(xi1), Int(-1)},
                {gen(f.div(ox, f.sub(one, y))), square_bit(ox), Int(1)},
            });
        }
    }
    return g;
}

FPModule BlochContext::refined() const { return flatten(refined_presentation()); }

namespace {

Vec add(const Vec& a, const Vec& b) {
    Vec out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
    return out;
}

}  // namespace

Vec BlochContext::psi1(const FFElem& x) const {
    const FFElem m1 = field_.neg(field_.one());
    return add(rp_symbol(x), rp_symbol(field_.inv(x), m1));
}

Vec BlochContext::psi2(const FFElem& x) const {
    const FFElem one = field_.one();
    if (x == one) return Vec(rp_gens());
    FFElem xi = field_.inv(x);
    return add(rp_symbol(x, field_.sub(xi, one)), rp_symbol(xi, field_.sub(one, x)));
}

Vec BlochContext::c_element(const FFElem& x) const {
    const FFElem one = field_.one();
    if (x == field_.zero() || x == one) throw DomainError("C(x) needs x outside {0, 1}");
    const FFElem ox = field_.sub(one, x);
    Vec p = psi1(x);
    Vec twisted = rp_act(p, ox);
    Vec c = add(rp_symbol(x), rp_symbol(ox, field_.neg(one)));
    for (std::size_t i = 0; i < c.size(); ++i) c[i] += twisted[i] - p[i];
    return c;
}

FPModule BlochContext::i2() const {
    FPModule m;
    if (k_ == 0) return m;
    m.gen_labels = {"i2"};
    m.relations = IntMatrix(0, 1);
    m.action.push_back(IntMatrix::from_rows({{Int(-1)}}, 1));
    return m;
}

FPModule BlochContext::s2(std::size_t involutions) const {
    FPModule a;
    a.gen_labels = {"g"};
    a.relations = IntMatrix::from_rows({{Int(q() - 1)}}, 1);
    FPModule s = sym2(a, Sym2Quotient::Antisymmetric);
    for (std::size_t i = 0; i < involutions; ++i) s.action.push_back(IntMatrix::identity(1));
    return s;
}

Int BlochContext::lambda2_value(const FFElem& x) const {
    if (x == field_.one()) return 0;
    return Int(field_.dlog(field_.sub(field_.one(), x))) * Int(field_.dlog(x));
}

IntMatrix BlochContext::lambda1() const {
    IntMatrix f(rp_gens(), k_);
    if (k_ == 0 || q() == 2) return f;
    const FFElem one = field_.one();
    for (const auto& x : field_.units()) {
        if (x == one) continue;
        if (square_bit(x) && square_bit(field_.sub(one, x))) {
            f(rp_index(x, 0), 0) = 1;
            f(rp_index(x, 1), 0) = -1;
        }
    }
    return f;
}

IntMatrix BlochContext::lambda2() const {
    IntMatrix f(rp_gens(), 1);
    if (q() == 2) return f;
    for (const auto& x : field_.units())
        for (unsigned h = 0; h < (1u << k_); ++h) f(rp_index(x, h), 0) = lambda2_value(x);
    return f;
}

IntMatrix BlochContext::lambda_p() const {
    IntMatrix f(p_gens(), 1);
    if (q() == 2) return f;
    if (q() == 3) {
        f(0, 0) = lambda2_value(field_.neg(field_.one()));
        return f;
    }
    for (const auto& x : field_.units()) {
        if (x == field_.one()) continue;
        f(p_index(x), 0) = lambda2_value(x);
    }
    return f;
}

// ---------------------------------------------------------------- suite

const FPModule& BlochSuite::module(BlochGroup g) const {
    switch (g) {
        case BlochGroup::P: return p;
        case BlochGroup::B: return b.module;
        case BlochGroup::RP: return rp;
        case BlochGroup::RP1: return rp1.module;
        case BlochGroup::RB: return rb.module;
        case BlochGroup::RPplus: return rp_plus;
        case BlochGroup::RPtilde: return rp_tilde;
        case BlochGroup::EPlus: return e_plus;
    }
    throw std::logic_error("unknown group");
}

namespace {

IntMatrix hcat(const IntMatrix& a, const IntMatrix& b) {
    IntMatrix out(a.rows(), a.cols() + b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = a(i, j);
        for (std::size_t j = 0; j < b.cols(); ++j) out(i, a.cols() + j) = b(i, j);
    }
    return out;
}

}  // namespace

BlochSuite derived_groups(std::int64_t q, std::int64_t bound) {
    BlochContext ctx(q, bound);
    const FiniteField& f = ctx.field();
    BlochSuite s;
    s.q = q;
    s.p = ctx.prebloch();
    s.b = map_kernel(ctx.lambda_p(), s.p, ctx.s2(0));
    s.rp = ctx.refined();
    s.lambda1 = ctx.lambda1();
    s.lambda2 = ctx.lambda2();

    const FPModule i2 = ctx.i2();
    const FPModule s2 = ctx.s2(ctx.k());
    s.rp1 = map_kernel(s.lambda1, s.rp, i2);
    s.rb = map_kernel(hcat(s.lambda1, s.lambda2), s.rp, direct_sum(i2, s2));
    s.rb_via_rp1 = map_kernel(s.rp1.embedding * s.lambda2, s.rp1.module, s2);

    if (q == 2) {
        s.rp_plus = s.rp_tilde = s.e_plus = s.rp;
        return s;
    }
    const FFElem m1 = f.neg(f.one());
    s.rp_plus = s.rp;
    s.rp_tilde = s.rp;
    for (const auto& x : f.units()) {
        Vec sym = ctx.rp_symbol(x);
        s.rp_plus.add_relation_orbit(vec_sub(ctx.rp_act(sym, m1), sym));
        Vec inv = ctx.rp_symbol(f.inv(x));
        for (std::size_t i = 0; i < inv.size(); ++i) inv[i] += sym[i];
        s.rp_plus.add_relation_orbit(inv);
        s.rp_tilde.add_relation_orbit(ctx.psi1(x));
    }
    s.e_plus = s.rp_tilde;
    for (std::size_t j = 0; j < s.e_plus.num_gens(); ++j) {
        Vec e = s.e_plus.gen(j);
        Vec d = vec_sub(ctx.rp_act(e, m1), e);
        if (!vec_is_zero(d)) s.e_plus.add_relation(d);
    }
    return s;
}

}  // namespace scissors
