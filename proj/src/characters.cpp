#include "scissors/characters.hpp"

#include <algorithm>

#include "scissors/errors.hpp"

namespace scissors {

namespace {

void sort_canonical(std::vector<QuadInt>& v) {
    std::sort(v.begin(), v.end(), canonical_order_less);
    v.erase(std::unique(v.begin(), v.end()), v.end());
}

// symmetric difference of two sorted prime lists
std::vector<QuadInt> sym_diff(const std::vector<QuadInt>& a, const std::vector<QuadInt>& b) {
    std::vector<QuadInt> out;
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
        if (j == b.size() || (i < a.size() && canonical_order_less(a[i], b[j]))) {
            out.push_back(a[i++]);
        } else if (i == a.size() || canonical_order_less(b[j], a[i])) {
            out.push_back(b[j++]);
        } else {
            ++i;
            ++j;
        }
    }
    return out;
}

void add_factorization(SquareClass& c, const Factorization& f) {
    c.unit_bit ^= unit_class_bit(f.unit);
    std::vector<QuadInt> odd;
    for (const auto& [p, e] : f.primes)
        if (e % 2 != 0) odd.push_back(p);
    c.odd_primes = sym_diff(c.odd_primes, odd);
}

}  // namespace

SquareClass operator*(const SquareClass& a, const SquareClass& b) {
    if (!(a.ring == b.ring)) throw DescriptorError("square classes over different rings");
    SquareClass c;
    c.ring = a.ring;
    c.unit_bit = a.unit_bit ^ b.unit_bit;
    c.odd_primes = sym_diff(a.odd_primes, b.odd_primes);
    return c;
}

unsigned unit_class_bit(const QuadInt& u) {
    // the generator of U is never a square and U/U^2 has order 2
    return static_cast<unsigned>(unit_exponent(u) % 2);
}

SquareClass square_class(const FieldElem& x, const Int& norm_bound) {
    if (x.is_zero()) throw DomainError("square class of 0");
    SquareClass c;
    c.ring = x.ring();
    add_factorization(c, factor(x.num(), norm_bound));
    if (!x.den().is_one()) add_factorization(c, factor(x.den(), norm_bound));
    return c;
}

Character::Character(RingDesc ring, std::vector<QuadInt> support, int unit_sign)
    : ring_(ring), unit_sign_(unit_sign) {
    if (unit_sign != 1 && unit_sign != -1) throw DomainError("unit sign must be 1 or -1");
    for (auto& p : support) {
        if (!(p.ring() == ring)) throw DescriptorError("support prime from another ring");
        support_.push_back(canonical_prime(p));
    }
    sort_canonical(support_);
}

Character Character::parse(RingDesc ring, std::string_view text, int unit_sign) {
    std::vector<QuadInt> primes;
    while (!text.empty()) {
        auto comma = text.find(',');
        std::string_view item = text.substr(0, comma);
        while (!item.empty() && item.front() == ' ') item.remove_prefix(1);
        while (!item.empty() && item.back() == ' ') item.remove_suffix(1);
        if (!item.empty()) primes.push_back(QuadInt::parse(ring, item));
        if (comma == std::string_view::npos) break;
        text.remove_prefix(comma + 1);
    }
    return Character(ring, std::move(primes), unit_sign);
}

bool Character::in_support(const QuadInt& canonical) const {
    return std::binary_search(support_.begin(), support_.end(), canonical, canonical_order_less);
}

std::string Character::support_string() const {
    std::string out;
    for (const auto& p : support_) {
        if (!out.empty()) out += ',';
        out += p.to_string();
    }
    return out;
}

int char_eval(const Character& chi, const SquareClass& c) {
    if (!(chi.ring() == c.ring)) throw DescriptorError("character and element from different rings");
    int s = (c.unit_bit && chi.unit_sign() == -1) ? -1 : 1;
    for (const auto& p : c.odd_primes)
        if (chi.in_support(p)) s = -s;
    return s;
}

int char_eval(const Character& chi, const FieldElem& x) {
    if (x.is_zero()) throw DomainError("character evaluated at 0");
    if (chi.unit_sign() == -1) return char_eval(chi, square_class(x));
    long total = 0;
    for (const auto& p : chi.support()) {
        total += valuation(x.num(), p);
        if (!x.den().is_one()) total -= valuation(x.den(), p);
    }
    return total % 2 == 0 ? 1 : -1;
}

int char_eval(const Character& chi, const QuadInt& x) { return char_eval(chi, FieldElem(x)); }

std::string_view to_string(CharacterKind k) {
    switch (k) {
        case CharacterKind::Trivial: return "Trivial";
        case CharacterKind::UnitNegative: return "UnitNegative";
        case CharacterKind::SinglePrime: return "SinglePrime";
        case CharacterKind::MultiPrime: return "MultiPrime";
    }
    return "?";
}

Classification classify(const Character& chi) {
    if (chi.unit_sign() == -1) return {CharacterKind::UnitNegative, std::nullopt};
    switch (chi.support().size()) {
        case 0: return {CharacterKind::Trivial, std::nullopt};
        case 1: return {CharacterKind::SinglePrime, chi.support().front()};
        default: return {CharacterKind::MultiPrime, std::nullopt};
    }
}

bool sign_clash_vanishes(const Character& chi, const FieldElem& a, int eps) {
    return char_eval(chi, a) == -eps;
}

}  // namespace scissors
