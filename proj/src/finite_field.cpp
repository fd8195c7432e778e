#include "scissors/finite_field.hpp"

#include "scissors/errors.hpp"

namespace scissors {

namespace {

bool small_prime(std::int64_t p) {
    if (p < 2) return false;
    for (std::int64_t d = 2; d * d <= p; ++d) {
        if (p % d == 0) return false;
    }
    return true;
}

bool has_root(std::int64_t p, std::int64_t a0, std::int64_t a1) {
    for (std::int64_t x = 0; x < p; ++x) {
        if ((x * x + a1 * x + a0) % p == 0) return true;
    }
    return false;
}

}  // namespace

FiniteField::FiniteField(std::int64_t p, int deg, std::int64_t a0, std::int64_t a1)
    : p_(p), deg_(deg), q_(deg == 1 ? p : p * p), a0_(a0), a1_(a1) {
    if (!small_prime(p)) throw DomainError("not a prime: " + std::to_string(p));
    if (q_ > kMaxFieldOrder) {
        throw CapacityError("field order " + std::to_string(q_) + " exceeds " +
                            std::to_string(kMaxFieldOrder));
    }
    const std::int64_t n = q_ - 1;
    for (std::int64_t i = 1; i < q_; ++i) {
        FFElem g = at(i);
        FFElem x = g;
        std::int64_t ord = 1;
        while (!(x == one())) {
            x = mul(x, g);
            ++ord;
        }
        if (ord == n) {
            gen_index_ = i;
            break;
        }
    }
    exp_.resize(static_cast<std::size_t>(n));
    log_.assign(static_cast<std::size_t>(q_), -1);
    FFElem g = at(gen_index_);
    FFElem x = one();
    for (std::int64_t k = 0; k < n; ++k) {
        exp_[k] = index(x);
        log_[exp_[k]] = k;
        x = mul(x, g);
    }
}

FiniteField FiniteField::prime(std::int64_t p) { return FiniteField(p, 1, 0, 0); }

FiniteField FiniteField::quadratic(std::int64_t p, std::int64_t a0, std::int64_t a1) {
    if (!small_prime(p)) throw DomainError("not a prime: " + std::to_string(p));
    a0 = ((a0 % p) + p) % p;
    a1 = ((a1 % p) + p) % p;
    if (has_root(p, a0, a1)) {
        throw DomainError("t^2 + " + std::to_string(a1) + "*t + " + std::to_string(a0) +
                          " is reducible mod " + std::to_string(p));
    }
    return FiniteField(p, 2, a0, a1);
}

FiniteField FiniteField::of_order(std::int64_t q) {
    if (small_prime(q)) return prime(q);
    for (std::int64_t p = 2; p * p <= q; ++p) {
        if (p * p == q && small_prime(p)) {
            for (std::int64_t a0 = 0; a0 < p; ++a0) {
                for (std::int64_t a1 = 0; a1 < p; ++a1) {
                    if (!has_root(p, a0, a1)) return quadratic(p, a0, a1);
                }
            }
        }
    }
    throw DomainError("unsupported field order " + std::to_string(q) + "; expected p or p^2");
}

FFElem FiniteField::gen_t() const {
    if (deg_ != 2) throw DomainError("prime field has no t");
    return {0, 1};
}

FFElem FiniteField::element(std::int64_t c0, std::int64_t c1) const {
    return {mod(c0), deg_ == 2 ? mod(c1) : 0};
}

std::int64_t FiniteField::index(const FFElem& x) const {
    return deg_ == 2 ? x.c0 * p_ + x.c1 : x.c0;
}

FFElem FiniteField::at(std::int64_t i) const {
    if (i < 0 || i >= q_) throw DomainError("element index out of range");
    return deg_ == 2 ? FFElem{i / p_, i % p_} : FFElem{i, 0};
}

std::vector<FFElem> FiniteField::elements() const {
    std::vector<FFElem> out;
    out.reserve(static_cast<std::size_t>(q_));
    for (std::int64_t i = 0; i < q_; ++i) out.push_back(at(i));
    return out;
}

std::vector<FFElem> FiniteField::units() const {
    std::vector<FFElem> out;
    for (std::int64_t i = 1; i < q_; ++i) out.push_back(at(i));
    return out;
}

FFElem FiniteField::add(const FFElem& a, const FFElem& b) const {
    return {mod(a.c0 + b.c0), mod(a.c1 + b.c1)};
}

FFElem FiniteField::sub(const FFElem& a, const FFElem& b) const {
    return {mod(a.c0 - b.c0), mod(a.c1 - b.c1)};
}

FFElem FiniteField::neg(const FFElem& a) const { return {mod(-a.c0), mod(-a.c1)}; }

FFElem FiniteField::mul(const FFElem& a, const FFElem& b) const {
    if (deg_ == 1) return {mod(a.c0 * b.c0), 0};
    // t^2 = -a1*t - a0
    std::int64_t top = mod(a.c1 * b.c1);
    std::int64_t c0 = mod(a.c0 * b.c0 - top * a0_);
    std::int64_t c1 = mod(a.c0 * b.c1 + a.c1 * b.c0 - top * a1_);
    return {c0, c1};
}

FFElem FiniteField::inv(const FFElem& a) const {
    if (a == zero()) throw DomainError("inverse of zero in F_" + std::to_string(q_));
    std::int64_t k = log_[index(a)];
    return at(exp_[(q_ - 1 - k) % (q_ - 1)]);
}

FFElem FiniteField::pow(const FFElem& a, std::int64_t e) const {
    if (a == zero()) {
        if (e < 0) throw DomainError("negative power of zero");
        return e == 0 ? one() : zero();
    }
    const std::int64_t n = q_ - 1;
    std::int64_t k = log_[index(a)];
    std::int64_t r = ((e % n) + n) % n;
    // k*r < 2^32 since q <= 2^16
    return at(exp_[(k * r) % n]);
}

bool FiniteField::is_square(const FFElem& a) const {
    if (a == zero()) throw DomainError("square test of zero");
    if (p_ == 2) return true;
    return log_[index(a)] % 2 == 0;
}

std::int64_t FiniteField::dlog(const FFElem& a) const {
    if (a == zero()) throw DomainError("logarithm of zero");
    return log_[index(a)];
}

std::string FiniteField::to_string(const FFElem& a) const {
    if (deg_ == 1) return std::to_string(a.c0);
    return std::to_string(a.c0) + "+" + std::to_string(a.c1) + "*t";
}

}  // namespace scissors
