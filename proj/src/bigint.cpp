#include "scissors/bigint.hpp"

#include <stdexcept>

namespace scissors {

std::string to_string(const Int& x) { return x.get_str(10); }

Int parse_int(std::string_view text) {
    std::string s(text);
    if (s.empty()) throw std::invalid_argument("empty integer literal");
    std::size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (start == s.size()) throw std::invalid_argument("bad integer literal: " + s);
    for (std::size_t i = start; i < s.size(); ++i) {
        if (s[i] < '0' || s[i] > '9') throw std::invalid_argument("bad integer literal: " + s);
    }
    if (s[0] == '+') s.erase(0, 1);
    return Int(s, 10);
}

Int floor_div(const Int& a, const Int& b) {
    if (b == 0) throw std::domain_error("division by zero");
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

Int ceil_div(const Int& a, const Int& b) {
    if (b == 0) throw std::domain_error("division by zero");
    Int q;
    mpz_cdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

Int round_half_down(const Int& a, const Int& b) {
    if (b < 0) return round_half_down(-a, -b);
    // ceil(a/b - 1/2) = ceil((2a - b) / 2b)
    return ceil_div(2 * a - b, 2 * b);
}

Int gcd(const Int& a, const Int& b) {
    Int g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

bool divides(const Int& d, const Int& a) {
    if (d == 0) return a == 0;
    return mpz_divisible_p(a.get_mpz_t(), d.get_mpz_t()) != 0;
}

bool is_rational_prime(const Int& n) {
    if (n < 2) return false;
    if (n < Int("1000000000000")) {
        std::uint64_t v = n.get_ui();
        if (v < 4) return true;
        if (v % 2 == 0) return false;
        for (std::uint64_t d = 3; d * d <= v; d += 2) {
            if (v % d == 0) return false;
        }
        return true;
    }
    return mpz_probab_prime_p(n.get_mpz_t(), 40) != 0;
}

int legendre(const Int& a, const Int& p) {
    return mpz_legendre(a.get_mpz_t(), p.get_mpz_t());
}

Int strip_two(const Int& d) {
    if (d == 0) return d;
    Int r = d;
    while (mpz_even_p(r.get_mpz_t())) r /= 2;
    return r;
}

bool is_two_power(const Int& d) {
    if (d == 0) return false;
    Int r = strip_two(d);
    return r == 1 || r == -1;
}

std::int64_t to_i64(const Int& x) {
    if (!x.fits_slong_p()) throw std::overflow_error("integer does not fit in 64 bits");
    return x.get_si();
}

}  // namespace scissors
