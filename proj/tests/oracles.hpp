#pragma once

// Independent reference computations used only by the tests.

#include <complex>
#include <cstdint>
#include <vector>

#include "scissors/quad_ring.hpp"
#include "scissors/zmodkit.hpp"

namespace oracle {

using scissors::Int;
using scissors::QuadInt;

/// w as a complex number.
inline std::complex<double> omega(int m) {
    if (m % 4 == 3) return {0.5, std::sqrt(static_cast<double>(m)) / 2};
    return {0.0, std::sqrt(static_cast<double>(m))};
}

inline std::complex<double> embed(const QuadInt& x) {
    return x.re().get_d() + x.im().get_d() * omega(x.ring().m());
}

/// Norm as |x|^2, rounded.
inline long long norm(const QuadInt& x) { return std::llround(std::norm(embed(x))); }

/// Some quotient with N(a - q b) < N(b) exists among points near a/b.
inline bool euclid_candidate_exists(const QuadInt& a, const QuadInt& b) {
    std::complex<double> z = embed(a) / embed(b);
    std::complex<double> w = omega(a.ring().m());
    double y = z.imag() / w.imag();
    double x = z.real() - y * w.real();
    for (long dx = -2; dx <= 2; ++dx)
        for (long dy = -2; dy <= 2; ++dy) {
            QuadInt q(a.ring(), static_cast<long>(std::floor(x)) + dx, static_cast<long>(std::floor(y)) + dy);
            if (norm(a - q * b) < norm(b)) return true;
        }
    return false;
}

/// Prime by brute force: no element of norm strictly between 1 and N(a)
/// divides a.
inline bool brute_prime(const QuadInt& a) {
    long long n = norm(a);
    if (n <= 1) return false;
    long bound = static_cast<long>(std::sqrt(4.0 * n)) + 2;
    for (long x = -bound; x <= bound; ++x)
        for (long y = -bound; y <= bound; ++y) {
            QuadInt d(a.ring(), x, y);
            long long nd = norm(d);
            if (nd <= 1 || nd >= n || n % nd != 0) continue;
            QuadInt t = a * d.conj();
            Int nd_i = static_cast<long>(nd);
            if (t.re() % nd_i == 0 && t.im() % nd_i == 0) return false;
        }
    return true;
}

/// Cofactor-expansion determinant for small square matrices.
inline Int det(const std::vector<std::vector<Int>>& a) {
    std::size_t n = a.size();
    if (n == 0) return 1;
    if (n == 1) return a[0][0];
    Int total = 0;
    for (std::size_t c = 0; c < n; ++c) {
        std::vector<std::vector<Int>> minor;
        for (std::size_t r = 1; r < n; ++r) {
            std::vector<Int> row;
            for (std::size_t k = 0; k < n; ++k)
                if (k != c) row.push_back(a[r][k]);
            minor.push_back(row);
        }
        Int term = a[0][c] * det(minor);
        total += (c % 2 == 0) ? term : Int(-term);
    }
    return total;
}

inline void choose(std::size_t n, std::size_t k, std::size_t start, std::vector<std::size_t>& cur,
                   std::vector<std::vector<std::size_t>>& out) {
    if (cur.size() == k) {
        out.push_back(cur);
        return;
    }
    for (std::size_t i = start; i < n; ++i) {
        cur.push_back(i);
        choose(n, k, i + 1, cur, out);
        cur.pop_back();
    }
}

/// Invariant factors via gcds of k x k minors: d_1...d_k = D_k / D_{k-1}.
inline std::vector<Int> invariant_factors_by_minors(const scissors::IntMatrix& a) {
    std::size_t r = a.rows(), c = a.cols();
    std::vector<Int> d;
    Int prev = 1;
    for (std::size_t k = 1; k <= std::min(r, c); ++k) {
        std::vector<std::vector<std::size_t>> rs, cs;
        std::vector<std::size_t> cur;
        choose(r, k, 0, cur, rs);
        choose(c, k, 0, cur, cs);
        Int g = 0;
        for (const auto& ri : rs)
            for (const auto& ci : cs) {
                std::vector<std::vector<Int>> m(k, std::vector<Int>(k));
                for (std::size_t i = 0; i < k; ++i)
                    for (std::size_t j = 0; j < k; ++j) m[i][j] = a(ri[i], ci[j]);
                Int v = det(m);
                mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
            }
        if (g == 0) {
            for (; k <= std::min(r, c); ++k) d.push_back(0);
            break;
        }
        d.push_back(Int(g / prev));
        prev = g;
    }
    return d;
}

}  // namespace oracle
