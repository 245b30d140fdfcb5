#pragma once

#include <gmpxx.h>

#include <optional>
#include <stdexcept>
#include <string>

namespace da {

inline mpq_class rat_pow(const mpq_class& x, long e) {
    if (e == 0) return 1;
    mpq_class b = e > 0 ? x : mpq_class(1) / x;
    long k = e > 0 ? e : -e;
    mpq_class r = 1;
    while (k > 0) {
        if (k & 1) r *= b;
        b *= b;
        k >>= 1;
    }
    return r;
}

// Exact square root of a rational, when both numerator and denominator are
// perfect squares.
inline std::optional<mpq_class> rat_sqrt(const mpq_class& x) {
    if (sgn(x) < 0) return std::nullopt;
    mpz_class num = x.get_num(), den = x.get_den();
    if (!mpz_perfect_square_p(num.get_mpz_t()) || !mpz_perfect_square_p(den.get_mpz_t()))
        return std::nullopt;
    mpz_class rn, rd;
    mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
    mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
    return mpq_class(rn) / mpq_class(rd);
}

// Parses "p/q", plain integers, and simple decimals like "1.5".
inline mpq_class rat_parse(const std::string& s) {
    auto dot = s.find('.');
    if (dot == std::string::npos) {
        mpq_class q(s);
        q.canonicalize();
        return q;
    }
    std::string digits = s.substr(0, dot) + s.substr(dot + 1);
    size_t frac_len = s.size() - dot - 1;
    mpq_class q(digits);
    mpz_class den = 1;
    for (size_t i = 0; i < frac_len; ++i) den *= 10;
    q /= mpq_class(den);
    q.canonicalize();
    return q;
}

inline std::string rat_str(const mpq_class& q) { return q.get_str(); }

inline mpz_class binomial(long n, long k) {
    if (k < 0 || k > n) return 0;
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), (unsigned long)n, (unsigned long)k);
    return r;
}

inline mpz_class factorial(long n) {
    mpz_class r;
    mpz_fac_ui(r.get_mpz_t(), (unsigned long)(n < 0 ? 0 : n));
    return r;
}

// (2k-1)!! with the conventions (-1)!! = 1, 0!! = 1.
inline mpz_class double_factorial(long n) {
    if (n <= 0) return 1;
    mpz_class r = 1;
    for (long i = n; i > 0; i -= 2) r *= i;
    return r;
}

// Stirling numbers of the second kind, exact recurrence table.
inline mpz_class stirling2(long n, long k) {
    if (k < 0 || k > n) return 0;
    if (n == 0) return k == 0 ? 1 : 0;
    std::vector<std::vector<mpz_class>> t(n + 1, std::vector<mpz_class>(k + 1, 0));
    t[0][0] = 1;
    for (long i = 1; i <= n; ++i)
        for (long j = 1; j <= std::min(i, k); ++j)
            t[i][j] = mpz_class(j) * t[i - 1][j] + t[i - 1][j - 1];
    return t[n][k];
}

inline mpz_class bell_number(long n) {
    mpz_class total = 0;
    for (long k = 0; k <= n; ++k) total += stirling2(n, k);
    return total;
}

}  // namespace da
