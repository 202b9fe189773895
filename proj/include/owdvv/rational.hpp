#pragma once

#include <gmpxx.h>
#include <optional>
#include <stdexcept>
#include <string>

namespace owdvv {

using Rat = mpq_class;

inline Rat rat(long num, long den = 1)
{
    Rat q(num, den);
    q.canonicalize();
    return q;
}

// Parses "p/q" or "p". Throws std::invalid_argument on malformed input or zero denominator.
inline Rat rat_parse(const std::string& s)
{
    if (s.empty())
        throw std::invalid_argument("rat_parse: empty string");
    Rat q;
    if (q.set_str(s, 10) != 0)
        throw std::invalid_argument("rat_parse: bad rational '" + s + "'");
    if (q.get_den() == 0)
        throw std::invalid_argument("rat_parse: zero denominator in '" + s + "'");
    q.canonicalize();
    return q;
}

// Canonical form "p/q", q > 0, gcd(p,q) = 1. Integers are still printed with "/1"
// so serialized files have a single shape.
inline std::string rat_str(const Rat& q)
{
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

inline Rat rat_pow(const Rat& q, long e)
{
    if (e < 0) {
        if (q == 0)
            throw std::domain_error("rat_pow: negative power of zero");
        return rat_pow(Rat(1) / q, -e);
    }
    Rat r(1), base(q);
    while (e > 0) {
        if (e & 1)
            r *= base;
        base *= base;
        e >>= 1;
    }
    return r;
}

inline Rat rat_factorial(long n)
{
    Rat r(1);
    for (long i = 2; i <= n; ++i)
        r *= i;
    return r;
}

// (2n-1)!! with the convention (-1)!! = 1.
inline Rat rat_double_factorial_odd(long n)
{
    Rat r(1);
    for (long i = 1; i <= n; ++i)
        r *= 2 * i - 1;
    return r;
}

inline Rat rat_binomial(long n, long k)
{
    if (k < 0 || k > n)
        return Rat(0);
    Rat r(1);
    for (long i = 0; i < k; ++i) {
        r *= n - i;
        r /= i + 1;
    }
    return r;
}

// Exact square root when q is a square of a rational; nullopt otherwise.
inline std::optional<Rat> rat_sqrt(const Rat& q)
{
    if (q < 0)
        return std::nullopt;
    mpz_class num = q.get_num(), den = q.get_den();
    if (mpz_perfect_square_p(num.get_mpz_t()) == 0 || mpz_perfect_square_p(den.get_mpz_t()) == 0)
        return std::nullopt;
    mpz_class rn, rd;
    mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
    mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
    Rat r(rn, rd);
    r.canonicalize();
    return r;
}

} // namespace owdvv
