#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <vector>

#include "subtile/errors.hpp"

namespace subtile {

using ZZ = mpz_class;
using QQ = mpq_class;

// "p", "-p/q", optionally with surrounding whitespace. Decimal points are
// rejected on purpose; rule files are exact.
QQ parse_rational(const std::string& s);

std::string to_string(const QQ& q);
std::string to_string(const ZZ& z);

inline int sign(const QQ& q) { return sgn(q); }
inline int sign(const ZZ& z) { return sgn(z); }

inline QQ abs_q(const QQ& q) { return q < 0 ? QQ(-q) : q; }

// canonicalized p/q (the two-argument mpq_class constructor does not reduce)
inline QQ frac(long p, long q) {
    QQ r(p, q);
    r.canonicalize();
    return r;
}

// floor(num/den) as an integer
ZZ floor_q(const QQ& q);
// nearest integer, ties toward +infinity (callers that care about ties
// detect the half-integer case themselves)
ZZ round_nearest(const QQ& q);

// 2^-bits
QQ pow2_neg(unsigned bits);

double to_double(const QQ& q);

std::size_t hash_mpz(const mpz_class& z);
std::size_t hash_combine(std::size_t h, std::size_t k);
std::size_t hash_mpq(const QQ& q);

// Fixed-point decimal rendering with round-half-even, used by SVG/JSON
// emitters so output bytes are platform independent.
std::string decimal_string(const QQ& q, int digits);

}  // namespace subtile
