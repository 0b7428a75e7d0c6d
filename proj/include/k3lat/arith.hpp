#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace k3lat {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Rational make_rational(Integer const & num, Integer const & den)
{
    return Rational(num, den);
}

inline Integer numerator(Rational const & r) { return boost::multiprecision::numerator(r); }
inline Integer denominator(Rational const & r) { return boost::multiprecision::denominator(r); }

/* Floor division and nonnegative remainder for arbitrary signs. */
Integer floor_div(Integer const & a, Integer const & b);
Integer mod_floor(Integer const & a, Integer const & b);

Integer gcd(Integer const & a, Integer const & b);
Integer lcm(Integer const & a, Integer const & b);

/* Canonical representative of r in [0, m) for integer modulus m > 0. */
Rational reduce_mod(Rational const & r, Integer const & m);
inline Rational mod2(Rational const & r) { return reduce_mod(r, 2); }
inline Rational mod1(Rational const & r) { return reduce_mod(r, 1); }

bool is_integral(Rational const & r);

/* Throws std::overflow_error when the value does not fit. */
std::int64_t to_int64(Integer const & v);

/* "p/q", or "p" when q == 1. */
std::string to_string(Rational const & r);
std::string to_string(Integer const & v);

/* Parses "p/q" or "p"; throws ParseError. */
Rational parse_rational(std::string const & token);
Integer parse_integer(std::string const & token);

bool is_prime(std::int64_t n);
std::vector<std::int64_t> prime_factors(Integer n);
int valuation(Integer n, std::int64_t p);

} // namespace k3lat
