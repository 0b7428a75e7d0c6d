#include "k3lat/arith.hpp"

#include <limits>
#include <stdexcept>

#include "k3lat/errors.hpp"

namespace k3lat {

Integer floor_div(Integer const & a, Integer const & b)
{
    Integer q = a / b;
    Integer r = a % b;
    if (r != 0 && ((r < 0) != (b < 0)))
        --q;
    return q;
}

Integer mod_floor(Integer const & a, Integer const & b)
{
    Integer r = a % b;
    if (r < 0)
        r += (b < 0 ? -b : b);
    return r;
}

Integer gcd(Integer const & a, Integer const & b)
{
    return boost::multiprecision::gcd(a, b);
}

Integer lcm(Integer const & a, Integer const & b)
{
    if (a == 0 || b == 0)
        return 0;
    Integer l = boost::multiprecision::lcm(a, b);
    return l < 0 ? Integer(-l) : l;
}

Rational reduce_mod(Rational const & r, Integer const & m)
{
    Integer const num = numerator(r);
    Integer const den = denominator(r);
    // r mod m = (num mod m*den) / den
    Integer const big = m * den;
    return Rational(mod_floor(num, big), den);
}

bool is_integral(Rational const & r)
{
    return denominator(r) == 1;
}

std::int64_t to_int64(Integer const & v)
{
    if (v > std::numeric_limits<std::int64_t>::max()
        || v < std::numeric_limits<std::int64_t>::min())
        throw std::overflow_error("integer does not fit in 64 bits: " + v.str());
    return static_cast<std::int64_t>(v);
}

std::string to_string(Integer const & v)
{
    return v.str();
}

std::string to_string(Rational const & r)
{
    if (denominator(r) == 1)
        return numerator(r).str();
    return numerator(r).str() + "/" + denominator(r).str();
}

Integer parse_integer(std::string const & token)
{
    std::size_t i = 0;
    if (i < token.size() && (token[i] == '-' || token[i] == '+'))
        ++i;
    if (i == token.size())
        throw ParseError("expected an integer, got '" + token + "'");
    for (std::size_t j = i; j < token.size(); ++j)
        if (token[j] < '0' || token[j] > '9')
            throw ParseError("expected an integer, got '" + token + "'");
    return Integer(token[0] == '+' ? token.substr(1) : token);
}

Rational parse_rational(std::string const & token)
{
    auto const slash = token.find('/');
    if (slash == std::string::npos)
        return Rational(parse_integer(token));
    Integer const num = parse_integer(token.substr(0, slash));
    Integer const den = parse_integer(token.substr(slash + 1));
    if (den == 0)
        throw ParseError("zero denominator in '" + token + "'");
    return Rational(num, den);
}

bool is_prime(std::int64_t n)
{
    if (n < 2)
        return false;
    for (std::int64_t d = 2; d * d <= n; ++d)
        if (n % d == 0)
            return false;
    return true;
}

std::vector<std::int64_t> prime_factors(Integer n)
{
    if (n < 0)
        n = -n;
    std::vector<std::int64_t> out;
    for (std::int64_t p = 2; Integer(p) * p <= n; ++p) {
        if (n % p == 0) {
            out.push_back(p);
            while (n % p == 0)
                n /= p;
        }
    }
    if (n > 1)
        out.push_back(to_int64(n));
    return out;
}

int valuation(Integer n, std::int64_t p)
{
    if (n == 0)
        throw InvalidArgument("valuation of zero");
    int v = 0;
    while (n % p == 0) {
        n /= p;
        ++v;
    }
    return v;
}

} // namespace k3lat
