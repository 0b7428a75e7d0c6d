#include "k3lat/binary_forms.hpp"

#include <algorithm>
#include <numeric>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "k3lat/errors.hpp"

namespace k3lat {

namespace {

std::int64_t checked_mul(std::int64_t x, std::int64_t y)
{
    std::int64_t r;
    if (__builtin_mul_overflow(x, y, &r))
        throw std::overflow_error("binary form arithmetic overflows 64 bits");
    return r;
}

std::int64_t checked_sub(std::int64_t x, std::int64_t y)
{
    std::int64_t r;
    if (__builtin_sub_overflow(x, y, &r))
        throw std::overflow_error("binary form arithmetic overflows 64 bits");
    return r;
}

} // namespace

EvenBinaryForm::EvenBinaryForm(std::int64_t a_, std::int64_t b_, std::int64_t c_)
    : a(a_), b(b_), c(c_)
{
    if (a <= 0 || b <= 0 || discriminant() <= 0)
        throw InvalidForm("binary form " + str() + " is not positive definite");
}

EvenBinaryForm EvenBinaryForm::from_gram(GramMatrix const & g)
{
    if (g.rank() != 2)
        throw InvalidForm("binary form needs a 2x2 Gram matrix");
    if (!g.is_even())
        throw InvalidForm("binary form needs an even Gram matrix");
    return EvenBinaryForm(to_int64(g(0, 0) / 2), to_int64(g(1, 1) / 2), to_int64(g(0, 1)));
}

std::int64_t EvenBinaryForm::discriminant() const
{
    return checked_sub(checked_mul(4, checked_mul(a, b)), checked_mul(c, c));
}

GramMatrix EvenBinaryForm::gram() const
{
    IntMatrix m(2, 2);
    m(0, 0) = Integer(a) * 2;
    m(1, 1) = Integer(b) * 2;
    m(0, 1) = c;
    m(1, 0) = c;
    return GramMatrix(std::move(m));
}

std::string EvenBinaryForm::str() const
{
    std::ostringstream o;
    o << "[" << Integer(a) * 2 << " " << c << "; " << c << " " << Integer(b) * 2 << "]";
    return o.str();
}

std::ostream & operator<<(std::ostream & o, EvenBinaryForm const & f)
{
    return o << f.str();
}

std::int64_t Transform::det() const
{
    return checked_sub(checked_mul(p, s), checked_mul(q, r));
}

namespace {

struct BigTransform {
    Integer p = 1, q = 0, r = 0, s = 1;
};

BigTransform mul(BigTransform const & x, BigTransform const & y)
{
    return {x.p * y.p + x.q * y.r, x.p * y.q + x.q * y.s,
            x.r * y.p + x.s * y.r, x.r * y.q + x.s * y.s};
}

Transform narrow(BigTransform const & g)
{
    return {to_int64(g.p), to_int64(g.q), to_int64(g.r), to_int64(g.s)};
}

BigTransform widen(Transform const & g)
{
    return {g.p, g.q, g.r, g.s};
}

} // namespace

Transform operator*(Transform const & x, Transform const & y)
{
    return narrow(mul(widen(x), widen(y)));
}

Transform inverse(Transform const & g)
{
    if (g.det() != 1)
        throw InvalidArgument("transform is not in SL2(Z)");
    return narrow(BigTransform{g.s, -Integer(g.q), -Integer(g.r), g.p});
}

EvenBinaryForm transform(EvenBinaryForm const & f, Transform const & g)
{
    if (g.det() != 1)
        throw InvalidArgument("transform is not in SL2(Z)");
    Integer const a = f.a, b = f.b, c = f.c;
    Integer const p = g.p, q = g.q, r = g.r, s = g.s;
    Integer const na = a * p * p + c * p * r + b * r * r;
    Integer const nb = a * q * q + c * q * s + b * s * s;
    Integer const nc = 2 * a * p * q + c * (p * s + q * r) + 2 * b * r * s;
    return EvenBinaryForm(to_int64(na), to_int64(nb), to_int64(nc));
}

Reduction reduce(EvenBinaryForm const & f)
{
    Integer a = f.a, b = f.b, c = f.c;
    BigTransform g;
    for (;;) {
        // c -> c + 2ak in (-a, a]
        Integer const k = floor_div(a - c, 2 * a);
        if (k != 0) {
            b = a * k * k + c * k + b;
            c = c + 2 * a * k;
            g = mul(g, BigTransform{1, k, 0, 1});
        }
        if (a <= b)
            break;
        std::swap(a, b);
        c = -c;
        g = mul(g, BigTransform{0, -1, 1, 0});
    }
    if (a == b && c < 0) {
        c = -c;
        g = mul(g, BigTransform{0, -1, 1, 0});
    }
    return {EvenBinaryForm(to_int64(a), to_int64(b), to_int64(c)), narrow(g)};
}

bool is_reduced(EvenBinaryForm const & f)
{
    return -f.a < f.c && f.c <= f.a && f.a <= f.b && !(f.a == f.b && f.c < 0);
}

std::vector<EvenBinaryForm> enumerate_reduced(std::int64_t d)
{
    if (d <= 0)
        throw InvalidArgument("discriminant must be positive, got " + std::to_string(d));
    if (d % 4 == 1 || d % 4 == 2)
        throw EmptyResult("no even binary forms have discriminant " + std::to_string(d)
                          + " (need d = 0 or 3 mod 4)");
    std::vector<EvenBinaryForm> out;
    for (std::int64_t c = 0; 3 * c * c <= d; ++c) {
        if ((c - d) % 2 != 0)
            continue;
        std::int64_t const ab = (d + c * c) / 4;
        for (std::int64_t a = std::max<std::int64_t>(c, 1); a * a <= ab; ++a) {
            if (ab % a != 0)
                continue;
            std::int64_t const b = ab / a;
            out.emplace_back(a, b, c);
            if (c != 0 && c != a && a != b)
                out.emplace_back(a, b, -c);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::optional<Transform> equivalent(EvenBinaryForm const & f1, EvenBinaryForm const & f2)
{
    Reduction const r1 = reduce(f1);
    Reduction const r2 = reduce(f2);
    if (r1.form != r2.form)
        return std::nullopt;
    return r1.gamma * inverse(r2.gamma);
}

std::size_t class_number(std::int64_t d)
{
    if (d > 0 && (d % 4 == 1 || d % 4 == 2))
        return 0;
    return enumerate_reduced(d).size();
}

bool is_primitive(EvenBinaryForm const & f)
{
    return std::gcd(std::gcd(f.a, f.b), f.c) == 1;
}

std::vector<std::vector<EvenBinaryForm>> genus_partition(std::int64_t d)
{
    std::vector<std::vector<EvenBinaryForm>> groups;
    std::vector<FiniteQF> keys;
    for (auto const & f : enumerate_reduced(d)) {
        FiniteQF const q = FiniteQF::from_lattice(f.gram());
        std::size_t i = 0;
        while (i < keys.size() && !is_isomorphic(keys[i], q))
            ++i;
        if (i == keys.size()) {
            keys.push_back(q);
            groups.emplace_back();
        }
        groups[i].push_back(f);
    }
    return groups;
}

std::vector<EvenBinaryForm> match_disc_form(std::int64_t d, FiniteQF const & target)
{
    std::vector<EvenBinaryForm> out;
    for (auto const & f : enumerate_reduced(d))
        if (is_isomorphic(FiniteQF::from_lattice(f.gram()), target))
            out.push_back(f);
    return out;
}

std::string Surd::str() const
{
    std::ostringstream o;
    std::string const root = "sqrt(" + std::to_string(radicand) + ")";
    std::string num;
    if (q == 0)
        num = std::to_string(p);
    else {
        std::string const qs = q == 1 ? root : (q == -1 ? "-" + root : std::to_string(q) + "*" + root);
        if (p == 0)
            num = qs;
        else
            num = std::to_string(p) + (q > 0 ? "+" : "") + qs;
    }
    if (r == 1)
        return num;
    return (p != 0 && q != 0 ? "(" + num + ")" : num) + "/" + std::to_string(r);
}

namespace {

Surd make_surd(std::int64_t p, std::int64_t q, std::int64_t r, std::int64_t radicand)
{
    if (r < 0) {
        p = -p;
        q = -q;
        r = -r;
    }
    std::int64_t const g = std::gcd(std::gcd(p, q), r);
    return {p / g, q / g, r / g, radicand};
}

} // namespace

std::pair<Surd, Surd> cm_moduli(EvenBinaryForm const & f)
{
    std::int64_t const d = f.discriminant();
    return {make_surd(-f.c, 1, checked_mul(2, f.a), -d), make_surd(f.c, 1, 2, -d)};
}

bool hessian_embeddable(EvenBinaryForm const & f)
{
    return f.c % 2 == 0 || f.a % 2 == 0 || f.b % 2 == 0;
}

} // namespace k3lat
