#include "k3lat/ternary.hpp"

#include <algorithm>
#include <functional>

#include "k3lat/errors.hpp"

namespace k3lat {

namespace {

using i128 = __int128;
using Residues = std::array<std::int64_t, 3>;

void require_ternary(GramMatrix const & g)
{
    if (g.rank() != 3)
        throw DimensionMismatch("ternary form needs a 3x3 Gram matrix, got rank "
                                + std::to_string(g.rank()));
    if (determinant(g) == 0)
        throw DegenerateLattice("ternary form is degenerate");
}

struct SmallGram {
    std::array<std::array<std::int64_t, 3>, 3> a{};

    explicit SmallGram(GramMatrix const & g)
    {
        for (std::size_t i = 0; i < 3; ++i)
            for (std::size_t j = 0; j < 3; ++j)
                a[i][j] = to_int64(g(i, j));
    }

    i128 value(std::int64_t x, std::int64_t y, std::int64_t z) const
    {
        i128 const v[3] = {x, y, z};
        i128 s = 0;
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j)
                s += a[i][j] * v[i] * v[j];
        return s;
    }
};

// Gram entries reduced mod m; evaluation stays below 2^127.
struct ModGram {
    std::int64_t m;
    std::array<std::array<std::int64_t, 3>, 3> a{};

    ModGram(GramMatrix const & g, std::int64_t modulus) : m(modulus)
    {
        for (std::size_t i = 0; i < 3; ++i)
            for (std::size_t j = 0; j < 3; ++j)
                a[i][j] = to_int64(mod_floor(g(i, j), modulus));
    }

    bool is_zero(Residues const & v) const
    {
        i128 s = 0;
        for (int i = 0; i < 3; ++i) {
            i128 row = 0;
            for (int j = 0; j < 3; ++j)
                row += static_cast<i128>(a[i][j]) * v[j];
            s += (row % m) * v[i];
            s %= m;
        }
        return s == 0;
    }
};

std::int64_t checked_pow(std::int64_t p, int e)
{
    std::int64_t r = 1;
    for (int i = 0; i < e; ++i)
        if (__builtin_mul_overflow(r, p, &r) || r > (std::int64_t(1) << 40))
            throw SearchTooLarge("modulus " + std::to_string(p) + "^" + std::to_string(e)
                                 + " is too large");
    return r;
}

// Level at which the primitive solutions with v[unit] == 1 and
// v[j] == 0 mod p for j < unit die out, or 0 if they survive to p^e.
int case_level(GramMatrix const & g, std::int64_t p, int e, std::size_t unit,
               std::uint64_t budget, std::uint64_t & work)
{
    std::vector<std::size_t> free;
    for (std::size_t j = 0; j < 3; ++j)
        if (j != unit)
            free.push_back(j);

    std::vector<Residues> frontier;
    {
        ModGram const mg(g, p);
        std::int64_t const hi0 = unit > free[0] ? 1 : p;
        std::int64_t const hi1 = unit > free[1] ? 1 : p;
        for (std::int64_t s = 0; s < hi0; ++s)
            for (std::int64_t t = 0; t < hi1; ++t) {
                Residues v{};
                v[unit] = 1;
                v[free[0]] = s;
                v[free[1]] = t;
                ++work;
                if (mg.is_zero(v))
                    frontier.push_back(v);
            }
    }
    if (frontier.empty())
        return 1;

    std::int64_t pk = p;
    for (int k = 1; k < e; ++k) {
        ModGram const mg(g, pk * p);
        std::vector<Residues> next;
        for (auto const & base : frontier) {
            work += static_cast<std::uint64_t>(p * p);
            if (work > budget)
                throw SearchTooLarge("modular search exceeded the budget of "
                                     + std::to_string(budget) + " evaluations");
            for (std::int64_t s = 0; s < p; ++s)
                for (std::int64_t t = 0; t < p; ++t) {
                    Residues v = base;
                    v[free[0]] += s * pk;
                    v[free[1]] += t * pk;
                    if (mg.is_zero(v))
                        next.push_back(v);
                }
        }
        frontier = std::move(next);
        pk *= p;
        if (frontier.empty())
            return k + 1;
    }
    return 0;
}

} // namespace

Integer ternary_value(GramMatrix const & g, Vector3 const & v)
{
    if (g.rank() != 3)
        throw DimensionMismatch("ternary form needs a 3x3 Gram matrix");
    Integer s = 0;
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j)
            s += g(i, j) * v[i] * v[j];
    return s;
}

std::optional<Vector3> find_isotropic(GramMatrix const & g, std::int64_t bound)
{
    require_ternary(g);
    if (bound < 1)
        throw InvalidArgument("search bound must be at least 1");
    SmallGram const sg(g);
    std::vector<std::int64_t> seq{0};
    for (std::int64_t n = 1; n <= bound; ++n) {
        seq.push_back(n);
        seq.push_back(-n);
        // seq now lists 0, 1, -1, ..., n, -n
        for (std::int64_t x : seq)
            for (std::int64_t y : seq) {
                bool const on_shell = std::max(std::abs(x), std::abs(y)) == n;
                auto try_z = [&](std::int64_t z) { return sg.value(x, y, z) == 0; };
                if (on_shell) {
                    for (std::int64_t z : seq)
                        if (try_z(z))
                            return Vector3{x, y, z};
                } else {
                    if (try_z(n))
                        return Vector3{x, y, n};
                    if (try_z(-n))
                        return Vector3{x, y, -n};
                }
            }
    }
    return std::nullopt;
}

std::optional<int> obstruction_level(GramMatrix const & g, std::int64_t p, int e,
                                     std::uint64_t budget)
{
    require_ternary(g);
    if (!is_prime(p))
        throw InvalidArgument(std::to_string(p) + " is not prime");
    if (e < 1)
        throw InvalidArgument("precision must be at least 1");
    checked_pow(p, e);
    std::uint64_t work = 0;
    int level = 1;
    for (std::size_t unit = 0; unit < 3; ++unit) {
        int const l = case_level(g, p, e, unit, budget, work);
        if (l == 0)
            return std::nullopt;
        level = std::max(level, l);
    }
    return level;
}

bool local_obstruction(GramMatrix const & g, std::int64_t p, int e, std::uint64_t budget)
{
    return obstruction_level(g, p, e, budget).has_value();
}

char const * verdict_kind(IsotropyVerdict const & v)
{
    switch (v.index()) {
    case 0:
        return "witness";
    case 1:
        return "obstruction";
    default:
        return "inconclusive";
    }
}

std::vector<std::int64_t> default_primes(GramMatrix const & g)
{
    std::vector<std::int64_t> out;
    for (auto p : prime_factors(2 * determinant(g)))
        if (p != 2)
            out.push_back(p);
    std::sort(out.rbegin(), out.rend());
    return out;
}

int default_precision(GramMatrix const & g, std::int64_t p)
{
    return 3 + valuation(2 * determinant(g), p);
}

IsotropyVerdict decide_isotropy(GramMatrix const & g, std::int64_t bound,
                                std::optional<std::vector<std::int64_t>> primes)
{
    require_ternary(g);
    if (auto w = find_isotropic(g, bound)) {
        if (ternary_value(g, *w) != 0)
            throw std::logic_error("isotropic witness failed re-verification");
        return Witness{*w};
    }
    std::vector<std::int64_t> const ps = primes ? *primes : default_primes(g);
    for (std::int64_t p : ps) {
        int const e = default_precision(g, p);
        if (auto level = obstruction_level(g, p, e))
            return Obstruction{p, *level, e};
    }
    return Inconclusive{bound, ps};
}

IsotropyVerdict is_simple_shioda_inose(GramMatrix const & t, std::int64_t bound,
                                       std::optional<std::vector<std::int64_t>> primes)
{
    if (t.rank() != 3)
        throw DimensionMismatch("expected a rank 3 transcendental lattice");
    if (determinant(t) == 0 || signature(t) != Signature{2, 1})
        throw WrongSignature("transcendental lattice must have signature (2, 1)");
    return decide_isotropy(twist(t, -1), bound, std::move(primes));
}

} // namespace k3lat
