#include "k3lat/finite_qf.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>
#include <ostream>
#include <sstream>
#include <utility>

#include "k3lat/errors.hpp"

namespace k3lat {

FiniteQF::FiniteQF(std::vector<std::int64_t> orders, std::vector<Rational> qvals)
    : FiniteQF(orders, std::move(qvals),
               std::vector<std::vector<Rational>>(orders.size(),
                                                  std::vector<Rational>(orders.size())))
{
}

FiniteQF::FiniteQF(std::vector<std::int64_t> orders, std::vector<Rational> qvals,
                   std::vector<std::vector<Rational>> pairs)
    : orders_(std::move(orders)), q_(std::move(qvals)), b_(std::move(pairs))
{
    std::size_t const k = orders_.size();
    if (q_.size() != k || b_.size() != k)
        throw DimensionMismatch("finite form: orders, q-values and pairings differ in length");
    for (auto & row : b_)
        if (row.size() != k)
            throw DimensionMismatch("finite form: pairing matrix is not square");
    for (std::size_t i = 0; i < k; ++i) {
        q_[i] = mod2(q_[i]);
        for (std::size_t j = 0; j < k; ++j)
            b_[i][j] = i == j ? mod1(q_[i]) : mod1(b_[i][j]);
    }
    validate();
}

void FiniteQF::validate() const
{
    std::size_t const k = orders_.size();
    for (std::size_t i = 0; i < k; ++i) {
        std::int64_t const m = orders_[i];
        if (m < 2)
            throw InvalidForm("generator order must be at least 2, got " + std::to_string(m));
        Rational const mq = q_[i] * m;
        if (!is_integral(mq) || !is_integral(mq * m / 2))
            throw InvalidForm("q-value " + to_string(q_[i]) + " is not compatible with order "
                              + std::to_string(m));
        for (std::size_t j = 0; j < k; ++j) {
            if (i == j)
                continue;
            if (b_[i][j] != b_[j][i])
                throw InvalidForm("pairing matrix is not symmetric");
            std::int64_t const g = std::gcd(m, orders_[j]);
            if (!is_integral(b_[i][j] * g))
                throw InvalidForm("pairing " + to_string(b_[i][j]) + " between generators "
                                  + std::to_string(i + 1) + " and " + std::to_string(j + 1)
                                  + " is not compatible with their orders");
        }
    }
}

FiniteQF FiniteQF::cyclic(std::int64_t m, Rational const & q)
{
    return FiniteQF({m}, {q});
}

FiniteQF FiniteQF::from_lattice(GramMatrix const & g)
{
    if (!g.is_even())
        throw OddLattice("discriminant form needs an even lattice");
    DiscriminantGroup const dg = discriminant_group(g);
    std::size_t const k = dg.generators.size();
    std::vector<std::int64_t> orders;
    std::vector<Rational> q;
    std::vector<std::vector<Rational>> b(k, std::vector<Rational>(k));
    for (std::size_t i = 0; i < k; ++i) {
        orders.push_back(to_int64(dg.invariant_factors[i]));
        q.push_back(qnorm_mod2(g, dg.generators[i]));
        for (std::size_t j = 0; j < k; ++j)
            if (i != j)
                b[i][j] = pairing_mod1(g, dg.generators[i], dg.generators[j]);
    }
    return FiniteQF(std::move(orders), std::move(q), std::move(b));
}

Integer FiniteQF::group_order() const
{
    Integer n = 1;
    for (auto m : orders_)
        n *= m;
    return n;
}

namespace {

void check_len(FiniteQF const & f, std::vector<Integer> const & x)
{
    if (x.size() != f.size())
        throw DimensionMismatch("element has " + std::to_string(x.size())
                                + " coefficients, form has " + std::to_string(f.size())
                                + " generators");
}

} // namespace

Rational FiniteQF::evaluate(std::vector<Integer> const & x) const
{
    check_len(*this, x);
    Rational s = 0;
    for (std::size_t i = 0; i < size(); ++i) {
        if (x[i] == 0)
            continue;
        s += q_[i] * x[i] * x[i];
        for (std::size_t j = i + 1; j < size(); ++j)
            if (x[j] != 0 && b_[i][j] != 0)
                s += 2 * b_[i][j] * x[i] * x[j];
    }
    return mod2(s);
}

Rational FiniteQF::bilinear(std::vector<Integer> const & x, std::vector<Integer> const & y) const
{
    check_len(*this, x);
    check_len(*this, y);
    Rational s = 0;
    for (std::size_t i = 0; i < size(); ++i) {
        if (x[i] == 0)
            continue;
        for (std::size_t j = 0; j < size(); ++j)
            if (y[j] != 0 && b_[i][j] != 0)
                s += b_[i][j] * x[i] * y[j];
    }
    return mod1(s);
}

bool operator==(FiniteQF const & x, FiniteQF const & y)
{
    return x.orders_ == y.orders_ && x.q_ == y.q_ && x.b_ == y.b_;
}

std::string FiniteQF::str() const
{
    if (is_trivial())
        return "0";
    std::ostringstream o;
    for (std::size_t i = 0; i < size(); ++i) {
        if (i)
            o << "+";
        o << "Z" << orders_[i] << "(" << to_string(q_[i]) << ")";
    }
    for (std::size_t i = 0; i < size(); ++i)
        for (std::size_t j = i + 1; j < size(); ++j)
            if (b_[i][j] != 0)
                o << ";b(" << i + 1 << "," << j + 1 << ")=" << to_string(b_[i][j]);
    return o.str();
}

std::ostream & operator<<(std::ostream & o, FiniteQF const & f)
{
    return o << f.str();
}

namespace {

std::vector<std::string> split_top(std::string const & s, char sep)
{
    std::vector<std::string> out;
    std::string cur;
    int depth = 0;
    for (char c : s) {
        if (c == '(')
            ++depth;
        else if (c == ')')
            --depth;
        if (c == sep && depth == 0) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    out.push_back(cur);
    return out;
}

std::size_t parse_index(std::string const & t, std::size_t k, std::string const & whole)
{
    Integer const v = parse_integer(t);
    if (v < 1 || v > Integer(k))
        throw ParseError("generator index out of range in '" + whole + "'");
    return static_cast<std::size_t>(v) - 1;
}

} // namespace

FiniteQF FiniteQF::parse(std::string const & text)
{
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c)))
            s += c;
    if (s.empty())
        throw ParseError("empty finite form");

    auto const parts = split_top(s, ';');
    std::vector<std::int64_t> orders;
    std::vector<Rational> q;
    if (parts[0] != "0") {
        for (auto const & tok : split_top(parts[0], '+')) {
            auto const open = tok.find('(');
            if (tok.size() < 5 || tok[0] != 'Z' || open == std::string::npos
                || tok.back() != ')')
                throw ParseError("expected a summand like Z15(4/15), got '" + tok + "'");
            orders.push_back(to_int64(parse_integer(tok.substr(1, open - 1))));
            q.push_back(parse_rational(tok.substr(open + 1, tok.size() - open - 2)));
        }
    }
    std::size_t const k = orders.size();
    std::vector<std::vector<Rational>> b(k, std::vector<Rational>(k));
    for (std::size_t p = 1; p < parts.size(); ++p) {
        std::string const & t = parts[p];
        auto const comma = t.find(',');
        auto const close = t.find(")=");
        if (t.rfind("b(", 0) != 0 || comma == std::string::npos || close == std::string::npos
            || comma > close)
            throw ParseError("expected a pairing like b(1,2)=1/2, got '" + t + "'");
        std::size_t const i = parse_index(t.substr(2, comma - 2), k, t);
        std::size_t const j = parse_index(t.substr(comma + 1, close - comma - 1), k, t);
        if (i == j)
            throw ParseError("pairing of a generator with itself is fixed by q: '" + t + "'");
        Rational const v = parse_rational(t.substr(close + 2));
        b[i][j] = v;
        b[j][i] = v;
    }
    return FiniteQF(std::move(orders), std::move(q), std::move(b));
}

FiniteQF direct_sum(FiniteQF const & a, FiniteQF const & b)
{
    std::size_t const k = a.size() + b.size();
    std::vector<std::int64_t> orders = a.orders();
    orders.insert(orders.end(), b.orders().begin(), b.orders().end());
    std::vector<Rational> q = a.qvals();
    q.insert(q.end(), b.qvals().begin(), b.qvals().end());
    std::vector<std::vector<Rational>> p(k, std::vector<Rational>(k));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < a.size(); ++j)
            p[i][j] = a.pairing(i, j);
    for (std::size_t i = 0; i < b.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            p[a.size() + i][a.size() + j] = b.pairing(i, j);
    return FiniteQF(std::move(orders), std::move(q), std::move(p));
}

FiniteQF negate(FiniteQF const & f)
{
    std::size_t const k = f.size();
    std::vector<Rational> q;
    std::vector<std::vector<Rational>> p(k, std::vector<Rational>(k));
    for (std::size_t i = 0; i < k; ++i) {
        q.push_back(-f.qvals()[i]);
        for (std::size_t j = 0; j < k; ++j)
            p[i][j] = -f.pairing(i, j);
    }
    return FiniteQF(f.orders(), std::move(q), std::move(p));
}

namespace {

/* Form induced on the subgroup spanned by independent elements `gens` of
 * the given orders. */
FiniteQF induced(FiniteQF const & f, std::vector<std::vector<Integer>> const & gens,
                 std::vector<std::int64_t> orders)
{
    std::size_t const k = gens.size();
    std::vector<Rational> q;
    std::vector<std::vector<Rational>> p(k, std::vector<Rational>(k));
    for (std::size_t i = 0; i < k; ++i) {
        q.push_back(f.evaluate(gens[i]));
        for (std::size_t j = 0; j < k; ++j)
            if (i != j)
                p[i][j] = f.bilinear(gens[i], gens[j]);
    }
    return FiniteQF(std::move(orders), std::move(q), std::move(p));
}

} // namespace

FiniteQF cyclic_normalize(FiniteQF const & f)
{
    struct Piece {
        std::int64_t order = 1;
        std::vector<std::size_t> members;
    };
    std::vector<Piece> pieces;
    for (std::size_t i = 0; i < f.size(); ++i) {
        std::int64_t const m = f.orders()[i];
        auto it = std::find_if(pieces.rbegin(), pieces.rend(),
                               [m](Piece const & p) { return std::gcd(p.order, m) == 1; });
        if (it == pieces.rend()) {
            pieces.push_back({m, {i}});
        } else {
            it->order = to_int64(Integer(it->order) * m);
            it->members.push_back(i);
        }
    }
    std::vector<std::vector<Integer>> gens;
    std::vector<std::int64_t> orders;
    for (auto const & p : pieces) {
        std::vector<Integer> x(f.size());
        for (auto i : p.members)
            x[i] = 1;
        gens.push_back(std::move(x));
        orders.push_back(p.order);
    }
    return induced(f, gens, std::move(orders));
}

namespace {

struct Element {
    std::vector<Integer> x;
    std::int64_t order;
    Rational q;
};

std::vector<Element> elements(FiniteQF const & f)
{
    std::vector<Element> out;
    std::vector<std::int64_t> x(f.size(), 0);
    for (;;) {
        std::vector<Integer> xi(x.begin(), x.end());
        std::int64_t ord = 1;
        for (std::size_t i = 0; i < f.size(); ++i) {
            std::int64_t const m = f.orders()[i];
            ord = std::lcm(ord, m / std::gcd(x[i], m));
        }
        Rational q = f.evaluate(xi);
        out.push_back({std::move(xi), ord, std::move(q)});
        std::size_t i = 0;
        while (i < f.size() && ++x[i] == f.orders()[i])
            x[i++] = 0;
        if (i == f.size())
            break;
    }
    return out;
}

/* p-primary part: generator g_i of order p^a * m' contributes m' * g_i. */
FiniteQF primary_part(FiniteQF const & f, std::int64_t p)
{
    std::vector<std::vector<Integer>> gens;
    std::vector<std::int64_t> orders;
    for (std::size_t i = 0; i < f.size(); ++i) {
        std::int64_t m = f.orders()[i];
        std::int64_t pa = 1;
        while (m % p == 0) {
            m /= p;
            pa *= p;
        }
        if (pa == 1)
            continue;
        std::vector<Integer> x(f.size());
        x[i] = m;
        gens.push_back(std::move(x));
        orders.push_back(pa);
    }
    return induced(f, gens, std::move(orders));
}

using Profile = std::map<std::pair<std::int64_t, Rational>, std::size_t>;

Profile profile(std::vector<Element> const & els)
{
    Profile out;
    for (auto const & e : els)
        ++out[{e.order, e.q}];
    return out;
}

bool generates(FiniteQF const & target, std::vector<Element const *> const & images)
{
    std::size_t const k = target.size();
    IntMatrix m(images.size() + k, k);
    for (std::size_t r = 0; r < images.size(); ++r)
        for (std::size_t c = 0; c < k; ++c)
            m(r, c) = images[r]->x[c];
    for (std::size_t c = 0; c < k; ++c)
        m(images.size() + c, c) = target.orders()[c];
    SnfResult const s = smith_normal_form(m);
    for (std::size_t t = 0; t < k; ++t)
        if (s.D(t, t) != 1)
            return false;
    return true;
}

class IsoSearch
{
    FiniteQF const & src_;
    FiniteQF const & dst_;
    std::vector<Element> const & dst_elements_;
    std::vector<std::vector<Element const *>> cands_;
    std::vector<Element const *> images_;

    bool extend(std::size_t i)
    {
        if (i == src_.size())
            return generates(dst_, images_);
        for (Element const * e : cands_[i]) {
            bool ok = true;
            for (std::size_t j = 0; j < i && ok; ++j)
                ok = dst_.bilinear(e->x, images_[j]->x) == src_.pairing(i, j);
            if (!ok)
                continue;
            images_.push_back(e);
            if (extend(i + 1))
                return true;
            images_.pop_back();
        }
        return false;
    }

    public:
    IsoSearch(FiniteQF const & src, FiniteQF const & dst, std::vector<Element> const & dst_els)
        : src_(src), dst_(dst), dst_elements_(dst_els)
    {
        for (std::size_t i = 0; i < src.size(); ++i) {
            std::vector<Element const *> c;
            for (auto const & e : dst_elements_)
                if (e.order == src.orders()[i] && e.q == src.qvals()[i])
                    c.push_back(&e);
            cands_.push_back(std::move(c));
        }
    }

    bool run() { return extend(0); }
};

} // namespace

bool is_isomorphic(FiniteQF const & a, FiniteQF const & b)
{
    Integer const na = a.group_order();
    Integer const nb = b.group_order();
    if (na > isomorphism_search_bound || nb > isomorphism_search_bound)
        throw TooLarge("finite form of order " + to_string(na > nb ? na : nb)
                       + " exceeds the exhaustive bound "
                       + std::to_string(isomorphism_search_bound));
    if (na != nb)
        return false;
    for (std::int64_t p : prime_factors(na)) {
        FiniteQF const pa = primary_part(a, p);
        FiniteQF const pb = primary_part(b, p);
        std::vector<Element> const ea = elements(pa);
        std::vector<Element> const eb = elements(pb);
        if (profile(ea) != profile(eb))
            return false;
        if (!IsoSearch(pa, pb, eb).run())
            return false;
    }
    return true;
}

} // namespace k3lat
