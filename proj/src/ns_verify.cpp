#include "k3lat/ns_verify.hpp"

#include <sstream>
#include <utility>

#include "k3lat/errors.hpp"

namespace k3lat {

namespace {

std::vector<std::string> content_lines(std::string const & text)
{
    std::vector<std::string> out;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        auto const hash = line.find('#');
        if (hash != std::string::npos)
            line.erase(hash);
        if (line.find_first_not_of(" \t\r") != std::string::npos)
            out.push_back(line);
    }
    return out;
}

// A dual vector v maps to U * (G v) mod d_i in the Smith coordinates of
// G^{-1} Z^n / Z^n.
std::vector<Integer> smith_coordinates(SnfResult const & snf, GramMatrix const & g,
                                       RationalVector const & v)
{
    std::size_t const n = g.rank();
    std::vector<Integer> gv(n);
    for (std::size_t i = 0; i < n; ++i) {
        Rational s = 0;
        for (std::size_t j = 0; j < n; ++j)
            s += g(i, j) * v[j];
        gv[i] = numerator(s); // integral because v is in the dual
    }
    std::vector<Integer> out(n);
    for (std::size_t i = 0; i < n; ++i) {
        Integer s = 0;
        for (std::size_t j = 0; j < n; ++j)
            s += snf.U(i, j) * gv[j];
        out[i] = mod_floor(s, snf.D(i, i));
    }
    return out;
}

} // namespace

CurveConfig::CurveConfig(std::vector<std::string> n, GramMatrix g, bool rational)
    : names(std::move(n)), gram(std::move(g)), rational_curves(rational)
{
    if (names.size() != gram.rank())
        throw DimensionMismatch(std::to_string(names.size()) + " curve names for a rank "
                                + std::to_string(gram.rank()) + " intersection matrix");
    if (rational_curves)
        for (std::size_t i = 0; i < gram.rank(); ++i)
            if (gram(i, i) != -2)
                throw InvalidArgument("curve " + names[i] + " has self-intersection "
                                      + to_string(gram(i, i)) + ", expected -2");
}

CurveConfig CurveConfig::parse(std::string const & text, bool rational_curves)
{
    auto const lines = content_lines(text);
    if (lines.empty())
        throw ParseError("curve configuration is empty");
    std::vector<std::string> names;
    std::istringstream head(lines[0]);
    for (std::string s; head >> s;)
        names.push_back(s);
    std::string rows;
    for (std::size_t i = 1; i < lines.size(); ++i)
        rows += lines[i] + "\n";
    if (rows.empty())
        throw ParseError("curve configuration has no intersection rows");
    return CurveConfig(std::move(names), GramMatrix(parse_matrix(rows)), rational_curves);
}

std::vector<ClassCandidate> parse_candidates(std::string const & text)
{
    std::vector<ClassCandidate> out;
    for (std::string line : content_lines(text)) {
        ClassCandidate c;
        auto const slash = line.find('/');
        if (slash != std::string::npos) {
            std::istringstream tail(line.substr(slash + 1));
            std::string den, extra;
            if (!(tail >> den) || (tail >> extra))
                throw ParseError("expected a single divisor after '/' in: " + line);
            c.n = parse_integer(den);
            line.erase(slash);
        }
        for (char & ch : line)
            if (ch == ',' || ch == '(' || ch == ')')
                ch = ' ';
        std::istringstream in(line);
        for (std::string s; in >> s;)
            c.coeffs.push_back(parse_integer(s));
        if (c.coeffs.empty())
            throw ParseError("candidate line without coefficients");
        out.push_back(std::move(c));
    }
    return out;
}

ClassReport check_divisible_class(CurveConfig const & cfg, std::vector<Integer> const & coeffs,
                                  Integer const & n)
{
    GramMatrix const & g = cfg.gram;
    if (coeffs.size() != g.rank())
        throw DimensionMismatch(std::to_string(coeffs.size()) + " coefficients for "
                                + std::to_string(g.rank()) + " curves");
    if (n < 1)
        throw InvalidArgument("divisor must be at least 1");
    ClassReport r;
    for (auto const & c : coeffs)
        r.vector.push_back(Rational(c, n));
    for (std::size_t i = 0; i < g.rank(); ++i) {
        RationalVector e(g.rank());
        e[i] = 1;
        Rational const b = bilinear(g, r.vector, e);
        if (!is_integral(b))
            r.failures.push_back("pairing with " + cfg.names[i] + " is " + to_string(b));
    }
    r.in_dual = r.failures.empty();
    if (r.in_dual) {
        r.norm = qnorm_mod2(g, r.vector);
        r.order = order_in_quotient(g, r.vector);
    } else {
        r.order = 1;
        for (auto const & x : r.vector)
            r.order = lcm(r.order, denominator(x));
    }
    return r;
}

GeneratorsReport generators_report(CurveConfig const & cfg,
                                   std::vector<ClassCandidate> const & candidates)
{
    GramMatrix const & g = cfg.gram;
    GeneratorsReport out;
    Integer const det = determinant(g);
    if (det == 0)
        throw DegenerateLattice("intersection matrix is degenerate");
    out.group_order = det < 0 ? Integer(-det) : det;

    SnfResult const snf = smith_normal_form(g.matrix());
    std::size_t const n = g.rank();
    std::vector<std::vector<Integer>> rows;
    for (auto const & c : candidates) {
        out.classes.push_back(check_divisible_class(cfg, c.coeffs, c.n));
        if (out.classes.back().in_dual)
            rows.push_back(smith_coordinates(snf, g, out.classes.back().vector));
    }
    // |H| = prod d_i / [Z^n : span(rows, D Z^n)]
    IntMatrix m(rows.size() + n, n);
    for (std::size_t k = 0; k < rows.size(); ++k)
        for (std::size_t j = 0; j < n; ++j)
            m(k, j) = rows[k][j];
    for (std::size_t i = 0; i < n; ++i)
        m(rows.size() + i, i) = snf.D(i, i);
    SnfResult const h = smith_normal_form(m);
    Integer index = 1;
    for (std::size_t i = 0; i < n; ++i)
        index *= h.D(i, i);
    out.subgroup_order = out.group_order / index;
    out.generates = out.subgroup_order == out.group_order;
    return out;
}

} // namespace k3lat
