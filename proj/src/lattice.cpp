#include "k3lat/lattice.hpp"

#include <algorithm>
#include <ostream>
#include <utility>

#include "k3lat/errors.hpp"

namespace k3lat {

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), a_(rows * cols)
{
}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows)
{
    rows_ = rows.size();
    cols_ = rows_ ? rows.begin()->size() : 0;
    a_.reserve(rows_ * cols_);
    for (auto const & r : rows) {
        if (r.size() != cols_)
            throw DimensionMismatch("ragged matrix literal");
        for (long x : r)
            a_.emplace_back(x);
    }
}

IntMatrix IntMatrix::identity(std::size_t n)
{
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        m(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::diagonal(std::vector<Integer> const & d)
{
    IntMatrix m(d.size(), d.size());
    for (std::size_t i = 0; i < d.size(); ++i)
        m(i, i) = d[i];
    return m;
}

IntMatrix IntMatrix::transpose() const
{
    IntMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            t(j, i) = (*this)(i, j);
    return t;
}

bool IntMatrix::is_symmetric() const
{
    if (!is_square())
        return false;
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = i + 1; j < cols_; ++j)
            if ((*this)(i, j) != (*this)(j, i))
                return false;
    return true;
}

void IntMatrix::swap_rows(std::size_t i, std::size_t j)
{
    if (i == j)
        return;
    for (std::size_t k = 0; k < cols_; ++k)
        std::swap((*this)(i, k), (*this)(j, k));
}

void IntMatrix::swap_cols(std::size_t i, std::size_t j)
{
    if (i == j)
        return;
    for (std::size_t k = 0; k < rows_; ++k)
        std::swap((*this)(k, i), (*this)(k, j));
}

void IntMatrix::add_row(std::size_t i, std::size_t j, Integer const & k)
{
    if (k == 0)
        return;
    for (std::size_t c = 0; c < cols_; ++c)
        (*this)(i, c) += k * (*this)(j, c);
}

void IntMatrix::add_col(std::size_t i, std::size_t j, Integer const & k)
{
    if (k == 0)
        return;
    for (std::size_t r = 0; r < rows_; ++r)
        (*this)(r, i) += k * (*this)(r, j);
}

void IntMatrix::negate_row(std::size_t i)
{
    for (std::size_t c = 0; c < cols_; ++c)
        (*this)(i, c) = -(*this)(i, c);
}

IntMatrix operator*(IntMatrix const & x, IntMatrix const & y)
{
    if (x.cols_ != y.rows_)
        throw DimensionMismatch("matrix product: inner dimensions differ");
    IntMatrix p(x.rows_, y.cols_);
    for (std::size_t i = 0; i < x.rows_; ++i)
        for (std::size_t k = 0; k < x.cols_; ++k) {
            Integer const & xik = x(i, k);
            if (xik == 0)
                continue;
            for (std::size_t j = 0; j < y.cols_; ++j)
                p(i, j) += xik * y(k, j);
        }
    return p;
}

bool operator==(IntMatrix const & x, IntMatrix const & y)
{
    return x.rows_ == y.rows_ && x.cols_ == y.cols_ && x.a_ == y.a_;
}

std::ostream & operator<<(std::ostream & o, IntMatrix const & m)
{
    o << "[";
    for (std::size_t i = 0; i < m.rows(); ++i) {
        if (i)
            o << "; ";
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (j)
                o << " ";
            o << m(i, j);
        }
    }
    return o << "]";
}

IntMatrix parse_matrix(std::string const & text)
{
    std::vector<std::vector<Integer>> rows;
    std::vector<Integer> row;
    std::string tok;
    auto flush_tok = [&] {
        if (!tok.empty())
            row.push_back(parse_integer(tok));
        tok.clear();
    };
    auto flush_row = [&] {
        flush_tok();
        if (!row.empty())
            rows.push_back(std::move(row));
        row.clear();
    };
    for (char c : text) {
        if (c == '[' || c == ']' || c == ' ' || c == '\t' || c == ',' || c == '\r')
            flush_tok();
        else if (c == ';' || c == '\n')
            flush_row();
        else
            tok += c;
    }
    flush_row();
    if (rows.empty())
        throw ParseError("empty matrix");
    IntMatrix m(rows.size(), rows[0].size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != m.cols())
            throw DimensionMismatch("matrix row " + std::to_string(i + 1) + " has "
                                    + std::to_string(rows[i].size()) + " entries, expected "
                                    + std::to_string(m.cols()));
        for (std::size_t j = 0; j < m.cols(); ++j)
            m(i, j) = rows[i][j];
    }
    return m;
}

Integer determinant(IntMatrix const & m)
{
    if (!m.is_square())
        throw DimensionMismatch("determinant of a non-square matrix");
    std::size_t const n = m.rows();
    if (n == 0)
        return 1;
    IntMatrix a = m;
    Integer prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a(k, k) == 0) {
            std::size_t p = k + 1;
            while (p < n && a(p, k) == 0)
                ++p;
            if (p == n)
                return 0;
            a.swap_rows(k, p);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j)
                a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
            a(i, k) = 0;
        }
        prev = a(k, k);
    }
    return sign * a(n - 1, n - 1);
}

GramMatrix::GramMatrix(IntMatrix m) : m_(std::move(m))
{
    if (!m_.is_square())
        throw DimensionMismatch("Gram matrix must be square");
    if (m_.rows() == 0)
        throw DimensionMismatch("Gram matrix must have positive rank");
    if (!m_.is_symmetric())
        throw NotSymmetric("Gram matrix must be symmetric");
}

bool GramMatrix::is_even() const
{
    for (std::size_t i = 0; i < rank(); ++i)
        if (m_(i, i) % 2 != 0)
            return false;
    return true;
}

RationalVector integer_vector(std::vector<long> const & v)
{
    RationalVector r;
    r.reserve(v.size());
    for (long x : v)
        r.emplace_back(x);
    return r;
}

Integer determinant(GramMatrix const & g)
{
    return determinant(g.matrix());
}

Signature signature(GramMatrix const & g)
{
    if (determinant(g) == 0)
        throw DegenerateLattice("signature of a degenerate lattice");

    std::size_t n = g.rank();
    std::vector<std::vector<Rational>> a(n, std::vector<Rational>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            a[i][j] = Rational(g(i, j));

    Signature s;
    while (n > 0) {
        std::size_t piv = n;
        for (std::size_t i = 0; i < n; ++i)
            if (a[i][i] != 0) {
                piv = i;
                break;
            }
        if (piv == n) {
            // all diagonal entries vanish: e_i <- e_i + e_j makes a[i][i] = 2 a[i][j]
            std::size_t pi = n, pj = n;
            for (std::size_t i = 0; i < n && pi == n; ++i)
                for (std::size_t j = i + 1; j < n; ++j)
                    if (a[i][j] != 0) {
                        pi = i;
                        pj = j;
                        break;
                    }
            if (pi == n)
                throw DegenerateLattice("zero block during symmetric elimination");
            for (std::size_t k = 0; k < n; ++k)
                a[pi][k] += a[pj][k];
            for (std::size_t k = 0; k < n; ++k)
                a[k][pi] += a[k][pj];
            piv = pi;
        }
        Rational const p = a[piv][piv];
        if (p > 0)
            ++s.positive;
        else
            ++s.negative;
        std::vector<std::vector<Rational>> b;
        b.reserve(n - 1);
        for (std::size_t i = 0; i < n; ++i) {
            if (i == piv)
                continue;
            std::vector<Rational> row;
            row.reserve(n - 1);
            for (std::size_t j = 0; j < n; ++j) {
                if (j == piv)
                    continue;
                row.push_back(a[i][j] - a[i][piv] * a[piv][j] / p);
            }
            b.push_back(std::move(row));
        }
        a = std::move(b);
        --n;
    }
    return s;
}

namespace {

Integer abs_value(Integer const & x) { return x < 0 ? Integer(-x) : x; }

} // namespace

SnfResult smith_normal_form(IntMatrix const & m)
{
    std::size_t const r = m.rows();
    std::size_t const c = m.cols();
    IntMatrix a = m;
    IntMatrix u = IntMatrix::identity(r);
    IntMatrix v = IntMatrix::identity(c);

    for (std::size_t t = 0; t < std::min(r, c); ++t) {
        std::size_t pi = r, pj = c;
        for (std::size_t i = t; i < r; ++i)
            for (std::size_t j = t; j < c; ++j)
                if (a(i, j) != 0 && (pi == r || abs_value(a(i, j)) < abs_value(a(pi, pj)))) {
                    pi = i;
                    pj = j;
                }
        if (pi == r)
            break;
        a.swap_rows(t, pi);
        u.swap_rows(t, pi);
        a.swap_cols(t, pj);
        v.swap_cols(t, pj);

        for (;;) {
            bool clean = true;
            for (std::size_t i = t + 1; i < r && clean; ++i) {
                if (a(i, t) == 0)
                    continue;
                Integer const q = a(i, t) / a(t, t);
                a.add_row(i, t, -q);
                u.add_row(i, t, -q);
                if (a(i, t) != 0) {
                    a.swap_rows(t, i);
                    u.swap_rows(t, i);
                    clean = false;
                }
            }
            for (std::size_t j = t + 1; j < c && clean; ++j) {
                if (a(t, j) == 0)
                    continue;
                Integer const q = a(t, j) / a(t, t);
                a.add_col(j, t, -q);
                v.add_col(j, t, -q);
                if (a(t, j) != 0) {
                    a.swap_cols(t, j);
                    v.swap_cols(t, j);
                    clean = false;
                }
            }
            if (!clean)
                continue;
            // pivot must divide the whole trailing block
            std::size_t bad = r;
            for (std::size_t i = t + 1; i < r && bad == r; ++i)
                for (std::size_t j = t + 1; j < c; ++j)
                    if (a(i, j) % a(t, t) != 0) {
                        bad = i;
                        break;
                    }
            if (bad == r)
                break;
            a.add_row(t, bad, 1);
            u.add_row(t, bad, 1);
        }
        if (a(t, t) < 0) {
            a.negate_row(t);
            u.negate_row(t);
        }
    }
    return {std::move(u), std::move(a), std::move(v)};
}

DiscriminantGroup discriminant_group(GramMatrix const & g)
{
    if (determinant(g) == 0)
        throw DegenerateLattice("discriminant group of a degenerate lattice");
    SnfResult const snf = smith_normal_form(g.matrix());
    DiscriminantGroup out;
    std::size_t const n = g.rank();
    for (std::size_t k = 0; k < n; ++k) {
        Integer const d = snf.D(k, k);
        if (d == 1)
            continue;
        RationalVector gen(n);
        for (std::size_t i = 0; i < n; ++i)
            gen[i] = mod1(Rational(snf.V(i, k), d));
        out.invariant_factors.push_back(d);
        out.generators.push_back(std::move(gen));
    }
    return out;
}

namespace {

void check_dim(GramMatrix const & g, RationalVector const & v)
{
    if (v.size() != g.rank())
        throw DimensionMismatch("vector of length " + std::to_string(v.size())
                                + " for a rank " + std::to_string(g.rank()) + " lattice");
}

RationalVector apply(GramMatrix const & g, RationalVector const & v)
{
    check_dim(g, v);
    RationalVector out(g.rank());
    for (std::size_t i = 0; i < g.rank(); ++i)
        for (std::size_t j = 0; j < g.rank(); ++j)
            if (g(i, j) != 0 && v[j] != 0)
                out[i] += Rational(g(i, j)) * v[j];
    return out;
}

void require_dual(GramMatrix const & g, RationalVector const & v)
{
    if (!is_dual_vector(g, v))
        throw NotInDual("vector does not lie in the dual lattice");
}

} // namespace

bool is_dual_vector(GramMatrix const & g, RationalVector const & v)
{
    for (auto const & x : apply(g, v))
        if (!is_integral(x))
            return false;
    return true;
}

Rational bilinear(GramMatrix const & g, RationalVector const & v, RationalVector const & w)
{
    check_dim(g, v);
    RationalVector const gw = apply(g, w);
    Rational s = 0;
    for (std::size_t i = 0; i < v.size(); ++i)
        s += v[i] * gw[i];
    return s;
}

Rational qnorm_mod2(GramMatrix const & g, RationalVector const & v)
{
    require_dual(g, v);
    return mod2(bilinear(g, v, v));
}

Rational pairing_mod1(GramMatrix const & g, RationalVector const & v, RationalVector const & w)
{
    require_dual(g, v);
    require_dual(g, w);
    return mod1(bilinear(g, v, w));
}

Integer order_in_quotient(GramMatrix const & g, RationalVector const & v)
{
    require_dual(g, v);
    Integer n = 1;
    for (auto const & x : v)
        n = lcm(n, denominator(x));
    return n;
}

IndexLaw sublattice_index_law(GramMatrix const & g, IntMatrix const & basis)
{
    if (!basis.is_square() || basis.rows() != g.rank())
        throw DimensionMismatch("sublattice basis must be a square matrix of the lattice rank");
    Integer const det_basis = determinant(basis);
    if (det_basis == 0)
        throw DegenerateSublattice("sublattice basis is not of full rank");
    Integer const det_l = determinant(g);
    if (det_l == 0)
        throw DegenerateLattice("ambient lattice is degenerate");
    IndexLaw r;
    r.index = det_basis < 0 ? Integer(-det_basis) : det_basis;
    r.det_sub = determinant(basis.transpose() * g.matrix() * basis);
    r.verified = (r.det_sub % det_l == 0) && (r.det_sub / det_l == r.index * r.index);
    return r;
}

GramMatrix direct_sum(GramMatrix const & a, GramMatrix const & b)
{
    std::size_t const n = a.rank() + b.rank();
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < a.rank(); ++i)
        for (std::size_t j = 0; j < a.rank(); ++j)
            m(i, j) = a(i, j);
    for (std::size_t i = 0; i < b.rank(); ++i)
        for (std::size_t j = 0; j < b.rank(); ++j)
            m(a.rank() + i, a.rank() + j) = b(i, j);
    return GramMatrix(std::move(m));
}

GramMatrix twist(GramMatrix const & g, Integer const & n)
{
    if (n == 0)
        throw ZeroTwist("twist by zero");
    IntMatrix m = g.matrix();
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            m(i, j) *= n;
    return GramMatrix(std::move(m));
}

namespace lattices {

GramMatrix U()
{
    return {{0, 1}, {1, 0}};
}

GramMatrix E8()
{
    return {
        { 2,  0, -1,  0,  0,  0,  0,  0},
        { 0,  2,  0, -1,  0,  0,  0,  0},
        {-1,  0,  2, -1,  0,  0,  0,  0},
        { 0, -1, -1,  2, -1,  0,  0,  0},
        { 0,  0,  0, -1,  2, -1,  0,  0},
        { 0,  0,  0,  0, -1,  2, -1,  0},
        { 0,  0,  0,  0,  0, -1,  2, -1},
        { 0,  0,  0,  0,  0,  0, -1,  2},
    };
}

GramMatrix A2()
{
    return {{2, -1}, {-1, 2}};
}

GramMatrix K3()
{
    GramMatrix const e8n = twist(E8(), -1);
    return direct_sum(direct_sum(direct_sum(direct_sum(e8n, e8n), U()), U()), U());
}

GramMatrix T_hess()
{
    return direct_sum(direct_sum(U(), twist(U(), 2)), twist(A2(), -2));
}

} // namespace lattices

} // namespace k3lat
