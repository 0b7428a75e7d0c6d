#pragma once

#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <string>
#include <vector>

#include "k3lat/arith.hpp"

namespace k3lat {

/* Dense row-major integer matrix, possibly rectangular. */
class IntMatrix
{
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Integer> a_;

    public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols);
    IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

    static IntMatrix identity(std::size_t n);
    static IntMatrix diagonal(std::vector<Integer> const & d);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    Integer & operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    Integer const & operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    IntMatrix transpose() const;
    bool is_symmetric() const;

    void swap_rows(std::size_t i, std::size_t j);
    void swap_cols(std::size_t i, std::size_t j);
    /* row_i += k * row_j */
    void add_row(std::size_t i, std::size_t j, Integer const & k);
    /* col_i += k * col_j */
    void add_col(std::size_t i, std::size_t j, Integer const & k);
    void negate_row(std::size_t i);

    friend IntMatrix operator*(IntMatrix const & x, IntMatrix const & y);
    friend bool operator==(IntMatrix const & x, IntMatrix const & y);
    friend bool operator!=(IntMatrix const & x, IntMatrix const & y) { return !(x == y); }
    friend std::ostream & operator<<(std::ostream & o, IntMatrix const & m);
};

/* "[a b; c d]" or one row per line; commas count as spaces. */
IntMatrix parse_matrix(std::string const & text);

/* Exact determinant by fraction-free (Bareiss) elimination. */
Integer determinant(IntMatrix const & m);

/*
 * Gram matrix of an integral lattice: square and symmetric, entry (i,j)
 * is b(e_i, e_j).
 */
class GramMatrix
{
    IntMatrix m_;

    public:
    explicit GramMatrix(IntMatrix m);
    GramMatrix(std::initializer_list<std::initializer_list<long>> rows)
        : GramMatrix(IntMatrix(rows)) {}

    std::size_t rank() const { return m_.rows(); }
    Integer const & operator()(std::size_t i, std::size_t j) const { return m_(i, j); }
    IntMatrix const & matrix() const { return m_; }

    /* Even iff every diagonal entry is even. */
    bool is_even() const;

    friend bool operator==(GramMatrix const & x, GramMatrix const & y) { return x.m_ == y.m_; }
    friend bool operator!=(GramMatrix const & x, GramMatrix const & y) { return !(x == y); }
    friend std::ostream & operator<<(std::ostream & o, GramMatrix const & g) { return o << g.m_; }
};

using RationalVector = std::vector<Rational>;

RationalVector integer_vector(std::vector<long> const & v);

Integer determinant(GramMatrix const & g);

struct Signature {
    std::size_t positive = 0;
    std::size_t negative = 0;
    friend bool operator==(Signature const &, Signature const &) = default;
};

/* Sylvester counts via exact symmetric elimination over Q.
 * Throws DegenerateLattice when det == 0. */
Signature signature(GramMatrix const & g);

struct SnfResult {
    IntMatrix U, D, V; // U * M * V == D
};

/* Smith normal form of an arbitrary integer matrix. Diagonal entries are
 * nonnegative and each divides the next; trailing zeros come last. */
SnfResult smith_normal_form(IntMatrix const & m);

struct DiscriminantGroup {
    std::vector<Integer> invariant_factors; // all > 1, d_i | d_{i+1}
    std::vector<RationalVector> generators;  // coordinates in [0, 1)
};

/* L^v / L with generators taken from the SNF column transform. */
DiscriminantGroup discriminant_group(GramMatrix const & g);

bool is_dual_vector(GramMatrix const & g, RationalVector const & v);

/* v^T G v in [0, 2); v must lie in the dual. */
Rational qnorm_mod2(GramMatrix const & g, RationalVector const & v);

/* v^T G w in [0, 1); both vectors must lie in the dual. */
Rational pairing_mod1(GramMatrix const & g, RationalVector const & v, RationalVector const & w);

/* Least n >= 1 with n*v integral. */
Integer order_in_quotient(GramMatrix const & g, RationalVector const & v);

/* Exact v^T G w, no reduction. */
Rational bilinear(GramMatrix const & g, RationalVector const & v, RationalVector const & w);

struct IndexLaw {
    Integer index;      // [L : M] = |det(basis)|
    Integer det_sub;    // d(M)
    bool verified = false;
};

/* Checks [L:M]^2 == d(M)/d(L) for the sublattice spanned by the columns
 * of `basis` (given in L-coordinates). */
IndexLaw sublattice_index_law(GramMatrix const & g, IntMatrix const & basis);

GramMatrix direct_sum(GramMatrix const & a, GramMatrix const & b);
GramMatrix twist(GramMatrix const & g, Integer const & n);

namespace lattices {
GramMatrix U();
GramMatrix E8();
GramMatrix A2();
/* (-E8) + (-E8) + U + U + U */
GramMatrix K3();
/* U + U(2) + A2(-2) */
GramMatrix T_hess();
} // namespace lattices

} // namespace k3lat
