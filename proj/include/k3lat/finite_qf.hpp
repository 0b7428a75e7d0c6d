#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "k3lat/arith.hpp"
#include "k3lat/lattice.hpp"

namespace k3lat {

/*
 * A finite quadratic form on Z_{m_1} + ... + Z_{m_k}: q-values on the
 * generators in [0, 2) and the pairing matrix with entries in [0, 1).
 * The diagonal of the pairing matrix is q mod 1.
 */
class FiniteQF
{
    std::vector<std::int64_t> orders_;
    std::vector<Rational> q_;
    std::vector<std::vector<Rational>> b_;

    void validate() const;

    public:
    FiniteQF() = default;
    /* orthogonal sum of cyclic pieces */
    FiniteQF(std::vector<std::int64_t> orders, std::vector<Rational> qvals);
    /* pairs[i][j] for i != j is read; the diagonal is ignored */
    FiniteQF(std::vector<std::int64_t> orders, std::vector<Rational> qvals,
             std::vector<std::vector<Rational>> pairs);

    static FiniteQF cyclic(std::int64_t m, Rational const & q);

    /* Discriminant form of an even nondegenerate lattice. */
    static FiniteQF from_lattice(GramMatrix const & g);

    /* "Z2(3/2)+Z30(23/30)", optionally followed by ";b(1,2)=1/2" terms;
     * "0" is the trivial form. */
    static FiniteQF parse(std::string const & text);
    std::string str() const;

    std::size_t size() const { return orders_.size(); }
    bool is_trivial() const { return orders_.empty(); }
    Integer group_order() const;
    std::vector<std::int64_t> const & orders() const { return orders_; }
    std::vector<Rational> const & qvals() const { return q_; }
    Rational const & pairing(std::size_t i, std::size_t j) const { return b_[i][j]; }

    /* q(sum x_i g_i) in [0, 2) */
    Rational evaluate(std::vector<Integer> const & x) const;
    /* b(sum x_i g_i, sum y_j g_j) in [0, 1) */
    Rational bilinear(std::vector<Integer> const & x, std::vector<Integer> const & y) const;

    friend bool operator==(FiniteQF const & x, FiniteQF const & y);
    friend bool operator!=(FiniteQF const & x, FiniteQF const & y) { return !(x == y); }
    friend std::ostream & operator<<(std::ostream & o, FiniteQF const & f);
};

FiniteQF direct_sum(FiniteQF const & a, FiniteQF const & b);
FiniteQF negate(FiniteQF const & f);

/* Merges summands of coprime order into cyclic pieces. A summand joins the
 * most recent piece whose order is coprime to its own; the new generator is
 * the sum of the old ones. */
FiniteQF cyclic_normalize(FiniteQF const & f);

constexpr std::int64_t isomorphism_search_bound = 100000;

/* Exhaustive search; throws TooLarge beyond isomorphism_search_bound. */
bool is_isomorphic(FiniteQF const & a, FiniteQF const & b);

} // namespace k3lat
