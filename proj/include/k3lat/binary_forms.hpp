#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "k3lat/finite_qf.hpp"
#include "k3lat/lattice.hpp"

namespace k3lat {

/* Positive definite even binary form with Gram matrix (2a c; c 2b). */
struct EvenBinaryForm {
    std::int64_t a = 1, b = 1, c = 0;

    EvenBinaryForm() = default;
    EvenBinaryForm(std::int64_t a, std::int64_t b, std::int64_t c);

    /* Throws InvalidForm unless the matrix is 2x2, even and positive definite. */
    static EvenBinaryForm from_gram(GramMatrix const & g);

    /* 4ab - c^2 */
    std::int64_t discriminant() const;
    GramMatrix gram() const;
    /* "[2a c; c 2b]" */
    std::string str() const;

    friend auto operator<=>(EvenBinaryForm const &, EvenBinaryForm const &) = default;
};

std::ostream & operator<<(std::ostream & o, EvenBinaryForm const & f);

/* gamma = (p q; r s) with det 1; acts by M -> gamma^T M gamma. */
struct Transform {
    std::int64_t p = 1, q = 0, r = 0, s = 1;

    static Transform identity() { return {}; }
    std::int64_t det() const;
    friend bool operator==(Transform const &, Transform const &) = default;
};

Transform operator*(Transform const & x, Transform const & y);
Transform inverse(Transform const & g);
EvenBinaryForm transform(EvenBinaryForm const & f, Transform const & g);

struct Reduction {
    EvenBinaryForm form;
    Transform gamma; // gamma^T * input * gamma == form
};

/* Gauss reduction to -a < c <= a <= b, with c >= 0 when a == b. */
Reduction reduce(EvenBinaryForm const & f);
bool is_reduced(EvenBinaryForm const & f);

/* One reduced form per SL2(Z) class, sorted by (a, b, c). Throws
 * EmptyResult for d = 1, 2 mod 4 and InvalidArgument for d <= 0. */
std::vector<EvenBinaryForm> enumerate_reduced(std::int64_t d);

std::optional<Transform> equivalent(EvenBinaryForm const & f1, EvenBinaryForm const & f2);
std::size_t class_number(std::int64_t d);
bool is_primitive(EvenBinaryForm const & f);

/* Reduced forms of discriminant d grouped by isomorphism class of their
 * discriminant forms. */
std::vector<std::vector<EvenBinaryForm>> genus_partition(std::int64_t d);

std::vector<EvenBinaryForm> match_disc_form(std::int64_t d, FiniteQF const & target);

/* (p + q*sqrt(radicand)) / r, r > 0, gcd(p, q, r) == 1 */
struct Surd {
    std::int64_t p = 0, q = 0, r = 1;
    std::int64_t radicand = 0;
    std::string str() const;
    friend bool operator==(Surd const &, Surd const &) = default;
};

/* tau1 = (-c + sqrt(-d)) / 2a, tau2 = (c + sqrt(-d)) / 2 */
std::pair<Surd, Surd> cm_moduli(EvenBinaryForm const & f);

/* Primitive embedding into U + U(2) + A2(-2) exists iff c, a or b is even. */
bool hessian_embeddable(EvenBinaryForm const & f);

} // namespace k3lat
