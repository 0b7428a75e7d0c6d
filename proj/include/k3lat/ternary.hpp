#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "k3lat/lattice.hpp"

namespace k3lat {

using Vector3 = std::array<Integer, 3>;

/* x^T G x for a 3x3 Gram matrix */
Integer ternary_value(GramMatrix const & g, Vector3 const & v);

/* Smallest zero in the box |v_i| <= H, ordered by max-norm and then
 * coordinatewise by 0, 1, -1, 2, -2, ... */
std::optional<Vector3> find_isotropic(GramMatrix const & g, std::int64_t bound);

constexpr std::uint64_t default_search_budget = 500'000'000;

/* Least k <= e such that x^T G x == 0 mod p^k has no primitive solution,
 * or nothing if primitive solutions survive up to p^e. Throws
 * SearchTooLarge when the lifting work exceeds the budget. */
std::optional<int> obstruction_level(GramMatrix const & g, std::int64_t p, int e,
                                     std::uint64_t budget = default_search_budget);

/* No primitive zero mod p^e. */
bool local_obstruction(GramMatrix const & g, std::int64_t p, int e,
                       std::uint64_t budget = default_search_budget);

struct Witness {
    Vector3 vector;
};

struct Obstruction {
    std::int64_t prime = 0;
    int precision = 0; // least exponent at which no primitive zero exists
    int tested = 0;    // exponent the search was run at
};

struct Inconclusive {
    std::int64_t bound = 0;
    std::vector<std::int64_t> primes;
};

using IsotropyVerdict = std::variant<Witness, Obstruction, Inconclusive>;

char const * verdict_kind(IsotropyVerdict const & v);

/* Odd primes dividing 2*det, largest first. */
std::vector<std::int64_t> default_primes(GramMatrix const & g);

/* Exponent 3 + v_p(2*det) used for each tested prime. */
int default_precision(GramMatrix const & g, std::int64_t p);

IsotropyVerdict decide_isotropy(GramMatrix const & g, std::int64_t bound,
                                std::optional<std::vector<std::int64_t>> primes = std::nullopt);

/* Runs decide_isotropy on T(-1); an obstruction means the structure is
 * simple. Throws WrongSignature unless T has signature (2, 1). */
IsotropyVerdict is_simple_shioda_inose(GramMatrix const & t, std::int64_t bound = 50,
                                       std::optional<std::vector<std::int64_t>> primes = std::nullopt);

} // namespace k3lat
