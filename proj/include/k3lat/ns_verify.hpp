#pragma once

#include <optional>
#include <string>
#include <vector>

#include "k3lat/lattice.hpp"

namespace k3lat {

/* Labelled intersection matrix of a set of curves. */
struct CurveConfig {
    std::vector<std::string> names;
    GramMatrix gram;
    bool rational_curves = false; // every diagonal entry must be -2

    CurveConfig(std::vector<std::string> names, GramMatrix gram, bool rational_curves = false);

    /* First non-comment line holds the names, the following lines the rows.
     * Lines starting with '#' are skipped. */
    static CurveConfig parse(std::string const & text, bool rational_curves = false);
};

struct ClassCandidate {
    std::vector<Integer> coeffs;
    Integer n = 1;
};

/* One candidate per line, "c1 c2 ... / n"; commas and parentheses are
 * ignored, a missing "/ n" means n = 1. */
std::vector<ClassCandidate> parse_candidates(std::string const & text);

struct ClassReport {
    RationalVector vector; // coeffs / n
    bool in_dual = false;
    std::optional<Rational> norm; // mod 2, only for dual vectors
    Integer order;                // order of coeffs/n modulo Z^n
    std::vector<std::string> failures;
};

/* Throws DimensionMismatch when the lengths differ, InvalidArgument for n < 1. */
ClassReport check_divisible_class(CurveConfig const & cfg, std::vector<Integer> const & coeffs,
                                  Integer const & n);

struct GeneratorsReport {
    std::vector<ClassReport> classes;
    Integer subgroup_order;   // subgroup of L^v/L spanned by the dual candidates
    Integer group_order;      // |det|
    bool generates = false;
};

GeneratorsReport generators_report(CurveConfig const & cfg,
                                   std::vector<ClassCandidate> const & candidates);

} // namespace k3lat
