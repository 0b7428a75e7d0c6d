#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "k3lat/finite_qf.hpp"
#include "k3lat/lattice.hpp"

namespace k3lat {

/* How a stored lattice is checked:
 *   consistency  determinant, evenness, reducedness only
 *   ns-form      derived from the stored Neron-Severi discriminant form
 *   genus        its own genus must hold exactly one class */
struct CatalogEntry {
    std::string label; // "general", a case such as "8,3", or "column 2"
    int column = 0;    // 0 for the general surface
    GramMatrix gram;
    Integer d;
    std::string method;
    std::optional<FiniteQF> ns_form;
    std::optional<std::int64_t> simple_prime; // expected obstruction prime, rank 3 only
};

struct FamilyRecord {
    std::string id;
    std::string name;
    std::optional<CatalogEntry> general;
    std::vector<CatalogEntry> singular;
    std::vector<int> extremal_ids;
};

struct Catalog {
    int version = 0;
    std::vector<FamilyRecord> families;
    std::string extremal_note;

    /* Throws ParseError on malformed records. */
    static Catalog parse(std::string const & json_text);
    static Catalog load(std::string const & path);
    /* Copy of data/table1.json compiled into the library. */
    static Catalog embedded();

    std::vector<GramMatrix> rank2_matrices() const;
};

struct RowResult {
    std::string family;
    std::string row;
    std::string method;
    bool pass = false;
    std::string expected;
    std::string computed;
    std::string detail;
};

struct Report {
    std::string name;
    std::vector<RowResult> rows;
    bool passed() const;
    std::size_t pass_count() const;
};

Report repro_table1(Catalog const & cat);

/* Simplicity of the Shioda-Inose structure for every general surface that
 * carries an expected prime, plus a control lattice with an isotropic
 * vector. */
Report repro_section4(Catalog const & cat, std::int64_t bound = 50,
                      std::optional<std::vector<std::int64_t>> primes = std::nullopt);

/* Hessian criterion on every stored rank 2 matrix. */
Report repro_section5(Catalog const & cat);

} // namespace k3lat
