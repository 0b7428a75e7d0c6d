#pragma once

#include <cstdint>

#include "k3lat/binary_forms.hpp"
#include "k3lat/finite_qf.hpp"
#include "k3lat/lattice.hpp"

namespace k3lat {

/* True iff no non-square k = 0, 1 mod 4 (k >= 2) has k^3 | 4|d|.
 * Throws ZeroDiscriminant. */
bool is_small_discriminant(Integer const & d);

struct Rank3Candidate {
    GramMatrix gram;
    Integer expected_d;
    FiniteQF expected_form;
};

struct CandidateReport {
    bool signature_ok = false;
    bool determinant_ok = false;
    bool form_ok = false;
    bool small_ok = false;
    Signature signature;
    Integer determinant;
    FiniteQF form; // computed discriminant form, when available
    std::string note;

    bool passed() const { return signature_ok && determinant_ok && form_ok && small_ok; }
};

CandidateReport verify_candidate(Rank3Candidate const & cand);

/* Negates the Neron-Severi discriminant form and returns the unique reduced
 * form of discriminant d carrying it. Throws NoMatch or Ambiguous. */
EvenBinaryForm transcendental_of_singular(std::int64_t d, FiniteQF const & ns_form);

} // namespace k3lat
