#include "k3lat/transcendental.hpp"

#include "k3lat/errors.hpp"

namespace k3lat {

namespace {

bool is_square(std::int64_t k)
{
    std::int64_t r = 0;
    while ((r + 1) * (r + 1) <= k)
        ++r;
    return r * r == k;
}

} // namespace

bool is_small_discriminant(Integer const & d)
{
    if (d == 0)
        throw ZeroDiscriminant("smallness is undefined for d = 0");
    Integer const n = 4 * (d < 0 ? Integer(-d) : d);
    for (std::int64_t k = 2; Integer(k - 1) * (k - 1) * (k - 1) < n; ++k) {
        if (k % 4 != 0 && k % 4 != 1)
            continue;
        if (is_square(k))
            continue;
        if (n % (Integer(k) * k * k) == 0)
            return false;
    }
    return true;
}

CandidateReport verify_candidate(Rank3Candidate const & cand)
{
    CandidateReport r;
    GramMatrix const & g = cand.gram;
    r.determinant = determinant(g);
    r.determinant_ok = r.determinant == cand.expected_d;
    if (r.determinant == 0) {
        r.note = "degenerate lattice";
        return r;
    }
    r.signature = signature(g);
    r.signature_ok = g.rank() == 3 && r.signature == Signature{2, 1};
    r.small_ok = is_small_discriminant(r.determinant);
    try {
        r.form = FiniteQF::from_lattice(g);
        r.form_ok = is_isomorphic(r.form, cand.expected_form);
    } catch (error const & e) {
        r.note = std::string(e.kind()) + ": " + e.what();
    }
    return r;
}

EvenBinaryForm transcendental_of_singular(std::int64_t d, FiniteQF const & ns_form)
{
    FiniteQF const target = negate(ns_form);
    auto const found = match_disc_form(d, target);
    if (found.empty())
        throw NoMatch("no reduced form of discriminant " + std::to_string(d)
                      + " has discriminant form " + target.str());
    if (found.size() > 1) {
        std::string list;
        for (auto const & f : found)
            list += (list.empty() ? "" : ", ") + f.str();
        throw Ambiguous("several reduced forms of discriminant " + std::to_string(d)
                        + " have discriminant form " + target.str() + ": " + list);
    }
    return found.front();
}

} // namespace k3lat
