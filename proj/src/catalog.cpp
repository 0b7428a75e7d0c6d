#include "k3lat/catalog.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "k3lat/binary_forms.hpp"
#include "k3lat/errors.hpp"
#include "k3lat/ternary.hpp"
#include "k3lat/transcendental.hpp"

namespace k3lat {

namespace detail {
extern char const table1_json[];
}

namespace {

using json = nlohmann::json;

template <class T>
std::string show(T const & x)
{
    std::ostringstream o;
    o << x;
    return o.str();
}

GramMatrix gram_from_json(json const & j)
{
    if (!j.is_array() || j.empty())
        throw ParseError("gram must be a non-empty array of rows");
    IntMatrix m(j.size(), j.size());
    for (std::size_t i = 0; i < j.size(); ++i) {
        if (!j[i].is_array() || j[i].size() != j.size())
            throw ParseError("gram row " + std::to_string(i + 1) + " has the wrong length");
        for (std::size_t k = 0; k < j.size(); ++k)
            m(i, k) = j[i][k].get<long long>();
    }
    return GramMatrix(m);
}

CatalogEntry entry_from_json(json const & j, bool general)
{
    CatalogEntry e{general ? "general" : "", general ? 0 : j.at("column").get<int>(),
                   gram_from_json(j.at("gram")), Integer(j.at("d").get<long long>()),
                   j.at("method").get<std::string>(), std::nullopt, std::nullopt};
    if (!general)
        e.label = j.contains("case") ? j["case"].get<std::string>()
                                     : "column " + std::to_string(e.column);
    if (j.contains("ns_form"))
        e.ns_form = FiniteQF::parse(j["ns_form"].get<std::string>());
    if (j.contains("simple_prime"))
        e.simple_prime = j["simple_prime"].get<std::int64_t>();
    if (e.method != "consistency" && e.method != "ns-form" && e.method != "genus")
        throw ParseError("unknown method '" + e.method + "'");
    if (e.method == "ns-form" && !e.ns_form)
        throw ParseError("ns-form row without ns_form");
    return e;
}

// Failures of the stored data itself; empty when consistent.
std::string consistency_problems(CatalogEntry const & e)
{
    std::string out;
    auto add = [&](std::string const & s) { out += (out.empty() ? "" : "; ") + s; };
    if (!e.gram.is_even())
        add("not even");
    Integer const det = determinant(e.gram);
    if (det != e.d)
        add("det " + to_string(det) + " != d " + to_string(e.d));
    if (det == 0)
        return out;
    if (e.gram.rank() == 2) {
        try {
            if (!is_reduced(EvenBinaryForm::from_gram(e.gram)))
                add("not reduced");
        } catch (error const & ex) {
            add(ex.what());
        }
    } else if (e.gram.rank() == 3) {
        if (signature(e.gram) != Signature{2, 1})
            add("signature is not (2, 1)");
    } else {
        add("rank " + std::to_string(e.gram.rank()));
    }
    return out;
}

RowResult check_entry(FamilyRecord const & f, CatalogEntry const & e)
{
    RowResult r{f.id, e.label, e.method, false, show(e.gram), "", ""};
    std::string const problems = consistency_problems(e);
    if (!problems.empty()) {
        r.detail = problems;
        return r;
    }
    try {
        if (e.method == "consistency") {
            r.computed = "det " + to_string(e.d);
            r.pass = true;
        } else if (e.gram.rank() == 3) {
            auto const rep = verify_candidate({e.gram, e.d, negate(*e.ns_form)});
            r.computed = rep.form.str();
            r.pass = rep.passed();
            if (!r.pass)
                r.detail = std::string("signature ") + (rep.signature_ok ? "ok" : "bad")
                           + ", det " + (rep.determinant_ok ? "ok" : "bad") + ", form "
                           + (rep.form_ok ? "ok" : "bad") + ", small "
                           + (rep.small_ok ? "ok" : "bad") + (rep.note.empty() ? "" : ": " + rep.note);
        } else {
            FiniteQF const ns = e.method == "genus" ? negate(FiniteQF::from_lattice(e.gram))
                                                    : *e.ns_form;
            EvenBinaryForm const got = transcendental_of_singular(to_int64(e.d), ns);
            r.computed = show(got.gram());
            r.pass = got == EvenBinaryForm::from_gram(e.gram);
        }
    } catch (error const & ex) {
        r.computed = ex.kind();
        r.detail = ex.what();
    }
    return r;
}

} // namespace

Catalog Catalog::parse(std::string const & text)
{
    Catalog c;
    try {
        json const j = json::parse(text);
        c.version = j.at("version").get<int>();
        c.extremal_note = j.value("extremal_note", "");
        for (auto const & fj : j.at("families")) {
            FamilyRecord f;
            f.id = fj.at("id").get<std::string>();
            f.name = fj.at("name").get<std::string>();
            if (fj.contains("general"))
                f.general = entry_from_json(fj["general"], true);
            for (auto const & sj : fj.value("singular", json::array()))
                f.singular.push_back(entry_from_json(sj, false));
            if (f.singular.size() > 4)
                throw ParseError("family " + f.id + " has more than four singular surfaces");
            f.extremal_ids = fj.value("extremal_ids", std::vector<int>{});
            c.families.push_back(std::move(f));
        }
    } catch (json::exception const & ex) {
        throw ParseError(std::string("catalog: ") + ex.what());
    } catch (error const & ex) {
        throw ParseError(std::string("catalog: ") + ex.what());
    }
    return c;
}

Catalog Catalog::load(std::string const & path)
{
    std::ifstream in(path);
    if (!in)
        throw ParseError("cannot open " + path);
    std::ostringstream s;
    s << in.rdbuf();
    return parse(s.str());
}

Catalog Catalog::embedded()
{
    return parse(detail::table1_json);
}

std::vector<GramMatrix> Catalog::rank2_matrices() const
{
    std::vector<GramMatrix> out;
    for (auto const & f : families)
        for (auto const & e : f.singular)
            if (e.gram.rank() == 2)
                out.push_back(e.gram);
    return out;
}

bool Report::passed() const
{
    return !rows.empty() && pass_count() == rows.size();
}

std::size_t Report::pass_count() const
{
    std::size_t n = 0;
    for (auto const & r : rows)
        n += r.pass;
    return n;
}

Report repro_table1(Catalog const & cat)
{
    Report rep{"table1", {}};
    for (auto const & f : cat.families) {
        if (f.general)
            rep.rows.push_back(check_entry(f, *f.general));
        for (auto const & e : f.singular)
            rep.rows.push_back(check_entry(f, e));
    }
    return rep;
}

Report repro_section4(Catalog const & cat, std::int64_t bound,
                      std::optional<std::vector<std::int64_t>> primes)
{
    Report rep{"section4", {}};
    auto run = [&](std::string family, std::string row, GramMatrix const & t,
                   std::string expected, auto accept) {
        RowResult r{std::move(family), std::move(row), "isotropy", false, std::move(expected), "", ""};
        try {
            auto const v = is_simple_shioda_inose(t, bound, primes);
            r.computed = verdict_kind(v);
            if (auto const * o = std::get_if<Obstruction>(&v)) {
                r.computed += " at " + std::to_string(o->prime);
                r.detail = "no primitive zero mod " + std::to_string(o->prime) + "^"
                           + std::to_string(o->precision) + ", searched to exponent "
                           + std::to_string(o->tested);
            } else if (auto const * w = std::get_if<Witness>(&v)) {
                r.detail = "isotropic vector (" + to_string(w->vector[0]) + ", "
                           + to_string(w->vector[1]) + ", " + to_string(w->vector[2]) + ")";
            }
            r.pass = accept(v);
        } catch (error const & ex) {
            r.computed = ex.kind();
            r.detail = ex.what();
        }
        rep.rows.push_back(std::move(r));
    };
    for (auto const & f : cat.families) {
        if (!f.general || !f.general->simple_prime)
            continue;
        std::int64_t const p = *f.general->simple_prime;
        run(f.id, "general", f.general->gram, "obstruction at " + std::to_string(p),
            [p](IsotropyVerdict const & v) {
                auto const * o = std::get_if<Obstruction>(&v);
                return o && o->prime == p;
            });
    }
    run("control", "U+(2)", direct_sum(lattices::U(), GramMatrix{{2}}), "witness",
        [](IsotropyVerdict const & v) { return std::holds_alternative<Witness>(v); });
    return rep;
}

Report repro_section5(Catalog const & cat)
{
    Report rep{"section5", {}};
    for (auto const & f : cat.families)
        for (auto const & e : f.singular) {
            RowResult r{f.id, e.label, "hessian", false, "embeddable", "", ""};
            try {
                bool const ok = hessian_embeddable(EvenBinaryForm::from_gram(e.gram));
                r.computed = ok ? "embeddable" : "not embeddable";
                r.detail = show(e.gram);
                r.pass = ok;
            } catch (error const & ex) {
                r.computed = ex.kind();
                r.detail = ex.what();
            }
            rep.rows.push_back(std::move(r));
        }
    return rep;
}

} // namespace k3lat
