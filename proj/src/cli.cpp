#include "k3lat/cli.hpp"

#include <filesystem>
#include <fstream>
#include <functional>
#include <iomanip>
#include <map>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "k3lat/binary_forms.hpp"
#include "k3lat/catalog.hpp"
#include "k3lat/errors.hpp"
#include "k3lat/finite_qf.hpp"
#include "k3lat/ns_verify.hpp"
#include "k3lat/ternary.hpp"
#include "k3lat/transcendental.hpp"

namespace k3lat {

namespace {

using json = nlohmann::json;

struct Outcome {
    int code = exit_ok;
    json record = json::object();
    std::string text;
};

std::string slurp(std::string const & path)
{
    std::ifstream in(path);
    if (!in)
        throw ParseError("cannot open " + path);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

// Inline "[a b; c d]" or a file holding the rank and then the rows.
GramMatrix read_gram(std::string const & arg)
{
    if (!std::filesystem::is_regular_file(arg))
        return GramMatrix(parse_matrix(arg));
    std::istringstream in(slurp(arg));
    std::string tok;
    if (!(in >> tok))
        throw ParseError(arg + ": empty matrix file");
    std::int64_t const n = to_int64(parse_integer(tok));
    if (n < 1)
        throw ParseError(arg + ": rank must be positive");
    IntMatrix m(n, n);
    for (std::int64_t i = 0; i < n; ++i)
        for (std::int64_t j = 0; j < n; ++j) {
            if (!(in >> tok))
                throw ParseError(arg + ": expected " + std::to_string(n * n) + " entries");
            m(i, j) = parse_integer(tok);
        }
    if (in >> tok)
        throw ParseError(arg + ": trailing data after the matrix");
    return GramMatrix(m);
}

std::int64_t read_int(std::string const & arg)
{
    return to_int64(parse_integer(arg));
}

json form_json(EvenBinaryForm const & f)
{
    return {{"a", f.a}, {"b", f.b}, {"c", f.c}, {"d", f.discriminant()}, {"matrix", f.str()}};
}

json transform_json(Transform const & t)
{
    return json::array({json::array({t.p, t.q}), json::array({t.r, t.s})});
}

std::string show(Transform const & t)
{
    return "[" + std::to_string(t.p) + " " + std::to_string(t.q) + "; " + std::to_string(t.r) + " "
           + std::to_string(t.s) + "]";
}

json verdict_json(IsotropyVerdict const & v)
{
    json j{{"kind", verdict_kind(v)}};
    if (auto const * w = std::get_if<Witness>(&v))
        j["witness"] = {to_string(w->vector[0]), to_string(w->vector[1]), to_string(w->vector[2])};
    else if (auto const * o = std::get_if<Obstruction>(&v)) {
        j["prime"] = o->prime;
        j["precision"] = o->precision;
        j["tested"] = o->tested;
    } else if (auto const * i = std::get_if<Inconclusive>(&v)) {
        j["bound"] = i->bound;
        j["primes"] = i->primes;
    }
    return j;
}

std::string verdict_text(IsotropyVerdict const & v)
{
    if (auto const * w = std::get_if<Witness>(&v))
        return "witness: (" + to_string(w->vector[0]) + ", " + to_string(w->vector[1]) + ", "
               + to_string(w->vector[2]) + ")\n";
    if (auto const * o = std::get_if<Obstruction>(&v))
        return "obstruction: p = " + std::to_string(o->prime) + ", no primitive zero mod "
               + std::to_string(o->prime) + "^" + std::to_string(o->precision) + " (searched to "
               + std::to_string(o->prime) + "^" + std::to_string(o->tested) + ")\n";
    auto const & i = std::get<Inconclusive>(v);
    std::string ps;
    for (auto p : i.primes)
        ps += (ps.empty() ? "" : ",") + std::to_string(p);
    return "inconclusive: no zero with |v_i| <= " + std::to_string(i.bound)
           + ", no obstruction at primes {" + ps + "}\n";
}

json report_json(Report const & r)
{
    json rows = json::array();
    for (auto const & x : r.rows)
        rows.push_back({{"family", x.family},
                        {"row", x.row},
                        {"method", x.method},
                        {"pass", x.pass},
                        {"expected", x.expected},
                        {"computed", x.computed},
                        {"detail", x.detail}});
    return {{"report", r.name},
            {"passed", r.passed()},
            {"pass_count", r.pass_count()},
            {"rows", rows}};
}

std::string report_text(Report const & r)
{
    std::ostringstream o;
    for (auto const & x : r.rows) {
        o << (x.pass ? "pass" : "FAIL") << "  " << std::left << std::setw(7) << x.family << " "
          << std::setw(9) << x.row << " " << std::setw(11) << x.method << " expected "
          << x.expected << ", computed " << x.computed;
        if (!x.detail.empty())
            o << " (" << x.detail << ")";
        o << "\n";
    }
    o << r.name << ": " << r.pass_count() << "/" << r.rows.size() << " rows pass\n";
    return o.str();
}

std::vector<std::int64_t> parse_primes(std::string const & s)
{
    std::vector<std::int64_t> out;
    std::stringstream in(s);
    for (std::string tok; std::getline(in, tok, ',');)
        if (!tok.empty())
            out.push_back(read_int(tok));
    if (out.empty())
        throw ParseError("--primes needs at least one prime");
    return out;
}

} // namespace

int cli_dispatch(std::vector<std::string> const & args, std::ostream & out, std::ostream & err)
{
    CLI::App app{"Even lattices, discriminant forms and binary forms.", "k3lat"};
    app.require_subcommand(1, 1);
    app.fallthrough();

    bool as_json = false;
    std::int64_t bound = 50;
    std::string primes_arg, data_path;
    app.add_flag("--json", as_json, "machine-readable output");
    app.add_option("--bound", bound, "isotropy search box |v_i| <= H")->check(CLI::PositiveNumber);
    app.add_option("--primes", primes_arg, "comma separated primes for the local search");
    app.add_option("--data", data_path, "catalog file replacing the built-in table");

    std::map<std::string, std::function<Outcome()>> commands;
    std::vector<std::string> pos(2);
    bool rational_curves = false;

    auto sub = [&](char const * name, char const * help, std::vector<char const *> params) {
        CLI::App * s = app.add_subcommand(name, help);
        for (std::size_t i = 0; i < params.size(); ++i)
            s->add_option(params[i], pos[i], params[i])->required();
        return s;
    };

    sub("enumerate", "reduced forms of discriminant D", {"D"});
    commands["enumerate"] = [&] {
        Outcome o;
        std::int64_t const d = read_int(pos[0]);
        auto const forms = enumerate_reduced(d);
        json list = json::array();
        for (auto const & f : forms) {
            list.push_back(form_json(f));
            o.text += f.str() + "\n";
        }
        o.record = {{"d", d}, {"count", forms.size()}, {"forms", list}};
        return o;
    };

    sub("reduce", "Gauss reduction of an even positive binary form", {"MATRIX"});
    commands["reduce"] = [&] {
        Outcome o;
        auto const r = reduce(EvenBinaryForm::from_gram(read_gram(pos[0])));
        o.record = {{"form", form_json(r.form)}, {"gamma", transform_json(r.gamma)}};
        o.text = r.form.str() + "\ngamma: " + show(r.gamma) + "\n";
        return o;
    };

    sub("equivalent", "SL2(Z) equivalence of two binary forms", {"MATRIX1", "MATRIX2"});
    commands["equivalent"] = [&] {
        Outcome o;
        auto const t = equivalent(EvenBinaryForm::from_gram(read_gram(pos[0])),
                                  EvenBinaryForm::from_gram(read_gram(pos[1])));
        o.record = {{"equivalent", t.has_value()}};
        o.text = std::string("equivalent: ") + (t ? "true" : "false") + "\n";
        if (t) {
            o.record["gamma"] = transform_json(*t);
            o.text += "gamma: " + show(*t) + "\n";
        } else {
            o.code = exit_math;
        }
        return o;
    };

    sub("classnum", "number of classes of discriminant D", {"D"});
    commands["classnum"] = [&] {
        Outcome o;
        std::int64_t const d = read_int(pos[0]);
        if (d <= 0)
            throw InvalidArgument("discriminant must be positive");
        std::size_t const h = class_number(d);
        o.record = {{"d", d}, {"class_number", h}};
        o.text = "class number: " + std::to_string(h) + "\n";
        return o;
    };

    sub("discform", "discriminant form of an even lattice", {"MATRIX"});
    commands["discform"] = [&] {
        Outcome o;
        GramMatrix const g = read_gram(pos[0]);
        FiniteQF const f = FiniteQF::from_lattice(g);
        o.record = {{"form", f.str()}, {"order", to_string(f.group_order())}, {"det", to_string(determinant(g))}};
        o.text = "discriminant form: " + f.str() + "\ngroup order: " + to_string(f.group_order())
                 + "\n";
        return o;
    };

    sub("match", "transcendental lattice of discriminant D from a Neron-Severi form", {"D", "NSFORM"});
    commands["match"] = [&] {
        Outcome o;
        std::int64_t const d = read_int(pos[0]);
        FiniteQF const ns = FiniteQF::parse(pos[1]);
        EvenBinaryForm const t = transcendental_of_singular(d, ns);
        o.record = {{"d", d}, {"ns_form", ns.str()}, {"target", negate(ns).str()}, {"form", form_json(t)}};
        o.text = t.str() + "\n";
        return o;
    };

    sub("small", "smallness of a discriminant", {"D"});
    commands["small"] = [&] {
        Outcome o;
        bool const s = is_small_discriminant(parse_integer(pos[0]));
        o.record = {{"d", pos[0]}, {"small", s}};
        o.text = std::string("small: ") + (s ? "true" : "false") + "\n";
        o.code = s ? exit_ok : exit_math;
        return o;
    };

    auto primes = [&]() -> std::optional<std::vector<std::int64_t>> {
        if (primes_arg.empty())
            return std::nullopt;
        return parse_primes(primes_arg);
    };

    sub("isotropy", "integer zero or local obstruction for a ternary form", {"MATRIX"});
    commands["isotropy"] = [&] {
        Outcome o;
        auto const v = decide_isotropy(read_gram(pos[0]), bound, primes());
        o.record = verdict_json(v);
        o.text = verdict_text(v);
        o.code = std::holds_alternative<Inconclusive>(v) ? exit_math : exit_ok;
        return o;
    };

    sub("simple", "simplicity of the Shioda-Inose structure for a rank 3 T", {"MATRIX"});
    commands["simple"] = [&] {
        Outcome o;
        auto const v = is_simple_shioda_inose(read_gram(pos[0]), bound, primes());
        bool const simple = std::holds_alternative<Obstruction>(v);
        o.record = {{"simple", simple}, {"verdict", verdict_json(v)}};
        o.text = std::string("simple: ") + (simple ? "true" : "false") + "\n" + verdict_text(v);
        o.code = simple ? exit_ok : exit_math;
        return o;
    };

    sub("hessian", "primitive embedding into U+U(2)+A2(-2)", {"MATRIX"});
    commands["hessian"] = [&] {
        Outcome o;
        bool const h = hessian_embeddable(EvenBinaryForm::from_gram(read_gram(pos[0])));
        o.record = {{"hessian", h}};
        o.text = std::string("hessian: ") + (h ? "true" : "false") + "\n";
        o.code = h ? exit_ok : exit_math;
        return o;
    };

    sub("cm-moduli", "CM points of the two elliptic curves", {"MATRIX"});
    commands["cm-moduli"] = [&] {
        Outcome o;
        auto const [t1, t2] = cm_moduli(EvenBinaryForm::from_gram(read_gram(pos[0])));
        o.record = {{"tau1", t1.str()}, {"tau2", t2.str()}};
        o.text = "tau1 = " + t1.str() + "\ntau2 = " + t2.str() + "\n";
        return o;
    };

    sub("ns-check", "divisible classes against a curve configuration", {"CONFIG", "CANDIDATES"})
        ->add_flag("--rational-curves", rational_curves, "require -2 on the diagonal");
    commands["ns-check"] = [&] {
        Outcome o;
        CurveConfig const cfg = CurveConfig::parse(slurp(pos[0]), rational_curves);
        auto const rep = generators_report(cfg, parse_candidates(slurp(pos[1])));
        json classes = json::array();
        bool all_dual = true;
        for (auto const & c : rep.classes) {
            std::string v;
            for (auto const & x : c.vector)
                v += (v.empty() ? "" : " ") + to_string(x);
            json j{{"vector", v}, {"in_dual", c.in_dual}, {"order", to_string(c.order)},
                   {"failures", c.failures}};
            if (c.norm)
                j["norm"] = to_string(*c.norm);
            classes.push_back(j);
            all_dual = all_dual && c.in_dual;
            o.text += "(" + v + "): " + (c.in_dual ? "in dual, norm " + to_string(*c.norm) : "not in dual")
                      + ", order " + to_string(c.order) + "\n";
            for (auto const & f : c.failures)
                o.text += "  " + f + "\n";
        }
        o.record = {{"classes", classes},
                    {"subgroup_order", to_string(rep.subgroup_order)},
                    {"group_order", to_string(rep.group_order)},
                    {"generates", rep.generates}};
        o.text += "subgroup order " + to_string(rep.subgroup_order) + " of " + to_string(rep.group_order)
                  + (rep.generates ? ", generates\n" : ", does not generate\n");
        o.code = all_dual ? exit_ok : exit_math;
        return o;
    };

    CLI::App * repro = sub("repro", "reproduce the stored results", {"WHAT"});
    repro->get_option("WHAT")->check(CLI::IsMember({"table1", "section4", "section5"}));
    commands["repro"] = [&] {
        Outcome o;
        Catalog const cat = data_path.empty() ? Catalog::embedded() : Catalog::load(data_path);
        Report r;
        if (pos[0] == "table1")
            r = repro_table1(cat);
        else if (pos[0] == "section4")
            r = repro_section4(cat, bound, primes());
        else
            r = repro_section5(cat);
        o.record = report_json(r);
        o.text = report_text(r);
        o.code = r.passed() ? exit_ok : exit_math;
        return o;
    };

    std::string command;
    try {
        std::vector<std::string> rev(args.rbegin(), args.rend());
        app.parse(rev);
        command = app.get_subcommands().front()->get_name();
    } catch (CLI::CallForHelp const & e) {
        return app.exit(e, out, err);
    } catch (CLI::CallForAllHelp const & e) {
        return app.exit(e, out, err);
    } catch (CLI::ParseError const & e) {
        app.exit(e, out, err);
        return exit_input;
    }

    json base{{"command", command}, {"argv", args}};
    try {
        Outcome o = commands.at(command)();
        if (as_json) {
            json rec = base;
            rec.update(o.record);
            rec["status"] = o.code == exit_ok ? "pass" : "fail";
            out << rec.dump() << "\n";
        } else {
            out << o.text;
        }
        return o.code;
    } catch (error const & e) {
        std::string const kind = e.kind();
        int const code = kind == "NoMatch" || kind == "Ambiguous" ? exit_math : exit_input;
        if (as_json) {
            json rec = base;
            rec["status"] = "error";
            rec["error"] = {{"kind", kind}, {"message", e.what()}};
            out << rec.dump() << "\n";
        }
        err << kind << ": " << e.what() << "\n";
        return code;
    } catch (std::overflow_error const & e) {
        err << "overflow: " << e.what() << "\n";
        return exit_input;
    }
}

} // namespace k3lat
