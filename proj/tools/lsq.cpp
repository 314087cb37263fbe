// lsq: command-line front end for squares of monomial ideals.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "lsq/betti.hpp"
#include "lsq/complex.hpp"
#include "lsq/divrel.hpp"
#include "lsq/extremal.hpp"
#include "lsq/io.hpp"
#include "lsq/morse.hpp"
#include "lsq/suites.hpp"

namespace {

using namespace lsq;

void emit(const std::string& text, const std::string& out_path)
{
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path);
    if (!out) throw InputError("cannot write " + out_path);
    out << text;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

DivSet parse_relations(const std::vector<std::string>& rels)
{
    DivSet d;
    for (const auto& r : rels) d.push_back(parse_relation(r));
    return d;
}

struct Options {
    std::string out;
    // extremal / relations
    unsigned q = 0;
    unsigned s = 0;
    unsigned power = 1;
    std::vector<std::string> rels;
    std::string ideal_path;
    bool list_all = false;
    bool square = false;
    // complex
    std::string type = "l2";
    bool fvector = false;
    bool list_faces = false;
    // morse
    std::string what = "cells";
    bool cross_check = false;
    // betti
    std::string field = "gf2";
    std::string format = "json";
    bool graded = false;
    bool minimalize = false;
    // verify
    std::string suite;
    unsigned qmax = 0;
    std::uint64_t seed = 0;
    unsigned trials = 100;
};

MonomialIdeal load_or_build(const Options& o)
{
    if (!o.ideal_path.empty()) {
        auto ideal = read_ideal(o.ideal_path);
        return o.square ? ideal.square() : ideal;
    }
    if (o.q == 0) throw InputError("give --ideal FILE or --q Q [--rel b:B ...] [--power R]");
    return power_generators(o.q, parse_relations(o.rels), o.power);
}

int run_extremal(const Options& o)
{
    emit(dump(to_json(power_generators(o.q, parse_relations(o.rels), o.power))), o.out);
    return 0;
}

int run_relations(const Options& o)
{
    auto ideal = load_or_build(o);
    auto rep = all_relations(ideal, o.list_all ? ListAll::yes : ListAll::no);
    json j = document();
    j["generators"] = ideal.size();
    if (o.list_all) j["all"] = to_json(rep.all);
    j["minimal"] = to_json(rep.minimal);
    j["trivial_count"] = rep.trivial_count;
    bool ok = true;
    // E_{q,D}^2 with D = {(1, {2..s})}: compare with the predicted minimal relations
    auto d = parse_relations(o.rels);
    if (o.ideal_path.empty() && o.power == 2 && d.size() == 1 && d[0].b == 1 && d[0].B.size() >= 2 &&
        d[0].B == IndexSet::range(2, d[0].B.max()) && o.q <= 5) {
        auto audit = minimality_audit(o.q, d[0].B.max());
        std::vector<DivRel> predicted;
        for (const auto& p : audit.predicted) predicted.push_back(p.rel);
        j["predicted"] = to_json(predicted);
        auto bad = audit.missing;
        bad.insert(bad.end(), audit.unexpected.begin(), audit.unexpected.end());
        j["counterexamples"] = to_json(bad);
        ok = bad.empty();
    }
    emit(dump(j), o.out);
    return ok ? 0 : 1;
}

int run_complex(const Options& o)
{
    SimplicialComplex c;
    if (o.type == "taylor") c = taylor(o.q);
    else if (o.type == "l2") c = l2(o.q);
    else throw InputError("--type must be taylor or l2");
    json j = document();
    j["type"] = o.type;
    j["q"] = o.q;
    j["facets"] = faces_json(c, c.facets());
    if (o.fvector || !o.list_faces) j["fvector"] = f_vector(c);
    if (o.list_faces) j["faces"] = faces_json(c, faces(c));
    emit(dump(j), o.out);
    return 0;
}

std::string order_dot(const MorseComplex& mc, const SimplicialComplex& c)
{
    std::ostringstream out;
    out << "digraph cell_order {\n  rankdir=BT;\n";
    for (std::size_t d = 0; d < mc.cells.size(); ++d) {
        for (auto f : mc.cells[d]) out << "  \"" << face_label(c, f) << "\" [dim=" << d << "];\n";
    }
    for (const auto& [lo, hi] : mc.order) {
        out << "  \"" << face_label(c, lo) << "\" -> \"" << face_label(c, hi) << "\";\n";
    }
    out << "}\n";
    return out.str();
}

int run_morse(const Options& o)
{
    auto c = l2(o.q);
    if (o.what == "matching") {
        auto m = matching_L2(o.q, o.s);
        json j = document();
        j["q"] = o.q;
        j["s"] = o.s;
        j["N"] = json::array();
        for (std::size_t k = 0; k < m.spec.order.size(); ++k) {
            j["N"].push_back({{"face", face_json(c, m.spec.order[k])},
                              {"type", static_cast<int>(m.types[k])},
                              {"omega", vertex_json(c.vertices()[m.spec.omega[k]])}});
        }
        j["edges"] = json::array();
        for (const auto& e : m.matching.edges())
            j["edges"].push_back({{"upper", face_json(c, e.upper)}, {"lower", face_json(c, e.lower)}});
        j["acyclic"] = is_acyclic(m.cells, m.matching);
        emit(dump(j), o.out);
        return 0;
    }
    const bool need_order = o.what == "order" || o.what == "dot";
    if (!need_order && o.what != "cells") throw InputError("--emit must be cells, matching, order or dot");
    auto mc = morse_complex(o.q, o.s, o.cross_check ? CrossCheck::on : CrossCheck::off, need_order);
    if (o.what == "dot") {
        emit(order_dot(mc, c), o.out);
        return 0;
    }
    json j = document();
    j["q"] = o.q;
    j["s"] = o.s;
    j["counts"] = mc.counts();
    if (o.what == "cells") {
        j["cells"] = json::array();
        for (const auto& layer : mc.cells) j["cells"].push_back(faces_json(c, layer));
    } else {
        j["order"] = json::array();
        for (const auto& [lo, hi] : mc.order) j["order"].push_back({face_json(c, lo), face_json(c, hi)});
    }
    emit(dump(j), o.out);
    return 0;
}

int run_betti(const Options& o)
{
    Field field;
    if (o.field == "gf2") field = Field::gf2;
    else if (o.field == "rat") field = Field::rational;
    else throw InputError("--field must be gf2 or rat");
    auto ideal = load_or_build(o);
    if (o.minimalize) ideal = ideal.minimalize();
    auto table = graded_betti(ideal, field);
    if (o.format == "csv") {
        emit(betti_csv(table, o.graded), o.out);
        return 0;
    }
    if (o.format != "json") throw InputError("--format must be json or csv");
    auto j = to_json(table);
    if (!o.graded) j.erase("graded");
    emit(dump(j), o.out);
    return 0;
}

int run_pd(const Options& o)
{
    auto [pd1, pd2] = pd_formula(o.q, o.s);
    json j = document();
    j["q"] = o.q;
    j["s"] = o.s;
    j["pd_I"] = pd1;
    j["pd_I2"] = pd2;
    emit(dump(j), o.out);
    return 0;
}

std::vector<SuiteResult> run_suites(const std::vector<std::string>& names, const Options& o)
{
    std::vector<SuiteResult> out;
    for (const auto& name : names) {
        if (name == "table1") out.push_back(suite_table1());
        else if (name == "examples") out.push_back(suite_examples());
        else if (name == "pd") out.push_back(suite_pd(o.qmax ? o.qmax : 6));
        else if (name == "characterization") out.push_back(suite_characterization(o.qmax ? o.qmax : 5));
        else if (name == "random") out.push_back(suite_random(o.seed, o.trials));
        else throw InputError("unknown suite '" + name + "'");
    }
    return out;
}

int print_suites(const std::vector<SuiteResult>& results, const Options& o, const std::string& heading)
{
    bool ok = true;
    for (const auto& r : results) ok = ok && r.passed();
    if (o.format == "json") {
        json j = document();
        j["passed"] = ok;
        j["suites"] = json::array();
        for (const auto& r : results) j["suites"].push_back(r.to_json());
        emit(dump(j), o.out);
    } else {
        std::string text = heading;
        for (const auto& r : results) {
            text += "\n[" + r.suite + "] " + (r.passed() ? "PASS" : "FAIL") + "\n" + r.text();
            if (r.suite == "table1") text += "\n" + table1_csv();
        }
        text += std::string("\noverall: ") + (ok ? "PASS" : "FAIL") + "\n";
        emit(text, o.out);
    }
    return ok ? 0 : 1;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Squares of monomial ideals: extremal ideals, divisibility relations, Morse matchings, Betti numbers"};
    app.require_subcommand(1);
    Options o;

    auto* ext = app.add_subcommand("extremal", "generators of E_{q,D}^r as an ideal file");
    ext->add_option("--q", o.q, "number of generators")->required()->check(CLI::Range(1u, kMaxExtremalQ));
    ext->add_option("--rel", o.rels, "relation b:i,j,... (repeatable)");
    ext->add_option("--power", o.power, "power r")->check(CLI::PositiveNumber);
    ext->add_option("--out", o.out, "output file");

    auto* rel = app.add_subcommand("relations", "minimal divisibility relations by brute force");
    rel->add_option("--ideal", o.ideal_path, "ideal file")->check(CLI::ExistingFile);
    rel->add_flag("--square", o.square, "use the square of the ideal file");
    rel->add_option("--q", o.q, "build E_{q,D}^r instead of reading a file");
    rel->add_option("--rel", o.rels, "relation b:i,j,... (repeatable)");
    rel->add_option("--power", o.power, "power r");
    rel->add_flag("--all", o.list_all, "also list every non-trivial relation");
    rel->add_option("--out", o.out, "output file");

    auto* cx = app.add_subcommand("complex", "Taylor simplex or L^2_q");
    cx->add_option("--type", o.type, "taylor or l2")->check(CLI::IsMember({"taylor", "l2"}));
    cx->add_option("--q", o.q, "q")->required()->check(CLI::PositiveNumber);
    cx->add_flag("--fvector", o.fvector, "emit the f-vector");
    cx->add_flag("--faces", o.list_faces, "emit every face");
    cx->add_option("--out", o.out, "output file");

    auto* mo = app.add_subcommand("morse", "the matching M_{q,delta} on L^2_q");
    mo->add_option("--q", o.q, "q")->required();
    mo->add_option("--s", o.s, "delta = (1, {2..s})")->required();
    mo->add_option("--emit", o.what, "cells, matching, order or dot")
        ->check(CLI::IsMember({"cells", "matching", "order", "dot"}));
    mo->add_flag("--cross-check", o.cross_check, "check the cell order against gradient paths");
    mo->add_option("--out", o.out, "output file");

    auto* be = app.add_subcommand("betti", "Betti numbers from lcm-lattice homology");
    be->add_option("--ideal", o.ideal_path, "ideal file")->check(CLI::ExistingFile);
    be->add_flag("--square", o.square, "use the square of the ideal file");
    be->add_flag("--minimalize", o.minimalize, "drop redundant generators first");
    be->add_option("--q", o.q, "build E_{q,D}^r instead of reading a file");
    be->add_option("--rel", o.rels, "relation b:i,j,... (repeatable)");
    be->add_option("--power", o.power, "power r");
    be->add_option("--field", o.field, "gf2 or rat")->check(CLI::IsMember({"gf2", "rat"}));
    be->add_flag("--graded", o.graded, "list graded entries");
    be->add_option("--format", o.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
    be->add_option("--out", o.out, "output file");

    auto* pd = app.add_subcommand("pd", "projective dimension formulas");
    pd->add_option("--q", o.q, "q")->required();
    pd->add_option("--s", o.s, "s")->required();
    pd->add_option("--out", o.out, "output file");

    auto* ve = app.add_subcommand("verify", "run a verification suite");
    ve->add_option("--suite", o.suite, "table1, examples, pd, characterization or random")
        ->required()
        ->check(CLI::IsMember({"table1", "examples", "pd", "characterization", "random"}));
    ve->add_option("--qmax", o.qmax, "largest q for the pd and characterization sweeps");
    ve->add_option("--seed", o.seed, "seed for randomized suites");
    ve->add_option("--trials", o.trials, "number of random ideals");
    ve->add_option("--format", o.format, "text or json")->check(CLI::IsMember({"text", "json"}));
    ve->add_option("--out", o.out, "output file");

    auto* rep = app.add_subcommand("report", "every suite in one document");
    rep->add_option("--seed", o.seed, "seed for randomized suites");
    rep->add_option("--trials", o.trials, "number of random ideals");
    rep->add_option("--format", o.format, "text or json")->check(CLI::IsMember({"text", "json"}));
    rep->add_option("--out", o.out, "output file");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*ext) return run_extremal(o);
        if (*rel) return run_relations(o);
        if (*cx) return run_complex(o);
        if (*mo) return run_morse(o);
        if (*be) return run_betti(o);
        if (*pd) return run_pd(o);
        if (*ve) {
            if (o.format == "json" && ve->count("--format") == 0) o.format = "text";
            return print_suites(run_suites({o.suite}, o), o, "");
        }
        if (*rep) {
            if (rep->count("--format") == 0) o.format = "text";
            return print_suites(run_suites({"table1", "examples", "pd", "characterization", "random"}, o), o,
                                "lsq verification report\n");
        }
    } catch (const CapacityError& e) {
        std::cerr << "capacity: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
