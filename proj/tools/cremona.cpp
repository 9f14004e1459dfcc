// Command-line front end: class parsing, subcommands, machine-readable
// reports, batch mode.  One structured JSON document per invocation (or per
// batch line); a plain table behind --format table.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "cremona/classify.hpp"
#include "cremona/cone.hpp"
#include "cremona/decompose.hpp"
#include "cremona/deform.hpp"
#include "cremona/enumerate.hpp"
#include "cremona/io.hpp"
#include "cremona/version.hpp"
#include "cremona/weyl.hpp"

using json = nlohmann::json;
using namespace cremona;

namespace {

json word_json(const WeylWord& w)
{
    // Simple-root indices; -1 marks the E_n reflection.
    json out = json::array();
    for (const auto& g : w)
        out.push_back(g.index);
    return out;
}

json sign_vector_json(const Class& omega)
{
    json out = json::object();
    for (const auto& [i, s] : sign_vector(omega))
        out["l" + std::to_string(i)] = s;
    return out;
}

json cone_report_json(const ConeReport& rep)
{
    return {{"is_reduced", rep.is_reduced},
            {"square", rat_str(rep.square)},
            {"c1_pairing", rat_str(rep.c1)},
            {"is_symplectic", rep.is_symplectic},
            {"is_c1_positive", rep.is_c1_positive},
            {"in_nrn", rep.in_nrn},
            {"failing_constraints", rep.failing_constraints}};
}

json diagram_json(const RootDiagram& d)
{
    json comps = json::array();
    for (const auto& c : d.components)
        comps.push_back({{"label", c.label()}, {"nodes", c.nodes}});
    json edges = json::array();
    for (const auto& [i, j] : d.edges)
        edges.push_back({i, j});
    return {{"nodes", d.nodes}, {"edges", edges}, {"components", comps}};
}

json type_json(const TypeLabel& t)
{
    json out = {{"kind", std::string(1, t.kind)},
                {"rank", t.rank},
                {"diagram", diagram_json(t.diagram)},
                {"notes", t.notes}};
    if (t.normal_form)
        out["normal_form"] = *t.normal_form;
    return out;
}

struct Flags {
    std::optional<int> n;
    std::optional<int> max_degree;
    std::optional<std::string> t_text;
    std::optional<int> m;

    Rat t() const
    {
        if (!t_text)
            throw std::invalid_argument("--t is required for this subcommand");
        Class wrapper = parse_class("(" + *t_text + "|0)");
        return wrapper.a;
    }
};

json run_single(const std::string& sub, const std::string& literal, const Flags& flags)
{
    json result;
    Class cls = parse_class(literal);

    if (sub == "reduce") {
        auto r = reduce(cls);
        result = {{"reduced", format_class(r.reduced)},
                  {"word", word_json(r.word)},
                  {"steps", r.steps},
                  {"status", r.status == ReduceStatus::done ? "done" : "not_reducible"},
                  {"is_reduced", is_reduced(r.reduced)}};
    } else if (sub == "classify") {
        TypeLabel t = form_type(cls);
        result = {{"type", type_json(t)},
                  {"sign_vector", sign_vector_json(cls)},
                  {"cone", cone_report_json(cone_report(cls))}};
    } else if (sub == "torelli") {
        TorelliAnswer ans = torelli(cls);
        result = {{"group", ans.group_name()},
                  {"type", type_json(ans.type)},
                  {"generation_note", ans.generation_note},
                  {"notes", ans.notes}};
        if (ans.group == TorelliAnswer::Group::pure_sphere_braid)
            result["braid_strands"] = ans.braid_strands;
        if (ans.base_case_n)
            result["base_case_n"] = *ans.base_case_n;
        if (ans.mapping_class_group_order)
            result["mapping_class_group_order"] = ans.mapping_class_group_order->str();
    } else if (sub == "decompose") {
        auto res = flags.max_degree ? decompose_c1_positive(cls, *flags.max_degree)
                                    : decompose_c1_positive(cls);
        result["feasible"] = !res.infeasible_at_bound();
        result["max_degree_tried"] = res.max_degree_tried;
        if (res.decomposition) {
            result["degree_bound_used"] = res.decomposition->degree_bound_used;
            json terms = json::array();
            for (const auto& [coef, e] : res.decomposition->terms)
                terms.push_back({{"coefficient", rat_str(coef)}, {"class", format_class_lattice(e)}});
            result["terms"] = terms;
        }
    } else if (sub == "path") {
        Class moved = flags.m ? minimal_path(cls, *flags.m, flags.t())
                              : a_extremal_path(cls, flags.t());
        result = {{"kind", flags.m ? "minimal" : "a_extremal"},
                  {"t", rat_str(flags.t())},
                  {"class", format_class(moved)},
                  {"sign_vector", sign_vector_json(moved)}};
        if (flags.m)
            result["m"] = *flags.m;
    } else if (sub == "blowdown") {
        auto chain = blowdown_reduce(cls);
        json steps = json::array();
        for (const auto& s : chain.steps)
            steps.push_back({{"n", s.n}, {"class", format_class(s.cls)}});
        result = {{"steps", steps}, {"halt_reason", chain.halt_reason}};
    } else {
        throw std::logic_error("unhandled subcommand " + sub);
    }
    return result;
}

void print_table(const json& doc, std::ostream& os, int indent = 0)
{
    std::string pad(indent, ' ');
    if (doc.is_object()) {
        for (const auto& [k, v] : doc.items()) {
            if (v.is_object() || v.is_array()) {
                os << pad << k << ":\n";
                print_table(v, os, indent + 2);
            } else {
                os << pad << k << ": " << (v.is_string() ? v.get<std::string>() : v.dump())
                   << "\n";
            }
        }
    } else if (doc.is_array()) {
        for (const auto& v : doc) {
            if (v.is_object() || v.is_array()) {
                os << pad << "-\n";
                print_table(v, os, indent + 2);
            } else {
                os << pad << "- " << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
            }
        }
    } else {
        os << pad << doc.dump() << "\n";
    }
}

void emit(const json& doc, const std::string& format)
{
    if (format == "table")
        print_table(doc, std::cout);
    else
        std::cout << doc.dump(2) << "\n";
}

json report_skeleton(const std::string& sub, const json& input, const Flags& flags)
{
    json doc = {{"subcommand", sub},
                {"input", input},
                {"warnings", json::array()},
                {"bounds", {{"max_degree", nullptr}}},
                {"version", kVersion}};
    if (flags.max_degree)
        doc["bounds"]["max_degree"] = *flags.max_degree;
    return doc;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"exact-arithmetic invariants of blown-up rational surfaces"};
    app.require_subcommand(1);

    std::string format = "json";
    app.add_option("--format", format, "json or table")
        ->check(CLI::IsMember({"json", "table"}));

    Flags flags;
    std::string literal, literal2, batch_file, enum_kind;
    int n_arg = 0;

    auto add_common = [&](CLI::App* cmd, bool wants_literal) {
        if (wants_literal)
            cmd->add_option("class", literal, "class literal, \"(nu|m1,...,mn)\" or \"a;b1,...,bn\"");
        cmd->add_option("--batch", batch_file, "file with one class literal per line");
        cmd->add_option("--max-degree", [&flags](const CLI::results_t& res) {
            flags.max_degree = std::stoi(res[0]);
            return true;
        }, "degree bound override");
    };

    auto* c_reduce = app.add_subcommand("reduce", "Cremona-reduce a class to the fundamental domain");
    add_common(c_reduce, true);
    auto* c_classify = app.add_subcommand("classify", "Lagrangian root system and ADE type");
    add_common(c_classify, true);
    auto* c_torelli = app.add_subcommand("torelli", "symplectic Torelli group of a c1-positive class");
    add_common(c_torelli, true);
    auto* c_decompose = app.add_subcommand("decompose", "positive combination of exceptional classes");
    add_common(c_decompose, true);
    auto* c_blowdown = app.add_subcommand("blowdown", "iterated minimal blow-down chain");
    add_common(c_blowdown, true);
    auto* c_path = app.add_subcommand("path", "deformation path (A-extremal, or minimal with --m)");
    add_common(c_path, true);
    c_path->add_option("--t", [&flags](const CLI::results_t& res) {
        flags.t_text = res[0];
        return true;
    }, "time parameter, a rational p/q in (0,1]")->required();
    c_path->add_option("--m", [&flags](const CLI::results_t& res) {
        flags.m = std::stoi(res[0]);
        return true;
    }, "size of the trailing block (selects the minimal path)");

    auto* c_vertices = app.add_subcommand("vertices", "vertices of the normalized c1-positive region");
    c_vertices->add_option("rank", n_arg, "rank (number of blow-ups)");
    c_vertices->add_option("--n", n_arg, "rank (number of blow-ups)");

    auto* c_enumerate = app.add_subcommand("enumerate", "bounded enumeration of classes");
    c_enumerate->add_option("kind", enum_kind, "exceptional or roots")
        ->check(CLI::IsMember({"exceptional", "roots", "root"}))
        ->required();
    c_enumerate->add_option("--n", n_arg, "rank (number of blow-ups)")->required();
    c_enumerate->add_option("--max-degree", [&flags](const CLI::results_t& res) {
        flags.max_degree = std::stoi(res[0]);
        return true;
    }, "degree bound (defaults to max(3, n-2))");

    auto* c_dset = app.add_subcommand("d-set", "obstruction roots D(E, omega)");
    c_dset->add_option("exceptional", literal, "the exceptional class E")->required();
    c_dset->add_option("omega", literal2, "the reduced symplectic class")->required();

    auto* c_compare = app.add_subcommand("compare", "simple-root chamber comparison of two classes");
    c_compare->add_option("tau0", literal, "first class")->required();
    c_compare->add_option("tau1", literal2, "second class")->required();

    for (CLI::App* sc : app.get_subcommands([](const CLI::App*) { return true; }))
        sc->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    const std::string sub = app.get_subcommands()[0]->get_name();

    try {
        if (sub == "vertices") {
            if (n_arg <= 0)
                throw std::invalid_argument("vertices: a positive rank is required");
            auto vl = nrn_vertices(n_arg);
            json doc = report_skeleton(sub, n_arg, flags);
            doc["n"] = n_arg;
            json verts = json::array();
            for (const auto& v : vl.vertices)
                verts.push_back({{"class", format_class(v.cls)},
                                 {"tag", v.tag.label()},
                                 {"included", v.included}});
            doc["result"] = {{"vertex_count", vl.vertices.size()}, {"vertices", verts}};
            emit(doc, format);
            return 0;
        }
        if (sub == "enumerate") {
            int bound = flags.max_degree ? *flags.max_degree : default_max_degree(n_arg);
            auto classes = enum_kind == "exceptional" ? enumerate_exceptional(n_arg, bound)
                                                      : enumerate_roots(n_arg, bound);
            Flags shown = flags;
            shown.max_degree = bound;
            json doc = report_skeleton(sub, enum_kind, shown);
            doc["n"] = n_arg;
            json list = json::array();
            for (const auto& c : classes)
                list.push_back(format_class_lattice(c));
            doc["result"] = {{"kind", enum_kind}, {"count", classes.size()}, {"classes", list}};
            emit(doc, format);
            return 0;
        }
        if (sub == "d-set") {
            Class e = parse_class(literal);
            Class omega = parse_class(literal2);
            json doc = report_skeleton(sub, json::array({literal, literal2}), flags);
            doc["n"] = e.n();
            auto ds = d_set(e, omega);
            json list = json::array();
            for (const auto& d : ds)
                list.push_back(format_class_lattice(d));
            doc["result"] = {{"count", ds.size()}, {"roots", list}};
            emit(doc, format);
            return 0;
        }
        if (sub == "compare") {
            Class t0 = parse_class(literal);
            Class t1 = parse_class(literal2);
            json doc = report_skeleton(sub, json::array({literal, literal2}), flags);
            doc["n"] = t0.n();
            auto rel = chamber_compare(t0, t1);
            doc["result"] = {{"forward_surjection", rel.forward_surjection},
                             {"backward_surjection", rel.backward_surjection},
                             {"invariant", rel.invariant}};
            emit(doc, format);
            return 0;
        }

        // Single-literal subcommands, optionally in batch mode.
        if (!batch_file.empty()) {
            std::ifstream in(batch_file);
            if (!in)
                throw std::invalid_argument("cannot open batch file " + batch_file);
            std::string line;
            int status = 0;
            while (std::getline(in, line)) {
                if (line.find_first_not_of(" \t\r") == std::string::npos)
                    continue;
                json doc = report_skeleton(sub, line, flags);
                try {
                    doc["n"] = parse_class(line).n();
                    doc["result"] = run_single(sub, line, flags);
                } catch (const std::exception& e) {
                    doc["error"] = e.what();
                    status = 1;
                }
                std::cout << doc.dump() << "\n";
            }
            return status;
        }

        if (literal.empty())
            throw std::invalid_argument(sub + ": a class literal is required");
        json doc = report_skeleton(sub, literal, flags);
        doc["n"] = parse_class(literal).n();
        doc["result"] = run_single(sub, literal, flags);
        emit(doc, format);
        return 0;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
