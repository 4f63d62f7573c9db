// iffcat: batch CLI for the finite-category engine.
//
// Subcommands: check-category, opposite, morphisms, initial, pushout,
// colimit, check-finitely-cocomplete, kif-check, cls-pushout, corpus.
// Exit codes: 0 success, 1 validation/property failure, 2 usage error,
// 3 internal error.
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <random>

#include <CLI11.hpp>

#include "iffcat/builtin.hpp"
#include "iffcat/io.hpp"
#include "iffcat/kif/check.hpp"
#include "iffcat/mutate.hpp"

using namespace iffcat;
using io::json;

namespace {

constexpr const char* kSchema = "iffcat-report/1";

/// Resolve a fixture path: as given, else under IFFCAT_FIXTURES.
std::string resolve_path(const std::string& path) {
    namespace fs = std::filesystem;
    if (fs::exists(path)) return path;
    if (const char* dir = std::getenv("IFFCAT_FIXTURES")) {
        fs::path candidate = fs::path(dir) / path;
        if (fs::exists(candidate)) return candidate.string();
    }
    return path; // let the loader produce the error message
}

std::string fixtures_dir() {
    if (const char* dir = std::getenv("IFFCAT_FIXTURES")) return dir;
    return "fixtures";
}

struct Output {
    std::string format = "text"; // "text" or "json"
    json j;

    void finish(const std::string& command, bool ok) {
        j["schema"] = kSchema;
        j["command"] = command;
        j["ok"] = ok;
        if (format == "json") std::cout << j.dump(2) << "\n";
    }
};

void print_violations(Output& out, const std::vector<LawViolation>& vs) {
    out.j["violations"] = json::array();
    for (const auto& v : vs) {
        json jv;
        jv["law"] = law_tag_name(v.tag);
        jv["witness"] = v.witness;
        jv["detail"] = v.detail;
        out.j["violations"].push_back(jv);
        if (out.format == "text")
            std::cout << law_tag_name(v.tag) << " " << v.detail << "\n";
    }
}

int cmd_check_category(Output& out, const std::string& file) {
    auto raw = io::load_category_tables(resolve_path(file));
    auto vs = category_violations(raw);
    out.j["file"] = file;
    print_violations(out, vs);
    if (out.format == "text")
        std::cout << (vs.empty() ? "valid" : "invalid") << "\n";
    out.finish("check-category", vs.empty());
    return vs.empty() ? 0 : 1;
}

int cmd_opposite(Output& out, const std::string& file) {
    FiniteCategory c = io::load_category(resolve_path(file));
    FiniteCategory op = opposite_category(c);
    out.j["file"] = file;
    out.j["opposite"] = io::category_tables_to_json(op.tables());
    out.j["involution"] = (opposite_category(op) == c);
    if (out.format == "text")
        std::cout << io::category_tables_to_json(op.tables()).dump(2) << "\n";
    out.finish("opposite", true);
    return 0;
}

int cmd_morphisms(Output& out, const std::string& file) {
    FiniteCategory c = io::load_category(resolve_path(file));
    out.j["file"] = file;
    out.j["morphisms"] = json::array();
    for (const Id& m : c.morphisms()) {
        json jm;
        jm["id"] = m;
        jm["src"] = c.source_of(m);
        jm["tgt"] = c.target_of(m);
        jm["mono"] = is_monomorphism(c, m);
        jm["epi"] = is_epimorphism(c, m);
        jm["bimorphism"] = is_bimorphism(c, m);
        jm["iso"] = is_isomorphism(c, m);
        out.j["morphisms"].push_back(jm);
        if (out.format == "text")
            std::cout << m << ": " << c.source_of(m) << " -> " << c.target_of(m)
                      << "  mono=" << (jm["mono"].get<bool>() ? "yes" : "no")
                      << " epi=" << (jm["epi"].get<bool>() ? "yes" : "no")
                      << " bimorphism=" << (jm["bimorphism"].get<bool>() ? "yes" : "no")
                      << " iso=" << (jm["iso"].get<bool>() ? "yes" : "no") << "\n";
    }
    out.finish("morphisms", true);
    return 0;
}

int cmd_initial(Output& out, const std::string& file) {
    FiniteCategory c = io::load_category(resolve_path(file));
    auto initials = initial_objects(c);
    out.j["file"] = file;
    out.j["initial"] = json::array();
    for (const Id& i : initials) {
        json ji;
        ji["object"] = i;
        ji["counique"] = json::object();
        for (const Id& o : c.objects()) ji["counique"][o] = counique(c, i, o);
        out.j["initial"].push_back(ji);
        if (out.format == "text") std::cout << "initial: " << i << "\n";
    }
    if (initials.empty() && out.format == "text") std::cout << "no initial object\n";
    out.finish("initial", !initials.empty());
    return initials.empty() ? 1 : 0;
}

int cmd_pushout(Output& out, const std::string& file, const std::vector<std::string>& span) {
    FiniteCategory c = io::load_category(resolve_path(file));
    Span s{span[0], span[1], span[2]};
    if (!span_well_formed(c, s)) throw Error("ill-formed span (" + s.vertex + "; " + s.first +
                                             ", " + s.second + ")");
    out.j["file"] = file;
    out.j["span"] = {s.vertex, s.first, s.second};
    out.j["pushouts"] = json::array();
    bool found = false;
    for (const Cocone2& cc : enumerate_cocones2(c, s))
        if (is_pushout_cocone2(c, cc)) {
            found = true;
            json jp;
            jp["opvertex"] = cc.opvertex;
            jp["opfirst"] = cc.opfirst;
            jp["opsecond"] = cc.opsecond;
            out.j["pushouts"].push_back(jp);
            if (out.format == "text")
                std::cout << "pushout: opvertex=" << cc.opvertex << " opfirst=" << cc.opfirst
                          << " opsecond=" << cc.opsecond << "\n";
        }
    if (!found && out.format == "text") std::cout << "no pushout\n";
    out.finish("pushout", found);
    return found ? 0 : 1;
}

int cmd_colimit(Output& out, const std::string& file, const std::string& diagram_file) {
    FiniteCategory c = io::load_category(resolve_path(file));
    Diagram d = io::load_diagram(resolve_path(diagram_file));
    if (!(d.functor.target == c))
        throw Error("diagram target category differs from the supplied category");
    out.j["file"] = file;
    out.j["diagram"] = diagram_file;
    out.j["colimits"] = json::array();
    auto universals = universal_cocones(c, d);
    std::set<Id> seen;
    for (const Cocone& g : universals) {
        if (!seen.insert(g.apex).second) continue;
        json jc;
        jc["apex"] = g.apex;
        jc["components"] = json::object();
        for (const auto& [jobj, m] : g.components) jc["components"][jobj] = m;
        out.j["colimits"].push_back(jc);
        if (out.format == "text") std::cout << "colimit apex: " << g.apex << "\n";
    }
    auto iso_report = check_colimits_isomorphic(c, d);
    out.j["pairwise_isomorphic"] = iso_report.all_ok;
    bool ok = !seen.empty() && iso_report.all_ok;
    if (seen.empty() && out.format == "text") std::cout << "no colimit\n";
    out.finish("colimit", ok);
    return ok ? 0 : 1;
}

int cmd_check_fc(Output& out, const std::string& file) {
    FiniteCategory c = io::load_category(resolve_path(file));
    auto r = finite_cocompleteness_report(c);
    out.j["file"] = file;
    out.j["has_initial"] = r.has_initial;
    out.j["all_coequalizers"] = r.all_coequalizers;
    out.j["all_pushouts"] = r.all_pushouts;
    out.j["all_coproducts"] = r.all_coproducts;
    out.j["failing_witness"] = r.failing_witness;
    if (out.format == "text") {
        std::cout << "initial object: " << (r.has_initial ? "yes" : "no") << "\n"
                  << "all coequalizers: " << (r.all_coequalizers ? "yes" : "no") << "\n"
                  << "all pushouts: " << (r.all_pushouts ? "yes" : "no") << "\n"
                  << "all binary coproducts: " << (r.all_coproducts ? "yes" : "no") << "\n";
        if (!r.cocomplete()) std::cout << "witness: " << r.failing_witness << "\n";
        std::cout << (r.cocomplete() ? "finitely cocomplete" : "not finitely cocomplete") << "\n";
    }
    out.finish("check-finitely-cocomplete", r.cocomplete());
    return r.cocomplete() ? 0 : 1;
}

json report_to_json(const kif::CheckReport& rep) {
    json out = json::array();
    for (const auto& s : rep.sentences) {
        json js;
        js["line"] = s.line;
        js["verdict"] = kif::verdict_name(s.verdict);
        if (!s.detail.empty()) js["detail"] = s.detail;
        out.push_back(js);
    }
    return out;
}

void print_report_text(const kif::CheckReport& rep) {
    for (const auto& s : rep.sentences) {
        std::cout << "line " << s.line << ": " << kif::verdict_name(s.verdict);
        if (!s.detail.empty()) std::cout << "  [" << s.detail << "]";
        std::cout << "\n";
    }
    std::cout << "true=" << rep.count(kif::Verdict::True)
              << " false=" << rep.count(kif::Verdict::False)
              << " skipped=" << rep.count(kif::Verdict::Skipped)
              << " error=" << rep.count(kif::Verdict::Error) << "\n";
}

int cmd_kif_check(Output& out, const std::string& model_spec,
                  const std::string& axiom_file, bool gm) {
    kif::StandardModelOptions opt;
    opt.graph_morphism_level = gm;
    std::vector<std::pair<std::string, FiniteCategory>> cats;
    if (model_spec == "builtin") {
        cats = builtin::all_fixtures();
    } else {
        std::stringstream ss(model_spec);
        std::string item;
        while (std::getline(ss, item, ',')) {
            std::string path = resolve_path(item);
            cats.emplace_back(std::filesystem::path(item).stem().string(),
                              io::load_category(path));
        }
    }
    auto model = kif::build_standard_model(cats, opt);
    auto rep = kif::check_file(model, resolve_path(axiom_file));
    out.j["model"] = model_spec;
    out.j["axioms"] = axiom_file;
    out.j["sentences"] = report_to_json(rep);
    if (out.format == "text") print_report_text(rep);
    out.finish("kif-check", rep.all_true());
    return rep.all_true() ? 0 : 1;
}

int cmd_cls_pushout(Output& out, const std::string& left, const std::string& right) {
    Infomorphism f = io::load_infomorphism(resolve_path(left));
    Infomorphism g = io::load_infomorphism(resolve_path(right));
    ClassificationPushout p = pushout_classification(f, g);
    out.j["left"] = left;
    out.j["right"] = right;
    out.j["apex"] = io::classification_to_json(p.apex);
    out.j["inj1"] = io::infomorphism_to_json(p.inj1);
    out.j["inj2"] = io::infomorphism_to_json(p.inj2);
    bool commutes = compose_infomorphisms(f, p.inj1) == compose_infomorphisms(g, p.inj2);
    out.j["square_commutes"] = commutes;
    if (out.format == "text") {
        std::cout << "apex:\n" << io::classification_to_json(p.apex).dump(2) << "\n"
                  << "square commutes: " << (commutes ? "yes" : "no") << "\n";
    }
    out.finish("cls-pushout", commutes);
    return commutes ? 0 : 1;
}

int cmd_corpus(Output& out, bool gm, unsigned seed, int mutations) {
    kif::StandardModelOptions opt;
    opt.graph_morphism_level = gm;
    auto fixtures = builtin::all_fixtures();
    auto model = kif::build_standard_model(fixtures, opt);
    std::string dir = fixtures_dir();
    auto rep = kif::check_file(model, dir + "/corpus.kif");
    out.j["corpus"] = report_to_json(rep);
    bool ok = rep.all_true();
    if (out.format == "text") print_report_text(rep);
    if (gm) {
        auto rep_gm = kif::check_file(model, dir + "/corpus_gm.kif");
        out.j["corpus_gm"] = report_to_json(rep_gm);
        ok = ok && rep_gm.all_true();
        if (out.format == "text") print_report_text(rep_gm);
    }

    // seeded mutation runs: every law-breaking mutation must falsify at
    // least one corpus sentence (as opposed to merely erroring)
    if (mutations > 0) {
        std::mt19937 rng(seed);
        std::vector<size_t> mutable_idx;
        for (size_t i = 0; i < fixtures.size(); ++i)
            if (fixtures[i].second.morphisms().size() >= 2) mutable_idx.push_back(i);
        std::uniform_int_distribution<size_t> pick(0, mutable_idx.size() - 1);
        out.j["mutations"] = json::array();
        for (int k = 0; k < mutations; ++k) {
            size_t idx = mutable_idx[pick(rng)];
            Mutation m = law_breaking_mutation(fixtures[idx].second, rng);
            auto mutated = fixtures;
            mutated[idx].second = FiniteCategory::unchecked(m.tables);
            // element-level vocabulary only: mutation runs check corpus.kif
            auto mmodel = kif::build_standard_model(mutated, {});
            auto mrep = kif::check_file(mmodel, dir + "/corpus.kif");
            bool falsified = mrep.count(kif::Verdict::False) > 0;
            json jm;
            jm["fixture"] = mutated[idx].first;
            jm["mutation"] = m.description;
            jm["falsified"] = falsified;
            for (const auto& s : mrep.sentences)
                if (s.verdict == kif::Verdict::False) {
                    jm["sentence_line"] = s.line;
                    jm["witness"] = s.detail;
                    break;
                }
            out.j["mutations"].push_back(jm);
            ok = ok && falsified;
            if (out.format == "text")
                std::cout << "mutation " << k << " (" << mutated[idx].first << ", "
                          << m.description << "): "
                          << (falsified ? "falsified" : "NOT FALSIFIED") << "\n";
        }
    }
    out.finish("corpus", ok);
    return ok ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"finite-category engine"};
    app.require_subcommand(1);
    Output out;
    app.add_option("--format", out.format, "output format")
        ->check(CLI::IsMember({"text", "json"}));
    unsigned seed = 0;
    app.add_option("--seed", seed, "seed for randomized runs");

    std::string file, diagram_file, model_spec, axiom_file, left, right;
    std::vector<std::string> span;
    bool gm = false;
    int mutations = 0;

    auto* cc = app.add_subcommand("check-category", "validate category tables");
    cc->add_option("file", file)->required();
    auto* op = app.add_subcommand("opposite", "emit the opposite category");
    op->add_option("file", file)->required();
    auto* mo = app.add_subcommand("morphisms", "mono/epi/bimorphism/iso table");
    mo->add_option("file", file)->required();
    auto* in = app.add_subcommand("initial", "initial objects and co-unique morphisms");
    in->add_option("file", file)->required();
    auto* pu = app.add_subcommand("pushout", "pushout cocones of a span");
    pu->add_option("file", file)->required();
    pu->add_option("--span", span, "vertex first second")->expected(3)->required();
    auto* co = app.add_subcommand("colimit", "colimit of a diagram");
    co->add_option("file", file)->required();
    co->add_option("--diagram", diagram_file)->required();
    auto* fc = app.add_subcommand("check-finitely-cocomplete", "four-clause cocompleteness report");
    fc->add_option("file", file)->required();
    auto* kc = app.add_subcommand("kif-check", "evaluate an axiom file against a model");
    kc->add_option("--model", model_spec,
                   "'builtin' or comma-separated category fixture files")->required();
    kc->add_option("axioms", axiom_file)->required();
    kc->add_flag("--gm", gm, "include the graph-morphism-level vocabulary");
    auto* cp = app.add_subcommand("cls-pushout", "pushout of classifications");
    cp->add_option("--left", left)->required();
    cp->add_option("--right", right)->required();
    auto* cr = app.add_subcommand("corpus", "run the bundled corpus over bundled fixtures");
    cr->add_flag("--gm", gm, "also run the graph-morphism-level corpus");
    cr->add_option("--mutate", mutations, "number of seeded mutation runs");

    for (CLI::App* s : {cc, op, mo, in, pu, co, fc, kc, cp, cr}) s->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (cc->parsed()) return cmd_check_category(out, file);
        if (op->parsed()) return cmd_opposite(out, file);
        if (mo->parsed()) return cmd_morphisms(out, file);
        if (in->parsed()) return cmd_initial(out, file);
        if (pu->parsed()) return cmd_pushout(out, file, span);
        if (co->parsed()) return cmd_colimit(out, file, diagram_file);
        if (fc->parsed()) return cmd_check_fc(out, file);
        if (kc->parsed()) return cmd_kif_check(out, model_spec, axiom_file, gm);
        if (cp->parsed()) return cmd_cls_pushout(out, left, right);
        if (cr->parsed()) return cmd_corpus(out, gm, seed, mutations);
    } catch (const io::LoadError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const CategoryInvalid& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 3;
    }
    return 2;
}
