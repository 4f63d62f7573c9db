#include <catch2/catch_amalgamated.hpp>

#include <cstdlib>
#include <fstream>
#include <sstream>

#include "iffcat/builtin.hpp"
#include "iffcat/kif/check.hpp"
#include "iffcat/kif/standard_model.hpp"
#include "iffcat/mutate.hpp"

using namespace iffcat;
using namespace iffcat::kif;

namespace {

std::string fixture_path(const std::string& name) {
    if (const char* dir = std::getenv("IFFCAT_FIXTURES"))
        return std::string(dir) + "/" + name;
    return "fixtures/" + name;
}

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    REQUIRE(in.good());
    std::stringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

KifModel tiny_model() {
    // two "people" with an age function and a one-member subclass
    KifModel m;
    m.symbols["T$person"] = mk_class({mk_atom("ann"), mk_atom("bob")});
    m.symbols["T$adult"] = mk_class({mk_atom("ann")});
    m.symbols["T$age"] =
        mk_func({{mk_atom("ann"), mk_atom("30")}, {mk_atom("bob"), mk_atom("7")}});
    m.add_to_universe(mk_atom("ann"));
    m.add_to_universe(mk_atom("bob"));
    m.add_to_universe(mk_atom("30"));
    m.add_to_universe(mk_atom("7"));
    m.finalize_universe();
    return m;
}

} // namespace

TEST_CASE("s-expression parser round-trips both corpus files") {
    for (const std::string name : {"corpus.kif", "corpus_gm.kif"}) {
        std::string text = slurp(fixture_path(name));
        auto forms = parse(text);
        REQUIRE_FALSE(forms.empty());
        // print and reparse: the second pass must give identical structure
        std::string printed;
        for (const auto& f : forms) printed += print(f) + "\n";
        auto again = parse(printed);
        REQUIRE(again.size() == forms.size());
        for (size_t i = 0; i < forms.size(); ++i) REQUIRE(print(again[i]) == print(forms[i]));
    }
}

TEST_CASE("parser reports syntax errors with positions") {
    REQUIRE_THROWS_AS(parse("(forall (?x"), SyntaxError);
    REQUIRE_THROWS_AS(parse(")"), SyntaxError);
    REQUIRE_THROWS_AS(parse("(a [b)]"), SyntaxError);
    auto ok = parse("; comment only\n(and true false)");
    REQUIRE(ok.size() == 1);
}

TEST_CASE("analysis rejects malformed quantifiers and unbound variables") {
    auto analyze1 = [](const std::string& s) { return analyze(parse(s).at(0)); };
    REQUIRE_THROWS_AS(analyze1("(forall ?x (P ?x))"), AnalysisError);
    REQUIRE_THROWS_AS(analyze1("(= ?x ?x)"), AnalysisError);
    REQUIRE_NOTHROW(analyze1("(forall (?x (T$person ?x)) (= ?x ?x))"));
    REQUIRE_NOTHROW(analyze1("(forall (?x) (= ?x ?x))"));
}

TEST_CASE("evaluation over a small finite model") {
    KifModel m = tiny_model();
    auto holds = [&](const std::string& s) { return evaluate(m, analyze(parse(s).at(0))); };

    REQUIRE(holds("(forall (?p (T$person ?p)) (exists (?a (T$person ?a)) (= ?a ?p)))"));
    REQUIRE(holds("(SET$subclass T$adult T$person)"));
    REQUIRE_FALSE(holds("(SET$subclass T$person T$adult)"));
    REQUIRE(holds("(= (T$age ann) 30)"));
    REQUIRE(holds("(exists-unique (?p (T$person ?p)) (= (T$age ?p) 30))"));
    REQUIRE_FALSE(holds("(exists-unique (?p (T$person ?p)) true)"));
    REQUIRE(holds("(= (the (?p (T$adult ?p)) true) ann)"));
    REQUIRE_THROWS_AS(holds("(the (?p (T$person ?p)) true)"), EvalError);
    REQUIRE_THROWS_AS(holds("(T$age missing)"), EvalError);
    // short-circuiting protects partial applications behind guards
    REQUIRE(holds("(forall (?x) (=> (T$person ?x) (exists (?y) (= (T$age ?x) ?y))))"));
}

TEST_CASE("forall failures carry a witness assignment") {
    KifModel m = tiny_model();
    Evaluator ev(m);
    auto sent = analyze(parse("(forall (?p (T$person ?p)) (T$adult ?p))").at(0));
    REQUIRE_FALSE(ev.eval_sentence(sent));
    REQUIRE(ev.witness() == "?p=bob");
}

TEST_CASE("declarations are skipped, sentences are classified") {
    KifModel m = tiny_model();
    auto rep = check_text(m, "(KIF$class T$person)\n"
                             "(= (T$age ann) 30)\n"
                             "(= (T$age ann) 31)\n"
                             "(T$age nobody)\n");
    REQUIRE(rep.sentences.size() == 4);
    REQUIRE(rep.sentences[0].verdict == Verdict::Skipped);
    REQUIRE(rep.sentences[1].verdict == Verdict::True);
    REQUIRE(rep.sentences[2].verdict == Verdict::False);
    REQUIRE(rep.sentences[3].verdict == Verdict::Error);
    REQUIRE_FALSE(rep.all_true());
}

TEST_CASE("the element-level corpus holds on the standard model") {
    auto model = build_standard_model(builtin::all_fixtures(), {});
    auto rep = check_file(model, fixture_path("corpus.kif"));
    for (const auto& s : rep.sentences) {
        INFO("line " << s.line << ": " << s.detail);
        REQUIRE(s.verdict != Verdict::False);
        REQUIRE(s.verdict != Verdict::Error);
    }
    REQUIRE(rep.count(Verdict::True) >= 15);
}

TEST_CASE("the graph-morphism corpus holds on the extended standard model") {
    StandardModelOptions opt;
    opt.graph_morphism_level = true;
    auto model = build_standard_model(builtin::all_fixtures(), opt);
    auto rep = check_file(model, fixture_path("corpus_gm.kif"));
    for (const auto& s : rep.sentences) {
        INFO("line " << s.line << ": " << s.detail);
        REQUIRE(s.verdict != Verdict::False);
        REQUIRE(s.verdict != Verdict::Error);
    }
    REQUIRE(rep.count(Verdict::True) >= 6);
}

TEST_CASE("corpus verdicts agree with a direct second evaluation pass") {
    // cross-check check_file against evaluating each analyzed sentence
    // straight through the Evaluator
    auto model = build_standard_model(builtin::all_fixtures(), {});
    std::string text = slurp(fixture_path("corpus.kif"));
    auto rep = check_text(model, text);
    auto forms = parse(text);
    REQUIRE(rep.sentences.size() == forms.size());
    for (size_t i = 0; i < forms.size(); ++i) {
        if (is_declaration(forms[i])) {
            REQUIRE(rep.sentences[i].verdict == Verdict::Skipped);
            continue;
        }
        bool direct = evaluate(model, analyze(forms[i]));
        REQUIRE((rep.sentences[i].verdict == Verdict::True) == direct);
    }
}

TEST_CASE("law-breaking mutations falsify the corpus with witnesses") {
    std::mt19937 rng(11);
    auto fixtures = builtin::all_fixtures();
    std::string text = slurp(fixture_path("corpus.kif"));
    for (int k = 0; k < 6; ++k) {
        size_t idx = k % fixtures.size();
        if (fixtures[idx].second.morphisms().size() < 2) continue;
        Mutation m = law_breaking_mutation(fixtures[idx].second, rng);
        auto mutated = fixtures;
        mutated[idx].second = FiniteCategory::unchecked(m.tables);
        auto model = build_standard_model(mutated, {});
        auto rep = check_text(model, text);
        INFO(fixtures[idx].first << ": " << m.description);
        REQUIRE(rep.count(Verdict::Error) == 0);
        REQUIRE(rep.count(Verdict::False) > 0);
        bool witnessed = false;
        for (const auto& s : rep.sentences)
            if (s.verdict == Verdict::False && !s.detail.empty()) witnessed = true;
        REQUIRE(witnessed);
    }
}

TEST_CASE("value ordering is a total order usable as map keys") {
    Value a = mk_atom("a");
    Value t = mk_tuple({mk_atom("a"), mk_atom("b")});
    Value c = mk_class({a});
    Value f = mk_func({{a, t}});
    std::vector<Value> vs = {f, c, t, a, mk_bool(true)};
    std::sort(vs.begin(), vs.end());
    for (size_t i = 0; i + 1 < vs.size(); ++i) {
        REQUIRE(vs[i] < vs[i + 1]);
        REQUIRE(vs[i] != vs[i + 1]);
    }
    REQUIRE(func_lookup(f, a) != nullptr);
    REQUIRE(*func_lookup(f, a) == t);
    REQUIRE(func_lookup(f, t) == nullptr);
    REQUIRE(class_contains(c, a));
    REQUIRE_FALSE(class_contains(c, t));
}
