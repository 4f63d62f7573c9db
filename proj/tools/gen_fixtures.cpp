// Regenerates the JSON fixture files under fixtures/ from the built-in
// definitions, so the on-disk corpus can never drift from the code.
#include <fstream>
#include <iostream>

#include "iffcat/builtin.hpp"
#include "iffcat/io.hpp"

using namespace iffcat;

namespace {

void write_json(const std::string& path, const io::json& j) {
    std::ofstream out(path);
    if (!out) throw Error("cannot write '" + path + "'");
    out << j.dump(2) << "\n";
    std::cout << "wrote " << path << "\n";
}

// Three classifications and the two span legs used by the classification
// pushout fixtures: A is a two-instance/two-type core, B and C extend it.
Classification cls_a() {
    Classification a;
    a.instances = {"a1", "a2"};
    a.types = {"s", "t"};
    a.incidence = {{"a1", "s"}, {"a2", "t"}};
    return a;
}

Classification cls_b() {
    Classification b;
    b.instances = {"b1", "b2"};
    b.types = {"u", "v", "w"};
    b.incidence = {{"b1", "u"}, {"b2", "v"}, {"b1", "w"}};
    return b;
}

Classification cls_c() {
    Classification c;
    c.instances = {"c1", "c2", "c3"};
    c.types = {"p", "q"};
    c.incidence = {{"c1", "p"}, {"c2", "q"}, {"c3", "p"}};
    return c;
}

Infomorphism info_f() { // A -> B
    Infomorphism f;
    f.source = cls_a();
    f.target = cls_b();
    f.type_map = {{"s", "u"}, {"t", "v"}};
    f.instance_map = {{"b1", "a1"}, {"b2", "a2"}};
    return validate_infomorphism(f);
}

Infomorphism info_g() { // A -> C
    Infomorphism g;
    g.source = cls_a();
    g.target = cls_c();
    g.type_map = {{"s", "p"}, {"t", "q"}};
    g.instance_map = {{"c1", "a1"}, {"c2", "a2"}, {"c3", "a1"}};
    return validate_infomorphism(g);
}

} // namespace

int main(int argc, char** argv) {
    std::string dir = argc > 1 ? argv[1] : "fixtures";
    try {
        std::map<std::string, std::string> files = {
            {"ONE", "one"}, {"ARROW", "arrow"}, {"SPAN3", "span3"},
            {"PO", "po"},   {"POD", "pod"},     {"PAR", "par"},
            {"M2", "m2"},   {"Z2", "z2"},       {"G2", "g2"}};
        for (const auto& [name, c] : builtin::all_fixtures())
            write_json(dir + "/" + files.at(name) + ".json",
                       io::category_tables_to_json(c.tables()));

        write_json(dir + "/cls_a.json", io::classification_to_json(cls_a()));
        write_json(dir + "/cls_b.json", io::classification_to_json(cls_b()));
        write_json(dir + "/cls_c.json", io::classification_to_json(cls_c()));

        auto info_json = [&](const Infomorphism& f, const std::string& src,
                             const std::string& tgt) {
            io::json j;
            j["source"] = src;
            j["target"] = tgt;
            j["typeMap"] = io::json::object();
            for (const auto& [k, v] : f.type_map) j["typeMap"][k] = v;
            j["instanceMap"] = io::json::object();
            for (const auto& [k, v] : f.instance_map) j["instanceMap"][k] = v;
            return j;
        };
        write_json(dir + "/info_f.json", info_json(info_f(), "cls_a.json", "cls_b.json"));
        write_json(dir + "/info_g.json", info_json(info_g(), "cls_a.json", "cls_c.json"));

        // a span-shaped diagram into PO selecting (a; ab, ac)
        {
            Diagram d = diagram_of_span(builtin::po_square(), {"a", "ab", "ac"});
            io::json j;
            j["shape"] = io::category_tables_to_json(d.shape.tables());
            j["target"] = "po.json";
            j["objectMap"] = io::json::object();
            for (const auto& [k, v] : d.functor.object_map) j["objectMap"][k] = v;
            j["morphismMap"] = io::json::object();
            for (const auto& [k, v] : d.functor.morphism_map) j["morphismMap"][k] = v;
            write_json(dir + "/diagram_po_span.json", j);
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
