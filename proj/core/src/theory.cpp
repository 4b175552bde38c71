#include "ogrw/theory.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "json.hpp"

#include "ogrw/error.hpp"

namespace ogrw {

using nlohmann::json;

RewriteSystem Theory::system(const std::string& name) const {
    auto it = system_specs.find(name);
    if (it == system_specs.end())
        throw Error(ErrorCode::ValidationError, name, "no such rewrite system");
    RewriteSystem sys;
    for (const auto& entry : it->second) {
        bool reversed = !entry.empty() && entry.front() == '~';
        std::string rule_name = reversed ? entry.substr(1) : entry;
        auto rit = rules.find(rule_name);
        if (rit == rules.end())
            throw Error(ErrorCode::ValidationError, entry, "system names an unknown rule");
        sys.emplace(entry, reversed ? reverse_rule(rit->second) : rit->second);
    }
    return sys;
}

bool Theory::operator==(const Theory& other) const {
    bool sigs_equal = (sig == other.sig) || (sig && other.sig && *sig == *other.sig);
    return sigs_equal && graphs == other.graphs && rules == other.rules &&
           system_specs == other.system_specs && valuations == other.valuations;
}

namespace {

[[noreturn]] void parse_fail(const std::string& where, const std::string& what) {
    throw Error(ErrorCode::ParseError, where, what);
}

void expect_keys(const json& obj, const std::string& where, const std::set<std::string>& allowed) {
    if (!obj.is_object()) parse_fail(where, "expected an object");
    for (const auto& [key, value] : obj.items())
        if (!allowed.count(key)) parse_fail(where, "unknown field '" + key + "'");
}

std::vector<std::string> parse_string_array(const json& arr, const std::string& where) {
    if (!arr.is_array()) parse_fail(where, "expected an array of strings");
    std::vector<std::string> out;
    for (const auto& item : arr) {
        if (!item.is_string()) parse_fail(where, "expected an array of strings");
        out.push_back(item.get<std::string>());
    }
    return out;
}

OpenGraph parse_graph(const json& jg, const std::string& where, const SignaturePtr& sig) {
    expect_keys(jg, where, {"points", "edges", "inputs", "outputs"});
    OpenGraph g(sig);
    if (jg.contains("points")) {
        if (!jg["points"].is_object()) parse_fail(where + ".points", "expected an object");
        for (const auto& [id, jp] : jg["points"].items()) {
            expect_keys(jp, where + ".points." + id, {"gen", "type"});
            if (jp.contains("gen") == jp.contains("type"))
                parse_fail(where + ".points." + id, "need exactly one of 'gen' or 'type'");
            if (jp.contains("gen"))
                g.add_vertex(id, jp["gen"].get<std::string>());
            else
                g.add_edge_point(id, jp["type"].get<std::string>());
        }
    }
    if (jg.contains("edges")) {
        if (!jg["edges"].is_object()) parse_fail(where + ".edges", "expected an object");
        for (const auto& [id, je] : jg["edges"].items()) {
            const std::string ewhere = where + ".edges." + id;
            expect_keys(je, ewhere, {"src", "tgt", "type", "src_port", "tgt_port"});
            for (const char* req : {"src", "tgt", "type"})
                if (!je.contains(req) || !je[req].is_string())
                    parse_fail(ewhere, std::string("missing string field '") + req + "'");
            std::optional<int> sp, tp;
            if (je.contains("src_port")) {
                if (!je["src_port"].is_number_integer())
                    parse_fail(ewhere, "src_port must be an integer");
                sp = je["src_port"].get<int>();
            }
            if (je.contains("tgt_port")) {
                if (!je["tgt_port"].is_number_integer())
                    parse_fail(ewhere, "tgt_port must be an integer");
                tp = je["tgt_port"].get<int>();
            }
            try {
                g.add_edge(id, je["src"].get<std::string>(), je["tgt"].get<std::string>(),
                           je["type"].get<std::string>(), sp, tp);
            } catch (const Error& e) {
                throw Error(ErrorCode::ValidationError, ewhere, e.what());
            }
        }
    }
    if (jg.contains("inputs") != jg.contains("outputs"))
        parse_fail(where, "'inputs' and 'outputs' must be given together");
    if (jg.contains("inputs"))
        g.set_boundary_order(parse_string_array(jg["inputs"], where + ".inputs"),
                             parse_string_array(jg["outputs"], where + ".outputs"));
    try {
        validate_graph(g);
    } catch (const Error& e) {
        throw Error(ErrorCode::ValidationError, where, e.what());
    }
    return g;
}

json graph_to_json(const OpenGraph& g) {
    json jg = json::object();
    json points = json::object();
    for (const auto& [id, p] : g.points()) {
        points[id] = p.is_vertex() ? json{{"gen", p.label}} : json{{"type", p.label}};
    }
    jg["points"] = std::move(points);
    json edges = json::object();
    for (const auto& [id, e] : g.edges()) {
        json je{{"src", e.src}, {"tgt", e.tgt}, {"type", e.type}};
        if (e.src_port) je["src_port"] = *e.src_port;
        if (e.tgt_port) je["tgt_port"] = *e.tgt_port;
        edges[id] = std::move(je);
    }
    jg["edges"] = std::move(edges);
    if (g.input_order()) {
        jg["inputs"] = *g.input_order();
        jg["outputs"] = *g.output_order();
    }
    return jg;
}

std::vector<std::pair<std::string, std::string>> parse_pairs(const json& arr,
                                                             const std::string& where) {
    if (!arr.is_array()) parse_fail(where, "expected an array of [lhs, rhs] pairs");
    std::vector<std::pair<std::string, std::string>> out;
    for (const auto& item : arr) {
        if (!item.is_array() || item.size() != 2 || !item[0].is_string() || !item[1].is_string())
            parse_fail(where, "expected an array of [lhs, rhs] pairs");
        out.emplace_back(item[0].get<std::string>(), item[1].get<std::string>());
    }
    return out;
}

std::pair<int, int> line_column(const std::string& text, std::size_t byte) {
    int line = 1, col = 1;
    for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
        if (text[i] == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
    }
    return {line, col};
}

} // namespace

namespace {
Theory parse_theory_doc(const json& doc);
}

Theory parse_theory(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        auto [line, col] = line_column(text, e.byte > 0 ? e.byte - 1 : 0);
        parse_fail("line " + std::to_string(line) + ", column " + std::to_string(col), e.what());
    }
    try {
        return parse_theory_doc(doc);
    } catch (const json::exception& e) {
        // a field of the wrong JSON type slipped past the explicit checks
        parse_fail("$", e.what());
    }
}

namespace {

Theory parse_theory_doc(const json& doc) {
    expect_keys(doc, "$", {"objects", "generators", "graphs", "rules", "systems", "valuations"});
    if (!doc.contains("objects")) parse_fail("$", "missing 'objects'");

    Theory t;
    std::set<std::string> objects;
    for (const auto& name : parse_string_array(doc["objects"], "objects")) {
        if (!objects.insert(name).second) parse_fail("objects", "duplicate object '" + name + "'");
    }
    std::map<std::string, GeneratorType> generators;
    if (doc.contains("generators")) {
        if (!doc["generators"].is_object()) parse_fail("generators", "expected an object");
        for (const auto& [name, jgen] : doc["generators"].items()) {
            expect_keys(jgen, "generators." + name, {"dom", "cod"});
            GeneratorType gt;
            if (jgen.contains("dom"))
                gt.dom = parse_string_array(jgen["dom"], "generators." + name + ".dom");
            if (jgen.contains("cod"))
                gt.cod = parse_string_array(jgen["cod"], "generators." + name + ".cod");
            generators.emplace(name, std::move(gt));
        }
    }
    try {
        t.sig = make_signature(std::move(objects), std::move(generators));
    } catch (const Error& e) {
        throw Error(ErrorCode::ValidationError, "generators", e.what());
    }

    if (doc.contains("graphs")) {
        if (!doc["graphs"].is_object()) parse_fail("graphs", "expected an object");
        for (const auto& [name, jg] : doc["graphs"].items())
            t.graphs.emplace(name, parse_graph(jg, "graphs." + name, t.sig));
    }

    if (doc.contains("rules")) {
        if (!doc["rules"].is_object()) parse_fail("rules", "expected an object");
        for (const auto& [name, jr] : doc["rules"].items()) {
            const std::string where = "rules." + name;
            expect_keys(jr, where, {"lhs", "rhs", "input_map", "output_map"});
            auto side = [&](const char* key) -> OpenGraph {
                if (!jr.contains(key)) parse_fail(where, std::string("missing '") + key + "'");
                const json& js = jr[key];
                if (js.is_string()) {
                    auto it = t.graphs.find(js.get<std::string>());
                    if (it == t.graphs.end())
                        throw Error(ErrorCode::ValidationError, where,
                                    "unknown graph '" + js.get<std::string>() + "'");
                    OpenGraph g = it->second;
                    g.clear_boundary_order();
                    return g;
                }
                OpenGraph g = parse_graph(js, where + "." + key, t.sig);
                g.clear_boundary_order();
                return g;
            };
            std::vector<std::pair<std::string, std::string>> in_map, out_map;
            if (jr.contains("input_map")) in_map = parse_pairs(jr["input_map"], where + ".input_map");
            if (jr.contains("output_map"))
                out_map = parse_pairs(jr["output_map"], where + ".output_map");
            try {
                t.rules.emplace(name, make_rule(side("lhs"), side("rhs"), in_map, out_map));
            } catch (const Error& e) {
                if (e.code() == ErrorCode::ValidationError || e.code() == ErrorCode::ParseError)
                    throw;
                throw Error(ErrorCode::ValidationError, where, e.what());
            }
        }
    }

    if (doc.contains("systems")) {
        if (!doc["systems"].is_object()) parse_fail("systems", "expected an object");
        for (const auto& [name, jsys] : doc["systems"].items()) {
            auto entries = parse_string_array(jsys, "systems." + name);
            std::set<std::string> seen;
            for (const auto& entry : entries) {
                std::string rule_name =
                    (!entry.empty() && entry.front() == '~') ? entry.substr(1) : entry;
                if (!t.rules.count(rule_name))
                    throw Error(ErrorCode::ValidationError, "systems." + name,
                                "unknown rule '" + rule_name + "'");
                if (!seen.insert(entry).second)
                    throw Error(ErrorCode::ValidationError, "systems." + name,
                                "duplicate entry '" + entry + "'");
            }
            t.system_specs.emplace(name, std::move(entries));
        }
    }

    if (doc.contains("valuations")) {
        if (!doc["valuations"].is_object()) parse_fail("valuations", "expected an object");
        for (const auto& [name, jv] : doc["valuations"].items()) {
            const std::string where = "valuations." + name;
            expect_keys(jv, where, {"dims", "tensors"});
            Valuation v;
            if (jv.contains("dims")) {
                if (!jv["dims"].is_object()) parse_fail(where + ".dims", "expected an object");
                for (const auto& [obj, jd] : jv["dims"].items()) {
                    if (!jd.is_number_integer()) parse_fail(where + ".dims." + obj, "expected an integer");
                    v.dims[obj] = jd.get<int>();
                }
            }
            if (jv.contains("tensors")) {
                if (!jv["tensors"].is_object()) parse_fail(where + ".tensors", "expected an object");
                for (const auto& [gen, jt] : jv["tensors"].items()) {
                    if (!jt.is_array()) parse_fail(where + ".tensors." + gen, "expected an array");
                    Tensor tensor;
                    if (!t.sig->has_generator(gen))
                        throw Error(ErrorCode::ValidationError, where + ".tensors." + gen,
                                    "unknown generator");
                    const GeneratorType& gt = t.sig->generator(gen);
                    for (const auto& o : gt.dom) tensor.shape.emplace_back(o, v.dims.count(o) ? v.dims.at(o) : 0);
                    for (const auto& o : gt.cod) tensor.shape.emplace_back(o, v.dims.count(o) ? v.dims.at(o) : 0);
                    for (const auto& entry : jt) {
                        if (!entry.is_number_integer())
                            parse_fail(where + ".tensors." + gen, "expected integer entries");
                        tensor.entries.push_back(entry.get<std::int64_t>());
                    }
                    v.tensors.emplace(gen, std::move(tensor));
                }
            }
            try {
                validate_valuation(*t.sig, v);
            } catch (const Error& e) {
                throw Error(ErrorCode::ValidationError, where, e.what());
            }
            t.valuations.emplace(name, std::move(v));
        }
    }
    return t;
}

} // namespace

Theory parse_theory_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(ErrorCode::ParseError, path, "cannot open file");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_theory(buf.str());
}

std::string serialize_graph(const OpenGraph& g) { return graph_to_json(g).dump(2) + "\n"; }

std::string serialize_theory(const Theory& t) {
    json doc = json::object();
    doc["objects"] = std::vector<std::string>(t.sig->objects().begin(), t.sig->objects().end());
    json gens = json::object();
    for (const auto& [name, gt] : t.sig->generators())
        gens[name] = json{{"dom", gt.dom}, {"cod", gt.cod}};
    doc["generators"] = std::move(gens);

    json graphs = json::object();
    for (const auto& [name, g] : t.graphs) graphs[name] = graph_to_json(g);
    doc["graphs"] = std::move(graphs);

    json rules = json::object();
    for (const auto& [name, r] : t.rules) {
        json jr = json::object();
        jr["lhs"] = graph_to_json(r.lhs);
        jr["rhs"] = graph_to_json(r.rhs);
        json in_map = json::array(), out_map = json::array();
        for (const auto& [bid, bp] : r.boundary.points()) {
            const std::string& lp = r.to_lhs.points.at(bid);
            const std::string& rp = r.to_rhs.points.at(bid);
            if (r.lhs.is_input(lp))
                in_map.push_back(json::array({lp, rp}));
            else
                out_map.push_back(json::array({lp, rp}));
        }
        jr["input_map"] = std::move(in_map);
        jr["output_map"] = std::move(out_map);
        rules[name] = std::move(jr);
    }
    doc["rules"] = std::move(rules);

    json systems = json::object();
    for (const auto& [name, entries] : t.system_specs) systems[name] = entries;
    doc["systems"] = std::move(systems);

    json valuations = json::object();
    for (const auto& [name, v] : t.valuations) {
        json jv = json::object();
        json dims = json::object();
        for (const auto& [obj, d] : v.dims) dims[obj] = d;
        jv["dims"] = std::move(dims);
        json tensors = json::object();
        for (const auto& [gen, tensor] : v.tensors) tensors[gen] = tensor.entries;
        jv["tensors"] = std::move(tensors);
        valuations[name] = std::move(jv);
    }
    doc["valuations"] = std::move(valuations);

    return doc.dump(2) + "\n";
}

namespace {

// a->not->b style chains with explicit ports are verbose to spell inline;
// these helpers keep the bundled theory readable
struct GraphBuilder {
    OpenGraph g;
    explicit GraphBuilder(const SignaturePtr& sig) : g(sig) {}

    GraphBuilder& vertex(const std::string& id, const std::string& gen) {
        g.add_vertex(id, gen);
        return *this;
    }
    GraphBuilder& pt(const std::string& id, const std::string& type = "B") {
        g.add_edge_point(id, type);
        return *this;
    }
    // edge between a vertex port and an edge-point, or two edge-points
    GraphBuilder& edge(const std::string& id, const std::string& src, const std::string& tgt,
                       std::optional<int> src_port = std::nullopt,
                       std::optional<int> tgt_port = std::nullopt,
                       const std::string& type = "B") {
        g.add_edge(id, src, tgt, type, src_port, tgt_port);
        return *this;
    }
};

} // namespace

Theory bool_theory() {
    Theory t;
    t.sig = make_signature({"B"}, {
                                      {"and", {{"B", "B"}, {"B"}}},
                                      {"not", {{"B"}, {"B"}}},
                                      {"copy", {{"B"}, {"B", "B"}}},
                                      {"ignore", {{"B"}, {}}},
                                      {"val_T", {{}, {"B"}}},
                                      {"val_F", {{}, {"B"}}},
                                      {"buf", {{"B"}, {"B"}}},
                                  });
    const SignaturePtr& sig = t.sig;

    {
        GraphBuilder b(sig);
        b.pt("i").pt("o").edge("e", "i", "o");
        b.g.set_boundary_order({"i"}, {"o"});
        t.graphs.emplace("wire", b.g);
    }
    {
        // the box-with-a-self-loop host of the circles example
        GraphBuilder b(sig);
        b.vertex("v", "buf").pt("s").pt("t");
        b.edge("e0", "s", "v", std::nullopt, 0).edge("e1", "v", "t", 0).edge("e2", "t", "s");
        b.g.set_boundary_order({}, {});
        t.graphs.emplace("loop", b.g);
    }
    {
        GraphBuilder b(sig);
        b.pt("c");
        b.edge("e", "c", "c");
        b.g.set_boundary_order({}, {});
        t.graphs.emplace("circle", b.g);
    }

    auto or_gate = [&](const char* a_val, const char* b_val) {
        GraphBuilder b(sig);
        b.vertex("na", "not").vertex("nb", "not").vertex("andg", "and").vertex("nc", "not");
        b.pt("m1").pt("m2").pt("m3").pt("out");
        if (a_val) {
            b.vertex("va", a_val).pt("pa");
            b.edge("ea", "va", "pa", 0).edge("e1", "pa", "na", std::nullopt, 0);
        } else {
            b.pt("ia").edge("e1", "ia", "na", std::nullopt, 0);
        }
        if (b_val) {
            b.vertex("vb", b_val).pt("pb");
            b.edge("eb", "vb", "pb", 0).edge("e2", "pb", "nb", std::nullopt, 0);
        } else {
            b.pt("ib").edge("e2", "ib", "nb", std::nullopt, 0);
        }
        b.edge("e3", "na", "m1", 0).edge("e4", "m1", "andg", std::nullopt, 0);
        b.edge("e5", "nb", "m2", 0).edge("e6", "m2", "andg", std::nullopt, 1);
        b.edge("e7", "andg", "m3", 0).edge("e8", "m3", "nc", std::nullopt, 0);
        b.edge("e9", "nc", "out", 0);
        std::vector<std::string> ins;
        if (!a_val) ins.push_back("ia");
        if (!b_val) ins.push_back("ib");
        b.g.set_boundary_order(std::move(ins), {"out"});
        return b.g;
    };
    t.graphs.emplace("or_gate", or_gate(nullptr, nullptr));
    t.graphs.emplace("or_FF", or_gate("val_F", "val_F"));
    t.graphs.emplace("or_FT", or_gate("val_F", "val_T"));
    t.graphs.emplace("or_TF", or_gate("val_T", "val_F"));
    t.graphs.emplace("or_TT", or_gate("val_T", "val_T"));
    t.graphs.emplace("or_Fx", or_gate("val_F", nullptr));

    auto value_graph = [&](const char* val) {
        GraphBuilder b(sig);
        b.vertex("v", val).pt("out").edge("e", "v", "out", 0);
        b.g.set_boundary_order({}, {"out"});
        return b.g;
    };
    t.graphs.emplace("out_T", value_graph("val_T"));
    t.graphs.emplace("out_F", value_graph("val_F"));

    {
        // F fed into \x. (not x) and x, before the copy step
        GraphBuilder b(sig);
        b.vertex("vf", "val_F").vertex("cp", "copy").vertex("ng", "not").vertex("ag", "and");
        b.pt("p0").pt("p1").pt("p2").pt("p3").pt("p4");
        b.edge("e0", "vf", "p0", 0).edge("e1", "p0", "cp", std::nullopt, 0);
        b.edge("e2", "cp", "p1", 0).edge("e3", "p1", "ng", std::nullopt, 0);
        b.edge("e4", "ng", "p2", 0).edge("e5", "p2", "ag", std::nullopt, 0);
        b.edge("e6", "cp", "p3", 1).edge("e7", "p3", "ag", std::nullopt, 1);
        b.edge("e8", "ag", "p4", 0);
        b.g.set_boundary_order({}, {"p4"});
        t.graphs.emplace("copy_beta", b.g);
    }
    {
        GraphBuilder b(sig);
        b.vertex("vf1", "val_F").vertex("vf2", "val_F").vertex("ng", "not").vertex("ag", "and");
        b.pt("q0").pt("q1").pt("q2").pt("q3");
        b.edge("e0", "vf1", "q0", 0).edge("e1", "q0", "ng", std::nullopt, 0);
        b.edge("e2", "ng", "q1", 0).edge("e3", "q1", "ag", std::nullopt, 0);
        b.edge("e4", "vf2", "q2", 0).edge("e5", "q2", "ag", std::nullopt, 1);
        b.edge("e6", "ag", "q3", 0);
        b.g.set_boundary_order({}, {"q3"});
        t.graphs.emplace("copy_beta_rhs", b.g);
    }

    using Pairs = std::vector<std::pair<std::string, std::string>>;

    {
        GraphBuilder l(sig), r(sig);
        l.vertex("v", "buf").pt("i").pt("o");
        l.edge("e0", "i", "v", std::nullopt, 0).edge("e1", "v", "o", 0);
        r.pt("i").pt("o").edge("e", "i", "o");
        t.rules.emplace("drop", make_rule(l.g, r.g, Pairs{{"i", "i"}}, Pairs{{"o", "o"}}));
    }

    auto value_rule = [&](const char* val, const char* rule) {
        // b -> not  ~~>  not b
        const char* flipped = std::string(val) == "val_T" ? "val_F" : "val_T";
        GraphBuilder l(sig), r(sig);
        l.vertex("vb", val).vertex("ng", "not").pt("p").pt("o");
        l.edge("e0", "vb", "p", 0).edge("e1", "p", "ng", std::nullopt, 0).edge("e2", "ng", "o", 0);
        r.vertex("vb", flipped).pt("o").edge("e0", "vb", "o", 0);
        t.rules.emplace(rule, make_rule(l.g, r.g, Pairs{}, Pairs{{"o", "o"}}));
    };
    value_rule("val_T", "not_T");
    value_rule("val_F", "not_F");

    auto copy_rule = [&](const char* val, const char* rule) {
        GraphBuilder l(sig), r(sig);
        l.vertex("vb", val).vertex("cp", "copy").pt("p").pt("o1").pt("o2");
        l.edge("e0", "vb", "p", 0).edge("e1", "p", "cp", std::nullopt, 0);
        l.edge("e2", "cp", "o1", 0).edge("e3", "cp", "o2", 1);
        r.vertex("vb1", val).vertex("vb2", val).pt("o1").pt("o2");
        r.edge("e0", "vb1", "o1", 0).edge("e1", "vb2", "o2", 0);
        t.rules.emplace(rule, make_rule(l.g, r.g, Pairs{}, Pairs{{"o1", "o1"}, {"o2", "o2"}}));
    };
    copy_rule("val_T", "copy_T");
    copy_rule("val_F", "copy_F");

    auto ignore_rule = [&](const char* val, const char* rule) {
        GraphBuilder l(sig);
        l.vertex("vb", val).vertex("ig", "ignore").pt("p");
        l.edge("e0", "vb", "p", 0).edge("e1", "p", "ig", std::nullopt, 0);
        t.rules.emplace(rule, make_rule(l.g, OpenGraph(sig), Pairs{}, Pairs{}));
    };
    ignore_rule("val_T", "ignore_T");
    ignore_rule("val_F", "ignore_F");

    {
        // T and x  ~~>  x
        GraphBuilder l(sig), r(sig);
        l.vertex("vt", "val_T").vertex("ag", "and").pt("tp").pt("x").pt("o");
        l.edge("e0", "vt", "tp", 0).edge("e1", "tp", "ag", std::nullopt, 0);
        l.edge("e2", "x", "ag", std::nullopt, 1).edge("e3", "ag", "o", 0);
        r.pt("x").pt("o").edge("e0", "x", "o");
        t.rules.emplace("and_T", make_rule(l.g, r.g, Pairs{{"x", "x"}}, Pairs{{"o", "o"}}));
    }
    {
        // F and x  ~~>  F, discarding x
        GraphBuilder l(sig), r(sig);
        l.vertex("vf", "val_F").vertex("ag", "and").pt("fp").pt("x").pt("o");
        l.edge("e0", "vf", "fp", 0).edge("e1", "fp", "ag", std::nullopt, 0);
        l.edge("e2", "x", "ag", std::nullopt, 1).edge("e3", "ag", "o", 0);
        r.vertex("vf", "val_F").vertex("ig", "ignore").pt("x").pt("o");
        r.edge("e0", "x", "ig", std::nullopt, 0).edge("e1", "vf", "o", 0);
        t.rules.emplace("and_F", make_rule(l.g, r.g, Pairs{{"x", "x"}}, Pairs{{"o", "o"}}));
    }
    {
        // double negation elimination
        GraphBuilder l(sig), r(sig);
        l.vertex("n1", "not").vertex("n2", "not").pt("i").pt("m").pt("o");
        l.edge("e0", "i", "n1", std::nullopt, 0).edge("e1", "n1", "m", 0);
        l.edge("e2", "m", "n2", std::nullopt, 0).edge("e3", "n2", "o", 0);
        r.pt("i").pt("o").edge("e0", "i", "o");
        t.rules.emplace("dneg", make_rule(l.g, r.g, Pairs{{"i", "i"}}, Pairs{{"o", "o"}}));
    }
    {
        // (not x) and x  ~~>  F, discarding x
        GraphBuilder l(sig), r(sig);
        l.vertex("cp", "copy").vertex("ng", "not").vertex("ag", "and");
        l.pt("i").pt("p1").pt("p2").pt("p3").pt("o");
        l.edge("e0", "i", "cp", std::nullopt, 0);
        l.edge("e1", "cp", "p1", 0).edge("e2", "p1", "ng", std::nullopt, 0);
        l.edge("e3", "ng", "p2", 0).edge("e4", "p2", "ag", std::nullopt, 0);
        l.edge("e5", "cp", "p3", 1).edge("e6", "p3", "ag", std::nullopt, 1);
        l.edge("e7", "ag", "o", 0);
        r.vertex("ig", "ignore").vertex("vf", "val_F").pt("i").pt("o");
        r.edge("e0", "i", "ig", std::nullopt, 0).edge("e1", "vf", "o", 0);
        t.rules.emplace("nxax", make_rule(l.g, r.g, Pairs{{"i", "i"}}, Pairs{{"o", "o"}}));
    }

    t.system_specs.emplace("eval",
                           std::vector<std::string>{"copy_T", "copy_F", "ignore_T", "ignore_F",
                                                    "and_T", "and_F", "not_T", "not_F"});
    t.system_specs.emplace(
        "bool", std::vector<std::string>{"copy_T", "copy_F", "ignore_T", "ignore_F", "and_T",
                                         "and_F", "not_T", "not_F", "dneg", "nxax"});

    Valuation v = bool_valuation();
    auto b2 = [](const std::string& o) { return std::pair<std::string, int>{o, 2}; };
    v.tensors["buf"] = Tensor{{b2("B"), b2("B")}, {1, 0, 0, 1}};
    t.valuations.emplace("bool", std::move(v));
    return t;
}

} // namespace ogrw
