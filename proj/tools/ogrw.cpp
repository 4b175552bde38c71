// Command-line front end for the open-graph rewriting library.

#include <cstdlib>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <unistd.h>

#include "CLI11.hpp"
#include "json.hpp"

#include "ogrw/boundary.hpp"
#include "ogrw/cospan.hpp"
#include "ogrw/error.hpp"
#include "ogrw/generate.hpp"
#include "ogrw/homeo.hpp"
#include "ogrw/iso.hpp"
#include "ogrw/match.hpp"
#include "ogrw/rewrite.hpp"
#include "ogrw/theory.hpp"
#include "ogrw/valuation.hpp"

namespace {

using namespace ogrw;

bool use_color() {
    const char* env = std::getenv("OGRW_COLOR");
    if (env && std::string(env) == "0") return false;
    return isatty(fileno(stdout));
}

std::string green(const std::string& s) { return use_color() ? "\033[32m" + s + "\033[0m" : s; }
std::string red(const std::string& s) { return use_color() ? "\033[31m" + s + "\033[0m" : s; }

struct Options {
    std::string file;
    bool json = false;
    std::uint64_t seed = 0;
};

void print_graph_text(std::ostream& out, const OpenGraph& g) {
    out << "points (" << g.points().size() << "):\n";
    for (const auto& [id, p] : g.points())
        out << "  " << id << ": " << (p.is_vertex() ? "gen " : "type ") << p.label << "\n";
    out << "edges (" << g.edges().size() << "):\n";
    for (const auto& [id, e] : g.edges()) {
        out << "  " << id << ": " << e.src;
        if (e.src_port) out << "[" << *e.src_port << "]";
        out << " -> " << e.tgt;
        if (e.tgt_port) out << "[" << *e.tgt_port << "]";
        out << " : " << e.type << "\n";
    }
    auto line = [&](const char* label, const std::vector<std::string>& pts) {
        out << label;
        for (const auto& p : pts) out << " " << p;
        out << "\n";
    };
    if (g.input_order()) {
        line("inputs:", *g.input_order());
        line("outputs:", *g.output_order());
    } else {
        line("inputs:", g.inputs());
        line("outputs:", g.outputs());
    }
}

void emit_graph(const Options& opt, const OpenGraph& g) {
    if (opt.json)
        std::cout << serialize_graph(g);
    else
        print_graph_text(std::cout, g);
}

const OpenGraph& named_graph(const Theory& t, const std::string& name) {
    auto it = t.graphs.find(name);
    if (it == t.graphs.end())
        throw Error(ErrorCode::ValidationError, name, "no such graph in the theory");
    return it->second;
}

const Rule& named_rule(const Theory& t, const std::string& name) {
    auto it = t.rules.find(name);
    if (it == t.rules.end())
        throw Error(ErrorCode::ValidationError, name, "no such rule in the theory");
    return it->second;
}

const Valuation& named_valuation(const Theory& t, const std::string& name) {
    auto it = t.valuations.find(name);
    if (it == t.valuations.end())
        throw Error(ErrorCode::ValidationError, name, "no such valuation in the theory");
    return it->second;
}

Cospan as_cospan(const Theory& t, const std::string& name) {
    const OpenGraph& g = named_graph(t, name);
    if (!g.input_order())
        throw Error(ErrorCode::BadBoundaryOrder, name,
                    "cospan commands need graphs with 'inputs'/'outputs' arrays");
    Cospan c;
    c.middle = g;
    for (const auto& p : *g.input_order()) c.dom.push_back(g.point(p).label);
    for (const auto& p : *g.output_order()) c.cod.push_back(g.point(p).label);
    validate_cospan(c);
    return c;
}

void print_match(const Morphism& m) {
    bool first = true;
    for (const auto& [from, to] : m.points) {
        std::cout << (first ? "  " : ", ") << from << "->" << to;
        first = false;
    }
    std::cout << "\n";
}

nlohmann::json match_json(const Morphism& m) {
    nlohmann::json points = nlohmann::json::object();
    for (const auto& [from, to] : m.points) points[from] = to;
    nlohmann::json edges = nlohmann::json::object();
    for (const auto& [from, to] : m.edges) edges[from] = to;
    return {{"points", points}, {"edges", edges}};
}

int cmd_validate(const Options& opt) {
    Theory t = parse_theory_file(opt.file);
    for (const auto& [name, sysspec] : t.system_specs) t.system(name);
    if (opt.json) {
        nlohmann::json doc{{"ok", true},
                           {"graphs", t.graphs.size()},
                           {"rules", t.rules.size()},
                           {"systems", t.system_specs.size()},
                           {"valuations", t.valuations.size()}};
        std::cout << doc.dump(2) << "\n";
        return 0;
    }
    std::cout << green("ok") << ": " << t.graphs.size() << " graphs, " << t.rules.size()
              << " rules, " << t.system_specs.size() << " systems, " << t.valuations.size()
              << " valuations\n";
    return 0;
}

int cmd_match(const Options& opt, const std::string& rule, const std::string& graph,
              bool modulo) {
    Theory t = parse_theory_file(opt.file);
    const Rule& r = named_rule(t, rule);
    const OpenGraph& host = named_graph(t, graph);
    std::size_t total = 0;
    nlohmann::json out = nlohmann::json::array();
    if (modulo) {
        for (const auto& em : match_modulo_homeo(r, host)) {
            for (const auto& m : em.matches) {
                ++total;
                if (opt.json)
                    out.push_back(match_json(m));
                else
                    print_match(m);
            }
        }
    } else {
        for (const auto& m : find_matchings(r.lhs, host)) {
            ++total;
            if (opt.json)
                out.push_back(match_json(m));
            else
                print_match(m);
        }
    }
    if (opt.json)
        std::cout << nlohmann::json{{"matchings", out}}.dump(2) << "\n";
    else
        std::cout << total << " matching" << (total == 1 ? "" : "s") << "\n";
    return 0;
}

int cmd_rewrite(const Options& opt, const std::string& rule, const std::string& graph, int at) {
    Theory t = parse_theory_file(opt.file);
    const Rule& r = named_rule(t, rule);
    const OpenGraph& host = named_graph(t, graph);
    auto ms = find_matchings(r.lhs, host);
    if (at < 0 || static_cast<std::size_t>(at) >= ms.size())
        throw Error(ErrorCode::NotMatching, graph,
                    "have " + std::to_string(ms.size()) + " matchings");
    emit_graph(opt, apply_rewrite(r, host, ms[static_cast<std::size_t>(at)]).graph);
    return 0;
}

int cmd_normalize(const Options& opt, const std::string& graph) {
    Theory t = parse_theory_file(opt.file);
    std::size_t steps = 0;
    OpenGraph n = normalize(named_graph(t, graph), &steps);
    if (!opt.json) std::cout << steps << " contraction" << (steps == 1 ? "" : "s") << "\n";
    emit_graph(opt, n);
    return 0;
}

int cmd_derive(const Options& opt, const std::string& system, const std::string& from,
               const std::string& to, int depth, bool allow_reverse) {
    Theory t = parse_theory_file(opt.file);
    DeriveResult res = derive(named_graph(t, from), named_graph(t, to), t.system(system), depth,
                              allow_reverse);
    if (opt.json) {
        nlohmann::json steps = nlohmann::json::array();
        for (const auto& step : res.derivation.steps)
            steps.push_back({{"rule", step.rule}, {"forward", step.forward}});
        const char* status = res.status == DeriveStatus::Found        ? "FOUND"
                             : res.status == DeriveStatus::NotFound   ? "NOT_FOUND"
                                                                      : "DEPTH_EXCEEDED";
        std::cout << nlohmann::json{{"status", status}, {"steps", steps}}.dump(2) << "\n";
        return res.status == DeriveStatus::Found ? 0 : 1;
    }
    switch (res.status) {
        case DeriveStatus::Found: {
            std::cout << green("found") << ": derivation of length " << res.derivation.steps.size()
                      << "\n";
            int i = 0;
            for (const auto& step : res.derivation.steps)
                std::cout << "  step " << i++ << ": " << (step.forward ? "" : "~") << step.rule
                          << "\n";
            return 0;
        }
        case DeriveStatus::NotFound:
            std::cout << red("NOT_FOUND") << ": reachable set exhausted\n";
            return 1;
        case DeriveStatus::DepthExceeded:
            std::cout << red("DEPTH_EXCEEDED") << ": frontier still open at depth " << depth
                      << "\n";
            return 1;
    }
    return 1;
}

CoherentSpan overlap_from_pairs(const Rule& r1, const Rule& r2,
                                const std::vector<std::pair<std::string, std::string>>& pairs) {
    CoherentSpan s;
    s.apex = OpenGraph(r1.rhs.sig_ptr());
    s.left = r1.rhs;
    s.right = r2.lhs;
    std::map<std::string, std::string> to_right;
    std::map<std::string, std::string> apex_of;
    int i = 0;
    for (const auto& [lp, rp] : pairs) {
        const Point& p = r1.rhs.point(lp);
        std::string k = "k" + std::to_string(i++);
        if (p.is_vertex())
            s.apex.add_vertex(k, p.label);
        else
            s.apex.add_edge_point(k, p.label);
        s.to_left.points[k] = lp;
        s.to_right.points[k] = rp;
        to_right[lp] = rp;
        apex_of[lp] = k;
    }
    int j = 0;
    for (const auto& [eid, e] : r1.rhs.edges()) {
        auto si = to_right.find(e.src);
        auto ti = to_right.find(e.tgt);
        if (si == to_right.end() || ti == to_right.end()) continue;
        // the corresponding edge on the right, if the overlap really carries it
        for (const auto& reid : r2.lhs.out_edges(si->second)) {
            const Edge& re = r2.lhs.edge(reid);
            if (re.tgt != ti->second || re.type != e.type || re.src_port != e.src_port ||
                re.tgt_port != e.tgt_port)
                continue;
            std::string ke = "ke" + std::to_string(j++);
            s.apex.add_edge(ke, apex_of.at(e.src), apex_of.at(e.tgt), e.type, e.src_port,
                            e.tgt_port);
            s.to_left.edges[ke] = eid;
            s.to_right.edges[ke] = reid;
            break;
        }
    }
    return s;
}

std::vector<std::pair<std::string, std::string>> parse_pairs_arg(const std::string& arg) {
    std::vector<std::pair<std::string, std::string>> pairs;
    std::istringstream in(arg);
    std::string item;
    while (std::getline(in, item, ',')) {
        auto eq = item.find('=');
        if (eq == std::string::npos)
            throw Error(ErrorCode::ValidationError, item, "expected point=point");
        pairs.emplace_back(item.substr(0, eq), item.substr(eq + 1));
    }
    return pairs;
}

int cmd_compose_rules(const Options& opt, const std::string& first, const std::string& second,
                      const std::string& overlap) {
    Theory t = parse_theory_file(opt.file);
    const Rule& r1 = named_rule(t, first);
    const Rule& r2 = named_rule(t, second);
    CoherentSpan span = overlap_from_pairs(r1, r2, parse_pairs_arg(overlap));
    Rule comp = compose_rules_seq(r1, r2, span);
    std::cout << "lhs:\n";
    emit_graph(opt, comp.lhs);
    std::cout << "rhs:\n";
    emit_graph(opt, comp.rhs);
    return 0;
}

int cmd_compose(const Options& opt, const std::string& left, const std::string& right) {
    Theory t = parse_theory_file(opt.file);
    emit_graph(opt, compose(as_cospan(t, left), as_cospan(t, right)).middle);
    return 0;
}

int cmd_tensor(const Options& opt, const std::string& left, const std::string& right) {
    Theory t = parse_theory_file(opt.file);
    emit_graph(opt, tensor(as_cospan(t, left), as_cospan(t, right)).middle);
    return 0;
}

int cmd_trace(const Options& opt, const std::string& graph, int wires_back) {
    Theory t = parse_theory_file(opt.file);
    emit_graph(opt, trace(as_cospan(t, graph), static_cast<std::size_t>(wires_back)).middle);
    return 0;
}

int cmd_eq(const Options& opt, const std::string& left, const std::string& right,
           const std::string& system, int depth) {
    Theory t = parse_theory_file(opt.file);
    Cospan a = as_cospan(t, left), b = as_cospan(t, right);
    Equiv res;
    if (system.empty()) {
        res = equivalent(a, b);
    } else {
        RewriteSystem sys = t.system(system);
        res = equivalent(a, b, &sys, depth);
    }
    const char* verdict = res == Equiv::Equivalent      ? "EQUIVALENT"
                          : res == Equiv::NotEquivalent ? "NOT_EQUIVALENT"
                                                        : "NOT_FOUND_WITHIN_DEPTH";
    if (opt.json)
        std::cout << nlohmann::json{{"result", verdict}}.dump(2) << "\n";
    else
        std::cout << (res == Equiv::Equivalent ? green(verdict) : red(verdict)) << "\n";
    return res == Equiv::Equivalent ? 0 : 1;
}

int cmd_eval(const Options& opt, const std::string& graph, const std::string& valuation) {
    Theory t = parse_theory_file(opt.file);
    Tensor result = evaluate(as_cospan(t, graph), named_valuation(t, valuation));
    if (opt.json) {
        nlohmann::json shape = nlohmann::json::array();
        for (const auto& [o, d] : result.shape) shape.push_back({{"type", o}, {"dim", d}});
        std::cout << nlohmann::json{{"shape", shape}, {"entries", result.entries}}.dump(2)
                  << "\n";
    } else {
        std::cout << "shape:";
        for (const auto& [o, d] : result.shape) std::cout << " " << o << ":" << d;
        std::cout << "\nentries:";
        for (const auto& e : result.entries) std::cout << " " << e;
        std::cout << "\n";
    }
    return 0;
}

int cmd_demo(const Options& opt) {
    Theory t = bool_theory();
    auto report = [](const std::string& what, bool ok) {
        std::cout << (ok ? green("  ok  ") : red(" FAIL ")) << what << "\n";
        return ok;
    };
    bool all = true;

    all &= report("bundled theory round-trips", parse_theory(serialize_theory(t)) == t);

    // the box with a self-loop rewrites to a circle, which contracts
    const Rule& drop = t.rules.at("drop");
    auto ms = find_matchings(drop.lhs, t.graphs.at("loop"));
    bool circles_ok = ms.size() == 1;
    if (circles_ok) {
        OpenGraph result = apply_rewrite(drop, t.graphs.at("loop"), ms[0]).graph;
        circles_ok = isomorphic(normalize(result), t.graphs.at("circle"));
    }
    all &= report("box-with-loop rewrites to the circle", circles_ok);

    // truth table of the or-gate via derivation
    RewriteSystem eval_sys = t.system("eval");
    for (const auto& [input, expect] :
         std::vector<std::pair<std::string, std::string>>{
             {"or_FF", "out_F"}, {"or_FT", "out_T"}, {"or_TF", "out_T"}, {"or_TT", "out_T"}}) {
        DeriveResult res = derive(t.graphs.at(input), t.graphs.at(expect), eval_sys, 8);
        all &= report(input + " evaluates to " + expect, res.status == DeriveStatus::Found);
    }

    // every bundled rule is sound under the bundled model
    bool sound = true;
    for (const auto& [name, rule] : t.rules)
        sound = sound && check_rule_sound(rule, t.valuations.at("bool"));
    all &= report("all bundled rules tensor-sound", sound);

    // seeded random subtract/plug round-trips
    Rng rng(opt.seed);
    bool round = true;
    int done = 0;
    for (int it = 0; it < 40 && done < 10; ++it) {
        OpenGraph host = random_graph(t.sig, rng);
        SubgraphPick pick = random_subgraph(host, rng);
        if (pick.sub.points().empty()) continue;
        ++done;
        Subtraction s = subtract(host, pick.sub, pick.embed);
        CoherentSpan span;
        span.apex = s.boundary;
        span.left = s.complement;
        span.right = pick.sub;
        span.to_left = s.coboundary;
        span.to_right = s.to_sub;
        round = round && isomorphic(plug(span).graph, host);
    }
    all &= report("seeded subtract/plug round-trips (" + std::to_string(done) + " cases)", round);

    std::cout << (all ? green("demo passed") : red("demo failed")) << "\n";
    return all ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"typed open-graph rewriting: double-pushout rewriting, cospan composition and "
                 "tensor models for string diagrams"};
    app.require_subcommand(1);

    Options opt;
    std::string format = "text";
    app.add_option("--format", format, "output format: text or json")
        ->check(CLI::IsMember({"text", "json"}));
    app.add_option("--seed", opt.seed, "seed for randomized demo checks")->default_val(0);

    auto add_file = [&](CLI::App* sub) {
        sub->fallthrough();
        sub->add_option("file", opt.file, "theory file")->required();
    };

    auto* validate = app.add_subcommand("validate", "parse and validate a theory file");
    add_file(validate);

    std::string rule, graph, system, from, to, left, right, valuation, overlap;
    int at = 0, depth = 6, wires_back = 1;
    bool modulo = false, allow_reverse = false;

    auto* match = app.add_subcommand("match", "list matchings of a rule into a graph");
    match->add_option("--rule", rule)->required();
    match->add_option("--graph", graph)->required();
    match->add_flag("--modulo-h", modulo, "match modulo wire subdivision");
    add_file(match);

    auto* rewrite = app.add_subcommand("rewrite", "apply a rule at a matching");
    rewrite->add_option("--rule", rule)->required();
    rewrite->add_option("--graph", graph)->required();
    rewrite->add_option("--at", at, "matching index")->default_val(0);
    add_file(rewrite);

    auto* normalize_cmd = app.add_subcommand("normalize", "contract to homeomorphism normal form");
    normalize_cmd->add_option("--graph", graph)->required();
    add_file(normalize_cmd);

    auto* derive_cmd = app.add_subcommand("derive", "search for a rewrite path");
    derive_cmd->add_option("--system", system)->required();
    derive_cmd->add_option("--from", from)->required();
    derive_cmd->add_option("--to", to)->required();
    derive_cmd->add_option("--depth", depth)->default_val(6);
    derive_cmd->add_flag("--allow-reverse", allow_reverse, "also apply rules right to left");
    add_file(derive_cmd);

    std::string first_rule, second_rule;
    auto* compose_rules = app.add_subcommand("compose-rules", "sequentially compose two rules");
    compose_rules->add_option("--first", first_rule)->required();
    compose_rules->add_option("--second", second_rule)->required();
    compose_rules->add_option("--overlap", overlap,
                              "comma-separated rhs=lhs point pairs shared by the rules");
    add_file(compose_rules);

    auto* compose_cmd = app.add_subcommand("compose", "plug one cospan into another");
    compose_cmd->add_option("--left", left)->required();
    compose_cmd->add_option("--right", right)->required();
    add_file(compose_cmd);

    auto* tensor_cmd = app.add_subcommand("tensor", "place two cospans side by side");
    tensor_cmd->add_option("--left", left)->required();
    tensor_cmd->add_option("--right", right)->required();
    add_file(tensor_cmd);

    auto* trace_cmd = app.add_subcommand("trace", "feed trailing outputs back into inputs");
    trace_cmd->add_option("--graph", graph)->required();
    trace_cmd->add_option("--wires", wires_back, "how many trailing wires to close")
        ->default_val(1);
    add_file(trace_cmd);

    auto* eq = app.add_subcommand("eq", "diagram equality, optionally modulo a rule system");
    eq->add_option("--left", left)->required();
    eq->add_option("--right", right)->required();
    eq->add_option("--system", system);
    eq->add_option("--depth", depth)->default_val(6);
    add_file(eq);

    auto* eval_cmd = app.add_subcommand("eval", "evaluate a cospan under a valuation");
    eval_cmd->add_option("--graph", graph)->required();
    eval_cmd->add_option("--valuation", valuation)->required();
    add_file(eval_cmd);

    app.add_subcommand("demo", "run the bundled boolean-circuit showcase")->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    }
    opt.json = format == "json";

    try {
        if (app.got_subcommand("validate")) return cmd_validate(opt);
        if (app.got_subcommand("match")) return cmd_match(opt, rule, graph, modulo);
        if (app.got_subcommand("rewrite")) return cmd_rewrite(opt, rule, graph, at);
        if (app.got_subcommand("normalize")) return cmd_normalize(opt, graph);
        if (app.got_subcommand("derive"))
            return cmd_derive(opt, system, from, to, depth, allow_reverse);
        if (app.got_subcommand("compose-rules"))
            return cmd_compose_rules(opt, first_rule, second_rule, overlap);
        if (app.got_subcommand("compose")) return cmd_compose(opt, left, right);
        if (app.got_subcommand("tensor")) return cmd_tensor(opt, left, right);
        if (app.got_subcommand("trace")) return cmd_trace(opt, graph, wires_back);
        if (app.got_subcommand("eq")) return cmd_eq(opt, left, right, system, depth);
        if (app.got_subcommand("eval")) return cmd_eval(opt, graph, valuation);
        if (app.got_subcommand("demo")) return cmd_demo(opt);
    } catch (const Error& e) {
        std::cerr << red("error") << ": " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << red("error") << ": " << e.what() << "\n";
        return 1;
    }
    std::cerr << "usage error: no subcommand\n";
    return 2;
}
