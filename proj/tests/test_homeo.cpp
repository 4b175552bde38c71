#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>

#include "ogrw/generate.hpp"
#include "ogrw/homeo.hpp"
#include "ogrw/iso.hpp"
#include "ogrw/match.hpp"
#include "ogrw/rewrite.hpp"
#include "support/fixtures.hpp"

using namespace ogrw;
using namespace ogrw::testing;

TEST_CASE("wires of the not-wire") {
    auto ws = wires(not_wire());
    REQUIRE(ws.size() == 2);
    CHECK(ws[0].points == std::vector<std::string>{"i"});
    CHECK(ws[0].tgt_vertex == "v");
    CHECK_FALSE(ws[0].src_vertex);
    CHECK(ws[1].points == std::vector<std::string>{"o"});
    CHECK(ws[1].src_vertex == "v");
}

TEST_CASE("a circle is one wire with no endpoints") {
    auto ws = wires(circle(3));
    REQUIRE(ws.size() == 1);
    CHECK(ws[0].circle);
    CHECK(ws[0].points.size() == 3);
    CHECK(ws[0].edges.size() == 3);
    CHECK_FALSE(ws[0].src_vertex);
}

TEST_CASE("an isolated point is a degenerate wire") {
    OpenGraph g(bool_sig());
    g.add_edge_point("z", "B");
    auto ws = wires(g);
    REQUIRE(ws.size() == 1);
    CHECK(ws[0].points == std::vector<std::string>{"z"});
    CHECK(ws[0].edges.empty());
    CHECK_FALSE(ws[0].circle);
}

TEST_CASE("wires partition the edge-points and match a traversal count") {
    Rng rng(307);
    for (int it = 0; it < 25; ++it) {
        RandomGraphOptions opts;
        opts.max_isolated = 1;
        OpenGraph g = random_graph(test_sig(), rng, opts);
        auto ws = wires(g);
        std::set<std::string> covered;
        for (const auto& w : ws)
            for (const auto& p : w.points) {
                CHECK(covered.insert(p).second);  // disjoint
                CHECK_FALSE(g.point(p).is_vertex());
            }
        CHECK(covered.size() == g.edge_point_count());

        // brute recount: chains are delimited by vertices/boundary
        std::size_t interior_edges = 0;
        for (const auto& [id, e] : g.edges())
            if (!g.point(e.src).is_vertex() && !g.point(e.tgt).is_vertex()) ++interior_edges;
        std::size_t circle_count = 0;
        for (const auto& w : ws) circle_count += w.circle ? 1 : 0;
        CHECK(g.edge_point_count() - interior_edges + circle_count == ws.size());
    }
}

TEST_CASE("homeo system sizes") {
    CHECK(homeo_rules(bool_sig()).size() == 13);  // 2 + 11
    auto one = make_signature({"x"}, {});
    auto hs = homeo_rules(one);
    CHECK(hs.size() == 2);
    CHECK(hs.count("HL:x") == 1);
    CHECK(hs.count("HC:x") == 1);
}

TEST_CASE("the line contraction never matches a two-point wire") {
    RewriteSystem hs = homeo_rules(bool_sig());
    CHECK(find_matchings(hs.at("HL:B").lhs, chain(2)).empty());
}

TEST_CASE("normalize: the two-point circle contracts to one point") {
    CHECK(isomorphic(normalize(circle(2)), circle(1)));
}

TEST_CASE("normalize is a fixpoint on normal graphs") {
    OpenGraph g = not_wire();
    std::size_t steps = 99;
    OpenGraph n = normalize(g, &steps);
    CHECK(steps == 0);
    CHECK(n == g);
}

TEST_CASE("a long chain between two boxes contracts to a single point") {
    // v -> p0 .. p6 -> w over the one-in-one-out generator
    OpenGraph g(bool_sig());
    g.add_vertex("v", "not");
    g.add_vertex("w", "not");
    g.add_edge_point("in", "B");
    g.add_edge_point("out", "B");
    for (int i = 0; i < 7; ++i) g.add_edge_point("p" + std::to_string(i), "B");
    g.add_edge("ein", "in", "v", "B", std::nullopt, 0);
    g.add_edge("c0", "v", "p0", "B", 0, std::nullopt);
    for (int i = 0; i + 1 < 7; ++i)
        g.add_edge("c" + std::to_string(i + 1), "p" + std::to_string(i),
                   "p" + std::to_string(i + 1), "B");
    g.add_edge("c7", "p6", "w", "B", std::nullopt, 0);
    g.add_edge("eout", "w", "out", "B", 0, std::nullopt);
    validate_graph(g);

    OpenGraph n = normalize(g);
    CHECK(n.edge_point_count() == 3);  // in, out, one between

    // random contraction orders agree
    Rng rng(311);
    for (int k = 0; k < 5; ++k) {
        std::mt19937_64 eng(1000 + k);
        CHECK(isomorphic(normalize_random(g, eng), n));
    }
}

TEST_CASE("normal forms per wire shape") {
    Rng rng(313);
    for (int it = 0; it < 25; ++it) {
        RandomGraphOptions opts;
        opts.max_subdivisions = 4;
        OpenGraph g = random_graph(test_sig(), rng, opts);
        OpenGraph n = normalize(g);
        for (const auto& w : wires(n)) {
            if (w.circle)
                CHECK(w.points.size() == 1);
            else if (w.src_vertex && w.tgt_vertex)
                CHECK(w.points.size() == 1);
            else if (w.src_vertex || w.tgt_vertex)
                CHECK(w.points.size() == 1);
            else if (!w.edges.empty())
                CHECK(w.points.size() == 2);
        }
    }
}

TEST_CASE("contraction terminates within the edge-point budget and is confluent") {
    Rng rng(317);
    for (int it = 0; it < 20; ++it) {
        RandomGraphOptions opts;
        opts.max_subdivisions = 5;
        OpenGraph g = random_graph(test_sig(), rng, opts);
        std::size_t steps = 0;
        OpenGraph n = normalize(g, &steps);
        CHECK(steps <= g.edge_point_count());
        for (int k = 0; k < 4; ++k) {
            std::mt19937_64 eng(9000 + 13 * it + k);
            std::size_t rsteps = 0;
            OpenGraph rn = normalize_random(g, eng, &rsteps);
            CHECK(rsteps == steps);  // every contraction removes one point
            CHECK(isomorphic(rn, n));
        }
    }
}

TEST_CASE("subdividing any edge never changes the normal form") {
    Rng rng(331);
    for (int it = 0; it < 15; ++it) {
        OpenGraph g = random_graph(test_sig(), rng);
        if (g.edges().empty()) continue;
        std::vector<std::string> eids;
        for (const auto& [id, e] : g.edges()) eids.push_back(id);
        OpenGraph sub = subdivide_edge(g, eids[rng.upto(static_cast<int>(eids.size()))]);
        CHECK(isomorphic(normalize(sub), normalize(g)));
    }
}

TEST_CASE("matching modulo homeomorphism on the one-point self-loop") {
    // vertex with a self-loop through a single edge-point
    OpenGraph host(bool_sig());
    host.add_vertex("v", "not");
    host.add_edge_point("s", "B");
    host.add_edge("e0", "v", "s", "B", 0, std::nullopt);
    host.add_edge("e1", "s", "v", "B", std::nullopt, 0);
    validate_graph(host);

    Rule r = rule_drop();
    CHECK(find_matchings(r.lhs, host).empty());  // needs two distinct points
    auto ems = match_modulo_homeo(r, host);
    std::size_t total = 0;
    for (const auto& em : ems) total += em.matches.size();
    REQUIRE(total == 1);
    OpenGraph result = apply_rewrite(r, ems[0].host, ems[0].matches[0]).graph;
    CHECK(isomorphic(normalize(result), circle(1)));
}

TEST_CASE("a bare-wire lhs matches once per expanded wire segment") {
    OpenGraph host = normalize(not_wire());
    OpenGraph pat = chain(2);
    Rule r = make_rule(pat, pat, {{"p0", "p0"}}, {{"p1", "p1"}});
    std::size_t total = 0;
    for (const auto& em : match_modulo_homeo(r, host)) total += em.matches.size();
    // one expansion per wire, each holding exactly one two-point segment
    CHECK(total == wires(host).size());
}

TEST_CASE("matching modulo homeomorphism on the empty host finds nothing") {
    CHECK(match_modulo_homeo(rule_drop(), OpenGraph(bool_sig())).empty());
}

TEST_CASE("isolated points survive normalization untouched") {
    OpenGraph g(bool_sig());
    g.add_edge_point("z", "B");
    std::size_t steps = 7;
    OpenGraph n = normalize(g, &steps);
    CHECK(steps == 0);
    CHECK(n == g);
}
