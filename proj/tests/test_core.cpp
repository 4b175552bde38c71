#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>
#include <tuple>

#include "ogrw/error.hpp"
#include "ogrw/generate.hpp"
#include "ogrw/iso.hpp"
#include "ogrw/match.hpp"
#include "ogrw/theory.hpp"
#include "support/fixtures.hpp"

using namespace ogrw;
using namespace ogrw::testing;

namespace {

ErrorCode validation_code(const OpenGraph& g) {
    try {
        validate_graph(g);
    } catch (const Error& e) {
        return e.code();
    }
    FAIL("expected a validation error");
    return ErrorCode::ValidationError;
}

} // namespace

TEST_CASE("signature invariants") {
    CHECK_THROWS_AS(Signature({"B"}, {{"B", {{}, {}}}}), Error);      // name collision
    CHECK_THROWS_AS(Signature({"B"}, {{"f", {{"C"}, {}}}}), Error);   // unknown object
    CHECK_NOTHROW(Signature({"B"}, {{"f", {{"B"}, {"B"}}}}));
}

TEST_CASE("validate: not-gate wire is valid") { CHECK_NOTHROW(validate_graph(not_wire())); }

TEST_CASE("validate: empty graph is valid") { CHECK_NOTHROW(validate_graph(OpenGraph(bool_sig()))); }

TEST_CASE("validate: edge-point with two out-edges") {
    OpenGraph g(bool_sig());
    g.add_edge_point("p", "B");
    g.add_edge_point("q", "B");
    g.add_edge_point("r", "B");
    g.add_edge("e0", "p", "q", "B");
    g.add_edge("e1", "p", "r", "B");
    CHECK(validation_code(g) == ErrorCode::DoubleOut);
}

TEST_CASE("validate: edge-point with two in-edges") {
    OpenGraph g(bool_sig());
    g.add_edge_point("p", "B");
    g.add_edge_point("q", "B");
    g.add_edge_point("r", "B");
    g.add_edge("e0", "q", "p", "B");
    g.add_edge("e1", "r", "p", "B");
    CHECK(validation_code(g) == ErrorCode::DoubleIn);
}

TEST_CASE("validate: and-vertex with one in-edge") {
    OpenGraph g(bool_sig());
    g.add_vertex("v", "and");
    g.add_edge_point("x", "B");
    g.add_edge_point("o", "B");
    g.add_edge("e0", "x", "v", "B", std::nullopt, 0);
    g.add_edge("e1", "v", "o", "B", 0, std::nullopt);
    CHECK(validation_code(g) == ErrorCode::ArityMismatch);
}

TEST_CASE("validate: port clash and type mismatch") {
    {
        OpenGraph g(bool_sig());
        g.add_vertex("v", "and");
        g.add_edge_point("x", "B");
        g.add_edge_point("y", "B");
        g.add_edge_point("o", "B");
        g.add_edge("e0", "x", "v", "B", std::nullopt, 0);
        g.add_edge("e1", "y", "v", "B", std::nullopt, 0);
        g.add_edge("e2", "v", "o", "B", 0, std::nullopt);
        CHECK(validation_code(g) == ErrorCode::PortClash);
    }
    {
        OpenGraph g(test_sig());
        g.add_vertex("v", "f");  // f : a -> b
        g.add_edge_point("x", "b");
        g.add_edge_point("o", "b");
        g.add_edge("e0", "x", "v", "b", std::nullopt, 0);
        g.add_edge("e1", "v", "o", "b", 0, std::nullopt);
        CHECK(validation_code(g) == ErrorCode::TypeMismatch);
    }
}

TEST_CASE("validate: vertex-vertex edge") {
    OpenGraph g(bool_sig());
    g.add_vertex("u", "val_T");
    g.add_vertex("v", "ignore");
    g.add_edge("e", "u", "v", "B", 0, 0);
    CHECK(validation_code(g) == ErrorCode::VertexVertexEdge);
}

TEST_CASE("validate: boundary orders must enumerate the boundary") {
    OpenGraph g = chain(2);
    g.set_boundary_order({"p0", "p0"}, {"p1"});
    CHECK(validation_code(g) == ErrorCode::BadBoundaryOrder);
    g.set_boundary_order({"p1"}, {"p0"});
    CHECK(validation_code(g) == ErrorCode::BadBoundaryOrder);
    g.set_boundary_order({"p0"}, {"p1"});
    CHECK_NOTHROW(validate_graph(g));
}

TEST_CASE("typegraph of the boolean signature") {
    TypeGraph tg = build_typegraph(*bool_sig());
    CHECK(tg.point_count() == 7);
    int self_loops = 0, adjacent = 0;
    for (const auto& e : tg.edges) (e.is_self_loop() ? self_loops : adjacent)++;
    CHECK(self_loops == 1);
    CHECK(adjacent == 11);
}

TEST_CASE("typegraph of a degenerate one-object signature") {
    TypeGraph tg = build_typegraph(*make_signature({"x"}, {}));
    CHECK(tg.point_count() == 1);
    REQUIRE(tg.edges.size() == 1);
    CHECK(tg.edges[0].is_self_loop());
}

TEST_CASE("typegraph of the two-box example signature") {
    auto sig = make_signature({"A", "B", "C", "E", "F", "G"},
                              {{"f", {{"A", "B", "C"}, {"F", "G"}}}, {"g", {{"E"}, {"B"}}}});
    TypeGraph tg = build_typegraph(*sig);
    CHECK(tg.point_count() == 8);
    int self_loops = 0, adjacent = 0;
    for (const auto& e : tg.edges) (e.is_self_loop() ? self_loops : adjacent)++;
    CHECK(self_loops == 6);
    CHECK(adjacent == 7);
    // port order follows the word order
    std::vector<TypeGraphEdge> f_in;
    for (const auto& e : tg.edges)
        if (e.tgt == "f") f_in.push_back(e);
    REQUIRE(f_in.size() == 3);
    CHECK(f_in[0].src == "A");
    CHECK(*f_in[2].port == 2);
}

TEST_CASE("identity morphism checks on any valid graph") {
    OpenGraph g = loop_host();
    CHECK_NOTHROW(check_morphism(g, g, identity_morphism(g)));
}

TEST_CASE("wire onto a longer chain is a morphism (fullness vacuous)") {
    OpenGraph w = chain(2);
    OpenGraph c = chain(3);
    Morphism f;
    f.points = {{"p0", "p0"}, {"p1", "p1"}};
    f.edges = {{"e0", "e0"}};
    CHECK_NOTHROW(check_morphism(w, c, f));
    CHECK(is_mono(f));
}

TEST_CASE("omitting an edge adjacent to an image vertex is not full") {
    // partial source: the not-box missing its out-edge
    OpenGraph src(bool_sig());
    src.add_edge_point("i", "B");
    src.add_vertex("v", "not");
    src.add_edge("e0", "i", "v", "B", std::nullopt, 0);
    OpenGraph tgt = not_wire();
    Morphism f;
    f.points = {{"i", "i"}, {"v", "v"}};
    f.edges = {{"e0", "e0"}};
    try {
        check_morphism(src, tgt, f);
        FAIL("expected NOT_FULL_ON_VERTICES");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::NotFullOnVertices);
    }
}

TEST_CASE("label and structure violations are reported") {
    OpenGraph w = chain(2);
    OpenGraph w2(bool_sig());
    w2.add_edge_point("q0", "B");
    w2.add_edge_point("q1", "B");
    w2.add_edge("d0", "q0", "q1", "B");
    {
        Morphism f;
        f.points = {{"p0", "q1"}, {"p1", "q0"}};
        f.edges = {{"e0", "d0"}};
        try {
            check_morphism(w, w2, f);
            FAIL("expected NOT_STRUCTURE_PRESERVING");
        } catch (const Error& e) {
            CHECK(e.code() == ErrorCode::NotStructurePreserving);
        }
    }
    {
        OpenGraph mixed(test_sig());
        mixed.add_edge_point("q0", "a");
        OpenGraph src(test_sig());
        src.add_edge_point("p0", "b");
        Morphism f;
        f.points = {{"p0", "q0"}};
        try {
            check_morphism(src, mixed, f);
            FAIL("expected LABEL_MISMATCH");
        } catch (const Error& e) {
            CHECK(e.code() == ErrorCode::LabelMismatch);
        }
    }
}

TEST_CASE("is_mono: inclusion yes, fold no") {
    OpenGraph w = chain(2);
    Morphism fold;
    fold.points = {{"p0", "p0"}, {"p1", "p0"}};
    CHECK_FALSE(is_mono(fold));
    CHECK(is_mono(identity_morphism(w)));
}

TEST_CASE("is_mono agrees with exhaustive injectivity on random morphism data") {
    Rng rng(7);
    for (int it = 0; it < 50; ++it) {
        OpenGraph g = random_graph(test_sig(), rng);
        if (g.points().empty()) continue;
        std::vector<std::string> pts;
        for (const auto& [id, p] : g.points()) pts.push_back(id);
        Morphism f;
        for (const auto& [id, p] : g.points())
            f.points[id] = pts[static_cast<std::size_t>(rng.upto(static_cast<int>(pts.size())))];
        bool exhaustive = true;
        for (const auto& [x1, y1] : f.points)
            for (const auto& [x2, y2] : f.points)
                if (x1 != x2 && y1 == y2) exhaustive = false;
        CHECK(is_mono(f) == exhaustive);
    }
}

TEST_CASE("isomorphism: graph vs itself and vs a relabeling") {
    OpenGraph g = loop_host();
    auto self = find_isomorphism(g, g);
    REQUIRE(self);

    OpenGraph h = rename_points(g, "~x");
    auto iso = find_isomorphism(g, h);
    REQUIRE(iso);
    CHECK_NOTHROW(check_morphism(g, h, *iso));
    CHECK(is_mono(*iso));
}

TEST_CASE("isomorphism: point counts differ") {
    CHECK_FALSE(find_isomorphism(chain(3), chain(2)));
}

TEST_CASE("isomorphism of the or-gate circuit under relabeling") {
    Theory t = bool_theory();
    const OpenGraph& orc = t.graphs.at("or_gate");
    OpenGraph renamed = rename_points(orc, "_z");
    auto iso = find_isomorphism(orc, renamed);
    REQUIRE(iso);
    CHECK_NOTHROW(check_morphism(orc, renamed, *iso));
}

TEST_CASE("respecting boundary order can rule isos out") {
    OpenGraph g(test_sig());
    g.add_edge_point("x", "a");
    g.add_edge_point("y", "a");
    OpenGraph h = g;
    g.set_boundary_order({"x", "y"}, {"x", "y"});
    h.set_boundary_order({"y", "x"}, {"y", "x"});
    CHECK(find_isomorphism(g, h, false));
    // pointwise the orders force x->y and x->... both, which is consistent
    CHECK(find_isomorphism(g, h, true));

    OpenGraph k(test_sig());
    k.add_edge_point("x", "a");
    k.add_edge_point("y", "b");
    OpenGraph k2 = k;
    k.set_boundary_order({"x", "y"}, {"x", "y"});
    k2.set_boundary_order({"y", "x"}, {"y", "x"});
    CHECK_FALSE(find_isomorphism(k, k2, true));  // types at position 0 differ
    CHECK(find_isomorphism(k, k2, false));
}

TEST_CASE("isomorphism is an equivalence on a random pool") {
    Rng rng(11);
    std::vector<OpenGraph> pool;
    RandomGraphOptions opts;
    opts.max_vertices = 3;
    opts.max_subdivisions = 2;
    for (int i = 0; i < 12; ++i) {
        OpenGraph g = random_graph(test_sig(), rng, opts);
        if (g.points().size() <= 12) pool.push_back(std::move(g));
    }
    for (const auto& g : pool) CHECK(find_isomorphism(g, g));  // reflexive
    for (const auto& g : pool) {
        for (const auto& h : pool) {
            auto fwd = find_isomorphism(g, h);
            auto bwd = find_isomorphism(h, g);
            CHECK(fwd.has_value() == bwd.has_value());  // symmetric
            if (fwd) {
                Morphism inv = invert(*fwd);
                CHECK_NOTHROW(check_morphism(h, g, inv));
            }
        }
    }
    for (const auto& g : pool)  // transitive
        for (const auto& h : pool)
            for (const auto& k : pool)
                if (find_isomorphism(g, h) && find_isomorphism(h, k))
                    CHECK(find_isomorphism(g, k));
}

TEST_CASE("morphism composition preserves checkability and fullness") {
    Rng rng(23);
    int done = 0;
    for (int it = 0; it < 40 && done < 10; ++it) {
        OpenGraph g = random_graph(test_sig(), rng);
        if (g.points().empty()) continue;
        OpenGraph h = rename_points(g, "_1");
        OpenGraph k = rename_points(g, "_2");
        auto f1 = find_isomorphism(g, h);
        auto f2 = find_isomorphism(h, k);
        REQUIRE(f1);
        REQUIRE(f2);
        Morphism comp = compose(*f1, *f2);
        CHECK_NOTHROW(check_morphism(g, k, comp));
        ++done;
    }
    CHECK(done > 0);
}

TEST_CASE("every edge-point of a valid random graph has degree at most one each way") {
    Rng rng(31);
    for (int it = 0; it < 30; ++it) {
        RandomGraphOptions opts;
        opts.max_isolated = 1;
        OpenGraph g = random_graph(test_sig(), rng, opts);
        for (const auto& [id, p] : g.points()) {
            if (p.is_vertex()) {
                const GeneratorType& type = g.sig().generator(p.label);
                std::multiset<std::tuple<int, int, std::string>> have, want;
                for (const auto& eid : g.in_edges(id))
                    have.insert({0, *g.edge(eid).tgt_port, g.edge(eid).type});
                for (const auto& eid : g.out_edges(id))
                    have.insert({1, *g.edge(eid).src_port, g.edge(eid).type});
                for (int j = 0; j < static_cast<int>(type.dom.size()); ++j)
                    want.insert({0, j, type.dom[j]});
                for (int j = 0; j < static_cast<int>(type.cod.size()); ++j)
                    want.insert({1, j, type.cod[j]});
                CHECK(have == want);  // the signature row, exactly
            } else {
                CHECK(g.in_edges(id).size() <= 1);
                CHECK(g.out_edges(id).size() <= 1);
            }
        }
    }
}

TEST_CASE("matcher finds every embedding of a bare wire into a chain") {
    auto matches = find_matchings(chain(2), chain(4));
    CHECK(matches.size() == 3);
    for (const auto& m : matches) {
        CHECK(is_mono(m));
        CHECK_NOTHROW(check_morphism(chain(2), chain(4), m));
    }
}

TEST_CASE("matchings returned by the matcher are monos (post-check)") {
    Rng rng(43);
    Theory t = bool_theory();
    for (int it = 0; it < 10; ++it) {
        OpenGraph host = random_graph(bool_sig(), rng);
        for (const auto& [name, rule] : t.rules) {
            for (const auto& m : find_matchings(rule.lhs, host)) {
                CHECK(is_mono(m));
                CHECK_NOTHROW(check_morphism(rule.lhs, host, m));
            }
        }
    }
}
