#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "ogrw/error.hpp"
#include "ogrw/generate.hpp"
#include "ogrw/homeo.hpp"
#include "ogrw/iso.hpp"
#include "ogrw/match.hpp"
#include "ogrw/rewrite.hpp"
#include "ogrw/theory.hpp"
#include "support/fixtures.hpp"

using namespace ogrw;
using namespace ogrw::testing;

TEST_CASE("the drop rule is well-formed") {
    Rule r = rule_drop();
    CHECK_NOTHROW(validate_rule(r));
    CHECK(r.boundary.points().size() == 2);
}

TEST_CASE("identity rule on a bare wire") {
    OpenGraph w = chain(2);
    Rule r = make_rule(w, w, {{"p0", "p0"}}, {{"p1", "p1"}});
    CHECK_NOTHROW(validate_rule(r));
    auto ms = find_matchings(r.lhs, w);
    REQUIRE(ms.size() == 1);
    CHECK(isomorphic(apply_rewrite(r, w, ms[0]).graph, w));
}

TEST_CASE("the T-and-x rule has a two-point boundary") {
    Theory t = bool_theory();
    CHECK(t.rules.at("and_T").boundary.points().size() == 2);
}

TEST_CASE("rules reject mismatched and isolated boundaries") {
    OpenGraph lhs = chain(2);
    OpenGraph rhs(test_sig());
    rhs.add_edge_point("q0", "a");
    rhs.add_edge_point("q1", "a");
    rhs.add_edge("e", "q0", "q1", "a");
    // type B vs a is caught by the correspondence check
    CHECK_THROWS_AS(make_rule(lhs, rhs, {{"p0", "q0"}}, {{"p1", "q1"}}), Error);

    OpenGraph iso_side(bool_sig());
    iso_side.add_edge_point("z", "B");
    try {
        make_rule(iso_side, iso_side, {{"z", "z"}}, {{"z", "z"}});
        FAIL("expected ISOLATED_POINT_IN_RULE");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::IsolatedPointInRule);
    }
}

TEST_CASE("matching the drop rule against the loop host") {
    auto ms = find_matchings(rule_drop().lhs, loop_host());
    CHECK(ms.size() == 1);
}

TEST_CASE("no matchings into the empty graph") {
    CHECK(find_matchings(rule_drop().lhs, OpenGraph(bool_sig())).empty());
}

TEST_CASE("rewriting the loop gives the two-point circle, which contracts to one") {
    OpenGraph host = loop_host();
    Rule r = rule_drop();
    auto ms = find_matchings(r.lhs, host);
    REQUIRE(ms.size() == 1);
    OpenGraph result = apply_rewrite(r, host, ms[0]).graph;
    CHECK(isomorphic(result, circle(2)));
    CHECK(isomorphic(normalize(result), circle(1)));
}

TEST_CASE("rewrites_to on the circles example") {
    RewriteSystem sys{{"drop", rule_drop()}};
    CHECK(rewrites_to(loop_host(), circle(2), sys));
    CHECK_FALSE(rewrites_to(loop_host(), circle(3), sys));
    CHECK_FALSE(rewrites_to(loop_host(), loop_host(), RewriteSystem{}));
}

TEST_CASE("a four-point circle steps to a three-point circle under homeomorphism") {
    RewriteSystem hs = homeo_rules(bool_sig());
    CHECK(rewrites_to(circle(4), circle(3), hs));
}

TEST_CASE("reverse_rule is involutive and expands where the rule contracted") {
    Rule r = rule_drop();
    CHECK(reverse_rule(reverse_rule(r)) == r);

    // applying the reversed line-contraction to a two-point chain grows it
    RewriteSystem hs = homeo_rules(bool_sig());
    Rule expand = reverse_rule(hs.at("HL:B"));
    auto ms = find_matchings(expand.lhs, chain(2));
    REQUIRE(!ms.empty());
    CHECK(isomorphic(apply_rewrite(expand, chain(2), ms[0]).graph, chain(3)));
}

TEST_CASE("reversing drop reinserts the box") {
    Rule r = reverse_rule(rule_drop());
    OpenGraph w = chain(2);
    auto ms = find_matchings(r.lhs, w);
    REQUIRE(ms.size() == 1);
    CHECK(isomorphic(apply_rewrite(r, w, ms[0]).graph, not_wire()));
}

TEST_CASE("rewriting is symmetric: undoing at the replaced image restores the host") {
    Rng rng(211);
    int done = 0;
    for (int it = 0; it < 40 && done < 12; ++it) {
        OpenGraph host = random_graph(test_sig(), rng);
        auto ra = random_rule_at(host, rng);
        if (!ra) continue;
        ++done;
        RewriteResult fwd = apply_rewrite(ra->rule, host, ra->match);
        Rule back = reverse_rule(ra->rule);
        RewriteResult bwd = apply_rewrite(back, fwd.graph, fwd.replaced);
        CHECK(isomorphic(bwd.graph, host));
    }
    CHECK(done >= 8);
}

TEST_CASE("rewriting preserves the boundary") {
    Rng rng(223);
    int done = 0;
    for (int it = 0; it < 40 && done < 12; ++it) {
        OpenGraph host = random_graph(test_sig(), rng);
        auto ra = random_rule_at(host, rng);
        if (!ra) continue;
        ++done;
        RewriteResult res = apply_rewrite(ra->rule, host, ra->match);
        CHECK(res.boundary_track.size() ==
              host.inputs().size() + host.outputs().size() -
                  [&] {
                      std::size_t both = 0;
                      for (const auto& p : host.inputs())
                          if (host.is_output(p)) ++both;
                      return both;
                  }());
        for (const auto& x : host.inputs()) {
            const std::string& y = res.boundary_track.at(x);
            CHECK(res.graph.is_input(y));
            CHECK(res.graph.point(y).label == host.point(x).label);
        }
        for (const auto& x : host.outputs()) {
            const std::string& y = res.boundary_track.at(x);
            CHECK(res.graph.is_output(y));
        }
        CHECK(res.graph.inputs().size() == host.inputs().size());
        CHECK(res.graph.outputs().size() == host.outputs().size());
    }
    CHECK(done >= 8);
}

TEST_CASE("extension of drop at the loop matching has an empty boundary") {
    OpenGraph host = loop_host();
    Rule r = rule_drop();
    auto ms = find_matchings(r.lhs, host);
    REQUIRE(ms.size() == 1);
    Rule ext = extend_rule(r, host, ms[0]);
    CHECK(ext.boundary.points().empty());
    CHECK(isomorphic(ext.lhs, loop_host()));
    CHECK(isomorphic(ext.rhs, circle(2)));
    CHECK_NOTHROW(validate_rule(ext));
}

TEST_CASE("extension at the identity matching gives the rule back up to iso") {
    Rule r = rule_drop();
    auto ms = find_matchings(r.lhs, r.lhs);
    REQUIRE(!ms.empty());
    Rule ext = extend_rule(r, r.lhs, ms[0]);
    CHECK(isomorphic(ext.lhs, r.lhs));
    CHECK(isomorphic(ext.rhs, r.rhs));
}

TEST_CASE("extensions keep the host boundary") {
    Rng rng(227);
    int done = 0;
    for (int it = 0; it < 40 && done < 10; ++it) {
        OpenGraph host = random_graph(test_sig(), rng);
        if (host.has_isolated_points()) continue;
        auto ra = random_rule_at(host, rng);
        if (!ra) continue;
        ++done;
        Rule ext = extend_rule(ra->rule, host, ra->match);
        CHECK_NOTHROW(validate_rule(ext));
        CHECK(ext.boundary.points().size() ==
              host.inputs().size() + host.outputs().size());
    }
    CHECK(done >= 6);
}

namespace {

// overlap span of two subgraph picks inside one host: the shared part
CoherentSpan overlap_span(const OpenGraph& host, const SubgraphPick& a, const SubgraphPick& b) {
    CoherentSpan s;
    s.apex = OpenGraph(host.sig_ptr());
    s.left = a.sub;
    s.right = b.sub;
    for (const auto& [pid, p] : a.sub.points()) {
        if (!b.sub.has_point(pid)) continue;
        if (p.is_vertex())
            s.apex.add_vertex(pid, p.label);
        else
            s.apex.add_edge_point(pid, p.label);
        s.to_left.points[pid] = pid;
        s.to_right.points[pid] = pid;
    }
    for (const auto& [eid, e] : a.sub.edges()) {
        if (!b.sub.has_edge(eid)) continue;
        s.apex.add_edge(eid, e.src, e.tgt, e.type, e.src_port, e.tgt_port);
        s.to_left.edges[eid] = eid;
        s.to_right.edges[eid] = eid;
    }
    return s;
}

} // namespace

TEST_CASE("sequential composition: composite application equals two steps") {
    Rng rng(229);
    int done = 0;
    for (int it = 0; it < 60 && done < 10; ++it) {
        OpenGraph mid_host = random_graph(test_sig(), rng);
        SubgraphPick s1 = random_subgraph(mid_host, rng);
        SubgraphPick s2 = random_subgraph(mid_host, rng);
        if (s1.sub.points().empty() || s2.sub.points().empty()) continue;

        // r1 rewrites some lhs INTO s1.sub; r2 rewrites s2.sub away
        OpenGraph l1 = random_graph_with_interface(
            mid_host.sig_ptr(),
            [&] {
                Word w;
                for (const auto& p : s1.sub.inputs()) w.push_back(s1.sub.point(p).label);
                return w;
            }(),
            [&] {
                Word w;
                for (const auto& p : s1.sub.outputs()) w.push_back(s1.sub.point(p).label);
                return w;
            }(),
            rng);
        std::vector<std::pair<std::string, std::string>> im, om;
        auto ins = s1.sub.inputs();
        auto outs = s1.sub.outputs();
        for (std::size_t i = 0; i < ins.size(); ++i)
            im.emplace_back((*l1.input_order())[i], ins[i]);
        for (std::size_t i = 0; i < outs.size(); ++i)
            om.emplace_back((*l1.output_order())[i], outs[i]);
        l1.clear_boundary_order();
        Rule r1 = make_rule(l1, s1.sub, im, om);

        auto ra2 = random_rule_at(mid_host, rng);
        if (!ra2) continue;
        // restrict r2's lhs to the picked subgraph (already is)
        Rule r2 = ra2->rule;
        // rebuild s2 pick from ra2's matching
        SubgraphPick p2;
        p2.sub = r2.lhs;
        p2.embed = ra2->match;

        CoherentSpan overlap = overlap_span(mid_host, s1, p2);
        if (!is_boundary_coherent(overlap)) continue;
        ++done;

        Rule comp = compose_rules_seq(r1, r2, overlap);

        // one-shot application of the composite to its own lhs
        OpenGraph via_composite = comp.rhs;

        // two-step application starting from the same graph
        MergeResult merged = merge(overlap);
        RewriteResult undone = apply_rewrite(reverse_rule(r1), merged.graph, merged.from_left);
        CHECK(isomorphic(undone.graph, comp.lhs));
        RewriteResult step1 = apply_rewrite(r1, undone.graph, undone.replaced);
        auto back = find_isomorphism(step1.graph, merged.graph);
        REQUIRE(back);
        Morphism m2 = compose(merged.from_right, invert(*back));
        RewriteResult step2 = apply_rewrite(r2, step1.graph, m2);
        CHECK(isomorphic(step2.graph, via_composite));
    }
    CHECK(done >= 5);
}

TEST_CASE("sequential composition with an identity second rule") {
    Rule r1 = rule_drop();
    OpenGraph w = r1.rhs;
    Rule ident = make_rule(w, w, {{"i", "i"}}, {{"o", "o"}});

    // overlap: all of r1.rhs
    CoherentSpan overlap;
    overlap.apex = w;
    overlap.left = w;
    overlap.right = w;
    overlap.to_left = identity_morphism(w);
    overlap.to_right = identity_morphism(w);
    Rule comp = compose_rules_seq(r1, ident, overlap);
    CHECK(isomorphic(comp.lhs, r1.lhs));
    CHECK(isomorphic(comp.rhs, r1.rhs));
}

TEST_CASE("completeness: two extended steps collapse into one composite") {
    Rng rng(233);
    int done = 0;
    for (int it = 0; it < 80 && done < 8; ++it) {
        OpenGraph m2_host = random_graph(test_sig(), rng);
        auto ra2 = random_rule_at(m2_host, rng);
        SubgraphPick s1 = random_subgraph(m2_host, rng);
        if (!ra2 || s1.sub.points().empty()) continue;

        // build r1 with rhs = s1.sub so that M1 ~~r1~~> M2 ~~r2~~> M3
        Word in_w, out_w;
        for (const auto& p : s1.sub.inputs()) in_w.push_back(s1.sub.point(p).label);
        for (const auto& p : s1.sub.outputs()) out_w.push_back(s1.sub.point(p).label);
        OpenGraph l1 = random_graph_with_interface(m2_host.sig_ptr(), in_w, out_w, rng);
        std::vector<std::pair<std::string, std::string>> im, om;
        auto ins = s1.sub.inputs();
        auto outs = s1.sub.outputs();
        for (std::size_t i = 0; i < ins.size(); ++i)
            im.emplace_back((*l1.input_order())[i], ins[i]);
        for (std::size_t i = 0; i < outs.size(); ++i)
            om.emplace_back((*l1.output_order())[i], outs[i]);
        l1.clear_boundary_order();
        Rule r1 = make_rule(l1, s1.sub, im, om);

        SubgraphPick p2{ra2->rule.lhs, ra2->match};
        CoherentSpan overlap = overlap_span(m2_host, s1, p2);
        if (!is_boundary_coherent(overlap)) continue;

        OpenGraph m1 = apply_rewrite(reverse_rule(r1), m2_host, s1.embed).graph;
        OpenGraph m3 = apply_rewrite(ra2->rule, m2_host, ra2->match).graph;

        Rule comp = compose_rules_seq(r1, ra2->rule, overlap);
        bool reproduced = false;
        for (const auto& m : find_matchings(comp.lhs, m1)) {
            if (isomorphic(apply_rewrite(comp, m1, m).graph, m3)) {
                reproduced = true;
                break;
            }
        }
        CHECK(reproduced);
        if (reproduced) ++done;
    }
    CHECK(done >= 5);
}

TEST_CASE("derive finds the three-step boolean evaluation") {
    Theory t = bool_theory();
    DeriveResult res =
        derive(t.graphs.at("or_Fx"), t.graphs.at("wire"), t.system("bool"), 5);
    REQUIRE(res.status == DeriveStatus::Found);
    REQUIRE(res.derivation.steps.size() == 3);
    CHECK(res.derivation.steps[0].rule == "not_F");
    CHECK(res.derivation.steps[1].rule == "and_T");
    CHECK(res.derivation.steps[2].rule == "dneg");
}

TEST_CASE("derive: trivial, not-found and depth-capped outcomes") {
    Theory t = bool_theory();
    OpenGraph w = t.graphs.at("wire");
    CHECK(derive(w, w, t.system("eval"), 0).status == DeriveStatus::Found);
    CHECK(derive(w, w, t.system("eval"), 0).derivation.steps.empty());

    // a wire never becomes the or-gate under evaluation
    CHECK(derive(w, t.graphs.at("or_gate"), t.system("eval"), 3).status ==
          DeriveStatus::NotFound);

    // the four-point circle needs two contractions to reach one point
    RewriteSystem hs = homeo_rules(bool_sig());
    RewriteSystem just_lines{{"HL:B", hs.at("HL:B")}, {"HC:B", hs.at("HC:B")}};
    CHECK(derive(circle(4), circle(1), just_lines, 8).status == DeriveStatus::Found);
}

TEST_CASE("derive reproduces the copy beta step") {
    Theory t = bool_theory();
    DeriveResult res =
        derive(t.graphs.at("copy_beta"), t.graphs.at("copy_beta_rhs"), t.system("eval"), 1);
    REQUIRE(res.status == DeriveStatus::Found);
    REQUIRE(res.derivation.steps.size() == 1);
    CHECK(res.derivation.steps[0].rule == "copy_F");
}

TEST_CASE("derivation steps replay") {
    Theory t = bool_theory();
    RewriteSystem sys = t.system("bool");
    DeriveResult res = derive(t.graphs.at("or_FF"), t.graphs.at("out_F"), t.system("eval"), 8);
    REQUIRE(res.status == DeriveStatus::Found);
    OpenGraph cur = normalize(t.graphs.at("or_FF"));
    for (const auto& step : res.derivation.steps) {
        CHECK(isomorphic(normalize(step.host), cur));
        Rule oriented = step.forward ? t.rules.at(step.rule) : reverse_rule(t.rules.at(step.rule));
        OpenGraph next = normalize(apply_rewrite(oriented, step.host, step.match).graph);
        CHECK(isomorphic(next, step.result));
        cur = step.result;
    }
    CHECK(isomorphic(cur, normalize(t.graphs.at("out_F"))));
}

TEST_CASE("composing the two negation evaluation steps into one rule") {
    Theory t = bool_theory();
    const Rule& r1 = t.rules.at("not_F");  // F -> not  ~~>  T
    const Rule& r2 = t.rules.at("not_T");  // T -> not  ~~>  F

    // overlap: the produced T-value vertex together with its output point
    CoherentSpan overlap;
    overlap.apex = OpenGraph(t.sig);
    overlap.left = r1.rhs;    // vb -> o
    overlap.right = r2.lhs;   // vb -> p -> ng -> o
    overlap.apex.add_vertex("kv", "val_T");
    overlap.apex.add_edge_point("ko", "B");
    overlap.apex.add_edge("ke", "kv", "ko", "B", 0, std::nullopt);
    overlap.to_left.points = {{"kv", "vb"}, {"ko", "o"}};
    overlap.to_left.edges = {{"ke", "e0"}};
    overlap.to_right.points = {{"kv", "vb"}, {"ko", "p"}};
    overlap.to_right.edges = {{"ke", "e0"}};
    REQUIRE(is_boundary_coherent(overlap));

    Rule comp = compose_rules_seq(r1, r2, overlap);
    // lhs is the double-negated F chain, rhs the F value it evaluates to
    int lhs_nots = 0, lhs_vals = 0;
    for (const auto& [id, p] : comp.lhs.points()) {
        lhs_nots += p.is_vertex() && p.label == "not";
        lhs_vals += p.is_vertex() && p.label == "val_F";
    }
    CHECK(lhs_nots == 2);
    CHECK(lhs_vals == 1);
    CHECK(isomorphic(comp.rhs, t.graphs.at("out_F")));

    // and it agrees with deriving in two steps
    DeriveResult two = derive(comp.lhs, comp.rhs, t.system("eval"), 2);
    REQUIRE(two.status == DeriveStatus::Found);
    CHECK(two.derivation.steps.size() == 2);
}

TEST_CASE("an incoherent overlap is rejected") {
    Theory t = bool_theory();
    const Rule& r1 = t.rules.at("not_F");
    const Rule& r2 = t.rules.at("not_T");
    CoherentSpan overlap;
    overlap.apex = OpenGraph(t.sig);
    overlap.left = r1.rhs;
    overlap.right = r2.lhs;
    // gluing the value's output onto a point that already has an in-edge
    overlap.apex.add_edge_point("k", "B");
    overlap.to_left.points = {{"k", "o"}};   // in-edge from vb
    overlap.to_right.points = {{"k", "o"}};  // in-edge from ng
    CHECK_FALSE(is_boundary_coherent(overlap));
    try {
        compose_rules_seq(r1, r2, overlap);
        FAIL("expected NOT_COHERENT");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::NotCoherent);
    }
}

TEST_CASE("derive distinguishes depth exhaustion from a closed search space") {
    // all circles are already equal modulo homeomorphism
    RewriteSystem empty_sys;
    CHECK(derive(circle(4), circle(1), empty_sys, 3).status == DeriveStatus::Found);

    Theory t = bool_theory();
    // nothing in the evaluation system applies to a bare wire
    CHECK(derive(t.graphs.at("wire"), t.graphs.at("or_gate"), t.system("eval"), 4).status ==
          DeriveStatus::NotFound);
    // with reversed rules the frontier keeps growing instead
    CHECK(derive(t.graphs.at("wire"), t.graphs.at("or_gate"), t.system("eval"), 1, true).status ==
          DeriveStatus::DepthExceeded);
}
