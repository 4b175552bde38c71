#include <benchmark/benchmark.h>

#include "ogrw/boundary.hpp"
#include "ogrw/generate.hpp"
#include "ogrw/homeo.hpp"
#include "ogrw/iso.hpp"
#include "ogrw/match.hpp"
#include "ogrw/rewrite.hpp"
#include "ogrw/theory.hpp"
#include "ogrw/valuation.hpp"

namespace {

using namespace ogrw;

SignaturePtr bench_sig() {
    static SignaturePtr sig = make_signature(
        {"a", "b"}, {
                        {"f", {{"a"}, {"b"}}},
                        {"g2", {{"a", "b"}, {"a"}}},
                        {"h2", {{"b"}, {"a", "a"}}},
                        {"cap_a", {{"a"}, {}}},
                        {"cup_a", {{}, {"a"}}},
                        {"cap_b", {{"b"}, {}}},
                        {"cup_b", {{}, {"b"}}},
                    });
    return sig;
}

OpenGraph sized_graph(int vertices, std::uint64_t seed) {
    Rng rng(seed);
    RandomGraphOptions opts;
    opts.max_vertices = vertices;
    opts.max_subdivisions = vertices;
    return random_graph(bench_sig(), rng, opts);
}

void BM_Matchings(benchmark::State& state) {
    OpenGraph host = sized_graph(static_cast<int>(state.range(0)), 7);
    Rng rng(11);
    auto ra = random_rule_at(host, rng);
    while (!ra) ra = random_rule_at(host, rng);
    for (auto _ : state) benchmark::DoNotOptimize(find_matchings(ra->rule.lhs, host));
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_Matchings)->RangeMultiplier(2)->Range(4, 16)->Complexity();

void BM_Isomorphism(benchmark::State& state) {
    OpenGraph g = sized_graph(static_cast<int>(state.range(0)), 13);
    OpenGraph h = g;
    for (auto _ : state) benchmark::DoNotOptimize(find_isomorphism(g, h));
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_Isomorphism)->RangeMultiplier(2)->Range(4, 16)->Complexity();

void BM_SubtractPlugRoundTrip(benchmark::State& state) {
    OpenGraph host = sized_graph(static_cast<int>(state.range(0)), 17);
    Rng rng(19);
    SubgraphPick pick = random_subgraph(host, rng);
    while (pick.sub.points().empty()) pick = random_subgraph(host, rng);
    for (auto _ : state) {
        Subtraction s = subtract(host, pick.sub, pick.embed);
        CoherentSpan span{s.boundary, s.complement, pick.sub, s.coboundary, s.to_sub};
        benchmark::DoNotOptimize(plug(span));
    }
}
BENCHMARK(BM_SubtractPlugRoundTrip)->RangeMultiplier(2)->Range(4, 16);

void BM_Normalize(benchmark::State& state) {
    OpenGraph g = sized_graph(static_cast<int>(state.range(0)), 23);
    for (auto _ : state) benchmark::DoNotOptimize(normalize(g));
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_Normalize)->RangeMultiplier(2)->Range(4, 16)->Complexity();

void BM_EvaluateOrGate(benchmark::State& state) {
    Theory t = bool_theory();
    OpenGraph g = t.graphs.at("or_gate");
    Cospan c;
    for (const auto& p : *g.input_order()) c.dom.push_back("B");
    for (const auto& p : *g.output_order()) c.cod.push_back("B");
    c.middle = g;
    const Valuation& v = t.valuations.at("bool");
    for (auto _ : state) benchmark::DoNotOptimize(evaluate(c, v));
}
BENCHMARK(BM_EvaluateOrGate);

void BM_DeriveTruthTable(benchmark::State& state) {
    Theory t = bool_theory();
    RewriteSystem sys = t.system("eval");
    for (auto _ : state)
        benchmark::DoNotOptimize(derive(t.graphs.at("or_FF"), t.graphs.at("out_F"), sys, 8));
}
BENCHMARK(BM_DeriveTruthTable);

} // namespace

BENCHMARK_MAIN();
