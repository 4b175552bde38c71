#include "ogrw/cospan.hpp"

#include <algorithm>

#include "ogrw/boundary.hpp"
#include "ogrw/error.hpp"
#include "ogrw/homeo.hpp"
#include "ogrw/iso.hpp"
#include "ogrw/rewrite.hpp"

namespace ogrw {

void validate_cospan(const Cospan& c) {
    validate_graph(c.middle);
    if (!c.middle.input_order() || !c.middle.output_order())
        throw Error(ErrorCode::BadBoundaryOrder, "", "cospan middles need ordered boundaries");
    if (c.middle.has_isolated_points())
        throw Error(ErrorCode::HasIsolatedPoints, "",
                    "cospan middles must not contain isolated points");
    const auto& in = *c.middle.input_order();
    const auto& out = *c.middle.output_order();
    if (in.size() != c.dom.size() || out.size() != c.cod.size())
        throw Error(ErrorCode::WordMismatch, "", "boundary orders do not fit the words");
    for (std::size_t i = 0; i < in.size(); ++i)
        if (c.middle.point(in[i]).label != c.dom[i])
            throw Error(ErrorCode::WordMismatch, in[i], "input type differs from dom word");
    for (std::size_t i = 0; i < out.size(); ++i)
        if (c.middle.point(out[i]).label != c.cod[i])
            throw Error(ErrorCode::WordMismatch, out[i], "output type differs from cod word");
}

Cospan identity_cospan(const SignaturePtr& sig, const Word& w) {
    Cospan c;
    c.dom = w;
    c.cod = w;
    c.middle = OpenGraph(sig);
    std::vector<std::string> in, out;
    for (std::size_t i = 0; i < w.size(); ++i) {
        std::string is = "in" + std::to_string(i), os = "out" + std::to_string(i);
        c.middle.add_edge_point(is, w[i]);
        c.middle.add_edge_point(os, w[i]);
        c.middle.add_edge("w" + std::to_string(i), is, os, w[i]);
        in.push_back(is);
        out.push_back(os);
    }
    c.middle.set_boundary_order(std::move(in), std::move(out));
    return c;
}

Cospan compose(const Cospan& g, const Cospan& h) {
    if (g.cod != h.dom)
        throw Error(ErrorCode::TypeMismatch, "", "cod of the first cospan must equal dom of the second");

    CoherentSpan span;
    span.apex = OpenGraph(g.middle.sig_ptr());
    for (std::size_t i = 0; i < g.cod.size(); ++i) {
        std::string y = "y" + std::to_string(i);
        span.apex.add_edge_point(y, g.cod[i]);
        span.to_left.points[y] = (*g.middle.output_order())[i];
        span.to_right.points[y] = (*h.middle.input_order())[i];
    }
    span.left = g.middle;
    span.left.clear_boundary_order();
    span.right = h.middle;
    span.right.clear_boundary_order();
    MergeResult merged = plug(span);

    Cospan c;
    c.dom = g.dom;
    c.cod = h.cod;
    c.middle = std::move(merged.graph);
    std::vector<std::string> in, out;
    for (const auto& x : *g.middle.input_order()) in.push_back(merged.from_left.at_point(x));
    for (const auto& x : *h.middle.output_order()) out.push_back(merged.from_right.at_point(x));
    c.middle.set_boundary_order(std::move(in), std::move(out));
    validate_cospan(c);
    return c;
}

Cospan tensor(const Cospan& g, const Cospan& h) {
    CoherentSpan span;
    span.apex = OpenGraph(g.middle.sig_ptr());
    span.left = g.middle;
    span.left.clear_boundary_order();
    span.right = h.middle;
    span.right.clear_boundary_order();
    MergeResult merged = merge(span);

    Cospan c;
    c.dom = g.dom;
    c.dom.insert(c.dom.end(), h.dom.begin(), h.dom.end());
    c.cod = g.cod;
    c.cod.insert(c.cod.end(), h.cod.begin(), h.cod.end());
    c.middle = std::move(merged.graph);
    std::vector<std::string> in, out;
    for (const auto& x : *g.middle.input_order()) in.push_back(x);
    for (const auto& x : *h.middle.input_order()) in.push_back(merged.from_right.at_point(x));
    for (const auto& x : *g.middle.output_order()) out.push_back(x);
    for (const auto& x : *h.middle.output_order()) out.push_back(merged.from_right.at_point(x));
    c.middle.set_boundary_order(std::move(in), std::move(out));
    validate_cospan(c);
    return c;
}

Cospan symmetry(const SignaturePtr& sig, const Word& v, const Word& w) {
    Word vw = v;
    vw.insert(vw.end(), w.begin(), w.end());
    Cospan c = identity_cospan(sig, vw);
    c.cod = w;
    c.cod.insert(c.cod.end(), v.begin(), v.end());
    std::vector<std::string> out;
    for (std::size_t i = v.size(); i < vw.size(); ++i) out.push_back("out" + std::to_string(i));
    for (std::size_t i = 0; i < v.size(); ++i) out.push_back("out" + std::to_string(i));
    c.middle.set_boundary_order(*c.middle.input_order(), std::move(out));
    validate_cospan(c);
    return c;
}

Cospan trace(const Cospan& g, std::size_t b_len) {
    if (b_len > g.dom.size() || b_len > g.cod.size())
        throw Error(ErrorCode::WordMismatch, "", "trace length exceeds the words");
    std::size_t a_len = g.dom.size() - b_len;
    std::size_t c_len = g.cod.size() - b_len;
    for (std::size_t j = 0; j < b_len; ++j)
        if (g.dom[a_len + j] != g.cod[c_len + j])
            throw Error(ErrorCode::TypeMismatch, "", "traced suffixes differ as words");
    if (b_len == 0) return g;

    // the link graph: one edge per traced letter, fed by the cod suffix and
    // feeding the dom suffix
    CoherentSpan span;
    span.apex = OpenGraph(g.middle.sig_ptr());
    span.left = g.middle;
    span.left.clear_boundary_order();
    span.right = OpenGraph(g.middle.sig_ptr());
    for (std::size_t j = 0; j < b_len; ++j) {
        const std::string& type = g.dom[a_len + j];
        std::string la = "la" + std::to_string(j), lb = "lb" + std::to_string(j);
        span.right.add_edge_point(la, type);
        span.right.add_edge_point(lb, type);
        span.right.add_edge("le" + std::to_string(j), la, lb, type);

        std::string u = "u" + std::to_string(j), x = "x" + std::to_string(j);
        span.apex.add_edge_point(u, type);
        span.to_left.points[u] = (*g.middle.output_order())[c_len + j];
        span.to_right.points[u] = la;
        span.apex.add_edge_point(x, type);
        span.to_left.points[x] = (*g.middle.input_order())[a_len + j];
        span.to_right.points[x] = lb;
    }
    MergeResult merged = plug(span);

    Cospan c;
    c.dom = Word(g.dom.begin(), g.dom.begin() + a_len);
    c.cod = Word(g.cod.begin(), g.cod.begin() + c_len);
    c.middle = std::move(merged.graph);
    std::vector<std::string> in(g.middle.input_order()->begin(),
                                g.middle.input_order()->begin() + a_len);
    std::vector<std::string> out(g.middle.output_order()->begin(),
                                 g.middle.output_order()->begin() + c_len);
    c.middle.set_boundary_order(std::move(in), std::move(out));
    validate_cospan(c);
    return c;
}

Cospan generator_cospan(const SignaturePtr& sig, const std::string& gen) {
    const GeneratorType& type = sig->generator(gen);
    Cospan c;
    c.dom = type.dom;
    c.cod = type.cod;
    c.middle = OpenGraph(sig);
    c.middle.add_vertex("v", gen);
    std::vector<std::string> in, out;
    for (int j = 0; j < static_cast<int>(type.dom.size()); ++j) {
        std::string x = "x" + std::to_string(j);
        c.middle.add_edge_point(x, type.dom[j]);
        c.middle.add_edge("ei" + std::to_string(j), x, "v", type.dom[j], std::nullopt, j);
        in.push_back(x);
    }
    for (int j = 0; j < static_cast<int>(type.cod.size()); ++j) {
        std::string y = "y" + std::to_string(j);
        c.middle.add_edge_point(y, type.cod[j]);
        c.middle.add_edge("eo" + std::to_string(j), "v", y, type.cod[j], j, std::nullopt);
        out.push_back(y);
    }
    c.middle.set_boundary_order(std::move(in), std::move(out));
    return c;
}

Cospan rewrite_cospan(const Rule& r, const Cospan& g, const Morphism& m) {
    RewriteResult res = apply_rewrite(r, g.middle, m);
    Cospan c;
    c.dom = g.dom;
    c.cod = g.cod;
    c.middle = std::move(res.graph);
    std::vector<std::string> in, out;
    for (const auto& x : *g.middle.input_order()) in.push_back(res.boundary_track.at(x));
    for (const auto& x : *g.middle.output_order()) out.push_back(res.boundary_track.at(x));
    c.middle.set_boundary_order(std::move(in), std::move(out));
    validate_cospan(c);
    return c;
}

Cospan normalize_cospan(const Cospan& g) {
    Cospan c;
    c.dom = g.dom;
    c.cod = g.cod;
    c.middle = normalize(g.middle);
    return c;
}

std::optional<Morphism> cospan_isomorphism(const Cospan& a, const Cospan& b) {
    if (a.dom != b.dom || a.cod != b.cod) return std::nullopt;
    return find_isomorphism(a.middle, b.middle, /*respect_boundary_order=*/true);
}

namespace {

std::vector<Cospan> neighbours(const Cospan& state, const RewriteSystem& sys) {
    std::vector<Cospan> result;
    for (const auto& [name, rule] : sys) {
        for (bool forward : {true, false}) {
            Rule oriented = forward ? rule : reverse_rule(rule);
            for (const auto& em : match_modulo_homeo(oriented, state.middle)) {
                Cospan expanded{state.dom, state.cod, em.host};
                for (const auto& m : em.matches)
                    result.push_back(normalize_cospan(rewrite_cospan(oriented, expanded, m)));
            }
        }
    }
    return result;
}

} // namespace

Equiv equivalent(const Cospan& g, const Cospan& h, const RewriteSystem* sys, int max_depth) {
    if (g.dom != h.dom || g.cod != h.cod)
        throw Error(ErrorCode::WordMismatch, "", "cospans compare only at equal words");
    Cospan a = normalize_cospan(g);
    Cospan b = normalize_cospan(h);
    if (cospan_isomorphism(a, b)) return Equiv::Equivalent;
    if (!sys) return Equiv::NotEquivalent;

    // bidirectional breadth-first search over normal forms
    std::vector<Cospan> pool[2] = {{a}, {b}};
    std::vector<std::size_t> frontier[2] = {{0}, {0}};
    bool capped = false;
    for (int depth = 0; depth < max_depth; ++depth) {
        for (int side : {0, 1}) {
            if (frontier[side].empty()) continue;
            std::vector<std::size_t> next;
            for (std::size_t idx : frontier[side]) {
                for (auto& cand : neighbours(pool[side][idx], *sys)) {
                    bool seen = false;
                    for (const auto& known : pool[side])
                        if (cospan_isomorphism(known, cand)) {
                            seen = true;
                            break;
                        }
                    if (seen) continue;
                    for (const auto& other : pool[1 - side])
                        if (cospan_isomorphism(other, cand)) return Equiv::Equivalent;
                    pool[side].push_back(std::move(cand));
                    next.push_back(pool[side].size() - 1);
                }
            }
            frontier[side] = std::move(next);
        }
    }
    if (!frontier[0].empty() || !frontier[1].empty()) capped = true;
    return capped ? Equiv::NotFoundWithinDepth : Equiv::NotEquivalent;
}

bool is_progressive(const Cospan& g) {
    validate_cospan(g);
    std::map<std::string, int> state;  // 0 unseen, 1 on stack, 2 done
    std::vector<std::pair<std::string, std::size_t>> stack;
    for (const auto& [start, p] : g.middle.points()) {
        if (state[start]) continue;
        stack.push_back({start, 0});
        state[start] = 1;
        while (!stack.empty()) {
            auto& [cur, next_edge] = stack.back();
            const auto& outs = g.middle.out_edges(cur);
            if (next_edge >= outs.size()) {
                state[cur] = 2;
                stack.pop_back();
                continue;
            }
            const std::string& succ = g.middle.edge(outs[next_edge]).tgt;
            ++next_edge;
            if (state[succ] == 1) return false;
            if (state[succ] == 0) {
                state[succ] = 1;
                stack.push_back({succ, 0});
            }
        }
    }
    return true;
}

} // namespace ogrw
