#include "ogrw/homeo.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

#include "ogrw/error.hpp"
#include "ogrw/match.hpp"
#include "ogrw/rewrite.hpp"

namespace ogrw {

std::vector<Wire> wires(const OpenGraph& g) {
    std::vector<Wire> result;
    std::set<std::string> visited;

    for (const auto& [pid, p] : g.points()) {
        if (p.is_vertex() || visited.count(pid)) continue;

        Wire w;
        w.type = p.label;

        // walk backwards to the start of the chain, or detect a circle
        std::string start = pid;
        while (true) {
            const auto& ins = g.in_edges(start);
            if (ins.empty()) break;
            const Edge& e = g.edge(ins.front());
            if (g.point(e.src).is_vertex()) break;
            if (e.src == pid) {
                w.circle = true;
                break;
            }
            start = e.src;
        }

        if (w.circle) {
            // collect the cycle, rotated to begin at the smallest id
            std::vector<std::string> cycle{pid};
            std::string cur = pid;
            while (true) {
                const Edge& e = g.edge(g.out_edges(cur).front());
                if (e.tgt == pid) break;
                cycle.push_back(e.tgt);
                cur = e.tgt;
            }
            auto min_it = std::min_element(cycle.begin(), cycle.end());
            std::rotate(cycle.begin(), min_it, cycle.end());
            w.points = cycle;
            for (std::size_t i = 0; i < cycle.size(); ++i) {
                const std::string& from = cycle[i];
                w.edges.push_back(g.out_edges(from).front());
            }
        } else {
            const auto& first_in = g.in_edges(start);
            if (!first_in.empty()) {
                w.src_edge = first_in.front();
                w.src_vertex = g.edge(first_in.front()).src;
            }
            std::string cur = start;
            w.points.push_back(cur);
            while (true) {
                const auto& outs = g.out_edges(cur);
                if (outs.empty()) break;
                const Edge& e = g.edge(outs.front());
                if (g.point(e.tgt).is_vertex()) {
                    w.tgt_edge = e.id;
                    w.tgt_vertex = e.tgt;
                    break;
                }
                w.edges.push_back(e.id);
                w.points.push_back(e.tgt);
                cur = e.tgt;
            }
        }

        for (const auto& x : w.points) visited.insert(x);
        result.push_back(std::move(w));
    }

    std::sort(result.begin(), result.end(), [](const Wire& a, const Wire& b) {
        return *std::min_element(a.points.begin(), a.points.end()) <
               *std::min_element(b.points.begin(), b.points.end());
    });
    return result;
}

RewriteSystem homeo_rules(const SignaturePtr& sig) {
    RewriteSystem sys;

    for (const auto& o : sig->objects()) {
        {
            OpenGraph lhs(sig), rhs(sig);
            lhs.add_edge_point("l0", o);
            lhs.add_edge_point("l1", o);
            lhs.add_edge_point("l2", o);
            lhs.add_edge("e0", "l0", "l1", o);
            lhs.add_edge("e1", "l1", "l2", o);
            rhs.add_edge_point("r0", o);
            rhs.add_edge_point("r1", o);
            rhs.add_edge("e0", "r0", "r1", o);
            sys.emplace("HL:" + o, make_rule(lhs, rhs, {{"l0", "r0"}}, {{"l2", "r1"}}));
        }
        {
            OpenGraph lhs(sig), rhs(sig);
            lhs.add_edge_point("l0", o);
            lhs.add_edge_point("l1", o);
            lhs.add_edge("e0", "l0", "l1", o);
            lhs.add_edge("e1", "l1", "l0", o);
            rhs.add_edge_point("r0", o);
            rhs.add_edge("e0", "r0", "r0", o);
            sys.emplace("HC:" + o, make_rule(lhs, rhs, {}, {}));
        }
    }

    // one vertex with its full port neighbourhood, the wire at one port
    // carrying two edge-points on the left and one on the right
    auto port_rule = [&](const std::string& gen, const GeneratorType& type, int k, bool in_wire) {
        OpenGraph lhs(sig), rhs(sig);
        std::vector<std::pair<std::string, std::string>> in_map, out_map;
        for (OpenGraph* g : {&lhs, &rhs}) {
            g->add_vertex("v", gen);
            for (int j = 0; j < static_cast<int>(type.dom.size()); ++j) {
                g->add_edge_point("x" + std::to_string(j), type.dom[j]);
                g->add_edge("ei" + std::to_string(j), "x" + std::to_string(j), "v", type.dom[j],
                            std::nullopt, j);
            }
            for (int j = 0; j < static_cast<int>(type.cod.size()); ++j) {
                g->add_edge_point("y" + std::to_string(j), type.cod[j]);
                g->add_edge("eo" + std::to_string(j), "v", "y" + std::to_string(j), type.cod[j], j,
                            std::nullopt);
            }
        }
        for (int j = 0; j < static_cast<int>(type.dom.size()); ++j) {
            std::string x = "x" + std::to_string(j);
            if (!(in_wire && j == k)) in_map.emplace_back(x, x);
        }
        for (int j = 0; j < static_cast<int>(type.cod.size()); ++j) {
            std::string y = "y" + std::to_string(j);
            if (!(!in_wire && j == k)) out_map.emplace_back(y, y);
        }
        if (in_wire) {
            std::string x = "x" + std::to_string(k);
            lhs.add_edge_point("p", type.dom[k]);
            lhs.add_edge("w", "p", x, type.dom[k]);
            in_map.emplace_back("p", x);
        } else {
            std::string y = "y" + std::to_string(k);
            lhs.add_edge_point("q", type.cod[k]);
            lhs.add_edge("w", y, "q", type.cod[k]);
            out_map.emplace_back("q", y);
        }
        return make_rule(lhs, rhs, in_map, out_map);
    };

    for (const auto& [gen, type] : sig->generators()) {
        for (int k = 0; k < static_cast<int>(type.dom.size()); ++k)
            sys.emplace("HT:" + gen + ":" + std::to_string(k), port_rule(gen, type, k, true));
        for (int k = 0; k < static_cast<int>(type.cod.size()); ++k)
            sys.emplace("HS:" + gen + ":" + std::to_string(k), port_rule(gen, type, k, false));
    }
    return sys;
}

OpenGraph subdivide_edge(const OpenGraph& g, const std::string& edge_id, SubdivideInfo* info) {
    const Edge& e = g.edge(edge_id);
    OpenGraph out(g.sig_ptr());
    for (const auto& [id, p] : g.points()) {
        if (p.is_vertex())
            out.add_vertex(id, p.label);
        else
            out.add_edge_point(id, p.label);
    }
    std::string np =
        fresh_id(edge_id + ":p", [&](const std::string& x) { return out.has_point(x); });
    out.add_edge_point(np, e.type);

    for (const auto& [id, other] : g.edges()) {
        if (id == edge_id) continue;
        out.add_edge(id, other.src, other.tgt, other.type, other.src_port, other.tgt_port);
    }
    std::string ea = fresh_id(edge_id + ":a", [&](const std::string& x) { return out.has_edge(x); });
    out.add_edge(ea, e.src, np, e.type, e.src_port, std::nullopt);
    std::string eb = fresh_id(edge_id + ":b", [&](const std::string& x) { return out.has_edge(x); });
    out.add_edge(eb, np, e.tgt, e.type, std::nullopt, e.tgt_port);

    if (g.input_order()) out.set_boundary_order(*g.input_order(), *g.output_order());
    if (info) *info = SubdivideInfo{np, ea, eb};
    return out;
}

namespace {

struct Redex {
    std::vector<std::string> image;  // sorted matched host point ids
    std::string rule;
    Morphism match;
};

std::vector<Redex> contraction_redexes(const RewriteSystem& hs, const OpenGraph& g) {
    std::vector<Redex> redexes;
    for (const auto& [name, rule] : hs) {
        for (auto& m : find_matchings(rule.lhs, g)) {
            Redex r;
            for (const auto& [pp, hp] : m.points) r.image.push_back(hp);
            std::sort(r.image.begin(), r.image.end());
            r.rule = name;
            r.match = std::move(m);
            redexes.push_back(std::move(r));
        }
    }
    std::sort(redexes.begin(), redexes.end(), [](const Redex& a, const Redex& b) {
        return std::tie(a.image, a.rule) < std::tie(b.image, b.rule);
    });
    return redexes;
}

OpenGraph contract_step(const RewriteSystem& hs, const OpenGraph& g, const Redex& redex) {
    RewriteResult res = apply_rewrite(hs.at(redex.rule), g, redex.match);
    if (g.input_order()) {
        std::vector<std::string> in, out;
        for (const auto& x : *g.input_order()) in.push_back(res.boundary_track.at(x));
        for (const auto& x : *g.output_order()) out.push_back(res.boundary_track.at(x));
        res.graph.set_boundary_order(std::move(in), std::move(out));
    }
    return std::move(res.graph);
}

} // namespace

OpenGraph normalize(const OpenGraph& g, std::size_t* steps_out) {
    RewriteSystem hs = homeo_rules(g.sig_ptr());
    OpenGraph cur = g;
    std::size_t steps = 0;
    while (true) {
        auto redexes = contraction_redexes(hs, cur);
        if (redexes.empty()) break;
        cur = contract_step(hs, cur, redexes.front());
        ++steps;
    }
    if (steps_out) *steps_out = steps;
    return cur;
}

OpenGraph normalize_random(const OpenGraph& g, std::mt19937_64& rng, std::size_t* steps_out) {
    RewriteSystem hs = homeo_rules(g.sig_ptr());
    OpenGraph cur = g;
    std::size_t steps = 0;
    while (true) {
        auto redexes = contraction_redexes(hs, cur);
        if (redexes.empty()) break;
        std::uniform_int_distribution<std::size_t> pick(0, redexes.size() - 1);
        cur = contract_step(hs, cur, redexes[pick(rng)]);
        ++steps;
    }
    if (steps_out) *steps_out = steps;
    return cur;
}

namespace {

struct WireSegment {
    std::size_t len;
    std::string type;
    bool circle;
    std::optional<std::pair<std::string, int>> src_anchor;  // (lhs vertex, out-port)
    std::optional<std::pair<std::string, int>> tgt_anchor;  // (lhs vertex, in-port)
};

WireSegment segment_of(const OpenGraph& g, const Wire& w) {
    WireSegment s;
    s.len = w.points.size();
    s.type = w.type;
    s.circle = w.circle;
    if (w.src_vertex) s.src_anchor = {{*w.src_vertex, *g.edge(*w.src_edge).src_port}};
    if (w.tgt_vertex) s.tgt_anchor = {{*w.tgt_vertex, *g.edge(*w.tgt_edge).tgt_port}};
    return s;
}

using Profile = std::vector<std::size_t>;  // target length per host wire

// per-wire requirement while assembling one candidate expansion
struct Requirement {
    std::optional<std::size_t> exact;  // whole-wire occupants (vv segments, circles)
    std::size_t packed = 0;            // anchored/bare segments packed end to end

    bool add_exact(std::size_t n) {
        if (exact && *exact != n) return false;
        exact = n;
        return true;
    }
    std::optional<std::size_t> resolve(std::size_t normal_len) const {
        if (exact) return packed == 0 ? exact : std::nullopt;
        return std::max(normal_len, packed);
    }
};

} // namespace

std::vector<ExpandedMatch> match_modulo_homeo(const Rule& r, const OpenGraph& g) {
    const OpenGraph& lhs = r.lhs;
    OpenGraph base = normalize(g);
    std::vector<Wire> host_wires = wires(base);

    std::map<std::pair<std::string, int>, std::size_t> out_anchor, in_anchor;
    for (std::size_t i = 0; i < host_wires.size(); ++i) {
        const Wire& w = host_wires[i];
        if (w.src_vertex) out_anchor[{*w.src_vertex, *base.edge(*w.src_edge).src_port}] = i;
        if (w.tgt_vertex) in_anchor[{*w.tgt_vertex, *base.edge(*w.tgt_edge).tgt_port}] = i;
    }

    std::vector<WireSegment> anchored, bares, circles;
    for (const auto& w : wires(lhs)) {
        WireSegment s = segment_of(lhs, w);
        if (s.circle)
            circles.push_back(s);
        else if (s.src_anchor || s.tgt_anchor)
            anchored.push_back(s);
        else
            bares.push_back(s);
    }
    std::vector<std::size_t> host_circles;
    for (std::size_t i = 0; i < host_wires.size(); ++i)
        if (host_wires[i].circle) host_circles.push_back(i);

    std::vector<std::string> lhs_vertices;
    for (const auto& [id, p] : lhs.points())
        if (p.is_vertex()) lhs_vertices.push_back(id);
    std::vector<std::string> host_vertices;
    for (const auto& [id, p] : base.points())
        if (p.is_vertex()) host_vertices.push_back(id);

    std::set<Profile> profiles;
    {
        Profile normal;
        for (const auto& w : host_wires) normal.push_back(w.points.size());
        profiles.insert(normal);
    }

    // enumerate injective label-preserving vertex assignments, then bare and
    // circle placements; each combination proposes one expansion profile
    std::map<std::string, std::string> vmap;
    std::set<std::string> vused;

    auto propose = [&](const std::vector<Requirement>& reqs) {
        Profile p;
        for (std::size_t i = 0; i < host_wires.size(); ++i) {
            auto len = reqs[i].resolve(host_wires[i].points.size());
            if (!len) return;
            p.push_back(*len);
        }
        profiles.insert(std::move(p));
    };

    auto place_extras = [&](std::vector<Requirement> reqs) {
        // circles first (injective over host circles), then bare chains
        std::function<void(std::size_t, std::vector<Requirement>&)> place_bare =
            [&](std::size_t bi, std::vector<Requirement>& cur) {
                if (bi == bares.size()) {
                    propose(cur);
                    return;
                }
                for (std::size_t wi = 0; wi < host_wires.size(); ++wi) {
                    if (host_wires[wi].type != bares[bi].type) continue;
                    cur[wi].packed += bares[bi].len;
                    place_bare(bi + 1, cur);
                    cur[wi].packed -= bares[bi].len;
                }
            };
        std::function<void(std::size_t, std::vector<Requirement>&)> place_circle =
            [&](std::size_t ci, std::vector<Requirement>& cur) {
                if (ci == circles.size()) {
                    place_bare(0, cur);
                    return;
                }
                for (std::size_t hc : host_circles) {
                    if (host_wires[hc].type != circles[ci].type) continue;
                    Requirement saved = cur[hc];
                    if (!cur[hc].add_exact(circles[ci].len)) {
                        cur[hc] = saved;
                        continue;
                    }
                    place_circle(ci + 1, cur);
                    cur[hc] = saved;
                }
            };
        place_circle(0, reqs);
    };

    auto with_assignment = [&]() {
        std::vector<Requirement> reqs(host_wires.size());
        for (const auto& s : anchored) {
            std::optional<std::size_t> src_wire, tgt_wire;
            if (s.src_anchor) {
                auto it = out_anchor.find({vmap.at(s.src_anchor->first), s.src_anchor->second});
                if (it == out_anchor.end()) return;
                src_wire = it->second;
            }
            if (s.tgt_anchor) {
                auto it = in_anchor.find({vmap.at(s.tgt_anchor->first), s.tgt_anchor->second});
                if (it == in_anchor.end()) return;
                tgt_wire = it->second;
            }
            if (src_wire && tgt_wire) {
                if (*src_wire != *tgt_wire) return;  // lhs wire ties two host wires together
                if (!reqs[*src_wire].add_exact(s.len)) return;
            } else {
                reqs[src_wire ? *src_wire : *tgt_wire].packed += s.len;
            }
        }
        place_extras(std::move(reqs));
    };

    std::function<void(std::size_t)> assign = [&](std::size_t vi) {
        if (vi == lhs_vertices.size()) {
            with_assignment();
            return;
        }
        const Point& lp = lhs.point(lhs_vertices[vi]);
        for (const auto& hv : host_vertices) {
            if (vused.count(hv) || base.point(hv).label != lp.label) continue;
            vmap[lhs_vertices[vi]] = hv;
            vused.insert(hv);
            assign(vi + 1);
            vused.erase(hv);
            vmap.erase(lhs_vertices[vi]);
        }
    };
    assign(0);

    std::vector<ExpandedMatch> result;
    for (const Profile& profile : profiles) {
        OpenGraph host = base;
        for (std::size_t i = 0; i < host_wires.size(); ++i) {
            const Wire& w = host_wires[i];
            if (profile[i] <= w.points.size()) continue;
            std::string cur_edge;
            if (!w.edges.empty())
                cur_edge = w.edges.front();
            else if (w.src_edge)
                cur_edge = *w.src_edge;
            else if (w.tgt_edge)
                cur_edge = *w.tgt_edge;
            else
                continue;  // isolated point, nothing can land here
            for (std::size_t have = w.points.size(); have < profile[i]; ++have) {
                SubdivideInfo info;
                host = subdivide_edge(host, cur_edge, &info);
                cur_edge = info.first_edge;
            }
        }
        std::vector<Morphism> matches = find_matchings(lhs, host);
        if (!matches.empty()) result.push_back(ExpandedMatch{std::move(host), std::move(matches)});
    }
    return result;
}

} // namespace ogrw
