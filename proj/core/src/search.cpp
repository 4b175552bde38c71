// Backtracking embedding search shared by find_matchings and
// find_isomorphism. Pattern points are visited in a connectivity-aware
// deterministic order; candidates are derived from already-assigned
// neighbours where possible.

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "ogrw/error.hpp"
#include "ogrw/iso.hpp"
#include "ogrw/match.hpp"

namespace ogrw {
namespace {

struct Search {
    const OpenGraph& pat;
    const OpenGraph& host;
    bool bijective;
    bool first_only;
    std::map<std::string, std::string> seed;

    std::vector<std::string> order;
    std::map<std::string, std::string> assign;
    std::set<std::string> used;
    std::vector<Morphism> results;

    Search(const OpenGraph& pat_, const OpenGraph& host_, bool bijective_, bool first_only_,
           const std::map<std::string, std::string>& seed_)
        : pat(pat_), host(host_), bijective(bijective_), first_only(first_only_), seed(seed_) {}

    std::vector<std::string> pattern_neighbours(const std::string& p) const {
        std::vector<std::string> nbrs;
        for (const auto& eid : pat.in_edges(p)) nbrs.push_back(pat.edge(eid).src);
        for (const auto& eid : pat.out_edges(p)) nbrs.push_back(pat.edge(eid).tgt);
        return nbrs;
    }

    void build_order() {
        std::set<std::string> remaining;
        for (const auto& [id, p] : pat.points()) remaining.insert(id);
        std::set<std::string> frontier;

        for (const auto& [id, mapped] : seed) {
            if (!remaining.count(id)) continue;
            order.push_back(id);
            remaining.erase(id);
            for (const auto& n : pattern_neighbours(id))
                if (remaining.count(n)) frontier.insert(n);
        }
        while (!remaining.empty()) {
            while (!frontier.empty() && !remaining.count(*frontier.begin()))
                frontier.erase(frontier.begin());
            std::string next;
            if (!frontier.empty()) {
                next = *frontier.begin();
            } else {
                // start a new component, vertices first (most constrained)
                for (const auto& id : remaining)
                    if (pat.point(id).is_vertex()) {
                        next = id;
                        break;
                    }
                if (next.empty()) next = *remaining.begin();
            }
            order.push_back(next);
            remaining.erase(next);
            frontier.erase(next);
            for (const auto& n : pattern_neighbours(next))
                if (remaining.count(n)) frontier.insert(n);
        }
    }

    bool candidate_ok(const std::string& p, const std::string& c) const {
        const Point& pp = pat.point(p);
        const Point& cp = host.point(c);
        if (pp.kind != cp.kind || pp.label != cp.label) return false;
        if (used.count(c)) return false;
        if (auto it = seed.find(p); it != seed.end() && it->second != c) return false;
        if (!pp.is_vertex()) {
            std::size_t pi = pat.in_edges(p).size(), po = pat.out_edges(p).size();
            std::size_t ci = host.in_edges(c).size(), co = host.out_edges(c).size();
            if (bijective ? (pi != ci || po != co) : (pi > ci || po > co)) return false;
        }
        // every pattern edge between p and an assigned point must have a
        // compatible host edge between c and that point's image
        for (const auto& eid : pat.in_edges(p)) {
            const Edge& e = pat.edge(eid);
            auto it = assign.find(e.src);
            if (it == assign.end() && e.src != p) continue;
            const std::string& src_img = (e.src == p) ? c : it->second;
            if (!host_edge_between(src_img, c, e)) return false;
        }
        for (const auto& eid : pat.out_edges(p)) {
            const Edge& e = pat.edge(eid);
            if (e.src == e.tgt) continue;  // self-loop, handled above
            auto it = assign.find(e.tgt);
            if (it == assign.end()) continue;
            if (!host_edge_between(c, it->second, e)) return false;
        }
        return true;
    }

    bool host_edge_between(const std::string& src, const std::string& tgt,
                           const Edge& like) const {
        for (const auto& eid : host.out_edges(src)) {
            const Edge& e = host.edge(eid);
            if (e.tgt == tgt && e.type == like.type && e.src_port == like.src_port &&
                e.tgt_port == like.tgt_port)
                return true;
        }
        return false;
    }

    std::optional<std::string> host_edge_id_between(const std::string& src,
                                                    const std::string& tgt,
                                                    const Edge& like) const {
        for (const auto& eid : host.out_edges(src)) {
            const Edge& e = host.edge(eid);
            if (e.tgt == tgt && e.type == like.type && e.src_port == like.src_port &&
                e.tgt_port == like.tgt_port)
                return eid;
        }
        return std::nullopt;
    }

    void emit() {
        Morphism m;
        m.points = assign;
        for (const auto& [eid, e] : pat.edges()) {
            auto hit = host_edge_id_between(assign.at(e.src), assign.at(e.tgt), e);
            if (!hit) return;
            m.edges[eid] = *hit;
        }
        if (bijective && m.edges.size() != host.edges().size()) return;
        results.push_back(std::move(m));
    }

    bool done() const { return first_only && !results.empty(); }

    void recurse(std::size_t depth) {
        if (done()) return;
        if (depth == order.size()) {
            emit();
            return;
        }
        // TODO: order candidates by label rarity to cut the fanout on hosts
        // with many same-label vertices (see BM_Matchings/16)
        const std::string& p = order[depth];
        for (const auto& [cid, cpoint] : host.points()) {
            if (!candidate_ok(p, cid)) continue;
            assign[p] = cid;
            used.insert(cid);
            recurse(depth + 1);
            used.erase(cid);
            assign.erase(p);
            if (done()) return;
        }
    }

    std::vector<Morphism> run() {
        if (bijective) {
            if (pat.points().size() != host.points().size() ||
                pat.edges().size() != host.edges().size())
                return {};
            std::map<std::pair<int, std::string>, int> balance;
            for (const auto& [id, p] : pat.points())
                ++balance[{static_cast<int>(p.kind), p.label}];
            for (const auto& [id, p] : host.points())
                --balance[{static_cast<int>(p.kind), p.label}];
            for (const auto& [key, n] : balance)
                if (n != 0) return {};
        }
        build_order();
        recurse(0);
        return results;
    }
};

} // namespace

std::vector<Morphism> find_matchings(const OpenGraph& pattern, const OpenGraph& host) {
    Search s(pattern, host, /*bijective=*/false, /*first_only=*/false, {});
    return s.run();
}

std::optional<Morphism> find_isomorphism(const OpenGraph& g, const OpenGraph& h,
                                         bool respect_boundary_order,
                                         const std::map<std::string, std::string>& seed) {
    std::map<std::string, std::string> full_seed = seed;
    if (respect_boundary_order) {
        if (g.input_order().has_value() != h.input_order().has_value() ||
            g.output_order().has_value() != h.output_order().has_value())
            return std::nullopt;
        if (g.input_order()) {
            if (g.input_order()->size() != h.input_order()->size() ||
                g.output_order()->size() != h.output_order()->size())
                return std::nullopt;
            for (std::size_t i = 0; i < g.input_order()->size(); ++i) {
                auto [it, fresh] =
                    full_seed.emplace((*g.input_order())[i], (*h.input_order())[i]);
                if (!fresh && it->second != (*h.input_order())[i]) return std::nullopt;
            }
            for (std::size_t i = 0; i < g.output_order()->size(); ++i) {
                auto [it, fresh] =
                    full_seed.emplace((*g.output_order())[i], (*h.output_order())[i]);
                if (!fresh && it->second != (*h.output_order())[i]) return std::nullopt;
            }
        }
    }
    Search s(g, h, /*bijective=*/true, /*first_only=*/true, full_seed);
    auto results = s.run();
    if (results.empty()) return std::nullopt;
    return results.front();
}

bool isomorphic(const OpenGraph& g, const OpenGraph& h, bool respect_boundary_order) {
    return find_isomorphism(g, h, respect_boundary_order).has_value();
}

} // namespace ogrw
