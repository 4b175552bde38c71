#pragma once

// Independent brute-force interpreter used to cross-check evaluate(): one
// index per edge-point (not per wire), a Kronecker delta per edge between
// two edge-points, generator entries looked up through the adjacent
// edge-points. Deliberately shares no code with the library's evaluator.

#include <map>
#include <string>
#include <vector>

#include "ogrw/cospan.hpp"
#include "ogrw/tensor.hpp"
#include "ogrw/valuation.hpp"

namespace ogrw::testing {

inline Tensor oracle_evaluate(const Cospan& c, const Valuation& v) {
    const OpenGraph& g = c.middle;

    std::vector<std::string> eps;
    for (const auto& [id, p] : g.points())
        if (!p.is_vertex()) eps.push_back(id);
    std::map<std::string, std::size_t> slot;
    for (std::size_t i = 0; i < eps.size(); ++i) slot[eps[i]] = i;
    std::vector<int> dims(eps.size());
    for (std::size_t i = 0; i < eps.size(); ++i) dims[i] = v.dims.at(g.point(eps[i]).label);

    Tensor result;
    for (const auto& o : c.dom) result.shape.emplace_back(o, v.dims.at(o));
    for (const auto& o : c.cod) result.shape.emplace_back(o, v.dims.at(o));
    result.entries.assign(result.size(), 0);

    std::vector<int> assign(eps.size(), 0);
    bool more = !eps.empty();
    do {
        // contribution of this total assignment of edge-point indices
        std::int64_t weight = 1;
        for (const auto& [id, e] : g.edges()) {
            if (g.point(e.src).is_vertex() || g.point(e.tgt).is_vertex()) continue;
            if (assign[slot.at(e.src)] != assign[slot.at(e.tgt)]) {
                weight = 0;
                break;
            }
        }
        if (weight != 0) {
            for (const auto& [pid, p] : g.points()) {
                if (!p.is_vertex()) continue;
                const GeneratorType& type = g.sig().generator(p.label);
                std::vector<int> args(type.dom.size() + type.cod.size(), 0);
                for (const auto& eid : g.in_edges(pid))
                    args[static_cast<std::size_t>(*g.edge(eid).tgt_port)] =
                        assign[slot.at(g.edge(eid).src)];
                for (const auto& eid : g.out_edges(pid))
                    args[type.dom.size() + static_cast<std::size_t>(*g.edge(eid).src_port)] =
                        assign[slot.at(g.edge(eid).tgt)];
                weight = checked_mul(weight, v.tensors.at(p.label).at(args));
                if (weight == 0) break;
            }
        }
        if (weight != 0) {
            std::vector<int> out_index;
            for (const auto& x : *g.input_order()) out_index.push_back(assign[slot.at(x)]);
            for (const auto& x : *g.output_order()) out_index.push_back(assign[slot.at(x)]);
            std::size_t flat = result.flatten(out_index);
            result.entries[flat] = checked_add(result.entries[flat], weight);
        }

        // advance
        more = false;
        for (std::size_t i = eps.size(); i-- > 0;) {
            if (++assign[i] < dims[i]) {
                more = true;
                break;
            }
            assign[i] = 0;
        }
    } while (more);

    return result;
}

} // namespace ogrw::testing
