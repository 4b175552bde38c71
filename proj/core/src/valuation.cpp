#include "ogrw/valuation.hpp"

#include <algorithm>

#include "ogrw/error.hpp"
#include "ogrw/homeo.hpp"

namespace ogrw {

void validate_valuation(const Signature& sig, const Valuation& v) {
    for (const auto& o : sig.objects()) {
        auto it = v.dims.find(o);
        if (it == v.dims.end())
            throw Error(ErrorCode::ShapeMismatch, o, "no dimension for object");
        if (it->second < 1)
            throw Error(ErrorCode::ShapeMismatch, o, "dimensions must be at least 1");
    }
    for (const auto& [gen, type] : sig.generators()) {
        auto it = v.tensors.find(gen);
        if (it == v.tensors.end())
            throw Error(ErrorCode::ShapeMismatch, gen, "no tensor for generator");
        const Tensor& t = it->second;
        std::vector<std::pair<std::string, int>> expect;
        for (const auto& o : type.dom) expect.emplace_back(o, v.dims.at(o));
        for (const auto& o : type.cod) expect.emplace_back(o, v.dims.at(o));
        if (t.shape != expect)
            throw Error(ErrorCode::ShapeMismatch, gen, "tensor shape disagrees with the arity");
        if (t.entries.size() != t.size())
            throw Error(ErrorCode::ShapeMismatch, gen, "entry count differs from the shape");
    }
}

namespace {

// advance a mixed-radix counter; false once it wraps around
bool odometer(std::vector<int>& idx, const std::vector<int>& dims) {
    for (std::size_t i = idx.size(); i-- > 0;) {
        if (++idx[i] < dims[i]) return true;
        idx[i] = 0;
    }
    return false;
}

} // namespace

Tensor evaluate(const Cospan& g, const Valuation& v) {
    validate_cospan(g);
    validate_valuation(g.middle.sig(), v);

    auto ws = wires(g.middle);
    std::map<std::string, std::size_t> wire_of;
    for (std::size_t i = 0; i < ws.size(); ++i)
        for (const auto& p : ws[i].points) wire_of[p] = i;
    std::vector<int> wdim(ws.size());
    for (std::size_t i = 0; i < ws.size(); ++i) wdim[i] = v.dims.at(ws[i].type);

    std::int64_t circle_factor = 1;
    std::vector<std::size_t> free_wires;
    std::vector<bool> pinned(ws.size(), false);
    for (const auto& x : *g.middle.input_order()) pinned[wire_of.at(x)] = true;
    for (const auto& x : *g.middle.output_order()) pinned[wire_of.at(x)] = true;
    for (std::size_t i = 0; i < ws.size(); ++i) {
        if (ws[i].circle)
            circle_factor = checked_mul(circle_factor, wdim[i]);
        else if (!pinned[i])
            free_wires.push_back(i);
    }

    // per vertex: its tensor plus the wires at its ports in dom-then-cod order
    struct VertexArgs {
        const Tensor* tensor;
        std::vector<std::size_t> arg_wires;
    };
    std::vector<VertexArgs> verts;
    for (const auto& [pid, p] : g.middle.points()) {
        if (!p.is_vertex()) continue;
        VertexArgs va;
        va.tensor = &v.tensors.at(p.label);
        const GeneratorType& type = g.middle.sig().generator(p.label);
        std::vector<std::size_t> by_in_port(type.dom.size()), by_out_port(type.cod.size());
        for (const auto& eid : g.middle.in_edges(pid)) {
            const Edge& e = g.middle.edge(eid);
            by_in_port[static_cast<std::size_t>(*e.tgt_port)] = wire_of.at(e.src);
        }
        for (const auto& eid : g.middle.out_edges(pid)) {
            const Edge& e = g.middle.edge(eid);
            by_out_port[static_cast<std::size_t>(*e.src_port)] = wire_of.at(e.tgt);
        }
        va.arg_wires = by_in_port;
        va.arg_wires.insert(va.arg_wires.end(), by_out_port.begin(), by_out_port.end());
        verts.push_back(std::move(va));
    }

    Tensor result;
    for (const auto& o : g.dom) result.shape.emplace_back(o, v.dims.at(o));
    for (const auto& o : g.cod) result.shape.emplace_back(o, v.dims.at(o));
    result.entries.assign(result.size(), 0);

    std::vector<int> bdims;
    for (const auto& [o, d] : result.shape) bdims.push_back(d);
    std::vector<int> bidx(bdims.size(), 0);
    std::vector<int> fdims;
    for (std::size_t i : free_wires) fdims.push_back(wdim[i]);

    std::size_t flat = 0;
    bool more = !bdims.empty();
    do {
        std::vector<int> assign(ws.size(), -1);
        bool consistent = true;
        for (std::size_t i = 0; i < g.dom.size() && consistent; ++i) {
            std::size_t w = wire_of.at((*g.middle.input_order())[i]);
            if (assign[w] >= 0 && assign[w] != bidx[i]) consistent = false;
            assign[w] = bidx[i];
        }
        for (std::size_t j = 0; j < g.cod.size() && consistent; ++j) {
            std::size_t w = wire_of.at((*g.middle.output_order())[j]);
            int want = bidx[g.dom.size() + j];
            if (assign[w] >= 0 && assign[w] != want) consistent = false;
            assign[w] = want;
        }

        std::int64_t sum = 0;
        if (consistent) {
            std::vector<int> fidx(free_wires.size(), 0);
            bool inner = true;
            while (inner) {
                for (std::size_t i = 0; i < free_wires.size(); ++i)
                    assign[free_wires[i]] = fidx[i];
                std::int64_t prod = 1;
                for (const auto& va : verts) {
                    std::vector<int> args;
                    args.reserve(va.arg_wires.size());
                    for (std::size_t w : va.arg_wires) args.push_back(assign[w]);
                    prod = checked_mul(prod, va.tensor->at(args));
                    if (prod == 0) break;
                }
                sum = checked_add(sum, prod);
                inner = odometer(fidx, fdims);
                if (fidx.empty()) break;
            }
        }
        result.entries[flat++] = checked_mul(sum, circle_factor);
        if (bdims.empty()) break;
        more = odometer(bidx, bdims);
    } while (more);

    return result;
}

Cospan rule_side_cospan(const Rule& r, bool left) {
    const OpenGraph& side = left ? r.lhs : r.rhs;
    const Morphism& leg = left ? r.to_lhs : r.to_rhs;
    Cospan c;
    c.middle = side;
    std::vector<std::string> in, out;
    for (const auto& [bid, bp] : r.boundary.points()) {
        if (r.lhs.is_input(r.to_lhs.at_point(bid))) {
            in.push_back(leg.at_point(bid));
            c.dom.push_back(bp.label);
        } else {
            out.push_back(leg.at_point(bid));
            c.cod.push_back(bp.label);
        }
    }
    c.middle.set_boundary_order(std::move(in), std::move(out));
    validate_cospan(c);
    return c;
}

bool check_rule_sound(const Rule& r, const Valuation& v) {
    return evaluate(rule_side_cospan(r, true), v) == evaluate(rule_side_cospan(r, false), v);
}

SignaturePtr bool_signature() {
    return make_signature({"B"}, {
                                     {"and", {{"B", "B"}, {"B"}}},
                                     {"not", {{"B"}, {"B"}}},
                                     {"copy", {{"B"}, {"B", "B"}}},
                                     {"ignore", {{"B"}, {}}},
                                     {"val_T", {{}, {"B"}}},
                                     {"val_F", {{}, {"B"}}},
                                 });
}

Valuation bool_valuation() {
    Valuation v;
    v.dims["B"] = 2;
    auto b = [](const std::string& o) { return std::pair<std::string, int>{o, 2}; };
    v.tensors["and"] = Tensor{{b("B"), b("B"), b("B")}, {1, 0, 1, 0, 1, 0, 0, 1}};
    v.tensors["not"] = Tensor{{b("B"), b("B")}, {0, 1, 1, 0}};
    v.tensors["copy"] = Tensor{{b("B"), b("B"), b("B")}, {1, 0, 0, 0, 0, 0, 0, 1}};
    v.tensors["ignore"] = Tensor{{b("B")}, {1, 1}};
    v.tensors["val_T"] = Tensor{{b("B")}, {0, 1}};
    v.tensors["val_F"] = Tensor{{b("B")}, {1, 0}};
    return v;
}

} // namespace ogrw
