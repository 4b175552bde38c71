#include "ogrw/rule.hpp"

#include <algorithm>
#include <set>

#include "ogrw/boundary.hpp"
#include "ogrw/error.hpp"

namespace ogrw {

namespace {

// checks `pairs` is a type-compatible bijection between the two point sets
void check_correspondence(const OpenGraph& lhs, const OpenGraph& rhs,
                          const std::vector<std::pair<std::string, std::string>>& pairs,
                          const std::vector<std::string>& lhs_side,
                          const std::vector<std::string>& rhs_side, const char* which) {
    std::set<std::string> lseen, rseen;
    for (const auto& [lp, rp] : pairs) {
        if (!std::binary_search(lhs_side.begin(), lhs_side.end(), lp))
            throw Error(ErrorCode::BoundaryMismatch, lp,
                        std::string(which) + " pair does not name an lhs boundary point");
        if (!std::binary_search(rhs_side.begin(), rhs_side.end(), rp))
            throw Error(ErrorCode::BoundaryMismatch, rp,
                        std::string(which) + " pair does not name an rhs boundary point");
        if (!lseen.insert(lp).second || !rseen.insert(rp).second)
            throw Error(ErrorCode::BoundaryMismatch, lp,
                        std::string(which) + " correspondence repeats a point");
        if (lhs.point(lp).label != rhs.point(rp).label)
            throw Error(ErrorCode::BoundaryMismatch, lp,
                        "types differ: '" + lhs.point(lp).label + "' vs '" +
                            rhs.point(rp).label + "'");
    }
    if (lseen.size() != lhs_side.size() || rseen.size() != rhs_side.size())
        throw Error(ErrorCode::BoundaryMismatch, "",
                    std::string(which) + " correspondence does not cover the boundary");
}

} // namespace

Rule make_rule(const OpenGraph& lhs, const OpenGraph& rhs,
               const std::vector<std::pair<std::string, std::string>>& input_map,
               const std::vector<std::pair<std::string, std::string>>& output_map) {
    validate_graph(lhs);
    validate_graph(rhs);
    if (lhs.has_isolated_points() || rhs.has_isolated_points())
        throw Error(ErrorCode::IsolatedPointInRule, "",
                    "rule sides must not contain isolated points");
    check_correspondence(lhs, rhs, input_map, lhs.inputs(), rhs.inputs(), "input");
    check_correspondence(lhs, rhs, output_map, lhs.outputs(), rhs.outputs(), "output");

    Rule r;
    r.lhs = lhs;
    r.rhs = rhs;
    BoundaryMap bm = boundary(lhs);
    r.boundary = bm.boundary;
    r.to_lhs = bm.map;

    std::map<std::string, std::string> rhs_of;
    for (const auto& [lp, rp] : input_map) rhs_of["i" + lp] = rp;
    for (const auto& [lp, rp] : output_map) rhs_of["o" + lp] = rp;
    for (const auto& bid : bm.input_copies)
        r.to_rhs.points[bid] = rhs_of.at("i" + bm.map.at_point(bid));
    for (const auto& bid : bm.output_copies)
        r.to_rhs.points[bid] = rhs_of.at("o" + bm.map.at_point(bid));
    return r;
}

void validate_rule(const Rule& r) {
    validate_graph(r.lhs);
    validate_graph(r.rhs);
    if (!r.boundary.is_point_graph())
        throw Error(ErrorCode::BoundaryMismatch, "", "rule boundary must be a point-graph");
    if (r.lhs.has_isolated_points() || r.rhs.has_isolated_points())
        throw Error(ErrorCode::IsolatedPointInRule, "",
                    "rule sides must not contain isolated points");
    check_morphism(r.boundary, r.lhs, r.to_lhs);
    check_morphism(r.boundary, r.rhs, r.to_rhs);
    if (!is_mono(r.to_lhs) || !is_mono(r.to_rhs))
        throw Error(ErrorCode::BoundaryMismatch, "", "rule boundary legs must be injective");

    // the two sides must share the boundary: inputs land on inputs and give
    // a bijection, dually for outputs
    std::set<std::string> lhs_in, rhs_in, lhs_out, rhs_out;
    for (const auto& [bid, bp] : r.boundary.points()) {
        const std::string& lp = r.to_lhs.at_point(bid);
        const std::string& rp = r.to_rhs.at_point(bid);
        bool lin = r.lhs.is_input(lp), lout = r.lhs.is_output(lp);
        bool rin = r.rhs.is_input(rp), rout = r.rhs.is_output(rp);
        if (!((lin && rin) || (lout && rout)))
            throw Error(ErrorCode::BoundaryMismatch, bid,
                        "boundary copy must map to inputs on both sides or outputs on both");
        if (lin && rin) {
            lhs_in.insert(lp);
            rhs_in.insert(rp);
        } else {
            lhs_out.insert(lp);
            rhs_out.insert(rp);
        }
    }
    auto all_in_l = r.lhs.inputs();
    auto all_out_l = r.lhs.outputs();
    auto all_in_r = r.rhs.inputs();
    auto all_out_r = r.rhs.outputs();
    if (lhs_in.size() != all_in_l.size() || rhs_in.size() != all_in_r.size() ||
        lhs_out.size() != all_out_l.size() || rhs_out.size() != all_out_r.size())
        throw Error(ErrorCode::BoundaryMismatch, "", "boundary legs do not cover both sides");
}

Rule reverse_rule(const Rule& r) {
    Rule rev;
    rev.lhs = r.rhs;
    rev.rhs = r.lhs;
    rev.boundary = r.boundary;
    rev.to_lhs = r.to_rhs;
    rev.to_rhs = r.to_lhs;
    return rev;
}

} // namespace ogrw
