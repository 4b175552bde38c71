#pragma once

#include <map>
#include <string>

#include "ogrw/graph.hpp"

namespace ogrw {

/// A graph morphism as raw point/edge maps. Source and target graphs are
/// passed alongside wherever structure matters.
struct Morphism {
    std::map<std::string, std::string> points;
    std::map<std::string, std::string> edges;

    const std::string& at_point(const std::string& id) const;
    const std::string& at_edge(const std::string& id) const;

    bool operator==(const Morphism&) const = default;
};

Morphism identity_morphism(const OpenGraph& g);

/// Throws NOT_STRUCTURE_PRESERVING, LABEL_MISMATCH or NOT_FULL_ON_VERTICES
/// when f is not a morphism src -> tgt of open-graphs: the maps must be
/// total, commute with sources/targets, preserve labels, types and ports,
/// and every edge adjacent to an image vertex must itself be an image edge.
void check_morphism(const OpenGraph& src, const OpenGraph& tgt, const Morphism& f);

bool is_morphism(const OpenGraph& src, const OpenGraph& tgt, const Morphism& f);

/// True iff both maps are injective.
bool is_mono(const Morphism& f);

/// g after f.
Morphism compose(const Morphism& f, const Morphism& g);

/// Inverse of a bijective morphism.
Morphism invert(const Morphism& f);

} // namespace ogrw
