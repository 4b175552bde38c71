#pragma once

#include <map>
#include <string>
#include <vector>

#include "ogrw/graph.hpp"
#include "ogrw/rule.hpp"
#include "ogrw/valuation.hpp"

namespace ogrw {

/// One signature plus named graphs, rules, rewrite systems and valuations,
/// as read from a .theory file.
struct Theory {
    SignaturePtr sig;
    std::map<std::string, OpenGraph> graphs;
    std::map<std::string, Rule> rules;
    /// System definitions as written: rule names, optionally "~"-prefixed
    /// for the reversed rule.
    std::map<std::string, std::vector<std::string>> system_specs;
    std::map<std::string, Valuation> valuations;

    /// Resolves a named system; reversed entries keep their "~name" key.
    RewriteSystem system(const std::string& name) const;

    bool operator==(const Theory& other) const;
};

/// Parses the UTF-8 JSON theory format. Malformed JSON and unknown fields
/// raise PARSE_ERROR (with line/column for syntax errors); anything that
/// fails graph/rule/valuation validation raises VALIDATION_ERROR carrying
/// the underlying reason.
Theory parse_theory(const std::string& text);
Theory parse_theory_file(const std::string& path);

/// Deterministic serialization; parse_theory(serialize_theory(t)) == t.
std::string serialize_theory(const Theory& t);

/// One graph in the theory file's graph format (pretty-printed JSON).
std::string serialize_graph(const OpenGraph& g);

/// The bundled boolean-circuit theory: the six boolean generators plus an
/// identity buffer box, the evaluation axioms, double negation, the
/// contradiction rule, the or-gate demo graphs and the standard valuation.
Theory bool_theory();

} // namespace ogrw
