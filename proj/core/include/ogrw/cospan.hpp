#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ogrw/graph.hpp"
#include "ogrw/morphism.hpp"
#include "ogrw/rule.hpp"

namespace ogrw {

/// A word over the signature's object types.
using Word = std::vector<std::string>;

/// An arrow of the directed-cospan category: a middle graph without
/// isolated points whose ordered inputs realize `dom` and ordered outputs
/// realize `cod` (the orders live on the middle graph itself).
struct Cospan {
    Word dom;
    Word cod;
    OpenGraph middle;
};

void validate_cospan(const Cospan& c);

/// |w| parallel two-point wires, one per letter.
Cospan identity_cospan(const SignaturePtr& sig, const Word& w);

/// Plugs g's outputs onto h's inputs position-wise; requires cod(g) = dom(h).
Cospan compose(const Cospan& g, const Cospan& h);

/// Side-by-side composition: disjoint union of middles, concatenated words.
Cospan tensor(const Cospan& g, const Cospan& h);

/// The block swap v·w -> w·v realized by crossing wires.
Cospan symmetry(const SignaturePtr& sig, const Word& v, const Word& w);

/// Feeds the last b_len outputs back into the last b_len inputs through a
/// link graph of single edges; the suffixes must agree as words.
Cospan trace(const Cospan& g, std::size_t b_len);

/// One box with a dangling wire per port.
Cospan generator_cospan(const SignaturePtr& sig, const std::string& gen);

/// Rewrites the middle graph and re-derives the legs through the preserved
/// boundary; dom/cod are unchanged.
Cospan rewrite_cospan(const Rule& r, const Cospan& g, const Morphism& m);

/// Contracts the middle to homeomorphism normal form, tracking the legs.
Cospan normalize_cospan(const Cospan& g);

/// Boundary-order-respecting isomorphism of middles, provided the words match.
std::optional<Morphism> cospan_isomorphism(const Cospan& a, const Cospan& b);

enum class Equiv { Equivalent, NotEquivalent, NotFoundWithinDepth };

/// Without a system: equality in the homeomorphism quotient (normalize both
/// middles, then iso-check respecting boundary orders). With a system:
/// bounded bidirectional search under the system plus homeomorphism; a
/// semi-decision, so exhausting the depth reports NotFoundWithinDepth.
Equiv equivalent(const Cospan& g, const Cospan& h, const RewriteSystem* sys = nullptr,
                 int max_depth = 0);

/// True iff the middle graph is directed acyclic.
bool is_progressive(const Cospan& g);

} // namespace ogrw
