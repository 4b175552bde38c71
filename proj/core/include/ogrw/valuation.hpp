#pragma once

#include <map>
#include <string>

#include "ogrw/cospan.hpp"
#include "ogrw/rule.hpp"
#include "ogrw/signature.hpp"
#include "ogrw/tensor.hpp"

namespace ogrw {

/// A concrete model: a dimension per object type and a tensor per
/// generator, shaped dom-dims x cod-dims (dom indices first, row-major).
struct Valuation {
    std::map<std::string, int> dims;
    std::map<std::string, Tensor> tensors;

    bool operator==(const Valuation&) const = default;
};

/// Checks the valuation covers the signature with correctly-shaped tensors.
void validate_valuation(const Signature& sig, const Valuation& v);

/// Interprets the cospan as a multilinear map by brute force: one index per
/// wire of the middle graph, summing the product of generator entries over
/// all assignments to internal wires; each closed circle contributes a
/// factor of its type's dimension. The result tensor has the dom word's
/// dimensions followed by the cod word's.
Tensor evaluate(const Cospan& g, const Valuation& v);

/// True iff both sides of the rule, lifted to cospans over the rule's
/// boundary, evaluate to the same tensor entrywise.
bool check_rule_sound(const Rule& r, const Valuation& v);

/// Lifts a rule side to a cospan with the boundary order induced by the
/// rule's span (boundary copies in sorted id order).
Cospan rule_side_cospan(const Rule& r, bool left);

/// The six boolean-circuit generators over one object B.
SignaturePtr bool_signature();

/// The standard model of the boolean generators at dim(B) = 2: conjunction
/// table, negation permutation, copy diagonal, all-ones discard, and basis
/// vectors for the two constants.
Valuation bool_valuation();

} // namespace ogrw
