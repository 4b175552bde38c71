#pragma once

#include <stdexcept>
#include <string>

namespace ogrw {

/// Reason codes for every domain failure the library can report.
enum class ErrorCode {
    // graph validation
    DoubleIn,
    DoubleOut,
    ArityMismatch,
    PortClash,
    VertexVertexEdge,
    TypeMismatch,
    BadBoundaryOrder,
    // morphism checking
    NotStructurePreserving,
    NotFullOnVertices,
    LabelMismatch,
    // merging / plugging / subtraction
    NotCoherent,
    ApexNotPointGraph,
    HasIsolatedPoints,
    NotMatching,
    // rules
    BoundaryMismatch,
    IsolatedPointInRule,
    // cospans
    WordMismatch,
    // semantics
    ShapeMismatch,
    Overflow,
    // theory files
    ParseError,
    ValidationError,
};

const char* code_name(ErrorCode code);

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, std::string item, const std::string& detail);

    ErrorCode code() const { return code_; }

    /// Id of the first offending point/edge/name, empty when not applicable.
    const std::string& item() const { return item_; }

private:
    ErrorCode code_;
    std::string item_;
};

} // namespace ogrw
