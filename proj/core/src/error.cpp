#include "ogrw/error.hpp"

namespace ogrw {

const char* code_name(ErrorCode code) {
    switch (code) {
        case ErrorCode::DoubleIn: return "DOUBLE_IN";
        case ErrorCode::DoubleOut: return "DOUBLE_OUT";
        case ErrorCode::ArityMismatch: return "ARITY_MISMATCH";
        case ErrorCode::PortClash: return "PORT_CLASH";
        case ErrorCode::VertexVertexEdge: return "VERTEX_VERTEX_EDGE";
        case ErrorCode::TypeMismatch: return "TYPE_MISMATCH";
        case ErrorCode::BadBoundaryOrder: return "BAD_BOUNDARY_ORDER";
        case ErrorCode::NotStructurePreserving: return "NOT_STRUCTURE_PRESERVING";
        case ErrorCode::NotFullOnVertices: return "NOT_FULL_ON_VERTICES";
        case ErrorCode::LabelMismatch: return "LABEL_MISMATCH";
        case ErrorCode::NotCoherent: return "NOT_COHERENT";
        case ErrorCode::ApexNotPointGraph: return "APEX_NOT_POINT_GRAPH";
        case ErrorCode::HasIsolatedPoints: return "HAS_ISOLATED_POINTS";
        case ErrorCode::NotMatching: return "NOT_MATCHING";
        case ErrorCode::BoundaryMismatch: return "BOUNDARY_MISMATCH";
        case ErrorCode::IsolatedPointInRule: return "ISOLATED_POINT_IN_RULE";
        case ErrorCode::WordMismatch: return "WORD_MISMATCH";
        case ErrorCode::ShapeMismatch: return "SHAPE_MISMATCH";
        case ErrorCode::Overflow: return "OVERFLOW";
        case ErrorCode::ParseError: return "PARSE_ERROR";
        case ErrorCode::ValidationError: return "VALIDATION_ERROR";
    }
    return "UNKNOWN";
}

Error::Error(ErrorCode code, std::string item, const std::string& detail)
    : std::runtime_error(std::string(code_name(code)) + (item.empty() ? "" : " [" + item + "]") +
                         (detail.empty() ? "" : ": " + detail)),
      code_(code),
      item_(std::move(item)) {}

} // namespace ogrw
