#pragma once

#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace ogrw {

/// Input/output type words of one generator.
struct GeneratorType {
    std::vector<std::string> dom;
    std::vector<std::string> cod;

    bool operator==(const GeneratorType&) const = default;
};

/// A graphical signature: a finite set of object (wire) types plus a map
/// assigning each generator (box) its input and output type words.
class Signature {
public:
    Signature(std::set<std::string> objects, std::map<std::string, GeneratorType> generators);

    const std::set<std::string>& objects() const { return objects_; }
    const std::map<std::string, GeneratorType>& generators() const { return generators_; }

    bool has_object(const std::string& name) const { return objects_.count(name) != 0; }
    bool has_generator(const std::string& name) const { return generators_.count(name) != 0; }
    const GeneratorType& generator(const std::string& name) const;

    bool operator==(const Signature&) const = default;

private:
    std::set<std::string> objects_;
    std::map<std::string, GeneratorType> generators_;
};

using SignaturePtr = std::shared_ptr<const Signature>;

SignaturePtr make_signature(std::set<std::string> objects,
                            std::map<std::string, GeneratorType> generators);

/// One edge of a typegraph. Generator-adjacent edges carry the port index;
/// object self-loops carry none.
struct TypeGraphEdge {
    std::string src;
    std::string tgt;
    std::optional<int> port;

    bool is_self_loop() const { return src == tgt && !port; }
    bool operator==(const TypeGraphEdge&) const = default;
};

/// The typegraph of a signature: one point per object and per generator,
/// a self-loop per object, and a port-ordered edge per generator dom/cod slot.
struct TypeGraph {
    std::vector<std::string> object_points;     // sorted
    std::vector<std::string> generator_points;  // sorted
    std::vector<TypeGraphEdge> edges;

    std::size_t point_count() const { return object_points.size() + generator_points.size(); }
    bool operator==(const TypeGraph&) const = default;
};

TypeGraph build_typegraph(const Signature& sig);

} // namespace ogrw
