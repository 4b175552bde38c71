#include "ogrw/signature.hpp"

#include "ogrw/error.hpp"

namespace ogrw {

Signature::Signature(std::set<std::string> objects, std::map<std::string, GeneratorType> generators)
    : objects_(std::move(objects)), generators_(std::move(generators)) {
    for (const auto& [name, type] : generators_) {
        if (objects_.count(name))
            throw Error(ErrorCode::ValidationError, name,
                        "generator name collides with an object name");
        for (const auto& o : type.dom)
            if (!objects_.count(o))
                throw Error(ErrorCode::ValidationError, name, "unknown object '" + o + "' in dom");
        for (const auto& o : type.cod)
            if (!objects_.count(o))
                throw Error(ErrorCode::ValidationError, name, "unknown object '" + o + "' in cod");
    }
}

const GeneratorType& Signature::generator(const std::string& name) const {
    auto it = generators_.find(name);
    if (it == generators_.end())
        throw Error(ErrorCode::ValidationError, name, "unknown generator");
    return it->second;
}

SignaturePtr make_signature(std::set<std::string> objects,
                            std::map<std::string, GeneratorType> generators) {
    return std::make_shared<const Signature>(std::move(objects), std::move(generators));
}

TypeGraph build_typegraph(const Signature& sig) {
    TypeGraph tg;
    tg.object_points.assign(sig.objects().begin(), sig.objects().end());
    for (const auto& [name, type] : sig.generators()) tg.generator_points.push_back(name);

    for (const auto& o : tg.object_points) tg.edges.push_back({o, o, std::nullopt});
    for (const auto& [name, type] : sig.generators()) {
        for (int k = 0; k < static_cast<int>(type.dom.size()); ++k)
            tg.edges.push_back({type.dom[k], name, k});
        for (int k = 0; k < static_cast<int>(type.cod.size()); ++k)
            tg.edges.push_back({name, type.cod[k], k});
    }
    return tg;
}

} // namespace ogrw
