#include "ogrw/tensor.hpp"

#include "ogrw/error.hpp"

namespace ogrw {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r))
        throw Error(ErrorCode::Overflow, "", "integer sum exceeds the representable range");
    return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r))
        throw Error(ErrorCode::Overflow, "", "integer product exceeds the representable range");
    return r;
}

std::size_t Tensor::size() const {
    std::size_t n = 1;
    for (const auto& [type, dim] : shape) n *= static_cast<std::size_t>(dim);
    return n;
}

std::size_t Tensor::flatten(const std::vector<int>& index) const {
    if (index.size() != shape.size())
        throw Error(ErrorCode::ShapeMismatch, "", "index rank differs from tensor rank");
    std::size_t flat = 0;
    for (std::size_t i = 0; i < index.size(); ++i) {
        if (index[i] < 0 || index[i] >= shape[i].second)
            throw Error(ErrorCode::ShapeMismatch, shape[i].first, "index out of range");
        flat = flat * static_cast<std::size_t>(shape[i].second) + static_cast<std::size_t>(index[i]);
    }
    return flat;
}

std::int64_t Tensor::at(const std::vector<int>& index) const { return entries[flatten(index)]; }

} // namespace ogrw
