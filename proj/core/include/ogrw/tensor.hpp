#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace ogrw {

/// Overflow-checked integer arithmetic; evaluation aborts rather than wraps.
std::int64_t checked_add(std::int64_t a, std::int64_t b);
std::int64_t checked_mul(std::int64_t a, std::int64_t b);

/// A tensor with exact integer entries, stored row-major over its shape.
struct Tensor {
    std::vector<std::pair<std::string, int>> shape;  // (object type, dimension)
    std::vector<std::int64_t> entries;

    static Tensor scalar(std::int64_t v) { return Tensor{{}, {v}}; }

    std::size_t size() const;
    std::size_t flatten(const std::vector<int>& index) const;
    std::int64_t at(const std::vector<int>& index) const;

    bool operator==(const Tensor&) const = default;
};

} // namespace ogrw
