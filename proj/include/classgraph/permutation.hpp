#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <vector>

#include "classgraph/errors.hpp"

namespace cg {

/// A permutation of {0, ..., degree-1}, stored as its image array.
class Perm {
public:
    explicit Perm(std::vector<int> images);
    static Perm identity(int degree);

    int degree() const { return static_cast<int>(img_.size()); }
    int operator()(int i) const { return img_[static_cast<std::size_t>(i)]; }
    const std::vector<int>& images() const { return img_; }

    /// Composition: (a * b)(i) = a(b(i)).
    Perm operator*(const Perm& other) const;
    Perm inverse() const;
    bool is_identity() const;

    bool operator==(const Perm&) const = default;
    auto operator<=>(const Perm&) const = default;

    /// Cycle notation on 0-based points, e.g. "(0 1 2)(3 4)"; "()" for the identity.
    std::string cycle_string() const;

private:
    std::vector<int> img_;
};

struct PermHash {
    std::size_t operator()(const Perm& p) const {
        std::size_t h = 1469598103934665603ull;
        for (int v : p.images()) {
            h ^= static_cast<std::size_t>(v) + 0x9e3779b97f4a7c15ull;
            h *= 1099511628211ull;
        }
        return h;
    }
};

}  // namespace cg
