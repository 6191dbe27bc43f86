#include "classgraph/permutation.hpp"

#include <numeric>

namespace cg {

Perm::Perm(std::vector<int> images) : img_(std::move(images)) {
    std::vector<char> seen(img_.size(), 0);
    for (int v : img_) {
        if (v < 0 || v >= degree() || seen[static_cast<std::size_t>(v)])
            throw InputError("permutation image array is not a bijection");
        seen[static_cast<std::size_t>(v)] = 1;
    }
}

Perm Perm::identity(int degree) {
    std::vector<int> img(static_cast<std::size_t>(degree));
    std::iota(img.begin(), img.end(), 0);
    return Perm(std::move(img));
}

Perm Perm::operator*(const Perm& other) const {
    if (degree() != other.degree()) throw IncompatibleDegrees("permutation degrees differ");
    std::vector<int> img(img_.size());
    for (int i = 0; i < degree(); ++i) img[static_cast<std::size_t>(i)] = img_[static_cast<std::size_t>(other(i))];
    return Perm(std::move(img));
}

Perm Perm::inverse() const {
    std::vector<int> img(img_.size());
    for (int i = 0; i < degree(); ++i) img[static_cast<std::size_t>(img_[static_cast<std::size_t>(i)])] = i;
    return Perm(std::move(img));
}

bool Perm::is_identity() const {
    for (int i = 0; i < degree(); ++i)
        if ((*this)(i) != i) return false;
    return true;
}

std::string Perm::cycle_string() const {
    std::string out;
    std::vector<char> seen(img_.size(), 0);
    for (int i = 0; i < degree(); ++i) {
        if (seen[static_cast<std::size_t>(i)] || (*this)(i) == i) continue;
        out += '(';
        int j = i;
        bool first = true;
        while (!seen[static_cast<std::size_t>(j)]) {
            seen[static_cast<std::size_t>(j)] = 1;
            if (!first) out += ' ';
            out += std::to_string(j);
            first = false;
            j = (*this)(j);
        }
        out += ')';
    }
    if (out.empty()) out = "()";
    return out;
}

}  // namespace cg
