#pragma once

#include <string>
#include <vector>

#include "classgraph/group.hpp"

namespace cg {

/// A finite presentation. Words are sequences of signed letters:
/// +(i+1) is generator i, -(i+1) its inverse.
struct Presentation {
    std::vector<std::string> generators;
    std::vector<std::vector<int>> relators;

    bool operator==(const Presentation& o) const = default;
};

/// Grammar: optional angle brackets (ASCII or U+27E8/27E9); generator names
/// comma-separated, then '|', then comma-separated relations. A relation is a
/// word or an equality chain w1 = w2 = ... (flattened to adjacent-pair
/// relators w_i w_{i+1}^-1). Words are juxtapositions of atoms; an atom is a
/// generator, '1' (empty word), a parenthesized word, or a commutator [u,v] =
/// u^-1 v^-1 u v; '^' takes an integer power (x^3, x^-1) or, when followed by
/// an atom, conjugates (w^v = v^-1 w v).
/// Throws SyntaxError (with position) or UnknownGenerator.
Presentation parse_presentation(const std::string& text);

/// Canonical text form; parse(unparse(p)) == p.
std::string unparse(const Presentation& p);

inline constexpr int kDefaultMaxCosets = 50000;

/// Closed coset table: rows[c][2*i] is c.g_i, rows[c][2*i+1] is c.g_i^-1.
struct CosetTable {
    int n_generators = 0;
    std::vector<std::vector<int>> rows;

    int cosets() const { return static_cast<int>(rows.size()); }
};

/// HLT coset enumeration of the subgroup generated by subgroup_words (trivial
/// subgroup, i.e. the regular representation, if empty). Throws
/// CosetLimitExceeded if more than max_cosets cosets are needed.
CosetTable todd_coxeter(const Presentation& p,
                        const std::vector<std::vector<int>>& subgroup_words = {},
                        int max_cosets = kDefaultMaxCosets);

/// The permutation group generated by the coset-table actions of the
/// generators. Every relator is re-checked to act trivially.
FiniteGroup realize(const Presentation& p, const CosetTable& table, std::string label = "fp");

/// parse + enumerate over the trivial subgroup + realize.
FiniteGroup realize_presentation(const std::string& text, std::string label = "fp",
                                 int max_cosets = kDefaultMaxCosets);

}  // namespace cg
