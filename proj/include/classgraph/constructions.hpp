#pragma once

#include <string>
#include <vector>

#include "classgraph/field.hpp"
#include "classgraph/group.hpp"

namespace cg {

FiniteGroup cyclic(int n);
FiniteGroup elementary_abelian(long p, int s);
FiniteGroup dihedral(int n);  // order 2n
FiniteGroup symmetric(int n);
FiniteGroup alternating(int n);

/// Heisenberg group mod p (exponent p): the extraspecial group of order p^3,
/// p odd. Cayley-table carrier on triples (a, b, c) mod p.
FiniteGroup extraspecial_p3(long p);

struct DirectProduct {
    FiniteGroup group;
    Subgroup left;   // A x 1
    Subgroup right;  // 1 x B
};
DirectProduct direct_product(const FiniteGroup& a, const FiniteGroup& b);

/// Subgroup of a direct product from subgroups of the factors.
Subgroup product_subgroup(const DirectProduct& prod, const Subgroup& sa, const Subgroup& sb);

/// Action of H on K, given by automorphism images of K's generators for each
/// generator of H. Verified to extend to automorphisms consistent with H's
/// multiplication.
struct GroupAction {
    const FiniteGroup* target = nullptr;  // K
    /// generator_images[i][j]: image in K of K's j-th stored generator under
    /// the automorphism attached to H's i-th stored generator.
    std::vector<std::vector<int>> generator_images;
};

struct Semidirect {
    FiniteGroup group;
    Subgroup kernel;      // K x 1
    Subgroup complement;  // 1 x H
};
Semidirect semidirect_product(const FiniteGroup& k, const FiniteGroup& h, const GroupAction& action);

/// Trivial action (direct product through the semidirect interface).
GroupAction trivial_action(const FiniteGroup& k, const FiniteGroup& h);

/// The Frobenius group Z_7 x| Z_3 (x -> x^2 action).
Semidirect frobenius_21();

/// Semilinear affine group of GF(p^n): translations, multiplications by the
/// cyclic group GF(p^n)*, and the Frobenius automorphism x -> x^p, realized as
/// permutations of the field elements.
struct SemilinearAffine {
    FiniteGroup group;      // order p^n (p^n - 1) n
    Subgroup additive;      // K, elementary abelian of order p^n
    Subgroup multiplicative;  // H, cyclic of order p^n - 1
    int frobenius;          // element index of alpha
};
SemilinearAffine semilinear_affine(long p, int n);

/// N = K S where S is the subgroup of H of order s (s must divide p^n - 1).
Subgroup semilinear_normal_ks(const SemilinearAffine& sa, long s);

/// SL(2,5) embedded in SL(2,11) acting Frobeniusly on K = Z_11 x Z_11:
/// G = K x| N_H(P) of order 2420 and N = K x| P of order 605, with P a Sylow
/// 5-subgroup of H = SL(2,5). Permutation carrier on the 121 vectors.
struct Sl25Example {
    FiniteGroup group;   // G
    Subgroup n;          // N = K x| P, normal in G, order 605
    Subgroup kernel;     // K, order 121
    Subgroup sylow5;     // P inside G, order 5
};
Sl25Example sl25_frobenius_example();

/// Hol(N) = N x| Aut(N) for N elementary abelian of order p^s, acting on N's
/// elements (affine maps). Returns G and N.
struct HolomorphPair {
    FiniteGroup group;
    Subgroup n;
};
HolomorphPair holomorph_elementary_abelian(long p, int s);

}  // namespace cg
