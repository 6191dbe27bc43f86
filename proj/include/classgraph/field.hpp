#pragma once

#include <vector>

#include "classgraph/errors.hpp"

namespace cg {

/// GF(p^n) in polynomial representation over a fixed monic irreducible modulus
/// (the lexicographically least one, coefficients compared low-degree-first).
/// Elements are encoded as integers: sum c_i * p^i with c_i the coefficient of x^i.
class FiniteField {
public:
    FiniteField(long p, int n);

    long p() const { return p_; }
    int n() const { return n_; }
    long size() const { return size_; }

    long zero() const { return 0; }
    long one() const { return 1; }
    long add(long a, long b) const;
    long neg(long a) const;
    long mul(long a, long b) const;
    long inv(long a) const;
    long pow(long a, long e) const;

    /// The field automorphism x -> x^p.
    long frobenius(long a) const { return pow(a, p_); }

    /// Least generator of the multiplicative group.
    long primitive_element() const;

    /// Modulus coefficients c_0..c_{n-1} of x^n + c_{n-1}x^{n-1} + ... + c_0.
    const std::vector<long>& modulus() const { return mod_; }

    std::vector<long> coefficients(long a) const;
    long encode(const std::vector<long>& coeffs) const;

private:
    bool is_irreducible(const std::vector<long>& coeffs) const;

    long p_;
    int n_;
    long size_;
    std::vector<long> mod_;
};

}  // namespace cg
