#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace cg {

inline constexpr long kDefaultOrderCap = 100000;

/// Distinct prime divisors of n, ascending. Empty for n <= 1.
std::vector<long> prime_factors(long n);

/// Full factorization of n as (prime, exponent) pairs, ascending primes.
std::vector<std::pair<long, int>> factorization(long n);

bool is_prime(long n);

/// True if n = q^k for a single prime q (k >= 1); stores q in *base.
bool is_prime_power(long n, long* base = nullptr);

/// Inverse of a modulo m (gcd(a, m) = 1 required).
long mod_inverse(long a, long m);

long gcd(long a, long b);

/// Order cap, overridable through the CLASSGRAPH_ORDER_CAP environment variable.
long order_cap();

/// One outcome of a theorem/lemma assertion, with enough context to reproduce a failure.
struct Check {
    std::string name;
    bool pass = false;
    std::string witness;
};

}  // namespace cg
