#include "classgraph/util.hpp"

#include <cstdlib>
#include <numeric>

namespace cg {

std::vector<long> prime_factors(long n) {
    std::vector<long> out;
    for (auto& [p, e] : factorization(n)) out.push_back(p);
    return out;
}

std::vector<std::pair<long, int>> factorization(long n) {
    std::vector<std::pair<long, int>> out;
    for (long p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            int e = 0;
            while (n % p == 0) {
                n /= p;
                ++e;
            }
            out.emplace_back(p, e);
        }
    }
    if (n > 1) out.emplace_back(n, 1);
    return out;
}

bool is_prime(long n) {
    if (n < 2) return false;
    for (long p = 2; p * p <= n; ++p)
        if (n % p == 0) return false;
    return true;
}

bool is_prime_power(long n, long* base) {
    auto f = factorization(n);
    if (f.size() != 1) return false;
    if (base) *base = f[0].first;
    return true;
}

long gcd(long a, long b) { return std::gcd(a, b); }

long mod_inverse(long a, long m) {
    long t = 0, newt = 1, r = m, newr = a % m;
    while (newr != 0) {
        long q = r / newr;
        t = std::exchange(newt, t - q * newt);
        r = std::exchange(newr, r - q * newr);
    }
    if (t < 0) t += m;
    return t;
}

long order_cap() {
    if (const char* env = std::getenv("CLASSGRAPH_ORDER_CAP")) {
        long v = std::atol(env);
        if (v > 0) return v;
    }
    return kDefaultOrderCap;
}

}  // namespace cg
