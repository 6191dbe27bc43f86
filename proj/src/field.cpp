#include "classgraph/field.hpp"

#include "classgraph/util.hpp"

namespace cg {

namespace {

// Remainder of a mod m over GF(p); m is monic of degree deg(m).
std::vector<long> poly_mod(std::vector<long> a, const std::vector<long>& m, long p) {
    long dm = static_cast<long>(m.size()) - 1;
    while (static_cast<long>(a.size()) - 1 >= dm) {
        long lead = a.back();
        if (lead != 0) {
            long shift = static_cast<long>(a.size()) - 1 - dm;
            for (long i = 0; i <= dm; ++i) {
                long idx = i + shift;
                a[static_cast<std::size_t>(idx)] =
                    ((a[static_cast<std::size_t>(idx)] - lead * m[static_cast<std::size_t>(i)]) % p + p) % p;
            }
        }
        a.pop_back();
        while (a.size() > 1 && a.back() == 0) a.pop_back();
        if (a.size() == 1 && a[0] == 0) break;
    }
    return a;
}

std::vector<long> poly_mul(const std::vector<long>& a, const std::vector<long>& b, long p) {
    std::vector<long> out(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            out[i + j] = (out[i + j] + a[i] * b[j]) % p;
    return out;
}

bool poly_is_zero(const std::vector<long>& a) {
    for (long c : a)
        if (c != 0) return false;
    return true;
}

}  // namespace

FiniteField::FiniteField(long p, int n) : p_(p), n_(n) {
    if (!is_prime(p)) throw InputError("field characteristic must be prime");
    if (n < 1) throw InputError("field extension degree must be positive");
    size_ = 1;
    for (int i = 0; i < n; ++i) {
        size_ *= p;
        if (size_ > 10000000) throw CapExceeded("field too large");
    }
    // Lexicographically least monic irreducible, coefficients low-degree-first.
    long total = size_;
    for (long idx = 0; idx < total; ++idx) {
        std::vector<long> coeffs(static_cast<std::size_t>(n));
        long rest = idx;
        long div = total / p;
        for (int i = 0; i < n; ++i) {
            coeffs[static_cast<std::size_t>(i)] = rest / div;
            rest %= div;
            if (i + 1 < n) div /= p;
        }
        if (is_irreducible(coeffs)) {
            mod_ = std::move(coeffs);
            break;
        }
    }
    if (mod_.empty()) throw Error("no irreducible polynomial found");  // impossible
}

bool FiniteField::is_irreducible(const std::vector<long>& coeffs) const {
    // Full modulus polynomial: coeffs + leading 1.
    std::vector<long> f(coeffs);
    f.push_back(1);
    // Trial division by every monic polynomial of degree 1..n/2.
    for (int d = 1; d <= n_ / 2; ++d) {
        long count = 1;
        for (int i = 0; i < d; ++i) count *= p_;
        for (long idx = 0; idx < count; ++idx) {
            std::vector<long> g(static_cast<std::size_t>(d) + 1);
            long rest = idx;
            for (int i = 0; i < d; ++i) {
                g[static_cast<std::size_t>(i)] = rest % p_;
                rest /= p_;
            }
            g[static_cast<std::size_t>(d)] = 1;
            if (poly_is_zero(poly_mod(f, g, p_))) return false;
        }
    }
    return true;
}

std::vector<long> FiniteField::coefficients(long a) const {
    std::vector<long> out(static_cast<std::size_t>(n_));
    for (int i = 0; i < n_; ++i) {
        out[static_cast<std::size_t>(i)] = a % p_;
        a /= p_;
    }
    return out;
}

long FiniteField::encode(const std::vector<long>& coeffs) const {
    long out = 0;
    for (int i = n_ - 1; i >= 0; --i) out = out * p_ + ((coeffs[static_cast<std::size_t>(i)] % p_ + p_) % p_);
    return out;
}

long FiniteField::add(long a, long b) const {
    auto ca = coefficients(a), cb = coefficients(b);
    for (int i = 0; i < n_; ++i)
        ca[static_cast<std::size_t>(i)] = (ca[static_cast<std::size_t>(i)] + cb[static_cast<std::size_t>(i)]) % p_;
    return encode(ca);
}

long FiniteField::neg(long a) const {
    auto ca = coefficients(a);
    for (int i = 0; i < n_; ++i) ca[static_cast<std::size_t>(i)] = (p_ - ca[static_cast<std::size_t>(i)]) % p_;
    return encode(ca);
}

long FiniteField::mul(long a, long b) const {
    std::vector<long> f(mod_);
    f.push_back(1);
    std::vector<long> prod = poly_mod(poly_mul(coefficients(a), coefficients(b), p_), f, p_);
    prod.resize(static_cast<std::size_t>(n_), 0);
    return encode(prod);
}

long FiniteField::pow(long a, long e) const {
    if (a == 0) {
        if (e <= 0) throw InputError("0^e undefined for e <= 0");
        return 0;
    }
    long m = size_ - 1;
    e %= m;
    if (e < 0) e += m;
    long acc = 1, base = a;
    while (e > 0) {
        if (e & 1) acc = mul(acc, base);
        base = mul(base, base);
        e >>= 1;
    }
    return acc;
}

long FiniteField::inv(long a) const {
    if (a == 0) throw InputError("zero has no inverse");
    return pow(a, size_ - 2);
}

long FiniteField::primitive_element() const {
    for (long g = 1; g < size_; ++g) {
        long x = g;
        long ord = 1;
        while (x != 1) {
            x = mul(x, g);
            ++ord;
        }
        if (ord == size_ - 1) return g;
    }
    throw Error("no primitive element found");  // impossible
}

}  // namespace cg
