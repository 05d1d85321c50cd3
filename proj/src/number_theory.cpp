#include "localconst/number_theory.hpp"

#include <algorithm>
#include <limits>
#include <tuple>
#include <numeric>
#include <string>

#include "localconst/errors.hpp"

namespace localconst::nt {

std::int64_t gcd(std::int64_t a, std::int64_t b) { return std::gcd(a, b); }

std::int64_t lcm(std::int64_t a, std::int64_t b) {
    if (a == 0 || b == 0) return 0;
    const std::int64_t g = std::gcd(a, b);
    std::int64_t out = 0;
    if (__builtin_mul_overflow(a / g, b, &out)) throw DomainError("lcm overflows int64");
    return out < 0 ? -out : out;
}

std::int64_t mod(std::int64_t a, std::int64_t m) {
    const std::int64_t r = a % m;
    return r < 0 ? r + m : r;
}

bool is_prime(std::int64_t n) {
    if (n < 2) return false;
    for (std::int64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) return false;
    }
    return true;
}

std::vector<std::pair<std::int64_t, int>> factorize(std::int64_t n) {
    if (n <= 0) throw DomainError("factorize: n must be positive");
    std::vector<std::pair<std::int64_t, int>> out;
    for (std::int64_t d = 2; d * d <= n; ++d) {
        if (n % d != 0) continue;
        int e = 0;
        while (n % d == 0) {
            n /= d;
            ++e;
        }
        out.emplace_back(d, e);
    }
    if (n > 1) out.emplace_back(n, 1);
    return out;
}

std::vector<std::int64_t> divisors(std::int64_t n) {
    std::vector<std::int64_t> out{1};
    for (auto [p, e] : factorize(n)) {
        const std::size_t base = out.size();
        std::int64_t pk = 1;
        for (int k = 1; k <= e; ++k) {
            pk *= p;
            for (std::size_t i = 0; i < base; ++i) out.push_back(out[i] * pk);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::int64_t euler_phi(std::int64_t n) {
    std::int64_t out = n;
    for (auto [p, e] : factorize(n)) out = out / p * (p - 1);
    return out;
}

int mobius(std::int64_t n) {
    int out = 1;
    for (auto [p, e] : factorize(n)) {
        if (e > 1) return 0;
        out = -out;
    }
    return out;
}

int valuation(std::int64_t n, std::int64_t p) {
    if (n == 0) throw DomainError("valuation of zero");
    int v = 0;
    while (n % p == 0) {
        n /= p;
        ++v;
    }
    return v;
}

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
    std::uint64_t r = 1 % m;
    a %= m;
    while (e) {
        if (e & 1U) r = mulmod(r, a, m);
        a = mulmod(a, a, m);
        e >>= 1U;
    }
    return r;
}

std::int64_t invmod(std::int64_t a, std::int64_t m) {
    std::int64_t g = m, x = 0, x1 = 1, a1 = mod(a, m);
    while (a1) {
        const std::int64_t q = g / a1;
        std::tie(g, a1) = std::make_pair(a1, g - q * a1);
        std::tie(x, x1) = std::make_pair(x1, x - q * x1);
    }
    if (g != 1) throw DomainError(std::to_string(a) + " is not invertible mod " + std::to_string(m));
    return mod(x, m);
}

std::int64_t ipow(std::int64_t b, int e) {
    std::int64_t r = 1;
    for (int i = 0; i < e; ++i) {
        if (__builtin_mul_overflow(r, b, &r)) throw DomainError("integer power overflows int64");
    }
    return r;
}

std::int64_t multiplicative_order(std::int64_t a, std::int64_t m) {
    if (m == 1) return 1;
    if (gcd(a, m) != 1) throw DomainError("multiplicative_order: gcd(a, m) != 1");
    std::int64_t order = euler_phi(m);
    for (auto [p, e] : factorize(order)) {
        for (int i = 0; i < e; ++i) {
            if (powmod(mod(a, m), order / p, m) == 1) {
                order /= p;
            } else {
                break;
            }
        }
    }
    return order;
}

std::int64_t primitive_root(std::int64_t p) {
    if (p == 2) return 1;
    for (std::int64_t g = 2; g < p; ++g) {
        if (multiplicative_order(g, p) == p - 1) return g;
    }
    throw DomainError("no primitive root");
}

}  // namespace localconst::nt
