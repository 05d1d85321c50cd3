#pragma once

#include <cstdint>
#include <utility>
#include <vector>

// Small-integer helpers shared by the cyclotomic and p-adic kernels.
namespace localconst::nt {

std::int64_t gcd(std::int64_t a, std::int64_t b);
std::int64_t lcm(std::int64_t a, std::int64_t b);

/// Non-negative residue of a mod m (m > 0).
std::int64_t mod(std::int64_t a, std::int64_t m);

bool is_prime(std::int64_t n);

/// Prime factorization as (prime, exponent) pairs in increasing prime order.
std::vector<std::pair<std::int64_t, int>> factorize(std::int64_t n);

std::vector<std::int64_t> divisors(std::int64_t n);
std::int64_t euler_phi(std::int64_t n);
int mobius(std::int64_t n);

/// Exponent of p in n (n != 0).
int valuation(std::int64_t n, std::int64_t p);

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m);
std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t m);

/// Inverse of a modulo m; throws DomainError if gcd(a, m) != 1.
std::int64_t invmod(std::int64_t a, std::int64_t m);

/// b^e, throwing DomainError on int64 overflow.
std::int64_t ipow(std::int64_t b, int e);

/// Multiplicative order of a modulo m (gcd(a, m) = 1).
std::int64_t multiplicative_order(std::int64_t a, std::int64_t m);

/// Smallest primitive root modulo the prime p.
std::int64_t primitive_root(std::int64_t p);

}  // namespace localconst::nt
