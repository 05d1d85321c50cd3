#pragma once

#include <doctest.h>

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "localconst/cyclotomic.hpp"
#include "localconst/padic.hpp"

namespace testing {

// Every randomized suite draws from this generator so failures replay.
inline std::mt19937_64 rng(std::uint64_t salt) { return std::mt19937_64(0xC0FFEEULL + salt); }

inline std::int64_t uniform(std::mt19937_64& g, std::int64_t lo, std::int64_t hi) {
    return lo + static_cast<std::int64_t>(g() % static_cast<std::uint64_t>(hi - lo + 1));
}

inline localconst::CyclotomicNumber random_cyclotomic(std::mt19937_64& g, std::int64_t m) {
    std::vector<mpz_class> c(static_cast<std::size_t>(m));
    for (auto& x : c) x = static_cast<long>(uniform(g, -5, 5));
    return localconst::CyclotomicNumber::from_group_ring(m, c, static_cast<long>(uniform(g, 1, 4)));
}

inline localconst::PadicElement random_unit(std::mt19937_64& g, const localconst::Field& K) {
    for (;;) {
        std::vector<mpz_class> c;
        for (int j = 0; j < K->f(); ++j) c.emplace_back(static_cast<unsigned long>(g() % K->pN()));
        auto x = localconst::PadicElement::from_coeffs(K, c);
        if (!x.is_zero() && x.valuation() == 0) return x;
    }
}

inline localconst::PadicElement random_nonzero(std::mt19937_64& g, const localconst::Field& K, int vmax) {
    return random_unit(g, K).shift(uniform(g, -vmax, vmax));
}

inline bool near(std::complex<double> a, std::complex<double> b, double tol = 1e-9) { return std::abs(a - b) < tol; }

}  // namespace testing
