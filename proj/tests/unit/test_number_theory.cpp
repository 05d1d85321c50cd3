#include "support.hpp"

#include "localconst/errors.hpp"
#include "localconst/number_theory.hpp"

using namespace localconst;

TEST_CASE("basic arithmetic helpers") {
    CHECK(nt::gcd(12, -18) == 6);
    CHECK(nt::lcm(4, 6) == 12);
    CHECK(nt::mod(-7, 3) == 2);
    CHECK(nt::valuation(54, 3) == 3);
    CHECK(nt::ipow(3, 4) == 81);
    CHECK(nt::invmod(7, 27) == 4);
    CHECK_THROWS_AS(nt::invmod(3, 27), DomainError);
    CHECK(nt::powmod(2, 10, 1000) == 24);
}

TEST_CASE("primes and factorization") {
    std::vector<std::int64_t> small;
    for (std::int64_t n = 0; n < 40; ++n) {
        if (nt::is_prime(n)) small.push_back(n);
    }
    CHECK(small == std::vector<std::int64_t>{2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37});
    CHECK(nt::is_prime(1000000007));
    const auto f = nt::factorize(360);
    CHECK(f == std::vector<std::pair<std::int64_t, int>>{{2, 3}, {3, 2}, {5, 1}});
    CHECK(nt::divisors(12) == std::vector<std::int64_t>{1, 2, 3, 4, 6, 12});
}

TEST_CASE("arithmetic functions") {
    CHECK(nt::euler_phi(1) == 1);
    CHECK(nt::euler_phi(36) == 12);
    CHECK(nt::mobius(30) == -1);
    CHECK(nt::mobius(12) == 0);
    CHECK(nt::mobius(1) == 1);
    CHECK(nt::multiplicative_order(2, 109) == 36);
    CHECK(nt::multiplicative_order(2, 31) == 5);
    CHECK(nt::primitive_root(3) == 2);
    CHECK(nt::primitive_root(7) == 3);
    CHECK(nt::primitive_root(2) == 1);
}

TEST_CASE("overflow is reported") {
    CHECK_THROWS(nt::ipow(10, 30));
}

TEST_CASE("randomized: phi is multiplicative and sums over divisors") {
    auto g = testing::rng(1);
    for (int i = 0; i < 200; ++i) {
        const std::int64_t a = testing::uniform(g, 1, 2000), b = testing::uniform(g, 1, 2000);
        if (nt::gcd(a, b) == 1) CHECK(nt::euler_phi(a * b) == nt::euler_phi(a) * nt::euler_phi(b));
        std::int64_t s = 0, mu = 0;
        for (auto d : nt::divisors(a)) {
            s += nt::euler_phi(d);
            mu += nt::mobius(d);
        }
        CHECK(s == a);
        CHECK(mu == (a == 1 ? 1 : 0));
        const std::int64_t m = testing::uniform(g, 2, 5000);
        const std::int64_t x = testing::uniform(g, 1, m - 1);
        if (nt::gcd(x, m) == 1) {
            CHECK(nt::mod(x * nt::invmod(x, m), m) == 1);
            CHECK(nt::powmod(static_cast<std::uint64_t>(x), static_cast<std::uint64_t>(nt::multiplicative_order(x, m)),
                             static_cast<std::uint64_t>(m)) == 1 % static_cast<std::uint64_t>(m));
        }
    }
}
