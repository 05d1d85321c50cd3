#include "support.hpp"

#include "localconst/number_theory.hpp"

using namespace localconst;

TEST_CASE("Hilbert symbols over Q_p") {
    CHECK(hilbert_qp(-1, -1, 2) == -1);
    CHECK(hilbert_qp(2, -1, 2) == 1);
    CHECK(hilbert_qp(2, 3, 2) == -1);
    CHECK(hilbert_qp(5, 2, 5) == -1);
    CHECK(hilbert_qp(3, 3, 3) == -1);
    CHECK(hilbert_qp(-1, 3, 3) == -1);
    CHECK(hilbert_qp(-1, 109, 109) == 1);
    CHECK(hilbert_qp(-1, 31, 31) == -1);
    CHECK(hilbert_qp(mpq_class(1, 3), 2, 3) == -1);
}

TEST_CASE("tame symbol over unramified extensions") {
    const Field K = make_field(3, 2, 4);
    const auto m1 = PadicElement::from_int(K, -1);
    // -1 is a square in F_9, so (-1, 3)_K = 1
    CHECK(hilbert_tame_unram(m1, PadicElement::from_int(K, 3)) == 1);
    const auto w = PadicElement::omega(K);
    CHECK(hilbert_tame_unram(w, PadicElement::from_int(K, 3)) == -1);
    CHECK(hilbert_tame_unram(w, w) == 1);
}

TEST_CASE("randomized: Hilbert symbol bilinearity and symmetry over Q_p") {
    auto g = testing::rng(20);
    const std::int64_t primes[] = {2, 3, 5, 7, 11};
    auto rnd = [&] {
        std::int64_t x = 0;
        while (x == 0) x = testing::uniform(g, -300, 300);
        return mpq_class(x, testing::uniform(g, 1, 40));
    };
    for (int i = 0; i < 250; ++i) {
        const std::int64_t p = primes[i % 5];
        const mpq_class a = rnd(), b = rnd(), c = rnd();
        CHECK(hilbert_qp(a * b, c, p) == hilbert_qp(a, c, p) * hilbert_qp(b, c, p));
        CHECK(hilbert_qp(a, b, p) == hilbert_qp(b, a, p));
        CHECK(hilbert_qp(a, -a, p) == 1);
        CHECK(hilbert_qp(a, 1 - a == 0 ? mpq_class(1) : 1 - a, p) == 1);
    }
}

TEST_CASE("randomized: product formula") {
    auto g = testing::rng(21);
    for (int i = 0; i < 200; ++i) {
        const long a = static_cast<long>(testing::uniform(g, -500, 500)) | 1;
        const long b = static_cast<long>(testing::uniform(g, -500, 500)) | 1;
        int prod = (a < 0 && b < 0) ? -1 : 1;  // real place
        for (std::int64_t p = 2; p < 600; ++p) {
            if (nt::is_prime(p)) prod *= hilbert_qp(a, b, p);
        }
        CHECK(prod == 1);
    }
}

TEST_CASE("randomized: tame symbol bilinearity over K") {
    auto g = testing::rng(22);
    for (int i = 0; i < 200; ++i) {
        const Field K = make_field(i % 2 ? 3 : 5, 1 + i % 2, 4);
        const auto a = testing::random_nonzero(g, K, 2), b = testing::random_nonzero(g, K, 2),
                   c = testing::random_nonzero(g, K, 2);
        CHECK(hilbert_tame_unram(a * b, c) == hilbert_tame_unram(a, c) * hilbert_tame_unram(b, c));
        CHECK(hilbert_tame_unram(a, b) == hilbert_tame_unram(b, a));
        CHECK(hilbert_tame_unram(a, -a) == 1);
    }
}

TEST_CASE("randomized: 2-adic norm search matches the closed formula over Q_2") {
    auto g = testing::rng(23);
    const Field K = make_field(2, 1, 10);
    for (int i = 0; i < 200; ++i) {
        const std::int64_t u = 2 * testing::uniform(g, -120, 120) + 1;
        std::int64_t x = 0;
        while (x == 0) x = testing::uniform(g, -200, 200);
        const int expect = hilbert_qp(u, x, 2);
        const auto ue = PadicElement::from_int(K, u), xe = PadicElement::from_int(K, x);
        CHECK(hilbert_2adic_bruteforce(ue, xe) == expect);
    }
}

TEST_CASE("randomized: 2-adic norm search is multiplicative over Q_4") {
    auto g = testing::rng(24);
    const Field K = make_field(2, 2, 8);
    for (int i = 0; i < 200; ++i) {
        PadicElement u = testing::random_unit(g, K);
        while (u.residue_code() != 1) u = testing::random_unit(g, K);
        const auto x = testing::random_nonzero(g, K, 2), y = testing::random_nonzero(g, K, 2);
        CHECK(hilbert_2adic_bruteforce(u, x * y) == hilbert_2adic_bruteforce(u, x) * hilbert_2adic_bruteforce(u, y));
    }
}
