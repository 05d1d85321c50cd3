#include "support.hpp"

#include "localconst/epsilon.hpp"
#include "localconst/errors.hpp"
#include "localconst/number_theory.hpp"

using namespace localconst;

namespace {
PadicElement Z(const Field& K, std::int64_t n) { return PadicElement::from_int(K, n); }
MultiplicativeCharacter chi_q(const Field& K, std::int64_t a, std::int64_t b) {
    return MultiplicativeCharacter::chi_alpha(PadicElement::from_rational(K, mpq_class(a, b)));
}
}  // namespace

TEST_CASE("W of chi_{1/9} over Q_3") {
    const Field K = make_field(3, 1, 6);
    const auto chi = chi_q(K, 1, 9);
    const auto w = w_oracle(chi);
    CHECK(w.root == RootOfUnity(9, 1));
    CHECK(w_closed(chi).value == w.value);
    const auto cf = closed_form(chi);
    CHECK(cf.tame.is_one());
    CHECK(cf.g == CyclotomicNumber::rational(1));
    CHECK(cf.wild == RootOfUnity(9, 1));
    CHECK(w_p_part(w, 3) == RootOfUnity(9, 1));
    CHECK(iota(chi).is_one());
    CHECK(w_star(chi).value == w.value);
}

TEST_CASE("W over the family a/9 follows psi(a^3/9)") {
    const Field K = make_field(3, 1, 6);
    for (std::int64_t a : {1, 2, 4, 5, 7, 8}) {
        const auto w = w_oracle(chi_q(K, a, 9));
        CHECK(w.root == psi(PadicElement::from_rational(K, mpq_class(a * a * a, 9))));
    }
}

TEST_CASE("frozen values") {
    const Field K5 = make_field(5, 1, 5);
    CHECK(w_oracle(MultiplicativeCharacter::tame_char(K5, 2)).value == CyclotomicNumber::rational(1));
    CHECK(w_oracle(MultiplicativeCharacter(K5, RootOfUnity(3, 1))).value == CyclotomicNumber::rational(1));
    const Field K2 = make_field(2, 1, 8);
    CHECK(w_oracle(chi_q(K2, 1, 8)).value == CyclotomicNumber::rational(1));
    CHECK(closed_form(chi_q(K2, 1, 8)).wild == RootOfUnity(8, 1));
    // quadratic character of Q_3^*: W = i, iota = i
    const Field K3 = make_field(3, 1, 5);
    const auto quad = MultiplicativeCharacter::tame_char(K3, 1);
    CHECK(w_oracle(quad).root == RootOfUnity(4, 1));
    CHECK(iota(quad) == RootOfUnity(4, 1));
    CHECK(w_star(quad).root == RootOfUnity(2, 1));
    // a genuine Gauss sum that is not a root of unity
    const Field K7 = make_field(7, 1, 4);
    const auto cubic = MultiplicativeCharacter::tame_char(K7, 2);
    const auto w = w_oracle(cubic);
    CHECK_FALSE(w.root);
    CHECK(w.value * w.value.conj() == CyclotomicNumber::rational(1));
}

TEST_CASE("iota") {
    CHECK(iota_from_exponent(3, 1, 1) == RootOfUnity(4, 1));
    CHECK(iota_from_exponent(3, 1, 2).is_one());
    CHECK(iota_from_exponent(3, 2, 1).is_one());
    CHECK(iota_from_exponent(7, 1, 3) == RootOfUnity(4, 1));
    CHECK(iota_from_exponent(5, 1, 1).is_one());
    CHECK(iota_from_exponent(2, 1, 5).is_one());
}

TEST_CASE("precision exhaustion is reported") {
    const Field K = make_field(3, 1, 2);
    CHECK_THROWS_AS(chi_q(K, 1, 27), PrecisionError);
    CHECK_THROWS_AS(psi(PadicElement::zero(K, -1)), PrecisionError);
}

TEST_CASE("randomized: oracle and closed form agree") {
    auto g = testing::rng(40);
    const std::pair<std::int64_t, int> fields[] = {{3, 1}, {5, 1}, {3, 2}, {2, 1}, {7, 1}};
    for (int i = 0; i < 200; ++i) {
        const auto [p, f] = fields[i % 5];
        const Field K = make_field(p, f, 9);
        const int n = static_cast<int>(testing::uniform(g, p == 2 ? 3 : 2, p == 2 ? 7 : (f == 1 && p == 3 ? 4 : 3)));
        auto chi = MultiplicativeCharacter::chi_alpha(testing::random_unit(g, K).shift(-n));
        if (p == 2) {
            chi = chi * MultiplicativeCharacter(K, RootOfUnity(4, testing::uniform(g, 0, 3)), 0, std::nullopt,
                                                i % 2 ? 1 : -1);
        } else {
            chi = chi * MultiplicativeCharacter::tame_char(K, testing::uniform(g, 0, K->q() - 2),
                                                           RootOfUnity(p, testing::uniform(g, 0, p - 1)));
        }
        CAPTURE(chi.spec());
        CHECK(w_oracle(chi).value == w_closed(chi).value);
    }
}

TEST_CASE("randomized: modulus one, duality and CRT parts") {
    auto g = testing::rng(41);
    for (int i = 0; i < 200; ++i) {
        const std::int64_t p = i % 3 == 0 ? 2 : (i % 3 == 1 ? 3 : 5);
        const Field K = make_field(p, 1, 8);
        MultiplicativeCharacter chi(K, RootOfUnity(6, testing::uniform(g, 0, 5)));
        if (i % 4) chi = chi * MultiplicativeCharacter::chi_alpha(testing::random_unit(g, K).shift(-testing::uniform(g, 3, 4)));
        if (p != 2) chi = chi * MultiplicativeCharacter::tame_char(K, testing::uniform(g, 0, p - 2));
        const auto w = w_oracle(chi);
        CHECK(w.value * w.value.conj() == CyclotomicNumber::rational(1));
        // W(chi) W(chi^{-1}) = chi(-1)
        CHECK(w.value * w_oracle(chi.inverse()).value == CyclotomicNumber::from(chi.eval(Z(K, -1))));
        if (w.root) {
            RootOfUnity prod;
            for (const auto& [ell, part] : decompose_root(*w.root)) {
                CHECK(nt::is_prime(ell));
                CHECK(nt::factorize(part.m).size() == 1);
                prod = prod * part;
            }
            CHECK(prod == *w.root);
            CHECK(w_p_part(w, p).m % p == (w_p_part(w, p).is_one() ? 1 % p : 0));
        }
    }
}

TEST_CASE("cache returns the uncached values") {
    const Field K = make_field(3, 1, 7);
    EpsilonCache cache;
    for (const auto& a : unit_residues(K, 3)) {
        const auto chi = MultiplicativeCharacter::chi_alpha(a.shift(-3));
        CHECK(cache.w(chi).value == w_oracle(chi).value);
        CHECK(cache.w(chi).value == cache.w(chi).value);
    }
}
