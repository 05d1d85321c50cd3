#include "support.hpp"

#include "localconst/characters.hpp"
#include "localconst/charspec.hpp"
#include "localconst/errors.hpp"
#include "localconst/number_theory.hpp"

using namespace localconst;

namespace {
PadicElement Z(const Field& K, std::int64_t n) { return PadicElement::from_int(K, n); }
MultiplicativeCharacter chi_q(const Field& K, std::int64_t a, std::int64_t b) {
    return MultiplicativeCharacter::chi_alpha(PadicElement::from_rational(K, mpq_class(a, b)));
}
}  // namespace

TEST_CASE("logarithmic character of 1/9 over Q_3") {
    const Field K = make_field(3, 1, 6);
    const auto chi = chi_q(K, 1, 9);
    CHECK(chi.eval(Z(K, 4)) == RootOfUnity(3, 1));
    CHECK(chi.eval(Z(K, 3)).is_one());
    CHECK(chi.eval(Z(K, -1)).is_one());
    CHECK(chi.order() == 3);
    CHECK(chi.conductor_exponent() == 2);
    CHECK(chi.spec() == "alpha=1/3^2");
    // alpha is only defined modulo p^{-1} O for p odd
    CHECK(chi == chi_q(K, 4, 9));
    CHECK(chi_q(K, 1, 3).is_trivial());
}

TEST_CASE("conductors and orders of mixed characters") {
    const Field K = make_field(5, 1, 6);
    CHECK(MultiplicativeCharacter(K, RootOfUnity(7, 1)).conductor_exponent() == 0);
    CHECK(MultiplicativeCharacter::tame_char(K, 2).conductor_exponent() == 1);
    CHECK(MultiplicativeCharacter::tame_char(K, 2).order() == 2);
    const auto chi = chi_q(K, 2, 125) * MultiplicativeCharacter::tame_char(K, 1, RootOfUnity(3, 1));
    CHECK(chi.conductor_exponent() == 3);
    CHECK(chi.order() == nt::lcm(nt::lcm(25, 4), 3));
    CHECK(chi.tame_part() * chi.wild_part() == chi);
}

TEST_CASE("2-adic characters") {
    const Field K = make_field(2, 1, 8);
    const auto sign = MultiplicativeCharacter(K, {}, 0, std::nullopt, -1);
    CHECK(sign.conductor_exponent() == 2);
    CHECK(sign.eval(Z(K, 3)) == RootOfUnity(2, 1));
    CHECK(sign.eval(Z(K, 5)).is_one());
    CHECK(chi_q(K, 1, 4).is_trivial());
    const auto c8 = chi_q(K, 1, 8);
    CHECK(c8.conductor_exponent() == 3);
    CHECK(c8.order() == 2);
    CHECK(c8.eval(Z(K, 5)) == RootOfUnity(2, 1));
    CHECK(c8.eval(Z(K, -1)).is_one());
    CHECK(chi_q(K, 1, 32).order() == 8);
}

TEST_CASE("rho_u over Q_2") {
    const Field K = make_field(2, 1, 8);
    auto spec = [&](std::int64_t u) { return MultiplicativeCharacter::rho_u(Z(K, u)).spec(); };
    CHECK(spec(3) == "onp=2:1;neg=-1");
    CHECK(spec(5) == "onp=2:1");
    CHECK(spec(7) == "neg=-1");
    CHECK(spec(-1) == "neg=-1");
    CHECK(spec(9) == "trivial");
    // -5 and 3 differ by the square -15/9 * 9 up to 1 + 8Z_2
    CHECK(spec(-5) == spec(3));
    CHECK(spec(-3) == "onp=2:1");
}

TEST_CASE("unsupported configurations are rejected") {
    CHECK_THROWS_AS(MultiplicativeCharacter::chi_alpha(PadicElement::omega(make_field(2, 2, 8)).shift(-3)), DomainError);
    CHECK_THROWS_AS(chi_q(make_field(3, 1, 3), 1, 81), PrecisionError);
    CHECK_THROWS_AS(MultiplicativeCharacter::rho_u(Z(make_field(3, 1, 4), 2)), DomainError);
}

TEST_CASE("virtual characters") {
    const Field K = make_field(3, 1, 6);
    const auto chi = chi_q(K, 1, 9);
    const auto V = one_minus(chi) * one_minus(chi.inverse());
    CHECK(V.degree() == 0);
    CHECK(V.det().is_trivial());
    CHECK(V.terms().size() == 3);
    CHECK((V - V).empty());
    CHECK(adams(V, 2) == one_minus(chi.pow(2)) * one_minus(chi.pow(-2)));
    CHECK(one_minus(chi).pow(3).degree() == 0);
    CHECK(one_minus(chi).pow(3).det() == chi.pow(-3));
}

TEST_CASE("character spec parsing") {
    const Field K = make_field(3, 2, 6);
    CHECK(parse_char_spec("alpha=1/9", 3).build(K).spec() == "alpha=1/3^2");
    CHECK(parse_char_spec("alpha=1/3^2", 3).depth() == 2);
    const auto cs = parse_char_spec("alpha=2+w/3^3;tame=1;onp=3:1", 3);
    CHECK(cs.alpha_level == 3);
    CHECK(*cs.alpha_num == std::vector<mpz_class>{2, 1});
    const auto chi = cs.build(K);
    CHECK(chi.tame_exp() == 1);
    CHECK(chi.on_p() == RootOfUnity(3, 1));
    CHECK(chi.conductor_exponent() == 3);
    CHECK(parse_poly("1-2*w^2+w") == std::vector<mpz_class>{1, 1, -2});
    CHECK(parse_char_spec("trivial", 3).build(K).is_trivial());
    CHECK_THROWS_AS(parse_char_spec("alpha=1/10", 3), ParseError);
    CHECK_THROWS_AS(parse_char_spec("colour=blue", 3), ParseError);
    CHECK_THROWS_AS(parse_char_spec("onp=3", 3), ParseError);
    // a round trip through the canonical spec
    CHECK(parse_char_spec(chi.spec(), 3).build(K) == chi);
}

TEST_CASE("family spec parsing") {
    const Field K = make_field(3, 1, 6);
    CHECK(parse_family_spec("alpha=*/3^2", 3).expand(K).size() == 6);
    CHECK(parse_family_spec("alpha=*/27", 3).expand(K).size() == 18);
    CHECK(parse_family_spec("alpha={1,2,4}/3^2;tame=1", 3).expand(K).size() == 3);
    CHECK(parse_family_spec("alpha={}/3^2", 3).expand(K).empty());
}

TEST_CASE("randomized: characters are homomorphisms") {
    auto g = testing::rng(30);
    const std::pair<std::int64_t, int> fields[] = {{3, 1}, {3, 2}, {5, 1}, {2, 1}, {7, 1}};
    for (int i = 0; i < 250; ++i) {
        const auto [p, f] = fields[i % 5];
        const Field K = make_field(p, f, 7);
        const int n = static_cast<int>(testing::uniform(g, p == 2 ? 3 : 2, 5));
        auto chi = MultiplicativeCharacter::chi_alpha(testing::random_unit(g, K).shift(-n));
        if (p != 2 || f == 1) {
            const std::int64_t t = testing::uniform(g, 0, K->q() - 2);
            chi = chi * MultiplicativeCharacter::tame_char(K, t, RootOfUnity(12, testing::uniform(g, 0, 11)));
        }
        if (p == 2) chi = chi * MultiplicativeCharacter(K, {}, 0, std::nullopt, i % 3 ? 1 : -1);
        const auto x = testing::random_nonzero(g, K, 3), y = testing::random_nonzero(g, K, 3);
        CHECK(chi.eval(x * y) == chi.eval(x) * chi.eval(y));
        CHECK(chi.inverse().eval(x) == chi.eval(x).inverse());
        const std::int64_t k = testing::uniform(g, -6, 6);
        CHECK(chi.pow(k).eval(x) == chi.eval(x).pow(k));
        CHECK(chi.pow(chi.order()).is_trivial());
        for (const auto& [ell, e] : nt::factorize(chi.order())) CHECK_FALSE(chi.pow(chi.order() / ell).is_trivial());
        // trivial exactly on 1 + p^c O
        const int c = chi.conductor_exponent();
        const auto one = Z(K, 1);
        CHECK(chi.eval(one + testing::random_unit(g, K).shift(std::max(c, 1))).is_one());
        if (c >= 2) {
            bool moved = false;
            for_each_unit_residue(K, 1, [&](const PadicElement& r) {
                if (!chi.eval(one + r.shift(c - 1)).is_one()) moved = true;
            });
            CHECK(moved);
        }
    }
}

TEST_CASE("randomized: Galois twists act on values") {
    auto g = testing::rng(31);
    for (int i = 0; i < 200; ++i) {
        const std::int64_t p = i % 2 ? 3 : 5;
        const Field K = make_field(p, 1 + i % 2, 6);
        const auto chi = MultiplicativeCharacter::chi_alpha(testing::random_unit(g, K).shift(-3)) *
                         MultiplicativeCharacter::tame_char(K, testing::uniform(g, 0, K->q() - 2));
        const std::int64_t M = nt::lcm(chi.order(), 8);
        std::int64_t k;
        do {
            k = testing::uniform(g, 1, M);
        } while (nt::gcd(k, M) != 1);
        const auto tw = galois_twist(chi, GaloisElement(M, k));
        const auto x = testing::random_nonzero(g, K, 2);
        CHECK(tw.eval(x) == chi.eval(x).galois(k));
        CHECK(tw == adams(chi, k));
    }
}
