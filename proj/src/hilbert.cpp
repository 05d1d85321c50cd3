#include <unordered_set>

#include "localconst/errors.hpp"
#include "localconst/number_theory.hpp"
#include "localconst/padic.hpp"

namespace localconst {

namespace {

// a = p^v * u with u a p-adic unit (an integer prime to p).
std::pair<int, mpz_class> split(mpz_class a, std::int64_t p) {
    int v = 0;
    const mpz_class P(static_cast<long>(p));
    while (a % P == 0) {
        a /= P;
        ++v;
    }
    return {v, a};
}

int legendre(const mpz_class& u, std::int64_t p) {
    mpz_class P(static_cast<long>(p));
    return mpz_legendre(u.get_mpz_t(), P.get_mpz_t());
}

int mod8(const mpz_class& u) {
    mpz_class r;
    mpz_fdiv_r_ui(r.get_mpz_t(), u.get_mpz_t(), 8);
    return static_cast<int>(r.get_si());
}

}  // namespace

int hilbert_qp(const mpq_class& a, const mpq_class& b, std::int64_t p) {
    if (a == 0 || b == 0) throw DomainError("hilbert symbol of zero");
    if (!nt::is_prime(p)) throw DomainError("hilbert_qp: p is not prime");
    // a and num*den differ by a square
    auto [alpha, u] = split(a.get_num() * a.get_den(), p);
    auto [beta, w] = split(b.get_num() * b.get_den(), p);
    if (p != 2) {
        int s = 1;
        if ((alpha * beta) % 2 == 1 && (p - 1) / 2 % 2 == 1) s = -s;
        if (beta % 2 == 1) s *= legendre(u, p);
        if (alpha % 2 == 1) s *= legendre(w, p);
        return s;
    }
    const int u8 = mod8(u), w8 = mod8(w);
    const int eps_u = ((u8 - 1) / 2) % 2, eps_w = ((w8 - 1) / 2) % 2;
    const int om_u = ((u8 * u8 - 1) / 8) % 2, om_w = ((w8 * w8 - 1) / 8) % 2;
    const int e = eps_u * eps_w + alpha * om_w + beta * om_u;
    return e % 2 == 0 ? 1 : -1;
}

int hilbert_tame_unram(const PadicElement& a, const PadicElement& b) {
    const auto& K = a.field();
    if (K->p() == 2) throw DomainError("hilbert_tame_unram needs p odd; use hilbert_2adic_bruteforce");
    if (a.is_zero() || b.is_zero()) throw DomainError("hilbert symbol of zero");
    const std::int64_t q1 = K->q() - 1;
    const std::int64_t va = a.valuation(), vb = b.valuation();
    // residue of (-1)^{va vb} a^{vb} b^{-va}, read through dlog; squares have even dlog
    const std::int64_t e = nt::mod(va * vb, 2) * (q1 / 2) + nt::mod(vb * a.residue_dlog() - va * b.residue_dlog(), q1);
    return nt::mod(e, 2) == 0 ? 1 : -1;
}

int hilbert_2adic_bruteforce(const PadicElement& u, const PadicElement& x) {
    const auto& K = u.field();
    if (K->p() != 2) throw DomainError("hilbert_2adic_bruteforce needs p = 2");
    if (u.is_zero() || u.valuation() != 0 || u.residue_code() != 1) {
        throw DomainError("hilbert_2adic_bruteforce: u must lie in 1 + 2O_K");
    }
    if (x.is_zero()) throw DomainError("hilbert symbol of zero");
    // Powers of 4 are norms, so reduce to v(x0) in {0, 1}. Then x0 is a norm from
    // K(sqrt u) iff z^2 - u w^2 = 4 x0 (1 + 8t) is solvable with z, w integral, because
    // 2 O_L lies in O_K[sqrt u] and 1 + 8 O_K consists of squares.
    const std::int64_t vx = x.valuation();
    const std::int64_t v0 = ((vx % 2) + 2) % 2;
    const PadicElement x0 = x.shift(v0 - vx);
    const int M = static_cast<int>(v0) + 5;
    if (K->N() < M) throw PrecisionError("hilbert_2adic_bruteforce needs N >= " + std::to_string(M));
    if (x0.relative_precision() < 3 || u.relative_precision() < M) {
        throw PrecisionError("hilbert_2adic_bruteforce: operands not known to enough digits");
    }
    const std::uint64_t mod = K->ppow(M);
    const std::uint64_t half = K->ppow(M - 1);
    const auto f = static_cast<std::size_t>(K->f());
    auto key = [&](const Coeffs& c) {
        std::uint64_t k = 0;
        for (std::size_t i = 0; i < f; ++i) k = k * mod + c[i] % mod;
        return k;
    };
    Coeffs target = K->scale(x0.unit(), std::uint64_t{4} << v0, mod);
    std::unordered_set<std::uint64_t> squares;
    std::vector<Coeffs> all;
    Coeffs z(f, 0);
    for (;;) {
        all.push_back(z);
        squares.insert(key(K->mul(z, z, mod)));
        std::size_t i = f;
        while (i-- > 0) {
            if (++z[i] < half) break;
            z[i] = 0;
        }
        if (i == static_cast<std::size_t>(-1)) break;
    }
    for (const auto& w : all) {
        const Coeffs uw2 = K->mul(u.unit(), K->mul(w, w, mod), mod);
        if (squares.count(key(K->add(target, uw2, mod)))) return 1;
    }
    return -1;
}

}  // namespace localconst
