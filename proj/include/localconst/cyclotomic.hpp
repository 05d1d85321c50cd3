#pragma once

#include <gmpxx.h>

#include <complex>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace localconst {

/// zeta_m^k in lowest terms: gcd(k, m) = 1, 0 <= k < m, and 1 is (1, 0).
struct RootOfUnity {
    std::int64_t m = 1;
    std::int64_t k = 0;

    RootOfUnity() = default;
    RootOfUnity(std::int64_t m, std::int64_t k);

    std::int64_t order() const { return m; }
    bool is_one() const { return m == 1; }

    RootOfUnity operator*(const RootOfUnity& o) const;
    RootOfUnity inverse() const;
    RootOfUnity pow(std::int64_t e) const;
    /// zeta -> zeta^k' for k' coprime to the order.
    RootOfUnity galois(std::int64_t kk) const;

    bool operator==(const RootOfUnity& o) const = default;
    std::string to_string() const;
};

/// Component of order ell^a for each prime ell dividing r.m.
std::map<std::int64_t, RootOfUnity> decompose_root(const RootOfUnity& r);

/// sigma_k acting on Q(zeta_m) by zeta_m -> zeta_m^k.
struct GaloisElement {
    std::int64_t m;
    std::int64_t k;

    GaloisElement(std::int64_t m, std::int64_t k);
    GaloisElement compose(const GaloisElement& o) const;
    /// kappa_p: the image of k in (Z/p^N)^*.
    std::int64_t kappa_p(std::int64_t p, int N) const;
};

struct ComplexApprox {
    std::string re;
    std::string im;
};

/// Element of Q(zeta_m) in the power basis modulo Phi_m, stored as an integer
/// numerator vector over a positive common denominator in lowest terms.
class CyclotomicNumber {
public:
    /// Zero in Q(zeta_1).
    CyclotomicNumber();
    static CyclotomicNumber zero(std::int64_t m);
    static CyclotomicNumber rational(const mpq_class& q, std::int64_t m = 1);
    static CyclotomicNumber root(std::int64_t m, std::int64_t k);
    static CyclotomicNumber from(const RootOfUnity& r) { return root(r.m, r.k); }

    /// Sum of c_j zeta_m^j over a full exponent vector of length m.
    static CyclotomicNumber from_group_ring(std::int64_t m, std::vector<mpz_class> coeffs,
                                           mpz_class den = 1);

    std::int64_t m() const { return m_; }
    const std::vector<mpz_class>& numerators() const { return num_; }
    const mpz_class& denominator() const { return den_; }
    mpq_class coeff(std::size_t i) const;

    bool is_zero() const;
    bool is_rational() const;

    CyclotomicNumber embed(std::int64_t m2) const;
    CyclotomicNumber galois(std::int64_t k) const;
    CyclotomicNumber galois(const GaloisElement& s) const;
    /// Complex conjugate, i.e. galois(-1).
    CyclotomicNumber conj() const { return galois(-1); }

    CyclotomicNumber operator+(const CyclotomicNumber& o) const;
    CyclotomicNumber operator-(const CyclotomicNumber& o) const;
    CyclotomicNumber operator-() const;
    CyclotomicNumber operator*(const CyclotomicNumber& o) const;
    CyclotomicNumber operator*(const mpq_class& q) const;
    CyclotomicNumber operator/(const mpq_class& q) const;
    CyclotomicNumber mul_root(const RootOfUnity& r) const;
    CyclotomicNumber pow(std::int64_t e) const;

    bool operator==(const CyclotomicNumber& o) const;

    std::optional<RootOfUnity> as_root_of_unity() const;

    std::complex<double> to_complex() const;
    ComplexApprox complex_embedding(int digits) const;

    std::string to_string() const;

private:
    CyclotomicNumber(std::int64_t m, std::vector<mpz_class> num, mpz_class den);
    void normalize();

    std::int64_t m_ = 1;
    std::vector<mpz_class> num_;
    mpz_class den_ = 1;
};

inline CyclotomicNumber root_of_unity(std::int64_t m, std::int64_t k) {
    return CyclotomicNumber::root(m, k);
}

/// Integer coefficients of the m-th cyclotomic polynomial, low degree first.
const std::vector<std::int64_t>& cyclotomic_polynomial(std::int64_t m);

/// sum_{t in F_p} zeta_p^{t^2} for odd p, zeta_8 + zeta_8^{-1} for p = 2.
CyclotomicNumber sqrt_pstar(std::int64_t p);
/// Positive square root of the odd prime p, in Q(zeta_{4p}).
CyclotomicNumber sqrt_p(std::int64_t p);

}  // namespace localconst
