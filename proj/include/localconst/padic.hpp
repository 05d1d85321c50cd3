#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <functional>
#include <memory>
#include <string>
#include <unordered_map>
#include <vector>

namespace localconst {

class PadicElement;
struct RootOfUnity;

/// Coefficient vector of length f in the basis 1, w, ..., w^{f-1}.
using Coeffs = std::vector<std::uint64_t>;

/// Unramified extension of Q_p of degree f, at absolute precision N.
///
/// The generator w is a Teichmuller representative of a primitive element of
/// F_q^*, so w^{q-1} = 1 exactly mod p^N and every Teichmuller lift is a power
/// of w.
class UnramifiedField : public std::enable_shared_from_this<UnramifiedField> {
public:
    static std::shared_ptr<const UnramifiedField> make(std::int64_t p, int f, int N);

    std::int64_t p() const { return p_; }
    int f() const { return f_; }
    int N() const { return N_; }
    std::int64_t q() const { return q_; }
    std::uint64_t pN() const { return pN_; }
    /// p^k for 0 <= k <= N.
    std::uint64_t ppow(int k) const { return ppow_.at(static_cast<std::size_t>(k)); }
    /// Monic modulus, low degree first (length f+1).
    const std::vector<std::uint64_t>& modulus() const { return modulus_; }

    /// w^k for any integer k.
    const Coeffs& omega_power(std::int64_t k) const;
    /// Residue code sum_j (c_j mod p) p^j of a coefficient vector.
    std::int64_t residue_code(const Coeffs& c) const;
    /// k with w^k = Teichmuller(residue); throws on residue 0.
    std::int64_t dlog(std::int64_t residue_code) const;
    /// Tr(w^j) in Z/p^N.
    std::uint64_t trace_of_basis(int j) const { return trace_basis_.at(static_cast<std::size_t>(j)); }

    // Arithmetic on coefficient vectors modulo p^k (k <= N).
    Coeffs mul(const Coeffs& a, const Coeffs& b, std::uint64_t mod) const;
    Coeffs add(const Coeffs& a, const Coeffs& b, std::uint64_t mod) const;
    Coeffs sub(const Coeffs& a, const Coeffs& b, std::uint64_t mod) const;
    Coeffs scale(const Coeffs& a, std::uint64_t s, std::uint64_t mod) const;
    Coeffs reduce(const Coeffs& a, std::uint64_t mod) const;
    Coeffs powc(Coeffs a, std::uint64_t e, std::uint64_t mod) const;
    /// Inverse of a unit modulo p^k.
    Coeffs unit_inverse(const Coeffs& a, int k) const;
    /// Frobenius w -> w^p, applied j times.
    Coeffs frobenius(const Coeffs& a, int j, std::uint64_t mod) const;
    /// Smallest t with p^t dividing every coefficient (N if all vanish).
    int coeff_valuation(const Coeffs& a) const;

    bool operator==(const UnramifiedField& o) const { return p_ == o.p_ && f_ == o.f_ && N_ == o.N_; }
    std::string describe() const;

private:
    UnramifiedField(std::int64_t p, int f, int N);
    void build();

    std::int64_t p_;
    int f_;
    int N_;
    std::int64_t q_;
    std::uint64_t pN_;
    std::vector<std::uint64_t> ppow_;
    std::vector<std::uint64_t> modulus_;
    std::vector<Coeffs> omega_pow_;
    std::unordered_map<std::int64_t, std::int64_t> dlog_;
    std::vector<std::uint64_t> trace_basis_;
};

using Field = std::shared_ptr<const UnramifiedField>;

inline Field make_field(std::int64_t p, int f, int N) { return UnramifiedField::make(p, f, N); }

/// Element p^v * u of K with u a unit known mod p^rel, or a zero known to
/// absolute precision abs (possibly exact).
class PadicElement {
public:
    static constexpr std::int64_t kExact = std::int64_t{1} << 40;

    PadicElement() = default;

    static PadicElement zero(const Field& K, std::int64_t abs_prec = kExact);
    static PadicElement from_int(const Field& K, const mpz_class& n);
    static PadicElement from_int(const Field& K, std::int64_t n) { return from_int(K, mpz_class(static_cast<long>(n))); }
    static PadicElement from_rational(const Field& K, const mpq_class& x);
    /// p^v * sum_j c_j w^j; coefficients need not form a unit.
    static PadicElement from_coeffs(const Field& K, const std::vector<mpz_class>& c, std::int64_t v = 0);
    /// p^v * u with u given mod p^rel.
    static PadicElement make(const Field& K, std::int64_t v, int rel, Coeffs u);
    /// w^k (Teichmuller power).
    static PadicElement omega(const Field& K, std::int64_t k = 1);
    /// Teichmuller lift of a residue code (see UnramifiedField::residue_code).
    static PadicElement teichmuller(const Field& K, std::int64_t residue_code);
    /// Teichmuller lift of an integer residue mod p.
    static PadicElement teichmuller_int(const Field& K, std::int64_t r);

    const Field& field() const { return K_; }
    bool is_zero() const { return zero_; }
    /// Valuation; for zero this is the absolute precision.
    std::int64_t valuation() const { return v_; }
    int relative_precision() const { return zero_ ? 0 : rel_; }
    std::int64_t absolute_precision() const { return zero_ ? v_ : v_ + rel_; }
    const Coeffs& unit() const { return u_; }
    bool is_exact_zero() const { return zero_ && v_ >= kExact; }

    PadicElement operator+(const PadicElement& o) const;
    PadicElement operator-(const PadicElement& o) const;
    PadicElement operator-() const;
    PadicElement operator*(const PadicElement& o) const;
    PadicElement operator/(const PadicElement& o) const;
    PadicElement inverse() const;
    PadicElement pow(std::int64_t e) const;
    /// Multiply by p^k.
    PadicElement shift(std::int64_t k) const;
    /// Truncate to absolute precision a (no-op if already coarser).
    PadicElement truncate(std::int64_t a) const;

    PadicElement frobenius(int times = 1) const;
    PadicElement frobenius_inverse() const;
    /// Tr_{K/Q_p}, as an element of K with zero w-part.
    PadicElement trace() const;
    /// Teichmuller lift of the leading residue (units and non-units alike).
    PadicElement teichmuller_part() const;
    /// dlog of the leading residue against w.
    std::int64_t residue_dlog() const;
    /// Residue code of the unit part.
    std::int64_t residue_code() const;

    /// Iwasawa logarithm (log p = 0, log of roots of unity = 0).
    PadicElement log() const;

    /// Value in Z/p^k when the element lies in Z_p (w-part zero) and v >= 0.
    std::uint64_t to_zp_mod(int k) const;
    /// The element as a rational number when it lies in Q_p, i.e. p^v * u0 with u0 in [0, p^rel).
    mpq_class to_rational() const;
    bool in_qp() const;

    /// Equality at the common absolute precision.
    bool congruent(const PadicElement& o) const;
    /// Equality of representations (same valuation, precision and digits).
    bool operator==(const PadicElement& o) const;

    std::string to_string() const;

private:
    Field K_;
    bool zero_ = true;
    std::int64_t v_ = kExact;
    int rel_ = 0;
    Coeffs u_;
};

/// psi_K(x) = exp(2 pi i {Tr x}); requires absolute precision >= 0.
RootOfUnity psi(const PadicElement& x);

/// Representatives of (O_K / p^c)^*, in lexicographic order of coefficient vectors.
void for_each_unit_residue(const Field& K, int c, const std::function<void(const PadicElement&)>& fn);
std::vector<PadicElement> unit_residues(const Field& K, int c);

// Hilbert symbols.
int hilbert_qp(const mpq_class& a, const mpq_class& b, std::int64_t p);
/// Tame symbol over K, p odd.
int hilbert_tame_unram(const PadicElement& a, const PadicElement& b);
/// (u, x) over K for p = 2 and u a 1-unit, by exhaustive norm search.
int hilbert_2adic_bruteforce(const PadicElement& u, const PadicElement& x);

}  // namespace localconst
