#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "localconst/cyclotomic.hpp"
#include "localconst/padic.hpp"

namespace localconst {

/// Finite-order character of K^*:
///   chi(p^v w^k u1) = on_p^v * zeta_{q-1}^{tame k} * sign(u1) * psi(alpha log u1)
/// where sign is only used for p = 2, f = 1 and records chi(-1).
class MultiplicativeCharacter {
public:
    MultiplicativeCharacter() = default;
    explicit MultiplicativeCharacter(Field K, RootOfUnity on_p = {}, std::int64_t tame = 0,
                                     std::optional<PadicElement> alpha = std::nullopt, int sign = 1);

    static MultiplicativeCharacter trivial(const Field& K) { return MultiplicativeCharacter(K); }
    /// Character with chi(w) = zeta_{q-1}^t, chi(p) = w, trivial on 1-units.
    static MultiplicativeCharacter tame_char(const Field& K, std::int64_t t, RootOfUnity w = {});
    /// x -> psi(alpha log x).
    static MultiplicativeCharacter chi_alpha(const PadicElement& alpha);
    /// x -> (u, x) over Q_2, for u in 1 + 2Z_2.
    static MultiplicativeCharacter rho_u(const PadicElement& u);

    const Field& field() const { return K_; }
    const RootOfUnity& on_p() const { return on_p_; }
    std::int64_t tame_exp() const { return tame_; }
    const std::optional<PadicElement>& alpha() const { return alpha_; }
    int sign() const { return sign_; }

    bool is_trivial() const;
    bool is_unramified() const { return conductor_exponent() == 0; }
    bool is_wild() const { return alpha_.has_value(); }
    /// -v(alpha) for wild characters, else 0.
    int wild_level() const;

    RootOfUnity eval(const PadicElement& x) const;
    int conductor_exponent() const;
    std::int64_t order() const;

    /// The same character with wild part removed.
    MultiplicativeCharacter tame_part() const;
    MultiplicativeCharacter wild_part() const;

    MultiplicativeCharacter operator*(const MultiplicativeCharacter& o) const;
    MultiplicativeCharacter inverse() const;
    MultiplicativeCharacter pow(std::int64_t k) const;

    bool operator==(const MultiplicativeCharacter& o) const;
    bool operator<(const MultiplicativeCharacter& o) const { return key() < o.key(); }
    /// Parseable description (see charspec.hpp).
    std::string spec() const;
    std::string key() const;

private:
    void canonicalize();

    Field K_;
    RootOfUnity on_p_;
    std::int64_t tame_ = 0;
    std::optional<PadicElement> alpha_;
    int sign_ = 1;
};

MultiplicativeCharacter galois_twist(const MultiplicativeCharacter& chi, const GaloisElement& sigma);
MultiplicativeCharacter adams(const MultiplicativeCharacter& chi, std::int64_t k);

/// (m_E, n): E = Q(zeta_{m_E}) is the field of values, p^n = #mu_{p^infty}(E).
std::pair<std::int64_t, int> values_field(const MultiplicativeCharacter& chi);

/// Formal Z-combination of characters, kept merged and sorted.
class VirtualCharacter {
public:
    using Term = std::pair<MultiplicativeCharacter, std::int64_t>;

    VirtualCharacter() = default;
    explicit VirtualCharacter(const MultiplicativeCharacter& chi, std::int64_t n = 1);
    VirtualCharacter(Field K, std::vector<Term> terms);
    /// The trivial character with multiplicity n.
    static VirtualCharacter constant(const Field& K, std::int64_t n);

    const std::vector<Term>& terms() const { return terms_; }
    bool empty() const { return terms_.empty(); }
    std::int64_t degree() const;
    MultiplicativeCharacter det() const;
    const Field& field() const;

    VirtualCharacter operator+(const VirtualCharacter& o) const;
    VirtualCharacter operator-(const VirtualCharacter& o) const;
    VirtualCharacter operator-() const;
    VirtualCharacter operator*(const VirtualCharacter& o) const;
    VirtualCharacter pow(std::int64_t e) const;

    bool operator==(const VirtualCharacter& o) const { return terms_ == o.terms_; }
    std::string to_string() const;

private:
    void canonicalize();
    Field K_;
    std::vector<Term> terms_;
};

/// 1 - chi as a virtual character.
VirtualCharacter one_minus(const MultiplicativeCharacter& chi);
VirtualCharacter adams(const VirtualCharacter& V, std::int64_t k);
VirtualCharacter galois_twist(const VirtualCharacter& V, const GaloisElement& sigma);

}  // namespace localconst
