#pragma once

#include <cstdint>
#include <map>
#include <mutex>
#include <optional>
#include <string>

#include "localconst/characters.hpp"
#include "localconst/cyclotomic.hpp"
#include "localconst/padic.hpp"

namespace localconst {

enum class Backend { Oracle, Closed };

std::string backend_name(Backend b);

struct EpsilonValue {
    CyclotomicNumber value;
    std::optional<RootOfUnity> root;
    int conductor_exponent = 0;
    std::string field;

    static EpsilonValue from(CyclotomicNumber v, int c, std::string field);
    static EpsilonValue from(const RootOfUnity& r, int c, std::string field);

    EpsilonValue operator*(const EpsilonValue& o) const;
    /// Inverse of a modulus-one value, i.e. its complex conjugate.
    EpsilonValue inverse() const;
    EpsilonValue pow(std::int64_t e) const;
    EpsilonValue galois(std::int64_t k) const;
};

/// lcm(8 or 4p, p^{c+1}, q-1, order(chi)): every value below lives in Q(zeta_M).
std::int64_t ambient_modulus(const MultiplicativeCharacter& chi);

/// q^{-c/2} sum_{x in (O/p^c)^*} conj(chi)(x d^{-1}) psi(x d^{-1}); d^{-1} defaults to p^{-c}.
EpsilonValue w_oracle(const MultiplicativeCharacter& chi, const std::optional<PadicElement>& d_inv = std::nullopt);

/// The three factors of the closed form W = tame * G * wild.
struct ClosedForm {
    RootOfUnity tame;      // chi_0(d)
    CyclotomicNumber g;    // normalized quadratic Gauss sum, 1 for even conductor
    RootOfUnity wild;      // psi(alpha(1 - log alpha)) and its p = 2 variants
    PadicElement d_inv;
};

ClosedForm closed_form(const MultiplicativeCharacter& chi);
EpsilonValue w_closed(const MultiplicativeCharacter& chi);

/// q^{-1/2} sum over y in p^i O / p^{i+1} O of conj(chi_0)(1+y) psi(alpha (y - log(1+y))), c = 2i+1.
CyclotomicNumber g_full(const MultiplicativeCharacter& chi);
/// gamma(alpha, 0) = q^{-1/2} sum psi(alpha y^2 / 2) for p odd, g_full for p = 2; 1 for even c.
RootOfUnity g_quadratic(const MultiplicativeCharacter& chi);

/// i^{((q^e - 1)/2)^2} for p odd, 1 for p = 2, with e the conductor exponent.
RootOfUnity iota_from_exponent(std::int64_t p, int f, std::int64_t e);
RootOfUnity iota(const MultiplicativeCharacter& chi);

EpsilonValue w_of(const MultiplicativeCharacter& chi, Backend b);
EpsilonValue w_star(const MultiplicativeCharacter& chi, Backend b = Backend::Oracle);
EpsilonValue w_virtual(const VirtualCharacter& V, Backend b = Backend::Oracle);
EpsilonValue w_star_virtual(const VirtualCharacter& V, Backend b = Backend::Oracle);

/// p-primary component of a root-of-unity value.
RootOfUnity w_p_part(const EpsilonValue& e, std::int64_t p);

/// Memoized W values keyed by character; safe to share between threads.
class EpsilonCache {
public:
    explicit EpsilonCache(Backend b = Backend::Oracle) : backend_(b) {}
    EpsilonValue w(const MultiplicativeCharacter& chi);
    EpsilonValue w_star(const MultiplicativeCharacter& chi);
    EpsilonValue w_virtual(const VirtualCharacter& V);
    EpsilonValue w_star_virtual(const VirtualCharacter& V);
    /// W_p of a virtual character: product of the p-parts of its components.
    RootOfUnity w_p(const VirtualCharacter& V);
    RootOfUnity w_p(const MultiplicativeCharacter& chi);

private:
    Backend backend_;
    std::mutex mu_;
    std::map<std::string, EpsilonValue> cache_;
};

}  // namespace localconst
