#include "localconst/epsilon.hpp"

#include "localconst/errors.hpp"
#include "localconst/number_theory.hpp"

namespace localconst {

std::string backend_name(Backend b) { return b == Backend::Oracle ? "oracle" : "closed"; }

// ---- EpsilonValue ----------------------------------------------------------

EpsilonValue EpsilonValue::from(CyclotomicNumber v, int c, std::string field) {
    EpsilonValue e;
    e.root = v.as_root_of_unity();
    e.value = std::move(v);
    e.conductor_exponent = c;
    e.field = std::move(field);
    return e;
}

EpsilonValue EpsilonValue::from(const RootOfUnity& r, int c, std::string field) {
    EpsilonValue e;
    e.value = CyclotomicNumber::from(r);
    e.root = r;
    e.conductor_exponent = c;
    e.field = std::move(field);
    return e;
}

EpsilonValue EpsilonValue::operator*(const EpsilonValue& o) const {
    const int c = conductor_exponent + o.conductor_exponent;
    if (root && o.root) return from(*root * *o.root, c, field);
    return from(value * o.value, c, field);
}

EpsilonValue EpsilonValue::inverse() const {
    if (root) return from(root->inverse(), -conductor_exponent, field);
    return from(value.conj(), -conductor_exponent, field);
}

EpsilonValue EpsilonValue::pow(std::int64_t e) const {
    if (root) return from(root->pow(e), static_cast<int>(conductor_exponent * e), field);
    if (e < 0) return inverse().pow(-e);
    return from(value.pow(e), static_cast<int>(conductor_exponent * e), field);
}

EpsilonValue EpsilonValue::galois(std::int64_t k) const {
    if (root) return from(root->galois(k), conductor_exponent, field);
    return from(value.galois(k), conductor_exponent, field);
}

// ---- helpers ---------------------------------------------------------------

namespace {

void add_root(std::vector<std::int64_t>& counts, std::int64_t M, const RootOfUnity& r, std::int64_t times = 1) {
    const auto j = static_cast<std::size_t>(static_cast<__int128>(r.k) * (M / r.m) % M);
    counts[j] += times;
}

CyclotomicNumber from_counts(std::int64_t M, const std::vector<std::int64_t>& counts) {
    std::vector<mpz_class> a(counts.size());
    for (std::size_t i = 0; i < counts.size(); ++i) a[i] = static_cast<long>(counts[i]);
    return CyclotomicNumber::from_group_ring(M, std::move(a));
}

// x / p^{e/2}, exact (uses sqrt p when e is odd).
CyclotomicNumber div_sqrt_ppow(const CyclotomicNumber& x, std::int64_t p, std::int64_t e) {
    mpz_class pe;
    if (e % 2 == 0) {
        mpz_ui_pow_ui(pe.get_mpz_t(), static_cast<unsigned long>(p), static_cast<unsigned long>(e / 2));
        return x / mpq_class(pe);
    }
    mpz_ui_pow_ui(pe.get_mpz_t(), static_cast<unsigned long>(p), static_cast<unsigned long>((e + 1) / 2));
    return (x * sqrt_p(p)) / mpq_class(pe);
}

std::string field_label(const Field& K) {
    return "p=" + std::to_string(K->p()) + ",f=" + std::to_string(K->f()) + ",N=" + std::to_string(K->N());
}

// y ranges over p^i * (Teichmuller-free residue representatives), including 0.
template <class Fn>
void for_each_layer(const Field& K, int i, Fn&& fn) {
    const auto f = static_cast<std::size_t>(K->f());
    const auto P = static_cast<std::uint64_t>(K->p());
    Coeffs digits(f, 0);
    for (;;) {
        fn(PadicElement::make(K, i, K->N(), digits).truncate(PadicElement::kExact));
        std::size_t j = f;
        while (j-- > 0) {
            if (++digits[j] < P) break;
            digits[j] = 0;
        }
        if (j == static_cast<std::size_t>(-1)) break;
    }
}

void require_wild(const MultiplicativeCharacter& chi, const char* what) {
    if (!chi.is_wild()) {
        throw DomainError(std::string(what) + " needs a wildly ramified character (conductor exponent >= 2 with a logarithmic part)");
    }
}

}  // namespace

std::int64_t ambient_modulus(const MultiplicativeCharacter& chi) {
    const Field& K = chi.field();
    const std::int64_t p = K->p();
    std::int64_t M = p == 2 ? 8 : 4 * p;
    M = nt::lcm(M, nt::ipow(p, chi.conductor_exponent() + 1));
    M = nt::lcm(M, K->q() - 1);
    M = nt::lcm(M, chi.order());
    return M;
}

// ---- oracle ----------------------------------------------------------------

EpsilonValue w_oracle(const MultiplicativeCharacter& chi, const std::optional<PadicElement>& d_inv) {
    const Field& K = chi.field();
    const int c = chi.conductor_exponent();
    if (c == 0) return EpsilonValue::from(RootOfUnity{}, 0, field_label(K));
    if (c > K->N()) throw PrecisionError("conductor exponent exceeds the field precision");
    const PadicElement dinv = d_inv ? *d_inv : PadicElement::from_int(K, 1).shift(-c);
    if (dinv.is_zero() || dinv.valuation() != -c) {
        throw DomainError("d^{-1} must have valuation -" + std::to_string(c));
    }
    const std::int64_t M = ambient_modulus(chi);
    std::vector<std::int64_t> counts(static_cast<std::size_t>(M), 0);
    const RootOfUnity chi_d = chi.eval(dinv).inverse();
    for_each_unit_residue(K, c, [&](const PadicElement& x) {
        const PadicElement y = x * dinv;
        add_root(counts, M, chi.eval(x).inverse() * chi_d * psi(y));
    });
    const CyclotomicNumber W = div_sqrt_ppow(from_counts(M, counts), K->p(), static_cast<std::int64_t>(K->f()) * c);
    return EpsilonValue::from(W, c, field_label(K));
}

// ---- closed form -----------------------------------------------------------

CyclotomicNumber g_full(const MultiplicativeCharacter& chi) {
    require_wild(chi, "g_full");
    const Field& K = chi.field();
    const int c = chi.conductor_exponent();
    if (c % 2 == 0) return CyclotomicNumber::rational(1);
    const int i = (c - 1) / 2;
    const PadicElement& alpha = *chi.alpha();
    const std::int64_t M = ambient_modulus(chi);
    std::vector<std::int64_t> counts(static_cast<std::size_t>(M), 0);
    const PadicElement one = PadicElement::from_int(K, 1);
    // the tame part only matters on 1 + 2Z_2 (sign component, c = 3)
    const MultiplicativeCharacter chi0 = chi.tame_part();
    for_each_layer(K, i, [&](const PadicElement& y) {
        if (y.is_zero()) {
            add_root(counts, M, RootOfUnity{});
            return;
        }
        add_root(counts, M, psi(alpha * (y - (one + y).log())) * chi0.eval(one + y).inverse());
    });
    return div_sqrt_ppow(from_counts(M, counts), K->p(), K->f());
}

RootOfUnity g_quadratic(const MultiplicativeCharacter& chi) {
    require_wild(chi, "g_quadratic");
    const Field& K = chi.field();
    const int c = chi.conductor_exponent();
    if (c % 2 == 0) return {};
    CyclotomicNumber g;
    if (K->p() == 2) {
        g = g_full(chi);
    } else {
        const int i = (c - 1) / 2;
        const PadicElement half = PadicElement::from_rational(K, mpq_class(1, 2));
        const PadicElement& alpha = *chi.alpha();
        const std::int64_t M = ambient_modulus(chi);
        std::vector<std::int64_t> counts(static_cast<std::size_t>(M), 0);
        for_each_layer(K, i, [&](const PadicElement& y) {
            if (y.is_zero()) {
                add_root(counts, M, RootOfUnity{});
                return;
            }
            add_root(counts, M, psi(alpha * y * y * half));
        });
        g = div_sqrt_ppow(from_counts(M, counts), K->p(), K->f());
    }
    auto r = g.as_root_of_unity();
    if (!r) throw DomainError("quadratic Gauss sum is not a root of unity: " + g.to_string());
    return *r;
}

ClosedForm closed_form(const MultiplicativeCharacter& chi) {
    require_wild(chi, "w_closed");
    const Field& K = chi.field();
    const std::int64_t p = K->p();
    const int n = chi.wild_level();
    const PadicElement& alpha = *chi.alpha();
    const PadicElement one = PadicElement::from_int(K, 1);

    ClosedForm out{{}, CyclotomicNumber::rational(1), {}, alpha};
    const bool even2 = p == 2 && n % 2 == 0;
    if (even2) {
        // d^{-1} = alpha - 2^{n/2-1} F^{-1}(alpha)
        out.d_inv = alpha - alpha.frobenius_inverse().shift(n / 2 - 1);
    }
    out.tame = chi.tame_part().eval(out.d_inv).inverse();

    if (!even2) {
        out.wild = psi(alpha * (one - alpha.log()));
        if (n % 2 == 1) out.g = g_full(chi);
    } else if (n >= 6) {
        const PadicElement fa = alpha.frobenius_inverse();
        const PadicElement corr = (fa * fa / alpha).shift(n - 3);
        out.wild = psi(alpha * (one - alpha.log()) + corr);
    } else {
        out.wild = psi(-(alpha * out.d_inv.log()) + out.d_inv);
    }
    return out;
}

EpsilonValue w_closed(const MultiplicativeCharacter& chi) {
    const ClosedForm cf = closed_form(chi);
    const CyclotomicNumber W = cf.g.mul_root(cf.tame * cf.wild);
    return EpsilonValue::from(W, chi.conductor_exponent(), field_label(chi.field()));
}

// ---- iota, W*, virtual -----------------------------------------------------

RootOfUnity iota_from_exponent(std::int64_t p, int f, std::int64_t e) {
    if (p == 2) return {};
    // (N f - 1)/2 is odd iff q^e = 3 mod 4
    const std::uint64_t qe = nt::powmod(static_cast<std::uint64_t>(nt::mod(p, 4)), static_cast<std::uint64_t>(f) * static_cast<std::uint64_t>(e < 0 ? -e : e), 4);
    return qe == 3 ? RootOfUnity(4, 1) : RootOfUnity{};
}

RootOfUnity iota(const MultiplicativeCharacter& chi) {
    const Field& K = chi.field();
    return iota_from_exponent(K->p(), K->f(), chi.conductor_exponent());
}

EpsilonValue w_of(const MultiplicativeCharacter& chi, Backend b) {
    if (b == Backend::Closed && chi.is_wild()) return w_closed(chi);
    return w_oracle(chi);
}

EpsilonValue w_star(const MultiplicativeCharacter& chi, Backend b) {
    const EpsilonValue W = w_of(chi, b);
    return EpsilonValue::from(iota(chi), 0, W.field) * W;
}

EpsilonValue w_virtual(const VirtualCharacter& V, Backend b) {
    EpsilonValue acc = EpsilonValue::from(RootOfUnity{}, 0, V.empty() ? "" : field_label(V.field()));
    for (const auto& [chi, n] : V.terms()) acc = acc * w_of(chi, b).pow(n);
    return acc;
}

EpsilonValue w_star_virtual(const VirtualCharacter& V, Backend b) {
    EpsilonValue acc = EpsilonValue::from(RootOfUnity{}, 0, V.empty() ? "" : field_label(V.field()));
    for (const auto& [chi, n] : V.terms()) acc = acc * w_star(chi, b).pow(n);
    return acc;
}

RootOfUnity w_p_part(const EpsilonValue& e, std::int64_t p) {
    if (!e.root) throw DomainError("W_p needs W to be a root of unity");
    const auto parts = decompose_root(*e.root);
    auto it = parts.find(p);
    return it == parts.end() ? RootOfUnity{} : it->second;
}

// ---- cache -----------------------------------------------------------------

EpsilonValue EpsilonCache::w(const MultiplicativeCharacter& chi) {
    const std::string key = chi.field()->describe() + "|" + chi.spec();
    {
        std::lock_guard<std::mutex> lock(mu_);
        auto it = cache_.find(key);
        if (it != cache_.end()) return it->second;
    }
    EpsilonValue v = w_of(chi, backend_);
    std::lock_guard<std::mutex> lock(mu_);
    return cache_.emplace(key, std::move(v)).first->second;
}

EpsilonValue EpsilonCache::w_star(const MultiplicativeCharacter& chi) {
    const EpsilonValue W = w(chi);
    return EpsilonValue::from(iota(chi), 0, W.field) * W;
}

EpsilonValue EpsilonCache::w_virtual(const VirtualCharacter& V) {
    EpsilonValue acc = EpsilonValue::from(RootOfUnity{}, 0, "");
    for (const auto& [chi, n] : V.terms()) acc = acc * w(chi).pow(n);
    if (!V.empty()) acc.field = field_label(V.field());
    return acc;
}

EpsilonValue EpsilonCache::w_star_virtual(const VirtualCharacter& V) {
    EpsilonValue acc = EpsilonValue::from(RootOfUnity{}, 0, "");
    for (const auto& [chi, n] : V.terms()) acc = acc * w_star(chi).pow(n);
    if (!V.empty()) acc.field = field_label(V.field());
    return acc;
}

RootOfUnity EpsilonCache::w_p(const MultiplicativeCharacter& chi) {
    return w_p_part(w(chi), chi.field()->p());
}

RootOfUnity EpsilonCache::w_p(const VirtualCharacter& V) {
    RootOfUnity acc;
    for (const auto& [chi, n] : V.terms()) acc = acc * w_p(chi).pow(n);
    return acc;
}

}  // namespace localconst
