#include "localconst/padic.hpp"

#include <algorithm>
#include <sstream>

#include "localconst/cyclotomic.hpp"
#include "localconst/errors.hpp"
#include "localconst/number_theory.hpp"

namespace localconst {

namespace {

using u64 = std::uint64_t;

u64 mulm(u64 a, u64 b, u64 m) { return nt::mulmod(a, b, m); }
u64 addm(u64 a, u64 b, u64 m) {
    const u64 s = a + b;
    return s >= m ? s - m : s;
}
u64 subm(u64 a, u64 b, u64 m) { return a >= b ? a - b : a + (m - b); }

u64 mpz_mod_u64(const mpz_class& x, u64 m) {
    mpz_class r;
    mpz_class mm;
    mpz_import(mm.get_mpz_t(), 1, 1, sizeof(u64), 0, 0, &m);
    mpz_fdiv_r(r.get_mpz_t(), x.get_mpz_t(), mm.get_mpz_t());
    u64 out = 0;
    mpz_export(&out, nullptr, 1, sizeof(u64), 0, 0, r.get_mpz_t());
    return out;
}

// Product of two polynomials of degree < f modulo a monic polynomial of degree f.
std::vector<u64> polymulmod(const std::vector<u64>& a, const std::vector<u64>& b,
                            const std::vector<u64>& monic, u64 m) {
    const std::size_t f = monic.size() - 1;
    std::vector<u64> prod(2 * f - 1, 0);
    for (std::size_t i = 0; i < f; ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < f; ++j) {
            if (b[j] != 0) prod[i + j] = addm(prod[i + j], mulm(a[i] % m, b[j] % m, m), m);
        }
    }
    for (std::size_t i = prod.size(); i-- > f;) {
        const u64 c = prod[i];
        if (c == 0) continue;
        for (std::size_t j = 0; j < f; ++j) {
            prod[i - f + j] = subm(prod[i - f + j], mulm(c, monic[j] % m, m), m);
        }
        prod[i] = 0;
    }
    prod.resize(f);
    return prod;
}

std::vector<u64> polypowmod(std::vector<u64> a, u64 e, const std::vector<u64>& monic, u64 m) {
    const std::size_t f = monic.size() - 1;
    std::vector<u64> r(f, 0);
    r[0] = 1 % m;
    while (e) {
        if (e & 1U) r = polymulmod(r, a, monic, m);
        e >>= 1U;
        if (e) a = polymulmod(a, a, monic, m);
    }
    return r;
}

// Smallest monic primitive polynomial of degree f over F_p, ordered by
// (a_{f-1}, ..., a_0); for f = 1 this is x - g with g the least primitive root.
std::vector<u64> primitive_polynomial(std::int64_t p, int f) {
    const auto P = static_cast<u64>(p);
    if (f == 1) return {static_cast<u64>(nt::mod(-nt::primitive_root(p), p)), 1};
    const std::int64_t q = nt::ipow(p, f);
    const auto primes = nt::factorize(q - 1);
    std::vector<u64> x(static_cast<std::size_t>(f), 0);
    x[1] = 1;
    for (std::int64_t code = 0; code < q; ++code) {
        std::vector<u64> g(static_cast<std::size_t>(f) + 1);
        std::int64_t c = code;
        for (int i = 0; i < f; ++i) {
            g[static_cast<std::size_t>(i)] = static_cast<u64>(c % p);
            c /= p;
        }
        g[static_cast<std::size_t>(f)] = 1;
        if (g[0] == 0) continue;
        const auto one = polypowmod(x, static_cast<u64>(q - 1), g, P);
        bool ok = one[0] == 1 && std::all_of(one.begin() + 1, one.end(), [](u64 v) { return v == 0; });
        for (auto it = primes.begin(); ok && it != primes.end(); ++it) {
            const auto r = polypowmod(x, static_cast<u64>((q - 1) / it->first), g, P);
            if (r[0] == 1 && std::all_of(r.begin() + 1, r.end(), [](u64 v) { return v == 0; })) ok = false;
        }
        if (ok) return g;
    }
    throw DomainError("no primitive polynomial found");
}

}  // namespace

// ---- UnramifiedField -------------------------------------------------------

UnramifiedField::UnramifiedField(std::int64_t p, int f, int N) : p_(p), f_(f), N_(N) {}

Field UnramifiedField::make(std::int64_t p, int f, int N) {
    if (!nt::is_prime(p)) throw DomainError("make_field: p = " + std::to_string(p) + " is not prime");
    if (f < 1) throw DomainError("make_field: f must be >= 1");
    if (N < 1) throw DomainError("make_field: N must be >= 1");
    std::shared_ptr<UnramifiedField> K(new UnramifiedField(p, f, N));
    K->build();
    return K;
}

void UnramifiedField::build() {
    long double bits = static_cast<long double>(N_) * std::log2(static_cast<long double>(p_));
    if (bits >= 62) throw DomainError("make_field: p^N must be below 2^62");
    q_ = nt::ipow(p_, f_);
    if (q_ > (1 << 20)) throw DomainError("make_field: residue field too large");
    ppow_.resize(static_cast<std::size_t>(N_) + 1);
    ppow_[0] = 1;
    for (int k = 1; k <= N_; ++k) ppow_[static_cast<std::size_t>(k)] = ppow_[static_cast<std::size_t>(k) - 1] * static_cast<u64>(p_);
    pN_ = ppow_[static_cast<std::size_t>(N_)];
    const auto F = static_cast<std::size_t>(f_);

    // Teichmuller root of the naive lift of a primitive polynomial.
    const std::vector<u64> g = primitive_polynomial(p_, f_);
    std::vector<u64> x(F, 0);
    if (f_ == 1) {
        x[0] = subm(0, g[0], pN_);
    } else {
        x[1] = 1;
    }
    std::vector<u64> w = x;
    for (int i = 0; i < N_ * f_; ++i) w = polypowmod(w, static_cast<u64>(p_), g, pN_);

    // modulus = prod_j (X - w^{p^j}), computed with coefficients in (Z/p^N)[x]/(g).
    std::vector<std::vector<u64>> poly{std::vector<u64>(F, 0)};
    poly[0][0] = 1;
    std::vector<u64> conj = w;
    for (int j = 0; j < f_; ++j) {
        std::vector<std::vector<u64>> next(poly.size() + 1, std::vector<u64>(F, 0));
        for (std::size_t i = 0; i < poly.size(); ++i) {
            for (std::size_t t = 0; t < F; ++t) next[i + 1][t] = addm(next[i + 1][t], poly[i][t], pN_);
            const auto prod = polymulmod(poly[i], conj, g, pN_);
            for (std::size_t t = 0; t < F; ++t) next[i][t] = subm(next[i][t], prod[t], pN_);
        }
        poly.swap(next);
        conj = polypowmod(conj, static_cast<u64>(p_), g, pN_);
    }
    modulus_.assign(F + 1, 0);
    for (std::size_t i = 0; i <= F; ++i) {
        for (std::size_t t = 1; t < F; ++t) {
            if (poly[i][t] != 0) throw DomainError("make_field: Hensel lift produced a non-rational modulus");
        }
        modulus_[i] = poly[i][0];
    }

    // Powers of the generator.
    Coeffs gen(F, 0);
    if (f_ == 1) {
        gen[0] = subm(0, modulus_[0], pN_);
    } else {
        gen[1] = 1;
    }
    omega_pow_.reserve(static_cast<std::size_t>(q_ - 1));
    Coeffs cur(F, 0);
    cur[0] = 1 % pN_;
    for (std::int64_t k = 0; k < q_ - 1; ++k) {
        omega_pow_.push_back(cur);
        const std::int64_t code = residue_code(cur);
        if (!dlog_.emplace(code, k).second) throw DomainError("make_field: generator is not primitive");
        cur = mul(cur, gen, pN_);
    }
    if (cur != omega_pow_[0]) throw DomainError("make_field: generator is not a (q-1)-th root of unity");

    trace_basis_.resize(F);
    for (std::size_t j = 0; j < F; ++j) {
        Coeffs acc(F, 0);
        std::int64_t e = static_cast<std::int64_t>(j);
        for (int i = 0; i < f_; ++i) {
            acc = add(acc, omega_power(e), pN_);
            e = nt::mod(e * p_, q_ - 1);
        }
        for (std::size_t t = 1; t < F; ++t) {
            if (acc[t] != 0) throw DomainError("make_field: trace is not rational");
        }
        trace_basis_[j] = acc[0];
    }
}

const Coeffs& UnramifiedField::omega_power(std::int64_t k) const {
    return omega_pow_[static_cast<std::size_t>(nt::mod(k, q_ - 1))];
}

std::int64_t UnramifiedField::residue_code(const Coeffs& c) const {
    std::int64_t code = 0;
    for (std::size_t j = c.size(); j-- > 0;) code = code * p_ + static_cast<std::int64_t>(c[j] % static_cast<u64>(p_));
    return code;
}

std::int64_t UnramifiedField::dlog(std::int64_t code) const {
    auto it = dlog_.find(code);
    if (it == dlog_.end()) throw DomainError("dlog of a non-unit residue");
    return it->second;
}

Coeffs UnramifiedField::mul(const Coeffs& a, const Coeffs& b, u64 mod) const {
    if (f_ == 1) return {mulm(a[0] % mod, b[0] % mod, mod)};
    return polymulmod(a, b, modulus_, mod);
}

Coeffs UnramifiedField::add(const Coeffs& a, const Coeffs& b, u64 mod) const {
    Coeffs r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = addm(a[i] % mod, b[i] % mod, mod);
    return r;
}

Coeffs UnramifiedField::sub(const Coeffs& a, const Coeffs& b, u64 mod) const {
    Coeffs r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = subm(a[i] % mod, b[i] % mod, mod);
    return r;
}

Coeffs UnramifiedField::scale(const Coeffs& a, u64 s, u64 mod) const {
    Coeffs r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = mulm(a[i] % mod, s % mod, mod);
    return r;
}

Coeffs UnramifiedField::reduce(const Coeffs& a, u64 mod) const {
    Coeffs r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] % mod;
    return r;
}

Coeffs UnramifiedField::powc(Coeffs a, u64 e, u64 mod) const {
    Coeffs r(static_cast<std::size_t>(f_), 0);
    r[0] = 1 % mod;
    while (e) {
        if (e & 1U) r = mul(r, a, mod);
        e >>= 1U;
        if (e) a = mul(a, a, mod);
    }
    return r;
}

Coeffs UnramifiedField::unit_inverse(const Coeffs& a, int k) const {
    const u64 mod = ppow(k);
    Coeffs y = reduce(omega_power(-dlog(residue_code(a))), mod);
    Coeffs two(static_cast<std::size_t>(f_), 0);
    two[0] = 2 % mod;
    for (int prec = 1; prec < k; prec *= 2) y = mul(y, sub(two, mul(a, y, mod), mod), mod);
    return y;
}

Coeffs UnramifiedField::frobenius(const Coeffs& a, int j, u64 mod) const {
    j = static_cast<int>(nt::mod(j, f_));
    if (j == 0) return reduce(a, mod);
    const std::int64_t pj = nt::ipow(p_, j);
    Coeffs r(a.size(), 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] % mod == 0) continue;
        const Coeffs& img = omega_power(static_cast<std::int64_t>(i) * pj);
        for (std::size_t t = 0; t < r.size(); ++t) r[t] = addm(r[t], mulm(a[i] % mod, img[t] % mod, mod), mod);
    }
    return r;
}

int UnramifiedField::coeff_valuation(const Coeffs& a) const {
    int best = N_;
    for (u64 c : a) {
        if (c % pN_ == 0) continue;
        int v = 0;
        u64 x = c % pN_;
        while (x % static_cast<u64>(p_) == 0) {
            x /= static_cast<u64>(p_);
            ++v;
        }
        best = std::min(best, v);
    }
    return best;
}

std::string UnramifiedField::describe() const {
    std::ostringstream os;
    os << "K(p=" << p_ << ", f=" << f_ << ", N=" << N_ << ")";
    return os.str();
}

// ---- PadicElement ----------------------------------------------------------

namespace {

void check_same(const Field& a, const Field& b) {
    if (a.get() != b.get() && !(*a == *b)) throw DomainError("p-adic elements from different fields");
}

}  // namespace

PadicElement PadicElement::zero(const Field& K, std::int64_t abs_prec) {
    PadicElement z;
    z.K_ = K;
    z.zero_ = true;
    z.v_ = std::min(abs_prec, kExact);
    return z;
}

PadicElement PadicElement::make(const Field& K, std::int64_t v, int rel, Coeffs u) {
    if (rel <= 0) return zero(K, v);
    rel = std::min(rel, K->N());
    if (u.size() != static_cast<std::size_t>(K->f())) throw DomainError("coefficient vector has wrong length");
    u = K->reduce(u, K->ppow(rel));
    const int t = K->coeff_valuation(u);
    if (t >= rel) return zero(K, v + rel);
    if (t > 0) {
        const u64 pt = K->ppow(t);
        for (auto& c : u) c /= pt;
        v += t;
        rel -= t;
    }
    PadicElement x;
    x.K_ = K;
    x.zero_ = false;
    x.v_ = v;
    x.rel_ = rel;
    x.u_ = std::move(u);
    return x;
}

PadicElement PadicElement::from_int(const Field& K, const mpz_class& n) {
    return from_coeffs(K, std::vector<mpz_class>{n});
}

PadicElement PadicElement::from_rational(const Field& K, const mpq_class& x) {
    if (x == 0) return zero(K);
    return from_int(K, x.get_num()) / from_int(K, x.get_den());
}

PadicElement PadicElement::from_coeffs(const Field& K, const std::vector<mpz_class>& c, std::int64_t v) {
    if (c.size() > static_cast<std::size_t>(K->f())) throw DomainError("polynomial in w has degree >= f");
    std::vector<mpz_class> a(c.begin(), c.end());
    a.resize(static_cast<std::size_t>(K->f()));
    if (std::all_of(a.begin(), a.end(), [](const mpz_class& z) { return z == 0; })) return zero(K);
    const mpz_class P(static_cast<long>(K->p()));
    // strip common p-power so the unit part carries full relative precision
    for (;;) {
        bool all = true;
        for (const auto& z : a) {
            if (z % P != 0) {
                all = false;
                break;
            }
        }
        if (!all) break;
        for (auto& z : a) z /= P;
        ++v;
    }
    Coeffs u(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) u[i] = mpz_mod_u64(a[i], K->pN());
    return make(K, v, K->N(), std::move(u));
}

PadicElement PadicElement::omega(const Field& K, std::int64_t k) {
    return make(K, 0, K->N(), K->omega_power(k));
}

PadicElement PadicElement::teichmuller(const Field& K, std::int64_t residue_code) {
    if (residue_code == 0) throw DomainError("teichmuller of the zero residue");
    return omega(K, K->dlog(residue_code));
}

PadicElement PadicElement::teichmuller_int(const Field& K, std::int64_t r) {
    return teichmuller(K, nt::mod(r, K->p()));
}

PadicElement PadicElement::operator-() const {
    if (zero_) return *this;
    return make(K_, v_, rel_, K_->sub(Coeffs(u_.size(), 0), u_, K_->ppow(rel_)));
}

PadicElement PadicElement::operator+(const PadicElement& o) const {
    check_same(K_, o.K_);
    if (zero_ && o.zero_) return zero(K_, std::min(v_, o.v_));
    if (zero_) return o.truncate(v_);
    if (o.zero_) return truncate(o.v_);
    const std::int64_t vmin = std::min(v_, o.v_);
    const std::int64_t abs = std::min(absolute_precision(), o.absolute_precision());
    const std::int64_t L = abs - vmin;
    if (L <= 0) return zero(K_, abs);
    const u64 mod = K_->ppow(static_cast<int>(L));
    Coeffs s(u_.size(), 0);
    auto accumulate = [&](const PadicElement& x) {
        const std::int64_t d = x.v_ - vmin;
        if (d >= L) return;
        s = K_->add(s, K_->scale(x.u_, K_->ppow(static_cast<int>(d)), mod), mod);
    };
    accumulate(*this);
    accumulate(o);
    return make(K_, vmin, static_cast<int>(L), std::move(s));
}

PadicElement PadicElement::operator-(const PadicElement& o) const { return *this + (-o); }

PadicElement PadicElement::operator*(const PadicElement& o) const {
    check_same(K_, o.K_);
    if (zero_ || o.zero_) {
        // zero known to p^a times y (valuation w) is known to p^{a+w}
        if (zero_ && o.zero_) return zero(K_, std::min(kExact, v_ + o.v_));
        const PadicElement& z = zero_ ? *this : o;
        const PadicElement& y = zero_ ? o : *this;
        if (z.is_exact_zero()) return zero(K_);
        return zero(K_, z.v_ + y.v_);
    }
    const int rel = std::min(rel_, o.rel_);
    return make(K_, v_ + o.v_, rel, K_->mul(u_, o.u_, K_->ppow(rel)));
}

PadicElement PadicElement::inverse() const {
    if (zero_) throw DomainError("inverse of zero");
    return make(K_, -v_, rel_, K_->unit_inverse(u_, rel_));
}

PadicElement PadicElement::operator/(const PadicElement& o) const { return *this * o.inverse(); }

PadicElement PadicElement::pow(std::int64_t e) const {
    if (e < 0) return inverse().pow(-e);
    if (e == 0) return from_int(K_, 1);
    if (zero_) return is_exact_zero() ? *this : zero(K_, v_ * e);
    return make(K_, v_ * e, rel_, K_->powc(u_, static_cast<u64>(e), K_->ppow(rel_)));
}

PadicElement PadicElement::shift(std::int64_t k) const {
    PadicElement r = *this;
    if (!zero_ || !is_exact_zero()) r.v_ += k;
    return r;
}

PadicElement PadicElement::truncate(std::int64_t a) const {
    if (zero_) return zero(K_, std::min(v_, a));
    if (a <= v_) return zero(K_, a);
    if (a >= absolute_precision()) return *this;
    return make(K_, v_, static_cast<int>(a - v_), u_);
}

PadicElement PadicElement::frobenius(int times) const {
    if (zero_) return *this;
    return make(K_, v_, rel_, K_->frobenius(u_, times, K_->ppow(rel_)));
}

PadicElement PadicElement::frobenius_inverse() const { return frobenius(K_->f() - 1); }

PadicElement PadicElement::trace() const {
    if (zero_) return zero(K_, v_);
    const u64 mod = K_->ppow(rel_);
    u64 t = 0;
    for (std::size_t j = 0; j < u_.size(); ++j) t = addm(t, mulm(u_[j], K_->trace_of_basis(static_cast<int>(j)) % mod, mod), mod);
    Coeffs c(u_.size(), 0);
    c[0] = t;
    return make(K_, v_, rel_, std::move(c));
}

std::int64_t PadicElement::residue_code() const {
    if (zero_) throw DomainError("residue of zero");
    return K_->residue_code(u_);
}

std::int64_t PadicElement::residue_dlog() const { return K_->dlog(residue_code()); }

PadicElement PadicElement::teichmuller_part() const { return omega(K_, residue_dlog()); }

PadicElement PadicElement::log() const {
    if (zero_) throw DomainError("log of zero");
    const int rel = rel_;
    const u64 mod = K_->ppow(rel);
    const auto P = static_cast<u64>(K_->p());
    const Coeffs u1 = K_->mul(u_, K_->omega_power(-residue_dlog()), mod);
    Coeffs one(u1.size(), 0);
    one[0] = 1 % mod;
    Coeffs t = K_->sub(u1, one, mod);
    const int vt = K_->coeff_valuation(t);
    if (vt >= rel) return zero(K_, rel);
    Coeffs s = t;
    for (auto& c : s) c /= K_->ppow(vt);
    Coeffs sum(u1.size(), 0);
    Coeffs sk = one;
    for (std::int64_t k = 1;; ++k) {
        int lg = 0;
        for (std::int64_t pk = static_cast<std::int64_t>(P); pk <= k; pk *= static_cast<std::int64_t>(P)) ++lg;
        if (k * vt - lg >= rel) break;
        sk = K_->mul(sk, s, mod);
        std::int64_t kk = k;
        int vk = 0;
        while (kk % static_cast<std::int64_t>(P) == 0) {
            kk /= static_cast<std::int64_t>(P);
            ++vk;
        }
        const std::int64_t e = k * vt - vk;
        if (e >= rel) continue;
        const u64 inv = static_cast<u64>(nt::invmod(kk, static_cast<std::int64_t>(mod)));
        Coeffs term = K_->scale(sk, mulm(inv, K_->ppow(static_cast<int>(e)), mod), mod);
        sum = (k % 2 == 1) ? K_->add(sum, term, mod) : K_->sub(sum, term, mod);
    }
    return make(K_, 0, rel, std::move(sum));
}

bool PadicElement::in_qp() const {
    if (zero_) return true;
    for (std::size_t j = 1; j < u_.size(); ++j) {
        if (u_[j] != 0) return false;
    }
    return true;
}

std::uint64_t PadicElement::to_zp_mod(int k) const {
    if (k < 0 || k > K_->N()) throw DomainError("to_zp_mod: bad precision");
    if (!in_qp()) throw DomainError("element is not in Q_p");
    if (absolute_precision() < k) throw PrecisionError("element not known mod p^" + std::to_string(k));
    if (zero_ || v_ >= k) return 0;
    if (v_ < 0) throw DomainError("element is not integral");
    const u64 mod = K_->ppow(k);
    return mulm(u_[0] % mod, K_->ppow(static_cast<int>(v_)), mod);
}

mpq_class PadicElement::to_rational() const {
    if (!in_qp()) throw DomainError("element is not in Q_p");
    if (zero_) return 0;
    mpz_class u;
    mpz_import(u.get_mpz_t(), 1, 1, sizeof(u64), 0, 0, &u_[0]);
    mpz_class pv;
    mpz_ui_pow_ui(pv.get_mpz_t(), static_cast<unsigned long>(K_->p()), static_cast<unsigned long>(std::llabs(v_)));
    mpq_class r = v_ >= 0 ? mpq_class(u * pv) : mpq_class(u, pv);
    r.canonicalize();
    return r;
}

bool PadicElement::congruent(const PadicElement& o) const { return (*this - o).is_zero(); }

bool PadicElement::operator==(const PadicElement& o) const {
    if (zero_ != o.zero_) return false;
    if (zero_) return v_ == o.v_;
    return v_ == o.v_ && rel_ == o.rel_ && u_ == o.u_;
}

std::string PadicElement::to_string() const {
    std::ostringstream os;
    const std::int64_t p = K_ ? K_->p() : 0;
    if (zero_) {
        if (is_exact_zero()) return "0";
        os << "O(" << p << "^" << v_ << ")";
        return os.str();
    }
    if (in_qp()) {
        os << to_rational().get_str();
    } else {
        if (v_ != 0) os << p << "^" << v_ << "*";
        os << "(";
        bool first = true;
        for (std::size_t j = 0; j < u_.size(); ++j) {
            if (u_[j] == 0) continue;
            if (!first) os << " + ";
            first = false;
            if (j == 0 || u_[j] != 1) os << u_[j];
            if (j > 0) {
                if (u_[j] != 1) os << "*";
                os << "w";
                if (j > 1) os << "^" << j;
            }
        }
        os << ")";
    }
    os << " + O(" << p << "^" << absolute_precision() << ")";
    return os.str();
}

// ---- psi and unit residues -------------------------------------------------

RootOfUnity psi(const PadicElement& x) {
    if (x.absolute_precision() < 0) {
        throw PrecisionError("psi needs absolute precision >= 0, have " + std::to_string(x.absolute_precision()));
    }
    if (x.is_zero() || x.valuation() >= 0) return {};
    const auto& K = x.field();
    const int n = static_cast<int>(-x.valuation());
    const u64 mod = K->ppow(n);
    u64 t = 0;
    for (std::size_t j = 0; j < x.unit().size(); ++j) {
        t = addm(t, mulm(x.unit()[j] % mod, K->trace_of_basis(static_cast<int>(j)) % mod, mod), mod);
    }
    return {static_cast<std::int64_t>(mod), static_cast<std::int64_t>(t)};
}

void for_each_unit_residue(const Field& K, int c, const std::function<void(const PadicElement&)>& fn) {
    if (c < 1) throw DomainError("unit_residues needs c >= 1");
    if (c > K->N()) throw DomainError("unit_residues: c exceeds the working precision");
    const u64 mod = K->ppow(c);
    const auto f = static_cast<std::size_t>(K->f());
    Coeffs digits(f, 0);
    for (;;) {
        if (K->residue_code(digits) != 0) fn(PadicElement::make(K, 0, K->N(), digits));
        std::size_t i = f;
        // odometer with the last coefficient varying fastest
        while (i-- > 0) {
            if (++digits[i] < mod) break;
            digits[i] = 0;
        }
        if (i == static_cast<std::size_t>(-1)) break;
    }
}

std::vector<PadicElement> unit_residues(const Field& K, int c) {
    std::vector<PadicElement> out;
    for_each_unit_residue(K, c, [&out](const PadicElement& x) { out.push_back(x); });
    return out;
}

}  // namespace localconst
