#include "localconst/cyclotomic.hpp"

#include <mpfr.h>

#include <cmath>
#include <mutex>
#include <numbers>
#include <sstream>

#include "localconst/errors.hpp"
#include "localconst/number_theory.hpp"

namespace localconst {

// ---- RootOfUnity -----------------------------------------------------------

RootOfUnity::RootOfUnity(std::int64_t mm, std::int64_t kk) {
    if (mm < 1) throw DomainError("root of unity needs m >= 1");
    kk = nt::mod(kk, mm);
    const std::int64_t g = nt::gcd(kk, mm);
    m = kk == 0 ? 1 : mm / g;
    k = kk == 0 ? 0 : kk / g;
}

RootOfUnity RootOfUnity::operator*(const RootOfUnity& o) const {
    const std::int64_t L = nt::lcm(m, o.m);
    const auto a = static_cast<__int128>(k) * (L / m) + static_cast<__int128>(o.k) * (L / o.m);
    return {L, static_cast<std::int64_t>(a % L)};
}

RootOfUnity RootOfUnity::inverse() const { return {m, -k}; }

RootOfUnity RootOfUnity::pow(std::int64_t e) const {
    const auto a = static_cast<__int128>(k) * nt::mod(e, m);
    return {m, static_cast<std::int64_t>(a % m)};
}

RootOfUnity RootOfUnity::galois(std::int64_t kk) const {
    if (nt::gcd(nt::mod(kk, m), m) != 1 && m > 1) {
        throw DomainError("galois: exponent not coprime to the order");
    }
    return pow(kk);
}

std::string RootOfUnity::to_string() const {
    if (m == 1) return "1";
    if (m == 2) return "-1";
    std::string s = "zeta_" + std::to_string(m);
    if (k != 1) s += "^" + std::to_string(k);
    return s;
}

std::map<std::int64_t, RootOfUnity> decompose_root(const RootOfUnity& r) {
    std::map<std::int64_t, RootOfUnity> out;
    if (r.m == 1) return out;
    for (auto [ell, a] : nt::factorize(r.m)) {
        const std::int64_t la = nt::ipow(ell, a);
        const std::int64_t cof = r.m / la;
        out[ell] = RootOfUnity(la, nt::mod(r.k, la) * nt::invmod(cof, la));
    }
    return out;
}

// ---- GaloisElement ---------------------------------------------------------

GaloisElement::GaloisElement(std::int64_t mm, std::int64_t kk) : m(mm), k(nt::mod(kk, mm)) {
    if (mm < 1) throw DomainError("Galois element needs m >= 1");
    if (nt::gcd(k, m) != 1 && m > 1) {
        throw DomainError("Galois element: gcd(" + std::to_string(kk) + ", " + std::to_string(mm) +
                          ") != 1");
    }
}

GaloisElement GaloisElement::compose(const GaloisElement& o) const {
    if (o.m != m) throw DomainError("composing Galois elements of different moduli");
    return {m, static_cast<std::int64_t>(static_cast<__int128>(k) * o.k % m)};
}

std::int64_t GaloisElement::kappa_p(std::int64_t p, int N) const {
    return nt::mod(k, nt::ipow(p, N));
}

// ---- cyclotomic polynomials ------------------------------------------------

namespace {

std::vector<std::int64_t> compute_cyclotomic(std::int64_t m) {
    std::vector<mpz_class> poly{1};
    std::vector<std::int64_t> divs_neg;
    for (std::int64_t d : nt::divisors(m)) {
        const int mu = nt::mobius(m / d);
        if (mu == 1) {
            std::vector<mpz_class> next(poly.size() + d);
            for (std::size_t i = 0; i < poly.size(); ++i) {
                next[i + d] += poly[i];
                next[i] -= poly[i];
            }
            poly.swap(next);
        } else if (mu == -1) {
            divs_neg.push_back(d);
        }
    }
    for (std::int64_t d : divs_neg) {
        // poly = q * (x^d - 1)  =>  q_j = q_{j-d} - poly_j
        std::vector<mpz_class> q(poly.size() - d);
        for (std::size_t j = 0; j < q.size(); ++j) {
            q[j] = -poly[j];
            if (j >= static_cast<std::size_t>(d)) q[j] += q[j - d];
        }
        poly.swap(q);
    }
    std::vector<std::int64_t> out;
    out.reserve(poly.size());
    for (const auto& c : poly) {
        if (!c.fits_slong_p()) throw DomainError("cyclotomic polynomial coefficient too large");
        out.push_back(c.get_si());
    }
    return out;
}

struct SparsePoly {
    std::int64_t degree = 0;
    std::vector<std::pair<std::int64_t, std::int64_t>> lower;  // (index, coeff) below the leading term
};

struct PolyCache {
    std::mutex mu;
    std::map<std::int64_t, std::vector<std::int64_t>> dense;
    std::map<std::int64_t, SparsePoly> sparse;
};

PolyCache& poly_cache() {
    static PolyCache c;
    return c;
}

const SparsePoly& sparse_cyclotomic(std::int64_t m) {
    auto& c = poly_cache();
    {
        std::lock_guard<std::mutex> lock(c.mu);
        auto it = c.sparse.find(m);
        if (it != c.sparse.end()) return it->second;
    }
    const auto& dense = cyclotomic_polynomial(m);
    SparsePoly sp;
    sp.degree = static_cast<std::int64_t>(dense.size()) - 1;
    for (std::int64_t i = 0; i < sp.degree; ++i) {
        if (dense[i] != 0) sp.lower.emplace_back(i, dense[i]);
    }
    std::lock_guard<std::mutex> lock(c.mu);
    return c.sparse.emplace(m, std::move(sp)).first->second;
}

// Reduce a polynomial in zeta_m (any length) modulo Phi_m, in place; result has length phi(m).
void reduce_mod_phi(std::vector<mpz_class>& a, std::int64_t m) {
    const SparsePoly& phi = sparse_cyclotomic(m);
    const auto deg = static_cast<std::size_t>(phi.degree);
    for (std::size_t i = a.size(); i-- > deg;) {
        if (a[i] == 0) continue;
        const std::size_t base = i - deg;
        for (auto [j, c] : phi.lower) {
            if (c == 1) {
                a[base + j] -= a[i];
            } else if (c == -1) {
                a[base + j] += a[i];
            } else {
                a[base + j] -= a[i] * c;
            }
        }
        a[i] = 0;
    }
    a.resize(deg);
}

// Exponent i * scale mod m for each power-basis coordinate, folded into length m.
std::vector<mpz_class> reindex(const std::vector<mpz_class>& num, std::int64_t scale,
                               std::int64_t m) {
    std::vector<mpz_class> out(static_cast<std::size_t>(m));
    for (std::size_t i = 0; i < num.size(); ++i) {
        if (num[i] == 0) continue;
        const auto e = static_cast<std::size_t>(
            static_cast<std::int64_t>(static_cast<__int128>(i) * scale % m));
        out[e] += num[i];
    }
    return out;
}

}  // namespace

const std::vector<std::int64_t>& cyclotomic_polynomial(std::int64_t m) {
    if (m < 1) throw DomainError("cyclotomic polynomial needs m >= 1");
    auto& c = poly_cache();
    {
        std::lock_guard<std::mutex> lock(c.mu);
        auto it = c.dense.find(m);
        if (it != c.dense.end()) return it->second;
    }
    auto poly = compute_cyclotomic(m);
    std::lock_guard<std::mutex> lock(c.mu);
    return c.dense.emplace(m, std::move(poly)).first->second;
}

// ---- CyclotomicNumber ------------------------------------------------------

CyclotomicNumber::CyclotomicNumber() : m_(1), num_(1), den_(1) {}

CyclotomicNumber::CyclotomicNumber(std::int64_t m, std::vector<mpz_class> num, mpz_class den)
    : m_(m), num_(std::move(num)), den_(std::move(den)) {
    normalize();
}

void CyclotomicNumber::normalize() {
    if (den_ == 0) throw DomainError("zero denominator");
    if (den_ < 0) {
        den_ = -den_;
        for (auto& c : num_) c = -c;
    }
    if (den_ == 1) return;
    mpz_class g = den_;
    for (const auto& c : num_) {
        if (g == 1) break;
        if (c != 0) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    }
    if (g == 1) return;
    for (auto& c : num_) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
    mpz_divexact(den_.get_mpz_t(), den_.get_mpz_t(), g.get_mpz_t());
    if (is_zero()) den_ = 1;
}

CyclotomicNumber CyclotomicNumber::zero(std::int64_t m) {
    if (m < 1) throw DomainError("cyclotomic field needs m >= 1");
    return {m, std::vector<mpz_class>(static_cast<std::size_t>(nt::euler_phi(m))), 1};
}

CyclotomicNumber CyclotomicNumber::rational(const mpq_class& q, std::int64_t m) {
    auto z = zero(m);
    z.num_[0] = q.get_num();
    z.den_ = q.get_den();
    z.normalize();
    return z;
}

CyclotomicNumber CyclotomicNumber::root(std::int64_t m, std::int64_t k) {
    if (m < 1) throw DomainError("root_of_unity needs m >= 1");
    std::vector<mpz_class> a(static_cast<std::size_t>(m));
    a[static_cast<std::size_t>(nt::mod(k, m))] = 1;
    reduce_mod_phi(a, m);
    return {m, std::move(a), 1};
}

CyclotomicNumber CyclotomicNumber::from_group_ring(std::int64_t m, std::vector<mpz_class> coeffs,
                                                   mpz_class den) {
    if (static_cast<std::int64_t>(coeffs.size()) != m) {
        throw DomainError("group ring vector must have length m");
    }
    reduce_mod_phi(coeffs, m);
    return {m, std::move(coeffs), std::move(den)};
}

mpq_class CyclotomicNumber::coeff(std::size_t i) const {
    mpq_class q(num_.at(i), den_);
    q.canonicalize();
    return q;
}

bool CyclotomicNumber::is_zero() const {
    for (const auto& c : num_) {
        if (c != 0) return false;
    }
    return true;
}

bool CyclotomicNumber::is_rational() const {
    for (std::size_t i = 1; i < num_.size(); ++i) {
        if (num_[i] != 0) return false;
    }
    return true;
}

CyclotomicNumber CyclotomicNumber::embed(std::int64_t m2) const {
    if (m2 < 1 || m2 % m_ != 0) {
        throw DomainError("embed: " + std::to_string(m_) + " does not divide " + std::to_string(m2));
    }
    if (m2 == m_) return *this;
    auto a = reindex(num_, m2 / m_, m2);
    reduce_mod_phi(a, m2);
    return {m2, std::move(a), den_};
}

CyclotomicNumber CyclotomicNumber::galois(std::int64_t k) const {
    const std::int64_t kk = nt::mod(k, m_);
    if (m_ > 1 && nt::gcd(kk, m_) != 1) {
        throw DomainError("galois_apply: gcd(" + std::to_string(k) + ", " + std::to_string(m_) +
                          ") != 1");
    }
    if (kk == 1 % m_) return *this;
    auto a = reindex(num_, kk, m_);
    reduce_mod_phi(a, m_);
    return {m_, std::move(a), den_};
}

CyclotomicNumber CyclotomicNumber::galois(const GaloisElement& s) const {
    if (s.m % m_ != 0) return embed(nt::lcm(m_, s.m)).galois(s.k);
    return embed(s.m).galois(s.k);
}

CyclotomicNumber CyclotomicNumber::operator+(const CyclotomicNumber& o) const {
    if (o.m_ != m_) {
        const std::int64_t L = nt::lcm(m_, o.m_);
        return embed(L) + o.embed(L);
    }
    std::vector<mpz_class> a(num_.size());
    if (den_ == o.den_) {
        for (std::size_t i = 0; i < a.size(); ++i) a[i] = num_[i] + o.num_[i];
        return {m_, std::move(a), den_};
    }
    for (std::size_t i = 0; i < a.size(); ++i) a[i] = num_[i] * o.den_ + o.num_[i] * den_;
    return {m_, std::move(a), den_ * o.den_};
}

CyclotomicNumber CyclotomicNumber::operator-() const {
    std::vector<mpz_class> a(num_.size());
    for (std::size_t i = 0; i < a.size(); ++i) a[i] = -num_[i];
    return {m_, std::move(a), den_};
}

CyclotomicNumber CyclotomicNumber::operator-(const CyclotomicNumber& o) const { return *this + (-o); }

CyclotomicNumber CyclotomicNumber::operator*(const CyclotomicNumber& o) const {
    if (o.m_ != m_) {
        const std::int64_t L = nt::lcm(m_, o.m_);
        return embed(L) * o.embed(L);
    }
    if (o.is_rational()) return *this * mpq_class(o.num_[0], o.den_);
    if (is_rational()) return o * mpq_class(num_[0], den_);
    const std::size_t n = num_.size();
    std::vector<mpz_class> a(2 * n - 1);
    for (std::size_t i = 0; i < n; ++i) {
        if (num_[i] == 0) continue;
        for (std::size_t j = 0; j < n; ++j) {
            if (o.num_[j] != 0) mpz_addmul(a[i + j].get_mpz_t(), num_[i].get_mpz_t(), o.num_[j].get_mpz_t());
        }
    }
    reduce_mod_phi(a, m_);
    return {m_, std::move(a), den_ * o.den_};
}

CyclotomicNumber CyclotomicNumber::operator*(const mpq_class& q) const {
    std::vector<mpz_class> a(num_.size());
    for (std::size_t i = 0; i < a.size(); ++i) a[i] = num_[i] * q.get_num();
    return {m_, std::move(a), den_ * q.get_den()};
}

CyclotomicNumber CyclotomicNumber::operator/(const mpq_class& q) const {
    if (q == 0) throw DomainError("division by zero");
    return *this * mpq_class(q.get_den(), q.get_num());
}

CyclotomicNumber CyclotomicNumber::mul_root(const RootOfUnity& r) const {
    const std::int64_t L = nt::lcm(m_, r.m);
    const CyclotomicNumber x = embed(L);
    const std::int64_t shift = r.k * (L / r.m);
    std::vector<mpz_class> a(static_cast<std::size_t>(L));
    for (std::size_t i = 0; i < x.num_.size(); ++i) {
        if (x.num_[i] != 0) a[static_cast<std::size_t>(nt::mod(static_cast<std::int64_t>(i) + shift, L))] += x.num_[i];
    }
    reduce_mod_phi(a, L);
    return {L, std::move(a), x.den_};
}

CyclotomicNumber CyclotomicNumber::pow(std::int64_t e) const {
    if (e < 0) throw DomainError("negative power of a general cyclotomic number");
    CyclotomicNumber result = rational(1, m_);
    CyclotomicNumber base = *this;
    while (e > 0) {
        if (e & 1) result = result * base;
        e >>= 1;
        if (e > 0) base = base * base;
    }
    return result;
}

bool CyclotomicNumber::operator==(const CyclotomicNumber& o) const {
    if (o.m_ != m_) {
        const std::int64_t L = nt::lcm(m_, o.m_);
        return embed(L) == o.embed(L);
    }
    return den_ == o.den_ && num_ == o.num_;
}

std::optional<RootOfUnity> CyclotomicNumber::as_root_of_unity() const {
    if (den_ != 1 || is_zero()) return std::nullopt;
    const std::int64_t L = nt::lcm(2, m_);
    const std::complex<double> z = to_complex();
    const double turns = std::arg(z) / (2 * std::numbers::pi);
    const auto j0 = static_cast<std::int64_t>(std::llround(turns * static_cast<double>(L)));
    for (std::int64_t d : {0, -1, 1}) {
        const std::int64_t j = nt::mod(j0 + d, L);
        if (root(L, j) == *this) return RootOfUnity(L, j);
    }
    return std::nullopt;
}

std::complex<double> CyclotomicNumber::to_complex() const {
    std::complex<double> z = 0;
    for (std::size_t i = 0; i < num_.size(); ++i) {
        if (num_[i] == 0) continue;
        const double ang = 2 * std::numbers::pi * static_cast<double>(i) / static_cast<double>(m_);
        z += num_[i].get_d() * std::complex<double>(std::cos(ang), std::sin(ang));
    }
    return z / den_.get_d();
}

ComplexApprox CyclotomicNumber::complex_embedding(int digits) const {
    if (digits < 1) throw DomainError("complex_embedding needs digits >= 1");
    std::size_t bits = 0;
    for (const auto& c : num_) bits = std::max(bits, mpz_sizeinbase(c.get_mpz_t(), 2));
    const auto prec = static_cast<mpfr_prec_t>(digits * 3.33 + 64 + static_cast<double>(bits));
    mpfr_t re, im, ang, t, pi2;
    mpfr_inits2(prec, re, im, ang, t, pi2, static_cast<mpfr_ptr>(nullptr));
    mpfr_set_zero(re, 1);
    mpfr_set_zero(im, 1);
    mpfr_const_pi(pi2, MPFR_RNDN);
    mpfr_mul_ui(pi2, pi2, 2, MPFR_RNDN);
    for (std::size_t i = 0; i < num_.size(); ++i) {
        if (num_[i] == 0) continue;
        mpfr_mul_ui(ang, pi2, i, MPFR_RNDN);
        mpfr_div_si(ang, ang, static_cast<long>(m_), MPFR_RNDN);
        mpfr_cos(t, ang, MPFR_RNDN);
        mpfr_mul_z(t, t, num_[i].get_mpz_t(), MPFR_RNDN);
        mpfr_add(re, re, t, MPFR_RNDN);
        mpfr_sin(t, ang, MPFR_RNDN);
        mpfr_mul_z(t, t, num_[i].get_mpz_t(), MPFR_RNDN);
        mpfr_add(im, im, t, MPFR_RNDN);
    }
    mpfr_div_z(re, re, den_.get_mpz_t(), MPFR_RNDN);
    mpfr_div_z(im, im, den_.get_mpz_t(), MPFR_RNDN);
    auto fmt = [digits](mpfr_t x) {
        // values within 10^-digits of zero print as 0
        mpfr_t a;
        mpfr_init2(a, mpfr_get_prec(x));
        mpfr_abs(a, x, MPFR_RNDN);
        const bool tiny = mpfr_cmp_d(a, std::pow(10.0, -digits)) < 0;
        mpfr_clear(a);
        if (tiny) return std::string("0");
        char* buf = nullptr;
        mpfr_asprintf(&buf, "%.*Rg", digits, x);
        std::string s(buf);
        mpfr_free_str(buf);
        return s;
    };
    ComplexApprox out{fmt(re), fmt(im)};
    mpfr_clears(re, im, ang, t, pi2, static_cast<mpfr_ptr>(nullptr));
    return out;
}

std::string CyclotomicNumber::to_string() const {
    if (auto r = as_root_of_unity()) return r->to_string();
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < num_.size(); ++i) {
        if (num_[i] == 0) continue;
        mpz_class c = num_[i];
        if (!first) os << (c < 0 ? " - " : " + ");
        else if (c < 0) os << "-";
        if (c < 0) c = -c;
        first = false;
        if (i == 0 || c != 1) os << c;
        if (i > 0) {
            if (c != 1) os << "*";
            os << "z" << m_;
            if (i > 1) os << "^" << i;
        }
    }
    if (first) os << "0";
    std::string s = os.str();
    if (den_ != 1) s = "(" + s + ")/" + den_.get_str();
    return s;
}

// ---- square roots ----------------------------------------------------------

CyclotomicNumber sqrt_pstar(std::int64_t p) {
    if (!nt::is_prime(p)) throw DomainError("sqrt_pstar: " + std::to_string(p) + " is not prime");
    if (p == 2) return CyclotomicNumber::root(8, 1) + CyclotomicNumber::root(8, -1);
    std::vector<mpz_class> a(static_cast<std::size_t>(p));
    for (std::int64_t t = 0; t < p; ++t) a[static_cast<std::size_t>(t * t % p)] += 1;
    return CyclotomicNumber::from_group_ring(p, std::move(a));
}

CyclotomicNumber sqrt_p(std::int64_t p) {
    if (p == 2) return sqrt_pstar(2);
    const std::int64_t h = (p - 1) / 2;
    return sqrt_pstar(p).mul_root(RootOfUnity(4, -(h * h)));
}

}  // namespace localconst
