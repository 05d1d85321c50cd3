#include "localconst/characters.hpp"

#include <algorithm>
#include <sstream>

#include "localconst/errors.hpp"
#include "localconst/number_theory.hpp"

namespace localconst {

namespace {

// alpha with v(alpha) >= -floor gives the trivial character
int trivial_floor(std::int64_t p) { return p == 2 ? -2 : -1; }

// Number of digits of the unit part of alpha that the character sees.
int alpha_digits(std::int64_t p, int n) { return p == 2 ? n - 2 : n - 1; }

}  // namespace

MultiplicativeCharacter::MultiplicativeCharacter(Field K, RootOfUnity on_p, std::int64_t tame,
                                                 std::optional<PadicElement> alpha, int sign)
    : K_(std::move(K)), on_p_(on_p), tame_(tame), alpha_(std::move(alpha)), sign_(sign) {
    canonicalize();
}

void MultiplicativeCharacter::canonicalize() {
    if (!K_) throw DomainError("character needs a field");
    tame_ = nt::mod(tame_, K_->q() - 1);
    if (sign_ != 1 && sign_ != -1) throw DomainError("sign component must be +1 or -1");
    if (sign_ == -1 && !(K_->p() == 2 && K_->f() == 1)) {
        throw DomainError("sign component is only used for K = Q_2");
    }
    if (!alpha_) return;
    if (alpha_->field().get() != K_.get() && !(*alpha_->field() == *K_)) {
        throw DomainError("alpha lies in a different field");
    }
    const std::int64_t p = K_->p();
    if (alpha_->is_zero() && alpha_->absolute_precision() >= trivial_floor(p)) {
        alpha_.reset();
        return;
    }
    if (alpha_->is_zero()) throw PrecisionError("alpha is not known well enough to decide triviality");
    if (alpha_->valuation() >= trivial_floor(p)) {
        alpha_.reset();
        return;
    }
    if (p == 2 && K_->f() > 1) {
        throw DomainError("logarithmic characters for p = 2 are only supported over Q_2");
    }
    const int n = static_cast<int>(-alpha_->valuation());
    const int digits = alpha_digits(p, n);
    if (n > K_->N()) {
        throw PrecisionError("alpha has valuation -" + std::to_string(n) + " but the field precision is " +
                             std::to_string(K_->N()));
    }
    if (alpha_->relative_precision() < digits) {
        throw PrecisionError("alpha is not known to enough digits");
    }
    Coeffs u = K_->reduce(alpha_->unit(), K_->ppow(digits));
    alpha_ = PadicElement::make(K_, -n, K_->N(), std::move(u));
}

MultiplicativeCharacter MultiplicativeCharacter::tame_char(const Field& K, std::int64_t t, RootOfUnity w) {
    return MultiplicativeCharacter(K, w, t);
}

MultiplicativeCharacter MultiplicativeCharacter::chi_alpha(const PadicElement& alpha) {
    return MultiplicativeCharacter(alpha.field(), {}, 0, alpha);
}

MultiplicativeCharacter MultiplicativeCharacter::rho_u(const PadicElement& u) {
    const Field& K = u.field();
    if (K->p() != 2 || K->f() != 1) throw DomainError("rho_u is implemented for K = Q_2");
    const int s2 = hilbert_2adic_bruteforce(u, PadicElement::from_int(K, 2));
    const int sm1 = hilbert_2adic_bruteforce(u, PadicElement::from_int(K, -1));
    const int s5 = hilbert_2adic_bruteforce(u, PadicElement::from_int(K, 5));
    std::optional<PadicElement> alpha;
    if (s5 == -1) alpha = PadicElement::from_rational(K, mpq_class(1, 8));
    return MultiplicativeCharacter(K, RootOfUnity(2, s2 == -1 ? 1 : 0), 0, alpha, sm1);
}

bool MultiplicativeCharacter::is_trivial() const {
    return on_p_.is_one() && tame_ == 0 && !alpha_ && sign_ == 1;
}

int MultiplicativeCharacter::wild_level() const {
    return alpha_ ? static_cast<int>(-alpha_->valuation()) : 0;
}

RootOfUnity MultiplicativeCharacter::eval(const PadicElement& x) const {
    if (x.is_zero()) throw DomainError("character evaluated at zero");
    if (x.field().get() != K_.get() && !(*x.field() == *K_)) throw DomainError("argument lies in a different field");
    RootOfUnity r = on_p_.pow(x.valuation());
    if (tame_ != 0) {
        const std::int64_t q1 = K_->q() - 1;
        r = r * RootOfUnity(q1, static_cast<std::int64_t>(static_cast<__int128>(tame_) * x.residue_dlog() % q1));
    }
    if (sign_ == -1) {
        if (x.relative_precision() < 2) throw PrecisionError("sign of a unit needs two digits");
        if (x.unit()[0] % 4 == 3) r = r * RootOfUnity(2, 1);
    }
    if (alpha_) r = r * psi(*alpha_ * x.log());
    return r;
}

int MultiplicativeCharacter::conductor_exponent() const {
    if (alpha_) return wild_level();
    if (sign_ == -1) return 2;
    if (tame_ != 0) return 1;
    return 0;
}

std::int64_t MultiplicativeCharacter::order() const {
    std::int64_t o = on_p_.order();
    const std::int64_t q1 = K_->q() - 1;
    o = nt::lcm(o, q1 / nt::gcd(tame_, q1));
    if (sign_ == -1) o = nt::lcm(o, 2);
    if (alpha_) o = nt::lcm(o, nt::ipow(K_->p(), alpha_digits(K_->p(), wild_level())));
    return o;
}

MultiplicativeCharacter MultiplicativeCharacter::tame_part() const {
    return MultiplicativeCharacter(K_, on_p_, tame_, std::nullopt, sign_);
}

MultiplicativeCharacter MultiplicativeCharacter::wild_part() const {
    return MultiplicativeCharacter(K_, {}, 0, alpha_, 1);
}

MultiplicativeCharacter MultiplicativeCharacter::operator*(const MultiplicativeCharacter& o) const {
    if (o.K_.get() != K_.get() && !(*o.K_ == *K_)) throw DomainError("characters of different fields");
    std::optional<PadicElement> a = alpha_;
    if (o.alpha_) a = a ? *a + *o.alpha_ : *o.alpha_;
    return MultiplicativeCharacter(K_, on_p_ * o.on_p_, tame_ + o.tame_, a, sign_ * o.sign_);
}

MultiplicativeCharacter MultiplicativeCharacter::inverse() const { return pow(-1); }

MultiplicativeCharacter MultiplicativeCharacter::pow(std::int64_t k) const {
    std::optional<PadicElement> a;
    if (alpha_) a = *alpha_ * PadicElement::from_int(K_, k);
    const int s = (sign_ == -1 && nt::mod(k, 2) == 1) ? -1 : 1;
    const std::int64_t q1 = K_->q() - 1;
    return MultiplicativeCharacter(K_, on_p_.pow(k),
                                   static_cast<std::int64_t>(static_cast<__int128>(tame_) * nt::mod(k, q1) % q1), a, s);
}

bool MultiplicativeCharacter::operator==(const MultiplicativeCharacter& o) const {
    if (!(*K_ == *o.K_)) return false;
    if (!(on_p_ == o.on_p_) || tame_ != o.tame_ || sign_ != o.sign_) return false;
    if (alpha_.has_value() != o.alpha_.has_value()) return false;
    return !alpha_ || *alpha_ == *o.alpha_;
}

std::string MultiplicativeCharacter::spec() const {
    std::vector<std::string> parts;
    if (alpha_) {
        std::ostringstream os;
        const Coeffs& u = alpha_->unit();
        bool first = true;
        for (std::size_t j = 0; j < u.size(); ++j) {
            if (u[j] == 0) continue;
            if (!first) os << "+";
            first = false;
            if (j == 0 || u[j] != 1) os << u[j];
            if (j > 0) {
                if (u[j] != 1) os << "*";
                os << "w";
                if (j > 1) os << "^" << j;
            }
        }
        os << "/" << K_->p() << "^" << wild_level();
        parts.push_back("alpha=" + os.str());
    }
    if (tame_ != 0) parts.push_back("tame=" + std::to_string(tame_));
    if (!on_p_.is_one()) parts.push_back("onp=" + std::to_string(on_p_.m) + ":" + std::to_string(on_p_.k));
    if (sign_ == -1) parts.push_back("neg=-1");
    if (parts.empty()) return "trivial";
    std::string s = parts[0];
    for (std::size_t i = 1; i < parts.size(); ++i) s += ";" + parts[i];
    return s;
}

std::string MultiplicativeCharacter::key() const {
    // wild level first so that sorting groups characters by conductor
    std::ostringstream os;
    os << wild_level() << "|" << spec();
    return os.str();
}

MultiplicativeCharacter galois_twist(const MultiplicativeCharacter& chi, const GaloisElement& sigma) {
    if (nt::gcd(sigma.k, chi.order()) != 1) {
        throw DomainError("galois_twist: k = " + std::to_string(sigma.k) + " is not prime to the order " +
                          std::to_string(chi.order()));
    }
    return chi.pow(sigma.k);
}

MultiplicativeCharacter adams(const MultiplicativeCharacter& chi, std::int64_t k) { return chi.pow(k); }

std::pair<std::int64_t, int> values_field(const MultiplicativeCharacter& chi) {
    const std::int64_t m = chi.order();
    return {m, nt::valuation(nt::lcm(2, m), chi.field()->p())};
}

// ---- VirtualCharacter ------------------------------------------------------

VirtualCharacter::VirtualCharacter(const MultiplicativeCharacter& chi, std::int64_t n)
    : K_(chi.field()), terms_{{chi, n}} {
    canonicalize();
}

VirtualCharacter::VirtualCharacter(Field K, std::vector<Term> terms) : K_(std::move(K)), terms_(std::move(terms)) {
    canonicalize();
}

VirtualCharacter VirtualCharacter::constant(const Field& K, std::int64_t n) {
    return VirtualCharacter(K, {{MultiplicativeCharacter::trivial(K), n}});
}

void VirtualCharacter::canonicalize() {
    for (const auto& t : terms_) {
        if (!K_) K_ = t.first.field();
        if (!(*t.first.field() == *K_)) throw DomainError("virtual character mixes fields");
    }
    std::vector<std::pair<std::string, std::size_t>> idx;
    idx.reserve(terms_.size());
    for (std::size_t i = 0; i < terms_.size(); ++i) idx.emplace_back(terms_[i].first.key(), i);
    std::sort(idx.begin(), idx.end());
    std::vector<Term> out;
    std::string last;
    for (const auto& [k, i] : idx) {
        if (!out.empty() && k == last) {
            out.back().second += terms_[i].second;
        } else {
            out.push_back(terms_[i]);
            last = k;
        }
    }
    std::erase_if(out, [](const Term& t) { return t.second == 0; });
    terms_.swap(out);
}

std::int64_t VirtualCharacter::degree() const {
    std::int64_t d = 0;
    for (const auto& t : terms_) d += t.second;
    return d;
}

MultiplicativeCharacter VirtualCharacter::det() const {
    if (!K_) throw DomainError("det of an empty virtual character without a field");
    MultiplicativeCharacter d = MultiplicativeCharacter::trivial(K_);
    for (const auto& [chi, n] : terms_) d = d * chi.pow(n);
    return d;
}

const Field& VirtualCharacter::field() const {
    if (!K_) throw DomainError("virtual character has no field");
    return K_;
}

VirtualCharacter VirtualCharacter::operator+(const VirtualCharacter& o) const {
    std::vector<Term> t = terms_;
    t.insert(t.end(), o.terms_.begin(), o.terms_.end());
    return VirtualCharacter(K_ ? K_ : o.K_, std::move(t));
}

VirtualCharacter VirtualCharacter::operator-() const {
    std::vector<Term> t = terms_;
    for (auto& x : t) x.second = -x.second;
    return VirtualCharacter(K_, std::move(t));
}

VirtualCharacter VirtualCharacter::operator-(const VirtualCharacter& o) const { return *this + (-o); }

VirtualCharacter VirtualCharacter::operator*(const VirtualCharacter& o) const {
    std::vector<Term> t;
    t.reserve(terms_.size() * o.terms_.size());
    for (const auto& [a, n] : terms_) {
        for (const auto& [b, m] : o.terms_) t.emplace_back(a * b, n * m);
    }
    return VirtualCharacter(K_ ? K_ : o.K_, std::move(t));
}

VirtualCharacter VirtualCharacter::pow(std::int64_t e) const {
    if (e < 0) throw DomainError("negative power of a virtual character");
    VirtualCharacter r = constant(field(), 1);
    for (std::int64_t i = 0; i < e; ++i) r = r * *this;
    return r;
}

std::string VirtualCharacter::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [chi, n] : terms_) {
        if (!first) os << (n < 0 ? " - " : " + ");
        else if (n < 0) os << "-";
        first = false;
        const std::int64_t a = n < 0 ? -n : n;
        if (a != 1) os << a << "*";
        os << "[" << chi.spec() << "]";
    }
    return os.str();
}

VirtualCharacter one_minus(const MultiplicativeCharacter& chi) {
    return VirtualCharacter::constant(chi.field(), 1) - VirtualCharacter(chi);
}

VirtualCharacter adams(const VirtualCharacter& V, std::int64_t k) {
    std::vector<VirtualCharacter::Term> t;
    for (const auto& [chi, n] : V.terms()) t.emplace_back(chi.pow(k), n);
    return VirtualCharacter(V.field(), std::move(t));
}

VirtualCharacter galois_twist(const VirtualCharacter& V, const GaloisElement& sigma) {
    std::vector<VirtualCharacter::Term> t;
    for (const auto& [chi, n] : V.terms()) t.emplace_back(galois_twist(chi, sigma), n);
    return VirtualCharacter(V.field(), std::move(t));
}

}  // namespace localconst
