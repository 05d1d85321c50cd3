#include "localconst/charspec.hpp"

#include <cctype>
#include <regex>

#include "localconst/errors.hpp"
#include "localconst/number_theory.hpp"

namespace localconst {

namespace {

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t");
    if (b == std::string::npos) return "";
    const auto e = s.find_last_not_of(" \t");
    return s.substr(b, e - b + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    int depth = 0;
    for (char c : s) {
        if (c == '{') ++depth;
        if (c == '}') --depth;
        if (c == sep && depth == 0) {
            out.push_back(trim(cur));
            cur.clear();
        } else {
            cur += c;
        }
    }
    out.push_back(trim(cur));
    return out;
}

std::int64_t parse_int(const std::string& s, const std::string& what) {
    try {
        std::size_t pos = 0;
        const long long v = std::stoll(s, &pos);
        if (pos != s.size()) throw std::invalid_argument(s);
        return v;
    } catch (const std::exception&) {
        throw ParseError("bad integer for " + what + ": '" + s + "'");
    }
}

// "p^n", "<p>^n" or a plain power of p.
int parse_level(const std::string& den, std::int64_t p) {
    const auto caret = den.find('^');
    if (caret != std::string::npos) {
        const std::string base = trim(den.substr(0, caret));
        if (base != "p" && parse_int(base, "denominator base") != p) {
            throw ParseError("denominator base must be p = " + std::to_string(p));
        }
        const std::int64_t n = parse_int(trim(den.substr(caret + 1)), "denominator exponent");
        if (n < 0 || n > 62) throw ParseError("denominator exponent out of range");
        return static_cast<int>(n);
    }
    std::int64_t d = parse_int(den, "denominator");
    if (d < 1) throw ParseError("denominator must be a positive power of p");
    int n = 0;
    while (d % p == 0) {
        d /= p;
        ++n;
    }
    if (d != 1) throw ParseError("denominator must be a power of p = " + std::to_string(p));
    return n;
}

void apply_component(CharSpec& cs, const std::string& comp, std::int64_t p) {
    if (comp.empty()) return;
    if (comp == "trivial" || comp == "1") return;
    const auto eq = comp.find('=');
    if (eq == std::string::npos) throw ParseError("expected key=value, got '" + comp + "'");
    const std::string key = trim(comp.substr(0, eq));
    const std::string val = trim(comp.substr(eq + 1));
    if (key == "alpha") {
        const auto slash = val.rfind('/');
        if (slash == std::string::npos) {
            cs.alpha_num = parse_poly(val);
            cs.alpha_level = 0;
        } else {
            cs.alpha_num = parse_poly(trim(val.substr(0, slash)));
            cs.alpha_level = parse_level(trim(val.substr(slash + 1)), p);
        }
    } else if (key == "tame") {
        cs.tame = parse_int(val, "tame");
    } else if (key == "onp") {
        const auto colon = val.find(':');
        if (colon == std::string::npos) throw ParseError("onp expects <m>:<k>");
        const std::int64_t m = parse_int(trim(val.substr(0, colon)), "onp modulus");
        if (m < 1) throw ParseError("onp modulus must be positive");
        cs.on_p = RootOfUnity(m, parse_int(trim(val.substr(colon + 1)), "onp exponent"));
    } else if (key == "neg") {
        const std::int64_t s = parse_int(val, "neg");
        if (s != 1 && s != -1) throw ParseError("neg must be 1 or -1");
        cs.sign = static_cast<int>(s);
    } else if (key == "rho") {
        cs.rho = mpz_class(parse_int(val, "rho"));
    } else {
        throw ParseError("unknown character component '" + key + "'");
    }
}

}  // namespace

std::vector<mpz_class> parse_poly(const std::string& text) {
    const std::string s = [&] {
        std::string t;
        for (char c : text) {
            if (!std::isspace(static_cast<unsigned char>(c))) t += c;
        }
        return t;
    }();
    if (s.empty()) throw ParseError("empty polynomial");
    static const std::regex term(R"(([+-]?)(\d*)(\*?)(w(\^(\d+))?)?)");
    std::vector<mpz_class> out(1);
    std::size_t pos = 0;
    while (pos < s.size()) {
        std::smatch m;
        const std::string rest = s.substr(pos);
        if (!std::regex_search(rest, m, term, std::regex_constants::match_continuous) || m.length(0) == 0) {
            throw ParseError("cannot parse polynomial '" + text + "'");
        }
        if (pos > 0 && m[1].length() == 0) throw ParseError("missing sign between terms in '" + text + "'");
        const bool has_w = m[4].matched && m[4].length() > 0;
        if (m[3].length() > 0 && (!has_w || m[2].length() == 0)) throw ParseError("misplaced '*' in '" + text + "'");
        if (!has_w && m[2].length() == 0) throw ParseError("empty term in '" + text + "'");
        mpz_class c = m[2].length() > 0 ? mpz_class(m[2].str()) : mpz_class(1);
        if (m[1].str() == "-") c = -c;
        std::size_t e = 0;
        if (has_w) e = m[6].matched ? std::stoul(m[6].str()) : 1;
        if (e > 64) throw ParseError("polynomial degree too large");
        if (out.size() <= e) out.resize(e + 1);
        out[e] += c;
        pos += static_cast<std::size_t>(m.length(0));
    }
    return out;
}

int CharSpec::depth() const {
    if (rho) return 3;
    return alpha_num ? alpha_level : 0;
}

MultiplicativeCharacter CharSpec::build(const Field& K) const {
    if (rho) {
        if (alpha_num || tame != 0 || !on_p.is_one() || sign != 1) {
            throw ParseError("rho=<u> cannot be combined with other components");
        }
        return MultiplicativeCharacter::rho_u(PadicElement::from_int(K, *rho));
    }
    std::optional<PadicElement> alpha;
    if (alpha_num) {
        if (alpha_num->size() > static_cast<std::size_t>(K->f())) {
            throw ParseError("alpha numerator has degree >= f = " + std::to_string(K->f()));
        }
        alpha = PadicElement::from_coeffs(K, *alpha_num, -alpha_level);
    }
    return MultiplicativeCharacter(K, on_p, tame, alpha, sign);
}

CharSpec parse_char_spec(const std::string& text, std::int64_t p) {
    if (!nt::is_prime(p)) throw ParseError("p must be prime");
    CharSpec cs;
    for (const auto& comp : split(text, ';')) apply_component(cs, comp, p);
    return cs;
}

FamilySpec parse_family_spec(const std::string& text, std::int64_t p) {
    FamilySpec fam;
    bool have_alpha = false;
    std::string others;
    for (const auto& comp : split(text, ';')) {
        if (comp.rfind("alpha=", 0) != 0) {
            others += comp + ";";
            continue;
        }
        have_alpha = true;
        const std::string val = trim(comp.substr(6));
        const auto slash = val.rfind('/');
        if (slash == std::string::npos) throw ParseError("family alpha needs a denominator");
        const std::string num = trim(val.substr(0, slash));
        fam.level = parse_level(trim(val.substr(slash + 1)), p);
        if (num == "*") {
            fam.all_units = true;
        } else if (num.size() >= 2 && num.front() == '{' && num.back() == '}') {
            const std::string inner = trim(num.substr(1, num.size() - 2));
            if (!inner.empty()) {
                for (const auto& item : split(inner, ',')) fam.numerators.push_back(parse_poly(item));
            }
        } else {
            fam.numerators.push_back(parse_poly(num));
        }
    }
    if (!have_alpha) throw ParseError("family spec needs alpha=*/p^n or alpha={a1,...}/p^n");
    fam.rest = parse_char_spec(others, p);
    if (fam.rest.alpha_num || fam.rest.rho) throw ParseError("family spec has extra alpha/rho components");
    return fam;
}

std::vector<CharSpec> FamilySpec::expand(const Field& K) const {
    std::vector<CharSpec> out;
    auto push = [&](std::vector<mpz_class> num) {
        CharSpec cs = rest;
        cs.alpha_num = std::move(num);
        cs.alpha_level = level;
        out.push_back(std::move(cs));
    };
    if (all_units) {
        if (level < 1) throw ParseError("alpha=*/p^n needs n >= 1");
        for_each_unit_residue(K, level, [&](const PadicElement& a) {
            std::vector<mpz_class> num;
            for (auto c : a.unit()) num.emplace_back(static_cast<unsigned long>(c));
            push(std::move(num));
        });
    } else {
        for (const auto& n : numerators) push(n);
    }
    return out;
}

}  // namespace localconst
