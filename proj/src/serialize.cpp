#include "localconst/serialize.hpp"

#include "localconst/errors.hpp"
#include "localconst/number_theory.hpp"

namespace localconst {

namespace {

json big(const mpz_class& z) {
    if (z.fits_slong_p()) return static_cast<std::int64_t>(z.get_si());
    return z.get_str();
}

mpz_class unbig(const json& j) {
    if (j.is_number_integer()) return mpz_class(std::to_string(j.get<std::int64_t>()));
    if (j.is_string()) return mpz_class(j.get<std::string>());
    throw ParseError("expected an integer, got " + j.dump());
}

}  // namespace

json to_json(const CyclotomicNumber& x) {
    json num = json::array();
    for (const auto& c : x.numerators()) num.push_back(big(c));
    return {{"m", x.m()}, {"num", num}, {"den", big(x.denominator())}};
}

json to_json(const RootOfUnity& r) { return {{"m", r.m}, {"k", r.k}}; }

json to_json(const EpsilonValue& e) {
    json j{{"value", to_json(e.value)},
           {"root", e.root ? to_json(*e.root) : json(nullptr)},
           {"conductor_exponent", e.conductor_exponent},
           {"field", e.field},
           {"display", display(e)}};
    return j;
}

json to_json(const Report& r) {
    json params = json::object();
    for (const auto& [k, v] : r.params) params[k] = v;
    json j{{"identity", r.identity},
           {"params", params},
           {"lhs", r.lhs ? to_json(*r.lhs) : json(nullptr)},
           {"rhs", r.rhs ? to_json(*r.rhs) : json(nullptr)},
           {"equal", r.equal},
           {"status", status_name(r.status)},
           {"timing", r.seconds ? json(*r.seconds) : json(nullptr)}};
    if (!r.note.empty()) j["note"] = r.note;
    return j;
}

json character_json(const MultiplicativeCharacter& chi) {
    const Field& K = chi.field();
    json j{{"spec", chi.spec()},
           {"field", {{"p", K->p()}, {"f", K->f()}, {"N", K->N()}}},
           {"conductor", chi.conductor_exponent()},
           {"order", chi.order()},
           {"tame", chi.tame_exp()},
           {"on_p", to_json(chi.on_p())},
           {"sign", chi.sign()}};
    j["alpha"] = chi.alpha() ? json(chi.alpha()->to_string()) : json(nullptr);
    return j;
}

CyclotomicNumber cyclotomic_from_json(const json& j) {
    try {
        const auto m = j.at("m").get<std::int64_t>();
        if (m < 1) throw ParseError("cyclotomic m must be positive");
        const auto& num = j.at("num");
        if (static_cast<std::int64_t>(num.size()) > m) throw ParseError("too many coefficients");
        std::vector<mpz_class> coeffs(static_cast<std::size_t>(m));
        for (std::size_t i = 0; i < num.size(); ++i) coeffs[i] = unbig(num[i]);
        const mpz_class den = unbig(j.at("den"));
        if (den <= 0) throw ParseError("denominator must be positive");
        return CyclotomicNumber::from_group_ring(m, std::move(coeffs), den);
    } catch (const json::exception& e) {
        throw ParseError(std::string("bad cyclotomic number: ") + e.what());
    }
}

RootOfUnity root_from_json(const json& j) {
    try {
        return RootOfUnity(j.at("m").get<std::int64_t>(), j.at("k").get<std::int64_t>());
    } catch (const json::exception& e) {
        throw ParseError(std::string("bad root of unity: ") + e.what());
    }
}

EpsilonValue epsilon_from_json(const json& j) {
    try {
        EpsilonValue e;
        e.value = cyclotomic_from_json(j.at("value"));
        if (!j.at("root").is_null()) e.root = root_from_json(j.at("root"));
        e.conductor_exponent = j.at("conductor_exponent").get<int>();
        e.field = j.at("field").get<std::string>();
        return e;
    } catch (const json::exception& e) {
        throw ParseError(std::string("bad epsilon value: ") + e.what());
    }
}

std::string display(const EpsilonValue& e) { return e.root ? e.root->to_string() : e.value.to_string(); }

}  // namespace localconst
