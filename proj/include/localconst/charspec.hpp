#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "localconst/characters.hpp"

namespace localconst {

/// Parsed character description, independent of the field precision.
///
///   alpha=<poly>/p^<n> | alpha=<poly>/<p>^<n> | alpha=<poly>/<p^n as integer>
///   tame=<t>   onp=<m>:<k>   neg=-1   rho=<u>   trivial
///
/// Components are separated by ';'. A poly is a sum of terms c, c*w, c*w^e, w^e.
struct CharSpec {
    std::optional<std::vector<mpz_class>> alpha_num;
    int alpha_level = 0;  // alpha = alpha_num / p^alpha_level
    std::int64_t tame = 0;
    RootOfUnity on_p;
    int sign = 1;
    std::optional<mpz_class> rho;

    /// Conductor-relevant depth: alpha_level, or 3 for rho characters.
    int depth() const;
    MultiplicativeCharacter build(const Field& K) const;
};

CharSpec parse_char_spec(const std::string& text, std::int64_t p);

/// Family of alpha numerators: '*' means every unit residue mod p^n.
struct FamilySpec {
    bool all_units = false;
    std::vector<std::vector<mpz_class>> numerators;
    int level = 0;
    CharSpec rest;  // other components shared by every member

    std::vector<CharSpec> expand(const Field& K) const;
};

FamilySpec parse_family_spec(const std::string& text, std::int64_t p);

std::vector<mpz_class> parse_poly(const std::string& text);

}  // namespace localconst
