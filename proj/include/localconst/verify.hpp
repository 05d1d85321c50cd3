#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "localconst/characters.hpp"
#include "localconst/cyclotomic.hpp"
#include "localconst/epsilon.hpp"

namespace localconst {

enum class Status { Pass, Fail, Unsupported };

std::string status_name(Status s);

struct Report {
    std::string identity;
    std::vector<std::pair<std::string, std::string>> params;
    std::optional<CyclotomicNumber> lhs;
    std::optional<CyclotomicNumber> rhs;
    bool equal = false;
    Status status = Status::Unsupported;
    std::string note;
    std::optional<double> seconds;

    /// Fills equal/status from lhs == rhs.
    void settle();
};

Report unsupported(std::string identity, std::vector<std::pair<std::string, std::string>> params, std::string note);

// Single identities. Characters and virtual characters must share one field.
Report verify_p3_agreement(const MultiplicativeCharacter& chi);
Report verify_p1(EpsilonCache& cache, const MultiplicativeCharacter& chi, std::int64_t k);
Report verify_p1(EpsilonCache& cache, const VirtualCharacter& V, std::int64_t k);
Report verify_sqrt_lemma(std::int64_t p, std::int64_t k);
Report verify_c1(EpsilonCache& cache, const MultiplicativeCharacter& chi);
Report verify_c2(EpsilonCache& cache, const VirtualCharacter& V);
Report verify_c3(EpsilonCache& cache, const MultiplicativeCharacter& chi);
/// formula 1: W*(chi^k) = W*(chi)^k det(k)^{-k} (Nf, k); formula 2: W*^{k-1} = det(k) (Nf, k).
Report verify_c4(EpsilonCache& cache, const MultiplicativeCharacter& chi, std::int64_t k, int formula);
Report verify_c5(EpsilonCache& cache, const MultiplicativeCharacter& chi, std::int64_t k);
Report verify_c6(EpsilonCache& cache, const MultiplicativeCharacter& chi);
Report verify_c7a(EpsilonCache& cache, const Field& K, const std::vector<mpz_class>& a);
Report verify_c7b(EpsilonCache& cache, const Field& K, const std::vector<std::vector<mpz_class>>& as);
Report verify_c7c(EpsilonCache& cache, const Field& K, const std::vector<std::vector<mpz_class>>& as);
Report verify_c7d(EpsilonCache& cache, std::int64_t p, int n);
Report verify_witt(EpsilonCache& cache, const Field& K, const std::vector<mpz_class>& a1,
                   const std::vector<mpz_class>& a2);
Report verify_l1a(const MultiplicativeCharacter& chi);

struct L1bReport {
    bool primes_ok = false;
    bool cond_i = false;
    bool cond_ii_p1 = false;
    bool cond_ii_p2 = false;
    bool cond_iii = false;
    int symbol_p1 = 0;  // (-1, p1)_{p1}
    int symbol_p2 = 0;  // (-1, p2)_{p2}
    bool all() const { return primes_ok && cond_i && cond_ii_p1 && cond_ii_p2 && cond_iii; }
};

L1bReport verify_l1b_example(std::int64_t l, std::int64_t p1, std::int64_t p2);
/// Compares the observed condition pattern with `expect_all` (true for a genuine example).
Report verify_l1b(std::int64_t l, std::int64_t p1, std::int64_t p2, bool expect_all);

/// i^{Tr(((u-1)/2)^2)} against the oracle value of rho_u over K = Q_2.
Report w_quadratic_2adic(const PadicElement& u);

// ---- suites ----------------------------------------------------------------

struct SuiteConfig {
    std::vector<std::int64_t> primes{3};
    std::optional<int> f;
    std::optional<int> max_n;
    std::optional<int> prec;  // absolute precision; default max_n + 4
    std::uint64_t seed = 1;
    int samples = 20;
};

struct SuiteCase {
    std::string suite;
    std::string label;
    std::function<Report()> run;
};

const std::vector<std::string>& suite_names();
/// Cases of one suite ("all" expands to every suite) in deterministic order.
std::vector<SuiteCase> build_suite(const std::string& name, const SuiteConfig& cfg);

/// Runs cases on `jobs` threads; `emit` sees reports in case order.
std::vector<Report> run_cases(const std::vector<SuiteCase>& cases, int jobs, bool timing,
                              const std::function<void(const Report&)>& emit = {});

}  // namespace localconst
