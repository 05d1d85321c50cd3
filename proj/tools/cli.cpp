#include "cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "localconst/charspec.hpp"
#include "localconst/epsilon.hpp"
#include "localconst/errors.hpp"
#include "localconst/serialize.hpp"
#include "localconst/verify.hpp"

namespace localconst {

namespace {

enum class Format { Json, Tsv, Pretty };

struct Options {
    std::vector<std::int64_t> primes{3};
    std::optional<int> f;
    std::string prec = "auto";
    std::vector<std::string> chars;
    std::string suite;
    std::string family;
    std::optional<int> max_n;
    Format format = Format::Pretty;
    int jobs = 1;
    std::uint64_t seed = 1;
    int samples = 20;
    std::string out_path;
    bool timing = false;
    std::size_t max_rows = 2000;
};

std::optional<int> parse_prec(const std::string& s) {
    if (s == "auto") return std::nullopt;
    try {
        std::size_t used = 0;
        const int v = std::stoi(s, &used);
        if (used != s.size() || v < 1) throw std::invalid_argument(s);
        return v;
    } catch (const std::exception&) {
        throw ParseError("--prec takes a positive integer or 'auto', got '" + s + "'");
    }
}

Field field_for(const Options& o, std::int64_t p, int depth) {
    const auto prec = parse_prec(o.prec);
    const int N = prec.value_or(std::max(depth, 1) + 4);
    return make_field(p, o.f.value_or(1), N);
}

std::string root_str(const std::optional<RootOfUnity>& r) { return r ? r->to_string() : "-"; }

std::string poly_text(const std::vector<mpz_class>& a) {
    std::string s;
    for (std::size_t j = 0; j < a.size(); ++j) {
        if (a[j] == 0) continue;
        if (!s.empty()) s += "+";
        s += a[j].get_str();
        if (j == 1) s += "*w";
        if (j > 1) s += "*w^" + std::to_string(j);
    }
    return s.empty() ? "0" : s;
}

void emit_kv(std::ostream& out, Format fmt, const std::vector<std::pair<std::string, std::string>>& rows) {
    for (const auto& [k, v] : rows) {
        if (fmt == Format::Tsv) {
            out << k << '\t' << v << '\n';
        } else {
            out << k << std::string(k.size() < 11 ? 11 - k.size() : 1, ' ') << v << '\n';
        }
    }
}

int cmd_w(const Options& o, std::ostream& out) {
    if (o.chars.empty()) throw ParseError("w needs at least one --char");
    bool first = true;
    for (std::int64_t p : o.primes) {
        for (const auto& text : o.chars) {
            const CharSpec cs = parse_char_spec(text, p);
            const Field K = field_for(o, p, cs.depth());
            const MultiplicativeCharacter chi = cs.build(K);
            const EpsilonValue w = w_of(chi, Backend::Oracle);
            const EpsilonValue ws = w_star(chi, Backend::Oracle);
            const RootOfUnity io = iota(chi);
            std::optional<RootOfUnity> wp;
            if (w.root) wp = w_p_part(w, p);
            std::optional<ClosedForm> cf;
            std::optional<EpsilonValue> wc;
            if (chi.is_wild()) {
                cf = closed_form(chi);
                wc = w_closed(chi);
            }
            const std::optional<bool> agree = wc ? std::optional<bool>(wc->value == w.value) : std::nullopt;

            if (o.format == Format::Json) {
                json rec{{"char", character_json(chi)}, {"W", to_json(w)}, {"W_star", to_json(ws)},
                         {"iota", to_json(io)},        {"W_p", wp ? to_json(*wp) : json(nullptr)}};
                if (cf) {
                    rec["decomposition"] = {{"tame", to_json(cf->tame)}, {"G", to_json(cf->g)}, {"wild", to_json(cf->wild)},
                                            {"d_inv", cf->d_inv.to_string()}};
                } else {
                    rec["decomposition"] = nullptr;
                }
                rec["backends"] = {{"oracle", to_json(w)},
                                   {"closed", wc ? to_json(*wc) : json(nullptr)},
                                   {"agree", agree ? json(*agree) : json(nullptr)}};
                out << rec.dump() << '\n';
                continue;
            }
            if (!first && o.format == Format::Pretty) out << '\n';
            first = false;
            std::vector<std::pair<std::string, std::string>> rows{
                {"character", chi.spec()},
                {"field", K->describe()},
                {"conductor", std::to_string(chi.conductor_exponent())},
                {"order", std::to_string(chi.order())},
                {"W", display(w)},
                {"W*", display(ws)},
                {"iota", io.to_string()},
            };
            if (cf) {
                rows.emplace_back("tame", cf->tame.to_string());
                const auto g_root = cf->g.as_root_of_unity();
                rows.emplace_back("G", g_root ? g_root->to_string() : cf->g.to_string());
                rows.emplace_back("wild", cf->wild.to_string());
            }
            rows.emplace_back("W_p", root_str(wp));
            if (!w.root) {
                const auto z = w.value.complex_embedding(12);
                rows.emplace_back("W~", z.re + " + " + z.im + "*i");
            }
            rows.emplace_back("backends", agree ? (*agree ? "oracle and closed form agree" : "oracle and closed form DISAGREE")
                                                : "oracle only");
            emit_kv(out, o.format, rows);
        }
    }
    return 0;
}

std::string params_text(const Report& r) {
    std::string s;
    for (const auto& [k, v] : r.params) s += (s.empty() ? "" : " ") + k + "=" + v;
    return s;
}

int cmd_verify(const Options& o, std::ostream& out) {
    if (o.suite.empty()) throw ParseError("verify needs --suite");
    SuiteConfig cfg;
    cfg.primes = o.primes;
    cfg.f = o.f;
    cfg.max_n = o.max_n;
    cfg.prec = parse_prec(o.prec);
    cfg.seed = o.seed;
    cfg.samples = o.samples;
    const auto cases = build_suite(o.suite, cfg);
    if (o.format == Format::Tsv) out << "identity\tstatus\tparams\tlhs\trhs\tnote\n";
    std::size_t pass = 0, fail = 0, skipped = 0;
    bool precision = false;
    run_cases(cases, o.jobs, o.timing, [&](const Report& r) {
        if (r.status == Status::Pass) ++pass;
        if (r.status == Status::Fail) ++fail;
        if (r.status == Status::Unsupported) ++skipped;
        if (r.status == Status::Fail && r.note.rfind("precision:", 0) == 0) precision = true;
        const std::string lhs = r.lhs ? r.lhs->to_string() : "-";
        const std::string rhs = r.rhs ? r.rhs->to_string() : "-";
        switch (o.format) {
            case Format::Json: out << to_json(r).dump() << '\n'; break;
            case Format::Tsv:
                out << r.identity << '\t' << status_name(r.status) << '\t' << params_text(r) << '\t' << lhs << '\t' << rhs
                    << '\t' << r.note << '\n';
                break;
            case Format::Pretty: {
                const char* tag = r.status == Status::Pass ? "PASS" : r.status == Status::Fail ? "FAIL" : "SKIP";
                out << tag << "  " << r.identity << "  " << params_text(r);
                if (r.status == Status::Fail) out << "\n      lhs = " << lhs << "\n      rhs = " << rhs;
                if (!r.note.empty()) out << "  (" << r.note << ")";
                if (r.seconds) out << "  [" << *r.seconds << " s]";
                out << '\n';
                break;
            }
        }
        out.flush();
    });
    if (o.format == Format::Json) {
        out << json{{"summary", {{"suite", o.suite}, {"pass", pass}, {"fail", fail}, {"unsupported", skipped}}}}.dump() << '\n';
    } else if (o.format == Format::Pretty) {
        out << o.suite << ": " << pass << " passed, " << fail << " failed, " << skipped << " unsupported\n";
    }
    if (precision) return 3;
    return fail > 0 ? 1 : 0;
}

int cmd_table(const Options& o, std::ostream& out) {
    if (o.family.empty()) throw ParseError("table needs --family");
    const std::vector<std::string> header{"p", "a", "conductor", "order", "W", "W*", "W_p"};
    std::vector<std::vector<std::string>> rows;
    std::vector<json> records;
    for (std::int64_t p : o.primes) {
        const FamilySpec fam = parse_family_spec(o.family, p);
        const Field K = field_for(o, p, std::max(fam.level, fam.rest.depth()));
        const auto members = fam.expand(K);
        if (rows.size() + members.size() > o.max_rows) {
            throw ParseError("family has " + std::to_string(rows.size() + members.size()) + " members, above --max-rows " +
                             std::to_string(o.max_rows));
        }
        EpsilonCache cache;
        for (const auto& cs : members) {
            const MultiplicativeCharacter chi = cs.build(K);
            const EpsilonValue w = cache.w(chi);
            const EpsilonValue ws = cache.w_star(chi);
            std::optional<RootOfUnity> wp;
            if (w.root) wp = w_p_part(w, p);
            const std::string a = cs.alpha_num ? poly_text(*cs.alpha_num) : "-";
            rows.push_back({std::to_string(p), a, std::to_string(chi.conductor_exponent()), std::to_string(chi.order()),
                            display(w), display(ws), root_str(wp)});
            records.push_back({{"p", p},
                               {"a", a},
                               {"char", chi.spec()},
                               {"conductor", chi.conductor_exponent()},
                               {"order", chi.order()},
                               {"W", to_json(w)},
                               {"W_star", to_json(ws)},
                               {"W_p", wp ? to_json(*wp) : json(nullptr)}});
        }
    }
    if (o.format == Format::Json) {
        out << json{{"columns", header}, {"rows", records}}.dump() << '\n';
        return 0;
    }
    std::vector<std::size_t> width(header.size());
    for (std::size_t c = 0; c < header.size(); ++c) {
        width[c] = header[c].size();
        for (const auto& r : rows) width[c] = std::max(width[c], r[c].size());
    }
    auto line = [&](const std::vector<std::string>& cells) {
        for (std::size_t c = 0; c < cells.size(); ++c) {
            if (o.format == Format::Tsv) {
                out << (c ? "\t" : "") << cells[c];
            } else {
                out << (c ? "  " : "") << cells[c] << (c + 1 < cells.size() ? std::string(width[c] - cells[c].size(), ' ') : "");
            }
        }
        out << '\n';
    };
    line(header);
    for (const auto& r : rows) line(r);
    return 0;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Local constants of characters of unramified p-adic fields", "localconst"};
    app.require_subcommand(1);
    Options o;
    std::string format = "pretty";

    auto common = [&](CLI::App* sub) {
        sub->add_option("--p", o.primes, "prime(s), comma separated")->delimiter(',');
        sub->add_option("--f", o.f, "residue degree")->check(CLI::Range(1, 20));
        sub->add_option("--prec", o.prec, "p-adic precision N, or 'auto'");
        sub->add_option("--format", format, "json, tsv or pretty")->check(CLI::IsMember({"json", "tsv", "pretty"}));
        sub->add_option("--out", o.out_path, "write output to this file");
    };

    auto* w = app.add_subcommand("w", "compute W, W*, iota and the closed-form factors of characters");
    common(w);
    w->add_option("--char", o.chars, "character spec, e.g. alpha=1/3^2;tame=1")->required();

    auto* verify = app.add_subcommand("verify", "run a verification suite");
    common(verify);
    std::vector<std::string> suites = suite_names();
    suites.push_back("all");
    verify->add_option("--suite", o.suite, "suite name")->required()->check(CLI::IsMember(suites));
    verify->add_option("--max-n", o.max_n, "deepest wild level in the grids")->check(CLI::Range(1, 40));
    verify->add_option("--jobs", o.jobs, "worker threads")->check(CLI::Range(1, 256));
    verify->add_option("--seed", o.seed, "seed for sampled grids");
    verify->add_option("--samples", o.samples, "sample count for sampled grids")->check(CLI::Range(1, 100000));
    verify->add_flag("--timing", o.timing, "record per-case wall time");

    auto* table = app.add_subcommand("table", "tabulate W over a family of characters");
    common(table);
    table->add_option("--family", o.family, "family spec, e.g. alpha=*/3^2")->required();
    table->add_option("--max-rows", o.max_rows, "refuse families with more members");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            out << app.help();
            return 0;
        }
        err << "error: " << e.what() << '\n';
        return 2;
    }
    o.format = format == "json" ? Format::Json : format == "tsv" ? Format::Tsv : Format::Pretty;

    std::ofstream file;
    std::ostream* sink = &out;
    if (!o.out_path.empty()) {
        file.open(o.out_path);
        if (!file) {
            err << "error: cannot write " << o.out_path << '\n';
            return 2;
        }
        sink = &file;
    }
    try {
        if (*w) return cmd_w(o, *sink);
        if (*verify) return cmd_verify(o, *sink);
        return cmd_table(o, *sink);
    } catch (const PrecisionError& e) {
        err << "precision error: " << e.what() << '\n';
        return 3;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }
}

}  // namespace localconst
