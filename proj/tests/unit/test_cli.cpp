#include "support.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "localconst/serialize.hpp"

using namespace localconst;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args) {
    args.insert(args.begin(), "localconst");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& s) {
    std::vector<std::string> v;
    std::istringstream in(s);
    for (std::string l; std::getline(in, l);) v.push_back(l);
    return v;
}

}  // namespace

TEST_CASE("w prints the decomposition") {
    const auto r = run({"w", "--p", "3", "--f", "1", "--char", "alpha=1/9"});
    REQUIRE(r.code == 0);
    CHECK(r.out.find("W          zeta_9\n") != std::string::npos);
    CHECK(r.out.find("G          1\n") != std::string::npos);
    CHECK(r.out.find("W_p        zeta_9\n") != std::string::npos);
    CHECK(r.out.find("agree") != std::string::npos);
}

TEST_CASE("w emits JSON records") {
    const auto r = run({"w", "--p", "3", "--char", "alpha=1/9", "--format", "json"});
    REQUIRE(r.code == 0);
    const json j = json::parse(r.out);
    CHECK(root_from_json(j.at("W").at("root")) == RootOfUnity(9, 1));
    CHECK(epsilon_from_json(j.at("W_star")).value == root_of_unity(9, 1));
    CHECK(j.at("char").at("conductor") == 2);
    CHECK(j.at("char").at("order") == 3);
    CHECK(j.at("backends").at("agree") == true);
    const auto r2 = run({"w", "--p", "2", "--char", "alpha=1/8", "--format", "json"});
    REQUIRE(r2.code == 0);
    const json j2 = json::parse(r2.out);
    CHECK(8 % j2.at("W").at("root").at("m").get<int>() == 0);
    CHECK(j2.at("decomposition").at("wild") == json::parse(R"({"m":8,"k":1})"));
}

TEST_CASE("tables") {
    const auto r = run({"table", "--p", "3", "--family", "alpha=*/3^2", "--format", "tsv"});
    REQUIRE(r.code == 0);
    const auto ls = lines(r.out);
    REQUIRE(ls.size() == 7);
    CHECK(ls[0] == "p\ta\tconductor\torder\tW\tW*\tW_p");
    CHECK(ls[1] == "3\t1\t2\t3\tzeta_9\tzeta_9\tzeta_9");
    CHECK(ls[2] == "3\t2\t2\t3\tzeta_9^8\tzeta_9^8\tzeta_9^8");
    CHECK(lines(run({"table", "--p", "3", "--family", "alpha=*/27", "--format", "tsv"}).out).size() == 19);
    const auto empty = run({"table", "--p", "3", "--family", "alpha={}/3^2", "--format", "tsv"});
    CHECK(empty.code == 0);
    CHECK(lines(empty.out).size() == 1);
    const auto capped = run({"table", "--p", "3", "--family", "alpha=*/27", "--max-rows", "5"});
    CHECK(capped.code == 2);
    CHECK(capped.err.find("--max-rows") != std::string::npos);
}

TEST_CASE("verify streams reports and sets the exit code") {
    const auto r = run({"verify", "--suite", "c7", "--p", "3", "--format", "json"});
    REQUIRE(r.code == 0);
    const auto ls = lines(r.out);
    REQUIRE(ls.size() > 10);
    for (std::size_t i = 0; i + 1 < ls.size(); ++i) {
        const json j = json::parse(ls[i]);
        CHECK(j.at("status") == "pass");
        CHECK(j.contains("lhs"));
        CHECK(j.contains("timing"));
    }
    const json summary = json::parse(ls.back()).at("summary");
    CHECK(summary.at("fail") == 0);
}

TEST_CASE("identical configuration gives identical bytes") {
    const auto a = run({"verify", "--suite", "p3-agreement", "--p", "3", "--f", "2", "--seed", "7", "--format", "tsv"});
    const auto b = run({"verify", "--suite", "p3-agreement", "--p", "3", "--f", "2", "--seed", "7", "--format", "tsv", "--jobs", "4"});
    const auto c = run({"verify", "--suite", "p3-agreement", "--p", "3", "--f", "2", "--seed", "8", "--format", "tsv"});
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    CHECK(a.out != c.out);
}

TEST_CASE("usage errors") {
    CHECK(run({}).code == 2);
    CHECK(run({"verify", "--suite", "nope"}).code == 2);
    CHECK(run({"w", "--p", "3", "--char", "alpha=1/10"}).code == 2);
    CHECK(run({"w", "--p", "4", "--char", "alpha=1/16"}).code == 2);
    CHECK(run({"w", "--p", "3", "--char", "alpha=1/9", "--format", "xml"}).code == 2);
    CHECK(run({"w", "--p", "3", "--char", "alpha=1/9", "--prec", "zero"}).code == 2);
    CHECK(run({"--help"}).code == 0);
}

TEST_CASE("precision exhaustion") {
    const auto r = run({"w", "--p", "3", "--char", "alpha=1/3^5", "--prec", "3"});
    CHECK(r.code == 3);
    CHECK(r.err.find("precision") != std::string::npos);
}

TEST_CASE("output file") {
    const auto path = std::filesystem::temp_directory_path() / "localconst_cli_test.tsv";
    std::filesystem::remove(path);
    const auto r = run({"table", "--p", "3", "--family", "alpha=*/3^2", "--format", "tsv", "--out", path.string()});
    CHECK(r.code == 0);
    CHECK(r.out.empty());
    std::ifstream in(path);
    std::stringstream ss;
    ss << in.rdbuf();
    CHECK(lines(ss.str()).size() == 7);
    std::filesystem::remove(path);
}
