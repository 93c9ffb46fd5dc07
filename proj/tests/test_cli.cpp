#include "doctest.h"

#include "carleman/cli.hpp"
#include "json.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

namespace fs = std::filesystem;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args) {
    args.insert(args.begin(), "carleman");
    std::ostringstream out, err;
    const int code = carleman::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace

TEST_CASE("coeffs json") {
    const auto r = run({"coeffs", "--kind", "d", "--count", "4"});
    REQUIRE(r.code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["values"] == nlohmann::json::array({"1/2", "0", "5/288", "139/17280"}));
    CHECK(j["kind"] == "d");

    const auto csv = run({"coeffs", "--kind", "b", "--count", "3", "--format", "csv"});
    CHECK(csv.code == 0);
    CHECK(csv.out.find("1/48") != std::string::npos);
}

TEST_CASE("certify m = 2") {
    const auto r = run({"certify", "--m", "2"});
    REQUIRE(r.code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["numerator"] == nlohmann::json::array({"1/288"}));
    CHECK(j["method"] == "all_coeffs_nonneg");
    CHECK(j["certified"] == true);

    const auto four = nlohmann::json::parse(run({"certify", "--m", "4"}).out);
    CHECK(four["numerator"] ==
          nlohmann::json::array({"139/358318080", "581/29859840", "467/1244160", "79/23040"}));
    CHECK(four["vanished_degrees"] == nlohmann::json::array({4, 5, 6, 7}));
}

TEST_CASE("usage errors exit 2") {
    CHECK(run({}).code == 2);
    CHECK(run({"bogus"}).code == 2);
    CHECK(run({"coeffs", "--kind", "q"}).code == 2);
    CHECK(run({"coeffs", "--count", "0"}).code == 2);
    CHECK(run({"verify", "--x-min", "-1"}).code == 2);
    CHECK(run({"certify", "--m", "2", "--m-max", "3"}).code == 2);
    CHECK(run({"carleman", "--family", "power:0.5"}).code == 2);
    CHECK(run({"check-integrals", "--digits", "10"}).code == 2);
}

TEST_CASE("verify sweep") {
    const auto r = run({"verify", "--m-max", "6", "--points", "30"});
    CHECK(r.code == 0);
    CHECK(r.out.rfind("m,x,sigma,S,delta,positive", 0) == 0);
    CHECK(r.out.find("# summary:") != std::string::npos);
    CHECK(r.out.find(",false") == std::string::npos);
    CHECK(run({"verify", "--m-max", "3", "--points", "10", "--float"}).code == 0);
}

TEST_CASE("output is deterministic") {
    for (const std::vector<std::string>& args :
         {std::vector<std::string>{"check-integrals", "--k-max", "8"}, {"identities", "--m", "2,3", "--x", "1"},
          {"carleman", "--family", "geom:0.5", "--terms", "50", "--m", "2"}, {"certify", "--m-max", "6"}}) {
        const auto a = run(args);
        const auto b = run(args);
        CHECK(a.code == 0);
        CHECK(a.out == b.out);
    }
}

TEST_CASE("report bundle") {
    const auto text = run({"report"});
    CHECK(text.code == 0);
    CHECK(text.out.find("73/5670") != std::string::npos);
    CHECK(text.out.find("89/60480") != std::string::npos);

    const fs::path dir = fs::temp_directory_path() / "carleman_report_test";
    fs::remove_all(dir);
    const auto r = run({"report", "--out", dir.string(), "--m-max", "8", "--points", "20"});
    CHECK(r.code == 0);
    for (const char* name : {"coeffs_b.json", "coeffs_d.json", "integrals.txt", "identities.txt", "certificates.json",
                             "verify.csv", "discrepancies.txt", "summary.txt"}) {
        CAPTURE(name);
        CHECK(fs::exists(dir / name));
    }
    const auto first = slurp(dir / "certificates.json");
    CHECK(run({"report", "--out", dir.string(), "--m-max", "8", "--points", "20"}).code == 0);
    CHECK(slurp(dir / "certificates.json") == first);
    fs::remove_all(dir);
}
