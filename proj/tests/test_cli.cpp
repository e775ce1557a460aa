#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>

#include <json.hpp>

#include "cli.hpp"

using nlohmann::json;

namespace {

struct Run {
    int code;
    std::string out, err;
};

Run run(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    int code = nilcent::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

json report(const std::vector<std::string>& args) {
    Run r = run(args);
    REQUIRE_MESSAGE(r.code == 0, r.err);
    json j = json::parse(r.out);
    j.erase("timing");
    return j;
}

json golden(const std::string& name) {
    std::ifstream in(std::string(NILCENT_GOLDEN_DIR) + "/" + name);
    REQUIRE(in);
    return json::parse(in);
}

}  // namespace

TEST_CASE("exit codes") {
    CHECK(run({"basis", "--lambda", "3,2"}).code == 0);
    CHECK(run({"basis", "--lambda", "3,a"}).code == 2);
    CHECK(run({"basis", "--lambda", "2,3"}).code == 2);
    CHECK(run({"basis"}).code == 2);
    CHECK(run({"frobnicate", "--lambda", "2"}).code == 2);
    CHECK(run({"basis", "--lambda", "3", "--case", "sp"}).code == 2);
    CHECK(run({"basis", "--lambda", "2", "--case", "sp", "--field", "fp:2"}).code == 2);
    CHECK(run({"basis", "--lambda", "2", "--field", "fp:4"}).code == 2);
    CHECK(run({"verify", "--lambda", "2", "--suite", "bogus"}).code == 2);
    CHECK(run({"verify", "--lambda", "2,1", "--suite", "parity"}).code == 2);
    CHECK(run({"envelope", "--lambda", "3", "--case", "so", "--field", "fp:3", "--check", "bound"}).code == 2);
    Run usage = run({"basis", "--lambda", "3,a"});
    CHECK(usage.out.empty());
    CHECK(usage.err.rfind("usage:", 0) == 0);
}

TEST_CASE("reports are deterministic apart from timing") {
    std::vector<std::string> args{"verify", "--lambda", "2,1", "--suite", "invariance", "--seed", "7"};
    CHECK(report(args) == report(args));
    json j = report(args);
    CHECK(j["schema"] == nilcent::cli::kSchema);
    CHECK(j["pass"] == true);
    CHECK(j["job"]["seed"] == 7);
    for (const auto& c : j["checks"]) {
        CHECK(c.contains("name"));
        CHECK(c.contains("anchor"));
        CHECK(c.contains("expected"));
        CHECK(c.contains("actual"));
        CHECK(c["pass"] == true);
    }
    Run raw = run(args);
    CHECK(json::parse(raw.out)["timing"].contains("seconds"));
}

TEST_CASE("golden reports") {
    CHECK(report({"basis", "--lambda", "3,2", "--case", "gl"}) == golden("basis_3-2_gl.json"));
    CHECK(report({"invariants", "--lambda", "2,1", "--case", "gl"}) == golden("invariants_2-1_gl.json"));
    CHECK(report({"invariants", "--lambda", "2,2", "--case", "sp"}) == golden("invariants_2-2_sp.json"));
    CHECK(report({"index", "--lambda", "3,1", "--case", "so"}) == golden("index_3-1_so.json"));
}

TEST_CASE("basis report shape") {
    json j = report({"basis", "--lambda", "3,2"});
    CHECK(j["result"]["dim"] == 9);
    CHECK(j["result"]["basis"].size() == 9);
    CHECK(j["result"]["basis"][0]["name"] == "xi[1,1,0]");
    json sp = report({"basis", "--lambda", "2", "--case", "sp"});
    CHECK(sp["result"]["gram"] == json::parse("[[0,1],[-1,0]]"));
}

TEST_CASE("coefficients over F_5 are the rational ones reduced") {
    json q = golden("invariants_2-2_sp.json");
    json p = report({"invariants", "--lambda", "2,2", "--case", "sp", "--field", "fp:5"});
    auto reduce = [](const std::string& c) {
        auto slash = c.find('/');
        long num = std::stol(c.substr(0, slash));
        long den = slash == std::string::npos ? 1 : std::stol(c.substr(slash + 1));
        long inv = 1;
        for (long k = 1; k < 5; ++k)
            if ((((den % 5) + 5) % 5) * k % 5 == 1) inv = k;
        return std::to_string((((num % 5) + 5) % 5) * inv % 5);
    };
    const auto& qi = q["result"]["invariants"];
    const auto& pi = p["result"]["invariants"];
    REQUIRE(qi.size() == pi.size());
    for (std::size_t r = 0; r < qi.size(); ++r) {
        std::map<std::string, std::string> want, got;
        for (const auto& t : qi[r]["polynomial"]["terms"]) {
            std::string c = reduce(t["coefficient"].get<std::string>());
            if (c != "0") want[t["factors"].dump()] = c;
        }
        for (const auto& t : pi[r]["polynomial"]["terms"]) got[t["factors"].dump()] = t["coefficient"].get<std::string>();
        CHECK(want == got);
    }
}

TEST_CASE("--out writes the report and prints a summary") {
    std::string path = (std::filesystem::temp_directory_path() / "nilcent_cli_test.json").string();
    Run r = run({"verify", "--lambda", "2,2", "--case", "sp", "--suite", "parity", "--field", "fp:5", "--out", path});
    CHECK(r.code == 0);
    CHECK(r.out.rfind("pass: ", 0) == 0);
    std::ifstream in(path);
    REQUIRE(in);
    json j = json::parse(in);
    CHECK(j["pass"] == true);
    std::filesystem::remove(path);
}

TEST_CASE("envelope checks") {
    CHECK(report({"envelope", "--lambda", "2,1", "--check", "milner"})["pass"] == true);
    CHECK(report({"envelope", "--lambda", "2,1", "--field", "fp:3", "--check", "pcentre"})["pass"] == true);
    json b = report({"envelope", "--lambda", "2,1", "--field", "fp:5", "--check", "bound"});
    CHECK(b["pass"] == true);
    CHECK(run({"envelope", "--lambda", "2,1", "--check", "pcentre"}).code == 2);
}
