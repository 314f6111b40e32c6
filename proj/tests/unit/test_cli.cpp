#include "f4gvm/cli.hpp"

#include <doctest.h>
#include <json.hpp>

#include <sstream>

using namespace f4gvm;

namespace {

struct Result {
    int code;
    std::string out, err;
};

Result run(std::vector<std::string> args, bool color = false) {
    std::ostringstream out, err;
    const int code = cli::run(args, out, err, {color});
    return {code, out.str(), err.str()};
}

std::size_t count(const std::string& s, const std::string& what) {
    std::size_t n = 0;
    for (auto p = s.find(what); p != std::string::npos; p = s.find(what, p + what.size())) ++n;
    return n;
}

} // namespace

TEST_SUITE("cli") {

TEST_CASE("exit codes") {
    CHECK(run({"verify", "--symbolic"}).code == cli::kOk);
    CHECK(run({"verify", "--labels", "2", "3", "5", "7"}).code == cli::kOk);
    CHECK(run({"verify", "--labels", "2", "3", "5"}).code == cli::kUsage);
    CHECK(run({"verify"}).code == cli::kUsage);
    CHECK(run({"verify", "--symbolic", "--labels", "1", "1", "1", "1"}).code == cli::kUsage);
    CHECK(run({"verify", "--labels", "0", "1", "1", "1"}).code == cli::kInvalidLabels);
    CHECK(run({"multiplet", "-1", "1", "1", "1"}).code == cli::kInvalidLabels);
    CHECK(run({"multiplet", "x", "1", "1", "1"}).code == cli::kInvalidLabels);
    CHECK(run({"multiplet", "4000000000000000000", "1", "1", "1"}).code == cli::kInvalidLabels);
    CHECK(run({"roots", "--format", "xml"}).code == cli::kUsage);
    CHECK(run({"bogus"}).code == cli::kUsage);
    CHECK(run({}).code == cli::kUsage);
    CHECK(run({"verify", "--symbolic", "--allowlist", "/nonexistent/allow.txt"}).code == cli::kUsage);
}

TEST_CASE("roots") {
    const auto r = run({"roots", "--format", "json"});
    REQUIRE(r.code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["roots"].size() == 48);
    std::size_t noncompact = 0;
    for (const auto& x : j["roots"])
        if (x["positive"] == true && x["m_compact"] == false) ++noncompact;
    CHECK(noncompact == 15);
    CHECK(run({"roots"}).out.find("(8,15,21,11)") != std::string::npos);
}

TEST_CASE("json output round-trips byte for byte") {
    for (const auto& args : std::vector<std::vector<std::string>>{
             {"roots", "--format", "json"},
             {"hc", "--format", "json"},
             {"hc", "1", "2", "3", "4", "--format", "json"},
             {"multiplet", "1", "2", "3", "4", "--format", "json"},
             {"multiplet", "0", "1", "1", "1", "--symbolic", "--format", "json"},
             {"verify", "--symbolic", "--report", "json"}}) {
        const auto r = run(args);
        REQUIRE(r.code == 0);
        CHECK(nlohmann::ordered_json::parse(r.out).dump(2) + "\n" == r.out);
        CHECK(run(args).out == r.out);
    }
}

TEST_CASE("multiplet rendering") {
    const auto dot = run({"multiplet", "1", "1", "1", "1", "--format", "dot"});
    REQUIRE(dot.code == 0);
    CHECK(dot.out.rfind("digraph MAIN", 0) == 0);
    CHECK(count(dot.out, "[label=\"") == 24 + 48);
    CHECK(count(dot.out, "style=\"dashed\"") == 12);
    const auto red = run({"multiplet", "1", "1", "1", "1", "--format", "dot", "--reduce-transitive"});
    CHECK(count(red.out, "[label=\"") == 24 + 32);

    const auto j = nlohmann::json::parse(run({"multiplet", "0", "1", "1", "1", "--format", "json"}).out);
    CHECK(j["kind"] == "M1");
    CHECK(j["nodes"].size() == 18);
}

TEST_CASE("colour only when asked") {
    const auto plain = run({"verify", "--symbolic"});
    const auto coloured = run({"verify", "--symbolic"}, true);
    CHECK(plain.out.find("\x1b[") == std::string::npos);
    CHECK(coloured.out.find("\x1b[") != std::string::npos);
    CHECK(run({"multiplet", "1", "2", "3", "4"}, true).out.find("\x1b[") != std::string::npos);
    CHECK(run({"multiplet", "1", "2", "3", "4", "--format", "json"}, true).out.find("\x1b[") == std::string::npos);
}

}
