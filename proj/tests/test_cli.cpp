#include "dqs/serialize.hpp"

#include <doctest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

using namespace dqs;

namespace {

struct CliResult {
    int status;
    std::string out;
};

CliResult run_cli(const std::string& args) {
    const char* bin = std::getenv("DQS_CLI");
    REQUIRE_MESSAGE(bin != nullptr, "DQS_CLI must point at the CLI binary");
    std::string cmd = std::string(bin) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    std::array<char, 4096> buf;
    std::size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0)
        out.append(buf.data(), n);
    int code = pclose(pipe);
    return {WEXITSTATUS(code), out};
}

} // namespace

TEST_CASE("tensor command prints the canonical text form") {
    auto r = run_cli("tensor --group 'SU(2)' --a 1 --b 1");
    CHECK(r.status == 0);
    CHECK(r.out == "1*[0] + 1*[2]\n");
}

TEST_CASE("byte-identical output for identical requests") {
    std::string args = "enumerate --group 'SU(2)' --torus-bound 2 --height 6 --format json";
    auto first = run_cli(args);
    auto second = run_cli(args);
    CHECK(first.status == 0);
    CHECK(first.out == second.out);
    CHECK_FALSE(first.out.empty());
}

TEST_CASE("enumerate reports three data at torus bound 1") {
    auto r = run_cli("enumerate --group 'SU(2)' --torus-bound 1 --height 6 --format json");
    CHECK(r.status == 0);
    Json j = Json::parse(r.out);
    CHECK(j.at("count") == 3);
    CHECK(j.at("data").size() == 3);
}

TEST_CASE("the acceptance-scale enumeration runs through the CLI") {
    auto r = run_cli("enumerate --group 'SU(2)' --torus-bound 4 --height 12 --format json");
    CHECK(r.status == 0);
    Json j = Json::parse(r.out);
    CHECK(j.at("count").get<std::size_t>() == j.at("data").size());
    CHECK(j.at("data").size() >= 3);
}

TEST_CASE("check on a non-closed set exits 0 with accepted=false") {
    Json set{{"group", "SU(2)"},
             {"height_bound", 6},
             {"pairs", Json::array({
                           Json{{"t", {"0/1"}}, {"label", {{0}}}},
                           Json{{"t", {"0/1"}}, {"label", {{1}}}},
                       })}};
    std::ofstream("/tmp/dqs_cli_set.json") << set.dump();
    auto r = run_cli("check --in /tmp/dqs_cli_set.json --format json");
    CHECK(r.status == 0);
    Json verdict = Json::parse(r.out);
    CHECK(verdict.at("accepted") == false);
    CHECK_FALSE(verdict.at("violations").empty());
}

TEST_CASE("classify on a rejected set exits 1 with the verdict payload") {
    auto r = run_cli("classify --in /tmp/dqs_cli_set.json --format json");
    // run after the check test wrote the file
    CHECK(r.status == 1);
    Json payload = Json::parse(r.out);
    CHECK(payload.contains("error"));
    CHECK(payload.at("verdict").at("accepted") == false);
}

TEST_CASE("usage errors exit 2, domain errors exit 1") {
    CHECK(run_cli("no-such-command").status == 2);
    CHECK(run_cli("tensor --no-such-flag 1").status == 2);
    CHECK(run_cli("info --group 'SU(1)'").status == 1);
    CHECK(run_cli("qdim --group 'SU(2)' --label 1 --q 3/2").status == 1);
}

TEST_CASE("realize/classify round trip through files") {
    auto enumerated =
        run_cli("enumerate --group 'SU(2)' --torus-bound 2 --height 6 --format json");
    Json data = Json::parse(enumerated.out).at("data");
    std::ofstream("/tmp/dqs_cli_datum.json") << data[4].dump();
    auto realized = run_cli(
        "realize --in /tmp/dqs_cli_datum.json --height 6 --format json --out /tmp/dqs_cli_real.json");
    CHECK(realized.status == 0);
    auto classified = run_cli("classify --in /tmp/dqs_cli_real.json --format json");
    CHECK(classified.status == 0);
    CHECK(Json::parse(classified.out) == data[4]);
}

TEST_CASE("qdim and dim agree with the library") {
    auto r = run_cli("qdim --group 'SU(2)' --label 2 --q 1/2");
    CHECK(r.status == 0);
    CHECK(r.out == "21/4\n");
    auto d = run_cli("dim --group 'G2' --label 1,0");
    CHECK(d.status == 0);
    CHECK(d.out == "7\n");
}

TEST_CASE("JSON payloads round-trip through the documented schemas") {
    auto r = run_cli("enumerate --group 'U(2)' --torus-bound 2 --height 2 --format json");
    CHECK(r.status == 0);
    for (const auto& dj : Json::parse(r.out).at("data")) {
        SubgroupDatum d = datum_from_json(dj);
        CHECK(datum_json(d) == dj);
    }
}
