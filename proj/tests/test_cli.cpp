#include "doctest.h"

#include "cli.hpp"

#include "alcove/phigamma.hpp"

#include "json.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

using alcove::run_cli;

namespace {
int run(const std::vector<std::string>& args, std::string* output = nullptr) {
    std::ostringstream out, err;
    const int code = run_cli(args, out, err);
    if (output) *output = out.str() + err.str();
    return code;
}
}  // namespace

TEST_CASE("usage errors exit with 2") {
    CHECK(run({}) == 2);
    CHECK(run({"frobnicate"}) == 2);
    CHECK(run({"enumerate", "--family", "C", "--r", "2"}) == 2);
    CHECK(run({"enumerate", "--family", "X", "--r", "2", "--p", "3"}) == 2);
    CHECK(run({"enumerate", "--family", "C", "--r", "2", "--p", "3", "--q", "9"}) == 2);
    CHECK(run({"bijection", "--type", "E6", "--d", "6", "--p", "3"}) == 2);
}

TEST_CASE("enumerate prints counts") {
    std::string text;
    CHECK(run({"enumerate", "--family", "C", "--r", "2", "--p", "3", "--count-only"}, &text) == 0);
    CHECK(text.find("classes") != std::string::npos);
}

TEST_CASE("enumerate writes JSON") {
    const std::string path = "cli_enumerate_test.json";
    CHECK(run({"--json", path, "enumerate", "--family", "D", "--r", "4", "--p", "3"}) == 0);
    std::ifstream is(path);
    const auto j = nlohmann::json::parse(is);
    CHECK(j.at("classes").get<std::size_t>() == j.at("representatives").size());
    std::remove(path.c_str());
}

TEST_CASE("verify passes for C2 and writes a report") {
    const std::string path = "cli_verify_test.json";
    CHECK(run({"--json", path, "verify", "--type", "C", "--d", "2"}) == 0);
    std::ifstream is(path);
    const auto j = nlohmann::json::parse(is);
    CHECK(j.contains("items"));
    std::remove(path.c_str());
}

TEST_CASE("bijection for A1") {
    CHECK(run({"bijection", "--type", "A", "--d", "1", "--p", "3"}) == 0);
}

TEST_CASE("classify-module on a diagonal sum") {
    const auto one = alcove::to_module(alcove::construct_rank_one(3, 1, 2, 1, 1));
    const auto two = alcove::to_module(alcove::construct_rank_one(3, 1, 2, 0, 2));
    const std::string path = "cli_module_test.json";
    {
        std::ofstream os(path);
        os << alcove::to_json(alcove::direct_sum({one, two})).dump();
    }
    std::string text;
    CHECK(run({"classify-module", path}, &text) == 0);
    const auto j = nlohmann::json::parse(text);
    CHECK(j.at("summands").size() == 2);
    CHECK(j.at("summands")[0].at("s") == 1);
    CHECK(j.at("summands")[1].at("xi") == 2);
    std::remove(path.c_str());
}
