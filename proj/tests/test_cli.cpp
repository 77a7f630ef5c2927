#include <array>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <catch2/catch_amalgamated.hpp>
#include <json.hpp>

#include "ybx/io.hpp"

namespace {

std::string cli_path() {
    const char* env = std::getenv("YBX_CLI");
    REQUIRE(env != nullptr);
    return env;
}

std::string fixture(const std::string& name) {
    const char* env = std::getenv("YBX_FIXTURES");
    REQUIRE(env != nullptr);
    return std::string(env) + "/" + name;
}

struct RunResult {
    int exit_code = -1;
    std::string out;
};

RunResult run(const std::string& args) {
    std::string cmd = cli_path() + " " + args + " 2>/dev/null";
    std::array<char, 4096> buf{};
    RunResult res;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::size_t got;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) res.out.append(buf.data(), got);
    int status = pclose(pipe);
    res.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return res;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace

TEST_CASE("validate: exit codes distinguish valid, invalid, malformed") {
    CHECK(run("validate " + fixture("twist2.json")).exit_code == 0);
    auto bad = run("validate " + fixture("bad_braid2.json"));
    CHECK(bad.exit_code == 1);
    CHECK(bad.out.find("braid") != std::string::npos);
    CHECK(run("validate " + fixture("bad_shape.json")).exit_code == 2);
    CHECK(run("validate /no/such/file.json").exit_code == 2);
    CHECK(run("frobnicate x").exit_code != 0);
}

TEST_CASE("info reports the one-flip fixture faithfully") {
    auto res = run("info " + fixture("one_flip_quandle3.json") + " --json");
    REQUIRE(res.exit_code == 0);
    auto j = nlohmann::json::parse(res.out);
    CHECK(j["classify"]["biquandle"] == true);
    CHECK(j["classify"]["involutive"] == false);
    CHECK(j["classify"]["square_free"] == true);
    CHECK(j["dehornoy_class"] == 2);
    CHECK(j["orbits"]["n_max"] == 2);
    CHECK(j["injective"] == "false");
    CHECK(j["verdict"] == "decomposable");

    auto text = run("info " + fixture("one_flip_quandle3.json"));
    CHECK(text.out.find("decomposable") != std::string::npos);
}

TEST_CASE("info on the invalid fixture exits 1") {
    CHECK(run("info " + fixture("bad_braid2.json")).exit_code == 1);
}

TEST_CASE("cable reproduces the frozen 2-cabled lambda table") {
    auto res = run("cable -k 2 " + fixture("involutive6.json"));
    REQUIRE(res.exit_code == 0);
    ybx::Solution c = ybx::solution_from_json(nlohmann::json::parse(res.out));
    std::vector<std::vector<int>> expected_lambda = {
        {2, 0, 1, 5, 3, 4}, {2, 0, 1, 4, 5, 3}, {2, 0, 1, 3, 4, 5},
        {0, 1, 2, 5, 3, 4}, {0, 1, 2, 5, 3, 4}, {0, 1, 2, 5, 3, 4},
    };
    CHECK(c.lambda == expected_lambda);
}

TEST_CASE("cable -k 1 is the identity on files") {
    namespace fs = std::filesystem;
    fs::path tmp = fs::temp_directory_path() / "ybx_cli_test";
    fs::create_directories(tmp);
    std::string once = (tmp / "once.json").string();
    std::string twice = (tmp / "twice.json").string();
    REQUIRE(run("cable -k 1 " + fixture("involutive6.json") + " -o " + once).exit_code == 0);
    REQUIRE(run("cable -k 1 " + once + " -o " + twice).exit_code == 0);
    CHECK(read_file(once) == read_file(twice));
    ybx::Solution a = ybx::load_solution(once);
    ybx::Solution b = ybx::load_solution(fixture("involutive6.json"));
    CHECK(a.same_tables(b));
}

TEST_CASE("cable --reduce folds the exponent") {
    auto raw = run("cable -k 4 " + fixture("involutive6.json"));
    auto red = run("cable -k 4 --reduce " + fixture("involutive6.json"));
    REQUIRE(raw.exit_code == 0);
    REQUIRE(red.exit_code == 0);
    CHECK(raw.out == red.out);  // class is 3, so 4 reduces to 1 and tables agree
}

TEST_CASE("cable refuses non-biquandles with a hint") {
    auto res = run("cable -k 2 " + fixture("cycle_rack3.json"));
    CHECK(res.exit_code == 1);
}

TEST_CASE("quotient subcommand covers all three kinds") {
    auto bq = run("quotient --kind bq " + fixture("cycle_rack3.json"));
    CHECK(bq.exit_code == 0);
    CHECK(bq.out.find("{0,1,2}") != std::string::npos);
    CHECK(bq.out.find("size:   1") != std::string::npos);

    auto ret = run("quotient --kind retract " + fixture("one_flip_quandle3.json"));
    CHECK(ret.exit_code == 0);
    CHECK(ret.out.find("{0,1}|{2}") != std::string::npos);

    auto inj = run("quotient --kind inj " + fixture("one_flip_quandle3.json"));
    CHECK(inj.exit_code == 0);
    CHECK(inj.out.find("{0,1}|{2}") != std::string::npos);
    CHECK(inj.out.find("status: exact") != std::string::npos);

    CHECK(run("quotient --kind nonsense " + fixture("twist2.json")).exit_code == 2);
}

TEST_CASE("inj quotient reports unknown via exit code 3") {
    auto res = run("quotient --kind inj --node-cap 200000 " + fixture("class6_biquandle3.json"));
    CHECK(res.exit_code == 3);
    CHECK(res.out.find("status: unknown") != std::string::npos);
}

TEST_CASE("the bq quotient output satisfies the biquandle flag") {
    auto res = run("quotient --kind bq --json " + fixture("cycle_rack3.json"));
    REQUIRE(res.exit_code == 0);
    // stdout carries the kernel lines first, then the solution JSON
    auto json_start = res.out.find("{\n");
    REQUIRE(json_start != std::string::npos);
    ybx::Solution q = ybx::solution_from_json(nlohmann::json::parse(res.out.substr(json_start)));
    CHECK(ybx::classify(q).biquandle);
}

TEST_CASE("decompose prints the orbit data and certificate") {
    auto res = run("decompose --json " + fixture("one_flip_quandle3.json"));
    REQUIRE(res.exit_code == 0);
    auto j = nlohmann::json::parse(res.out);
    CHECK(j["n_max"] == 2);
    CHECK(j["decomposable"] == true);
    CHECK(j["certificate"] == nlohmann::json::array({0, 0, 1}));
}

TEST_CASE("simple subcommand") {
    auto dih = run("simple --json " + fixture("dihedral_quandle3.json"));
    REQUIRE(dih.exit_code == 0);
    CHECK(nlohmann::json::parse(dih.out)["simple"] == true);

    auto flip = run("simple " + fixture("one_flip_quandle3.json"));
    CHECK(flip.exit_code == 0);
    CHECK(flip.out.find("no") != std::string::npos);
}

TEST_CASE("morphism subcommand") {
    CHECK(run("morphism --map 0,0,1 " + fixture("one_flip_quandle3.json") + " " + fixture("twist2.json")).exit_code ==
          0);
    CHECK(run("morphism --map 0,1,0 " + fixture("one_flip_quandle3.json") + " " + fixture("twist2.json")).exit_code ==
          1);
}

TEST_CASE("enumerate writes files plus a manifest deterministically") {
    namespace fs = std::filesystem;
    fs::path dir1 = fs::temp_directory_path() / "ybx_enum_1";
    fs::path dir2 = fs::temp_directory_path() / "ybx_enum_2";
    fs::remove_all(dir1);
    fs::remove_all(dir2);
    auto res = run("enumerate -n 2 -o " + dir1.string());
    REQUIRE(res.exit_code == 0);
    CHECK(res.out.find("4") != std::string::npos);
    REQUIRE(run("enumerate -n 2 -o " + dir2.string()).exit_code == 0);

    auto manifest = nlohmann::json::parse(read_file((dir1 / "manifest.json").string()));
    CHECK(manifest["count"] == 4);
    CHECK(manifest["files"].size() == 4);
    for (const auto& f : manifest["files"]) {
        std::string name = f.get<std::string>();
        CHECK(read_file((dir1 / name).string()) == read_file((dir2 / name).string()));
        ybx::Solution s = ybx::load_solution((dir1 / name).string());
        CHECK(ybx::validate(s).ok());
    }
}

TEST_CASE("enumerate guards the slow search") {
    CHECK(run("enumerate -n 4").exit_code == 2);
    CHECK(run("enumerate -n 9 --slow").exit_code != 0);
}
