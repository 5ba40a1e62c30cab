#include <doctest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iterator>
#include <string>

#include <json.hpp>

#include "proglab/entropy.hpp"

#ifndef PROGLAB_BIN
#error "PROGLAB_BIN must point at the CLI binary"
#endif

namespace {

using nlohmann::json;
using proglab::entropy_h;

struct RunResult {
    int exit_code = -1;
    std::string output;
};

RunResult run(const std::string& args) {
    const std::string command = std::string("\"") + PROGLAB_BIN + "\" " + args + " 2>/dev/null";
    RunResult result;
    FILE* pipe = popen(command.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::array<char, 4096> buffer{};
    std::size_t got = 0;
    while ((got = fread(buffer.data(), 1, buffer.size(), pipe)) > 0) {
        result.output.append(buffer.data(), got);
    }
    const int status = pclose(pipe);
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return result;
}

json run_json(const std::string& args) {
    const RunResult result = run(args);
    REQUIRE(result.exit_code == 0);
    const json parsed = json::parse(result.output);
    REQUIRE(parsed.contains("schema_version"));
    return parsed;
}

std::string temp_path(const char* name) {
    return std::string("proglab_cli_test_") + name;
}

}  // namespace

TEST_CASE("bounds subcommand reproduces the headline constant") {
    const json out = run_json("bounds");
    CHECK(out["bound_c8"].get<double>() == doctest::Approx(7.0899).epsilon(1e-4));
    CHECK(out["theta1"].get<double>() == doctest::Approx(0.343).epsilon(1e-2));
    CHECK(out["kappa4"].get<double>() == doctest::Approx(3.6107).epsilon(1e-3));
    CHECK(out["constants"]["two_kappa4"].get<double>() == doctest::Approx(7.222).epsilon(1e-3));
}

TEST_CASE("solve-c8 subcommand") {
    const json out = run_json("solve-c8 --tol 1e-12");
    CHECK(out["theta1"].get<double>() == doctest::Approx(0.3427187634).epsilon(1e-8));
    CHECK(out["rho1"].get<double>() == doctest::Approx(0.3193802107).epsilon(1e-8));
    CHECK(out["bound"].get<double>() == doctest::Approx(7.0899068946).epsilon(1e-8));
}

TEST_CASE("entropy and kappa subcommands") {
    const json h = run_json("entropy --k 2 --theta 0.25");
    CHECK(h["value"].get<double>() == doctest::Approx(0.8112781).epsilon(1e-6));
    const json k = run_json("kappa --k 4");
    CHECK(k["value"].get<double>() == doctest::Approx(3.610719).epsilon(1e-6));
    CHECK(k["argmin_x"].get<double>() > 0.0);
}

TEST_CASE("codim subcommand") {
    // theta * 9 = 3.06, so the cap keeps the degree-3 monomials: 20 of them.
    const json out = run_json("codim --n 3 --k 4 --theta 0.34");
    CHECK(out["exact"].get<std::string>() == "20");
    CHECK(out["log2_bound"].get<double>() ==
          doctest::Approx(3.0 * entropy_h(4, 0.34)).epsilon(1e-6));
    const json weighted = run_json("codim --n 2 --k 2 --theta 0.5 --weights 1,1");
    CHECK(weighted["exact"].get<std::string>() == "3");
}

TEST_CASE("ring-check subcommand") {
    const json zero = run_json("ring-check --group 4^2 --thetas 0.5,0.5 --samples 50 --seed 3");
    CHECK(zero["all_zero"].get<bool>());
    CHECK(zero["counterexample"].is_null());
    const json sharp =
        run_json("ring-check --group 4^2 --thetas 0.3333333,0.3333333 --samples 200 --seed 3");
    CHECK_FALSE(sharp["all_zero"].get<bool>());
    CHECK(sharp["counterexample"].is_object());
    const json weighted =
        run_json("ring-check --group 4x8 --thetas 0.5,0.5 --weights 1,2.5 --samples 50 --seed 9");
    CHECK(weighted["all_zero"].get<bool>());
}

TEST_CASE("behrend emit and oracle verify round trip") {
    const std::string path = temp_path("sphere.set");
    const json emitted = run_json("behrend --modulus 8 --dim 3 --verify --emit " + path);
    REQUIRE(emitted.contains("size"));
    CHECK(emitted["ap_free"].get<bool>());
    CHECK(emitted["count"].get<std::string>() == std::to_string(emitted["size"].get<int>()));

    const json verified = run_json("oracle --verify-file " + path);
    CHECK(verified["ap_free"].get<bool>());
    CHECK(verified["size"].get<int>() == emitted["size"].get<int>());
    CHECK(verified["group"].get<std::string>() == "8^3");
    std::remove(path.c_str());

    // Two-dimensional case pins the exact file content.
    const std::string small = temp_path("sphere2.set");
    run_json("behrend --modulus 8 --dim 2 --emit " + small);
    std::ifstream file(small);
    std::string content((std::istreambuf_iterator<char>(file)), std::istreambuf_iterator<char>());
    CHECK(content == "# group: 8^2\n0,2\n2,0\n2,4\n4,2\n");
    std::remove(small.c_str());
}

TEST_CASE("behrend growth emits csv") {
    const RunResult result = run("behrend --modulus 8 --growth 2:4");
    CHECK(result.exit_code == 0);
    CHECK(result.output.rfind("n,radius2,count,ratio", 0) == 0);
}

TEST_CASE("regularize subcommand") {
    const std::string path = temp_path("reg.set");
    {
        std::ofstream file(path);
        file << "# group: 8\n0\n1\n2\n5\n";
    }
    const json out = run_json("regularize --input " + path + " --level 1");
    CHECK(out["k"].get<int>() >= 1);
    CHECK(out["size"].get<int>() >= 1);
    CHECK(out["ratio"].get<double>() > 0.0);
    const json two = run_json("regularize --input " + path + " --level 2");
    CHECK(two["k_prime"].is_number());
    std::remove(path.c_str());
}

TEST_CASE("oracle subcommand") {
    const json exact = run_json("oracle --group 4 --exact");
    CHECK(exact["size"].get<int>() == 2);
    CHECK(exact["exact"].get<bool>());
    const json greedy = run_json("oracle --group 8 --greedy --restarts 4 --seed 1");
    CHECK(greedy["size"].get<int>() >= 2);
    const json semi = run_json("oracle --group 4 --exact --forbid-semitrivial");
    CHECK(semi["size"].get<int>() <= 2);
}

TEST_CASE("usage errors exit with code 2") {
    CHECK(run("--nonsense").exit_code == 2);
    CHECK(run("entropy --k 2").exit_code == 2);          // missing required flag
    CHECK(run("oracle").exit_code == 2);                 // neither group nor file
    CHECK(run("regularize --input missing_file_xyz --level 1").exit_code == 2);
    CHECK(run("").exit_code == 2);                       // subcommand required
}

TEST_CASE("set files reject duplicates") {
    const std::string path = temp_path("dup.set");
    {
        std::ofstream file(path);
        file << "# group: 4\n1\n1\n";
    }
    CHECK(run("regularize --input " + path + " --level 1").exit_code == 2);
    std::remove(path.c_str());
}
