#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <string>

#include "doctest.h"
#include "json.hpp"

namespace {

struct Run {
    int code = -1;
    std::string out;
};

Run run(const std::string& args) {
    const std::string cmd = std::string(LPC_CLI_PATH) + " " + args + " 2>/dev/null";
    Run r;
    FILE* p = popen(cmd.c_str(), "r");
    REQUIRE(p != nullptr);
    std::array<char, 4096> buf{};
    std::size_t k;
    while ((k = fread(buf.data(), 1, buf.size(), p)) > 0) r.out.append(buf.data(), k);
    const int status = pclose(p);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

}  // namespace

TEST_CASE("exit codes") {
    CHECK(run("contract sl2 --weights 0,0,1").code == 0);
    const auto bad = run("contract sl2 --weights 0,1,0");
    CHECK(bad.code == 1);
    CHECK(bad.out.find("negative t-power at pair (e,f)") != std::string::npos);
    CHECK(run("contract sl2 --weights 0,1").code == 2);
    CHECK(run("contract sl2").code == 2);
    CHECK(run("index nosuch").code == 2);
    CHECK(run("frobnicate sl2").code == 2);
    CHECK(run("validate sl3").code == 0);
    CHECK(run("index sp4").out.find("index: 2") != std::string::npos);
}

TEST_CASE("contract prints contracted brackets") {
    const auto r = run("contract sl2 --weights 0,0,1");
    CHECK(r.out.find("[h,f]: -2*f") != std::string::npos);
    CHECK(r.out.find("[e,h]: -2*e") != std::string::npos);
    CHECK(r.out.find("[e,f]") == std::string::npos);
}

TEST_CASE("suites") {
    const auto f = run("feigin sl3");
    CHECK(f.code == 0);
    CHECK(f.out.find("status: pass") != std::string::npos);
    CHECK(run("z2 so4/gl2").code == 0);
    CHECK(run("z2 sl3").code == 2);
    CHECK(run("ggs sp4/sp2+sp2").code == 1);
    CHECK(run("ggs sp4/sp2+sp2 --reduce").code == 0);
    CHECK(run("kostant so5").code == 0);
    CHECK(run("tdeg sl2 --weights 1,0,1 --poly '-1/2*h^2 - 2*e*f'").out.find("highest: -2*e*f") != std::string::npos);
    CHECK(run("fsi sp4 --weights 0,0,0,0,0,0,1,1,1,1").out.find("fsi.p: f1") != std::string::npos);
}

TEST_CASE("json reports are deterministic outside the timings") {
    const auto a = nlohmann::json::parse(run("feigin sp4 --format json").out);
    const auto b = nlohmann::json::parse(run("feigin sp4 --format json").out);
    CHECK(a["payload"] == b["payload"]);
    CHECK(a["payload"]["status"] == "pass");
    CHECK(a["timings"].contains("seconds"));
    CHECK_FALSE(a["payload"].dump().find("seconds") != std::string::npos);
}

TEST_CASE("emit and reload") {
    const auto path = (std::filesystem::temp_directory_path() / "lpc_cli_sp4.yaml").string();
    CHECK(run("emit-builtin sp4 -o " + path).code == 0);
    CHECK(run("validate " + path).code == 0);
    CHECK(run("feigin " + path).code == 0);
    std::filesystem::remove(path);
    CHECK(run("emit-builtin nosuch").code == 2);
    const auto bad = (std::filesystem::temp_directory_path() / "lpc_cli_bad.yaml").string();
    {
        FILE* f = fopen(bad.c_str(), "w");
        fputs("name: bad\nbasis: [x1, x2, x3]\nbrackets:\n  - [0, 1, 2, \"1\"]\n  - [1, 2, 0, \"1\"]\n  - [0, 2, 0, \"1\"]\n", f);
        fclose(f);
    }
    CHECK(run("validate " + bad).code == 1);
    std::filesystem::remove(bad);
}
