#include <array>
#include <cstdio>
#include <fstream>
#include <string>
#include <sys/wait.h>

#include "gtest/gtest.h"

#include "json.hpp"

namespace {

struct Result {
    int status;
    std::string out;
};

Result run(const std::string &args) {
    const std::string cmd = std::string(INBL_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE *pipe = popen(cmd.c_str(), "r");
    std::string out;
    std::array<char, 4096> buf{};
    while (std::size_t n = fread(buf.data(), 1, buf.size(), pipe)) out.append(buf.data(), n);
    const int raw = pclose(pipe);
    return {WIFEXITED(raw) ? WEXITSTATUS(raw) : -1, out};
}

std::string circuit(const char *name) { return std::string(INBL_CIRCUIT_DIR) + "/" + name; }

}  // namespace

TEST(cli, run_xor_text) {
    const Result r = run("run " + circuit("xor.circuit"));
    EXPECT_EQ(r.status, 0);
    EXPECT_NE(r.out.find("multiplications: 4"), std::string::npos);
}

TEST(cli, run_json_with_verification) {
    const Result r = run("run " + circuit("xor.circuit") + " --verify-signal 10000 --stats 100000 --json");
    ASSERT_EQ(r.status, 0);
    const auto j = nlohmann::json::parse(r.out);
    EXPECT_EQ(j["mul_counter"], 4);
    EXPECT_EQ(j["bits"], 3);
    for (const auto &c : j["verification"]["checks"]) EXPECT_TRUE(c["pass"].get<bool>()) << c.dump();
}

TEST(cli, seed_override) {
    const auto j = nlohmann::json::parse(run("run " + circuit("xnor.circuit") + " --seed 77 --json").out);
    EXPECT_EQ(j["seed"], 77);
}

TEST(cli, waveform_dump) {
    const std::string path = std::string(::testing::TempDir()) + "inbl_wave.csv";
    const Result r = run("run " + circuit("xor.circuit") + " --dump-waveform " + path + " --cycles 10");
    ASSERT_EQ(r.status, 0);
    std::ifstream in(path);
    std::string line;
    std::getline(in, line);
    EXPECT_EQ(line, "t,sum");
    int rows = 0;
    while (std::getline(in, line)) ++rows;
    EXPECT_EQ(rows, 10);
    EXPECT_EQ(run("run " + circuit("xor.circuit") + " --dump-waveform " + path).status, 2);
}

TEST(cli, parse_error_exit_code) {
    EXPECT_EQ(run("run " + circuit("bad_literal.circuit")).status, 2);
    EXPECT_EQ(run("run /nonexistent/file.circuit").status, 2);
    EXPECT_EQ(run("frobnicate").status, 2);
    EXPECT_EQ(run("").status, 2);
}

TEST(cli, demo_subspaces_orthogonality) {
    const Result x = run("demo xor --json");
    ASSERT_EQ(x.status, 0);
    const auto j = nlohmann::json::parse(x.out);
    EXPECT_EQ(j["mul_counter"], 4);
    EXPECT_EQ(run("demo xnor").status, 0);
    EXPECT_EQ(run("demo nand").status, 2);

    const Result s = run("subspaces 5");
    EXPECT_EQ(s.status, 0);
    EXPECT_EQ(s.out, "4294967295\n");
    EXPECT_EQ(run("subspaces 0").status, 2);

    const Result o = run("orthogonality 3 20000 --json");
    EXPECT_EQ(o.status, 0);
    EXPECT_TRUE(nlohmann::json::parse(o.out)["checks"].is_array());
}
