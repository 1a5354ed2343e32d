#include <gtest/gtest.h>
#include <json.hpp>

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

namespace {

struct CliRun {
    int code = -1;
    std::string out, err;
};

std::string slurp(const std::filesystem::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

CliRun run(const std::string& args, const std::string& env = "") {
    static int counter = 0;
    const auto dir = std::filesystem::temp_directory_path() / ("hecke_cli_test_" + std::to_string(::getpid()));
    std::filesystem::create_directories(dir);
    const auto out = dir / ("out" + std::to_string(counter));
    const auto err = dir / ("err" + std::to_string(counter++));
    const std::string cmd = env + " \"" HECKE_CLI_PATH "\" " + args + " >\"" + out.string() + "\" 2>\"" + err.string() + "\"";
    const int status = std::system(cmd.c_str());
    CliRun r;
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    r.out = slurp(out);
    r.err = slurp(err);
    return r;
}

nlohmann::json parse(const CliRun& r) { return nlohmann::json::parse(r.out); }

}  // namespace

TEST(Cli, VerifyDefaultPointPasses) {
    const CliRun r = run("verify --r 2 --p 2 --n 2");
    EXPECT_EQ(r.code, 0) << r.err;
    const auto j = parse(r);
    EXPECT_TRUE(j["all_passed"].get<bool>());
    EXPECT_EQ(j["params"]["Q"][0], "3/1");
}

TEST(Cli, NonSemisimpleParametersRejected) {
    const CliRun r = run("verify --r 2 --p 2 --n 2 --q 1/1");
    EXPECT_EQ(r.code, 2);
    EXPECT_NE(r.err.find("vanishes"), std::string::npos) << r.err;
    const CliRun p = run("params --check --r 2 --p 1 --n 2 --Q 3,6");
    EXPECT_EQ(p.code, 2);
    const auto j = parse(p);
    EXPECT_FALSE(j["semisimple"].get<bool>());
    EXPECT_EQ(j["witness"]["kind"], "cross-parameter");
    const CliRun ok = run("params --check --r 2 --p 2 --n 2");
    EXPECT_EQ(ok.code, 0);
    EXPECT_TRUE(parse(ok)["semisimple"].get<bool>());
}

TEST(Cli, MalformedInputIsExitTwo) {
    EXPECT_EQ(run("verify --r 3 --p 2 --n 2").code, 2);
    EXPECT_EQ(run("verify --r 2 --p 2 --n 2 --q two").code, 2);
    EXPECT_EQ(run("verify --r 2 --p 2 --n 2 --scope nosuchcheck").code, 2);
    EXPECT_EQ(run("dump --what nothing --r 2 --p 2 --n 2").code, 2);
    EXPECT_EQ(run("frobnicate").code, 2);
    EXPECT_EQ(run("--help").code, 0);
}

TEST(Cli, ScopeLimitsReport) {
    const CliRun r = run("verify --r 2 --p 2 --n 2 --scope mainthm1,orth");
    ASSERT_EQ(r.code, 0);
    const auto j = parse(r);
    ASSERT_EQ(j["checks"].size(), 2u);
    EXPECT_EQ(j["checks"][0]["name"], "mainthm1");
    EXPECT_EQ(j["checks"][1]["name"], "orth");
}

TEST(Cli, MutationMakesVerifyFail) {
    const CliRun r = run("verify --r 2 --p 2 --n 2 --mutation gamma_scale --scope Ft,orth");
    EXPECT_EQ(r.code, 1);
    EXPECT_FALSE(parse(r)["all_passed"].get<bool>());
}

TEST(Cli, DumpDims) {
    const CliRun r = run("dump --what dims --r 2 --p 2 --n 3");
    ASSERT_EQ(r.code, 0) << r.err;
    const auto j = parse(r);
    EXPECT_EQ(j["counts"]["dim_H_rn"], 48);
    EXPECT_EQ(j["counts"]["dim_H_rpn"], 24);
    EXPECT_EQ(j["counts"]["grpn_basis_size"], 24);
    EXPECT_TRUE(j["all_checks_passed"].get<bool>());
}

TEST(Cli, DumpGammaAndTwistedCenter) {
    const CliRun g = run("dump --what gamma --r 1 --p 1 --n 2");
    ASSERT_EQ(g.code, 0) << g.err;
    EXPECT_EQ(parse(g)["shapes"].size(), 2u);
    const CliRun z = run("dump --what twisted-center --r 2 --p 2 --n 2");
    ASSERT_EQ(z.code, 0) << z.err;
    const auto j = parse(z);
    ASSERT_EQ(j["twisted_center"].size(), 2u);
    EXPECT_EQ(j["twisted_center"][0]["count"], 5);
    EXPECT_EQ(j["twisted_center"][1]["count"], 1);
}

TEST(Cli, CsvOutputs) {
    const CliRun r = run("verify --r 2 --p 2 --n 2 --format csv");
    ASSERT_EQ(r.code, 0);
    EXPECT_EQ(r.out.rfind("name,", 0), 0u) << r.out.substr(0, 80);
    const CliRun d = run("dump --what basis --r 2 --p 2 --n 2 --format csv");
    EXPECT_EQ(d.code, 0);
    EXPECT_FALSE(d.out.empty());
}

TEST(Cli, OutputIsByteIdenticalAcrossRuns) {
    for (const std::string args : {"verify --r 3 --p 3 --n 2", "dump --what basis --r 2 --p 2 --n 2", "dims --r 4 --p 2 --n 2"}) {
        const CliRun a = run(args);
        const CliRun b = run(args);
        EXPECT_EQ(a.code, 0);
        EXPECT_EQ(a.out, b.out) << args;
    }
}

TEST(Cli, VerifyIndependentOfThreadCount) {
    const CliRun a = run("verify --r 2 --p 2 --n 3 --jobs 1");
    const CliRun b = run("verify --r 2 --p 2 --n 3 --jobs 8");
    EXPECT_EQ(a.code, 0);
    EXPECT_EQ(a.out, b.out);
}

TEST(Cli, DimensionBoundFromEnvironment) {
    const CliRun r = run("verify --r 2 --p 2 --n 2", "HECKE_MAX_DIM=5");
    EXPECT_EQ(r.code, 2);
    EXPECT_NE(r.err.find("HECKE_MAX_DIM"), std::string::npos) << r.err;
    EXPECT_EQ(run("verify --r 2 --p 2 --n 2 --max-dim 5").code, 2);
    EXPECT_EQ(run("verify --r 2 --p 2 --n 2 --scope orth", "HECKE_MAX_DIM=5").code, 0);
}

TEST(Cli, OutputFile) {
    const auto path = std::filesystem::temp_directory_path() / "hecke_cli_output.json";
    std::filesystem::remove(path);
    const CliRun r = run("dims --r 2 --p 2 --n 2 --output \"" + path.string() + "\"");
    EXPECT_EQ(r.code, 0);
    EXPECT_TRUE(r.out.empty());
    const auto j = nlohmann::json::parse(slurp(path));
    EXPECT_EQ(j["audit"]["dim_H_rn"], 8);
}
