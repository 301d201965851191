#include <gtest/gtest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <string>

// End-to-end tests driving the built CLI binary through a shell.

namespace {

struct RunResult {
    int exit_code = -1;
    std::string out;
};

RunResult run(const std::string& command) {
    RunResult res;
    FILE* pipe = popen((command + " 2>/dev/null").c_str(), "r");
    if (!pipe) return res;
    std::array<char, 4096> buf;
    std::size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) res.out.append(buf.data(), n);
    const int status = pclose(pipe);
    res.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return res;
}

const std::string cli = SQHIT_CLI_PATH;

std::string tmp_path(const std::string& name) {
    const char* dir = std::getenv("TMPDIR");
    return std::string(dir ? dir : "/tmp") + "/" + name;
}

}  // namespace

TEST(Cli, GenSolvePipelineChi) {
    const auto res = run(cli + " gen --name c5_cycle --m 1 | " + cli + " solve --param chi");
    EXPECT_EQ(res.exit_code, 0);
    EXPECT_NE(res.out.find("\"value\": 3"), std::string::npos) << res.out;
}

TEST(Cli, GenSolveTauNineSquares) {
    const auto res = run(cli + " gen --name nine_square_tau3 | " + cli + " solve --param tau");
    EXPECT_EQ(res.exit_code, 0);
    EXPECT_NE(res.out.find("\"value\": 3"), std::string::npos);
}

TEST(Cli, ApproxThenVerifyAccepted) {
    const std::string inst = tmp_path("sqhit_inst.json");
    const std::string result = tmp_path("sqhit_res.json");
    auto gen = run(cli + " gen --random --n 12 --angle-mode unit-rotated --seed 5 --out " + inst);
    ASSERT_EQ(gen.exit_code, 0);
    auto approx = run(cli + " approx --op hit --mode six-point --in " + inst + " --out " + result);
    ASSERT_EQ(approx.exit_code, 0);
    auto verify = run(cli + " verify --instance " + inst + " --result " + result);
    EXPECT_EQ(verify.exit_code, 0);
    EXPECT_NE(verify.out.find("accepted"), std::string::npos);
}

TEST(Cli, VerifyRejectsTamperedResult) {
    const std::string inst = tmp_path("sqhit_inst2.json");
    const std::string result = tmp_path("sqhit_res2.json");
    ASSERT_EQ(run(cli + " gen --name pinwheel_tau2 --out " + inst).exit_code, 0);
    ASSERT_EQ(run(cli + " solve --param tau --in " + inst + " --out " + result).exit_code, 0);
    // strip the last witness point: python-free tampering via sed on the value
    const auto tamper =
        run("sed 's/\"value\": 2/\"value\": 1/' " + result + " > " + result + ".bad");
    ASSERT_EQ(tamper.exit_code, 0);
    const auto verify =
        run(cli + " verify --instance " + inst + " --result " + result + ".bad");
    EXPECT_EQ(verify.exit_code, 1);
}

TEST(Cli, DeterministicBytesForFixedSeed) {
    const std::string cmd =
        cli + " gen --random --n 15 --seed 99 | " + cli + " solve --param nu";
    const auto a = run(cmd);
    const auto b = run(cmd);
    EXPECT_EQ(a.exit_code, 0);
    EXPECT_EQ(a.out, b.out);

    const std::string bench_cmd = cli + " bench --n 4 --size 8 --seed 3 --mode unit";
    const auto c = run(bench_cmd);
    const auto d = run(bench_cmd);
    EXPECT_EQ(c.exit_code, 0);
    EXPECT_EQ(c.out, d.out);
}

TEST(Cli, ColourApproxWithBound) {
    const auto res = run(cli + " gen --random --n 18 --angle-mode unit-rotated --seed 8 | " +
                         cli + " approx --op colour --variant unit");
    EXPECT_EQ(res.exit_code, 0);
    EXPECT_NE(res.out.find("\"bound\""), std::string::npos);
    EXPECT_NE(res.out.find("\"colours\""), std::string::npos);
}

TEST(Cli, CertifySubcommands) {
    EXPECT_EQ(run(cli + " certify --what nine-gon").exit_code, 0);
    EXPECT_EQ(run(cli + " certify --what twelve-cover").exit_code, 0);
    EXPECT_EQ(run(cli + " certify --what six-point").exit_code, 0);
}

TEST(Cli, FalsifyGatePasses) {
    const auto res =
        run(cli + " falsify --hitter ten-point --seed 7 --budget 50000 --pivot-angles 4");
    EXPECT_EQ(res.exit_code, 0);
    EXPECT_NE(res.out.find("0 counterexample(s)"), std::string::npos);
}

TEST(Cli, BenchTableConsistency) {
    const auto res = run(cli + " bench --n 6 --size 10 --seed 7 --mode free");
    EXPECT_EQ(res.exit_code, 0);
    EXPECT_NE(res.out.find("idx n nu tau approx ratio bound chi colours"), std::string::npos);
}

TEST(Cli, ExitCodes) {
    // usage error
    EXPECT_EQ(run(cli + " solve --param bogus < /dev/null").exit_code, 2);
    EXPECT_EQ(run(cli + " nonsense").exit_code, 2);
    // operational failure: instance above the soft cap without --force
    const std::string inst = tmp_path("sqhit_big.json");
    ASSERT_EQ(run(cli + " gen --random --n 40 --seed 1 --out " + inst).exit_code, 0);
    EXPECT_EQ(run(cli + " solve --param tau --in " + inst).exit_code, 1);
    EXPECT_EQ(run(cli + " solve --param nu --force --in " + inst).exit_code, 0);
}

TEST(Cli, SvgExport) {
    const std::string inst = tmp_path("sqhit_inst3.json");
    const std::string svg = tmp_path("sqhit_run.svg");
    ASSERT_EQ(run(cli + " gen --name thirteen_square_tau4 --out " + inst).exit_code, 0);
    ASSERT_EQ(run(cli + " approx --op hit --mode ten-point --in " + inst + " --svg " + svg +
                  " --out /dev/null")
                  .exit_code,
              0);
    const auto cat = run("cat " + svg);
    EXPECT_NE(cat.out.find("<svg"), std::string::npos);
}
