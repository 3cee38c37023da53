#include "cli.hpp"

#include <gtest/gtest.h>

#include <nlohmann/json.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run(std::vector<std::string> args, const std::string& stdin_text = "") {
    args.insert(args.begin(), "crysext");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::istringstream in(stdin_text);
    std::ostringstream out, err;
    const int code = crysext::cli::run(static_cast<int>(argv.size()), argv.data(), in, out, err);
    return {code, out.str(), err.str()};
}

TEST(Cli, WexplicitReducible) {
    const auto r = run({"wexplicit", "--p", "3", "--e", "1", "--a1", "0", "--a2", "0", "--chi1", "1,1", "--chi2", "0,1"});
    EXPECT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(r.out, "{\"jdelta\":[{\"J\":\"full\",\"delta\":0}],\"lcrys\":1,\"lflat\":1,\"exceptional\":false}\n");
}

TEST(Cli, WexplicitIrreducible) {
    const auto r = run({"wexplicit", "--p", "3", "--e", "1", "--a1", "0", "--a2", "0", "--irreducible", "--exp", "1"});
    EXPECT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(r.out, "{\"member\":true}\n");
}

TEST(Cli, WexplicitExceptional) {
    const auto r = run({"wexplicit", "--p", "3", "--e", "1", "--a1", "2", "--a2", "0", "--chi1", "1,1", "--chi2", "0,1"});
    EXPECT_EQ(r.code, 0) << r.err;
    const auto j = nlohmann::json::parse(r.out);
    EXPECT_TRUE(j["exceptional"].get<bool>());
    EXPECT_EQ(j["lcrys"], 2);
}

TEST(Cli, UsageErrors) {
    EXPECT_EQ(run({"wexplicit", "--p", "2", "--e", "1", "--a1", "0", "--a2", "0", "--chi1", "1,1", "--chi2", "0,1"}).code, 2);
    EXPECT_EQ(run({"wexplicit", "--p", "3", "--e", "1", "--a1", "0", "--chi1", "1,1", "--chi2", "0,1"}).code, 2);
    EXPECT_EQ(run({"wexplicit", "--p", "3", "--e", "1", "--a1", "0", "--a2", "0", "--chi1", "x", "--chi2", "0,1"}).code, 2);
    EXPECT_EQ(run({"frobnicate"}).code, 2);
    EXPECT_EQ(run({}).code, 2);
    EXPECT_EQ(run({"verify", "--sweep", "7,1,1"}).code, 2);
    EXPECT_EQ(run({"verify", "--sweep", "garbage"}).code, 2);
    const auto missing = run({"wexplicit", "--p", "3", "--e", "1", "--a1", "0", "--a2", "0", "--chi2", "0,1"});
    EXPECT_NE(missing.err.find("$.chi1"), std::string::npos) << missing.err;
}

TEST(Cli, NormalFormSplitAndIdempotent) {
    const std::vector<std::string> base{"normal-form", "--p", "3", "--e", "1", "--a1", "0", "--a2", "0",
                                        "--chi1", "1,1", "--chi2", "0,1", "--x", "1", "--y", "0"};
    auto split = base;
    split.insert(split.end(), {"--lambda", "[]"});
    const auto r0 = run(split);
    ASSERT_EQ(r0.code, 0) << r0.err;
    EXPECT_TRUE(nlohmann::json::parse(r0.out)["normal_form"]["lambda"].empty());

    auto normal = base;
    normal.insert(normal.end(), {"--lambda", "[[0,\"2\"]]"});
    const auto r1 = run(normal);
    ASSERT_EQ(r1.code, 0) << r1.err;
    const auto j = nlohmann::json::parse(r1.out);
    EXPECT_EQ(j["normal_form"]["lambda"], j["input"]["lambda"]);
}

TEST(Cli, NormalFormShift) {
    const auto r = run({"normal-form", "--p", "3", "--e", "2", "--a1", "0", "--a2", "0", "--chi1", "0,1", "--chi2",
                        "0,1", "--x", "0", "--y", "0", "--lambda", "[[0,\"1\"]]"});
    ASSERT_EQ(r.code, 0) << r.err;
    const auto j = nlohmann::json::parse(r.out);
    EXPECT_EQ(j["extremal"]["X"], 2);
    EXPECT_EQ(j["normal_form"]["lambda"].dump(), "[[6,\"1\"]]");
    EXPECT_EQ(j["big_payload"].dump(), "[[6,\"1\"]]");
}

TEST(Cli, NormalFormInadmissibleLambdaNamesTerm) {
    const auto r = run({"normal-form", "--p", "3", "--e", "1", "--a1", "0", "--a2", "0", "--chi1", "1,1", "--chi2",
                        "0,1", "--x", "1", "--y", "0", "--lambda", "[[1,\"1\"]]"});
    EXPECT_EQ(r.code, 2);
    EXPECT_NE(r.err.find("u^1"), std::string::npos) << r.err;
    EXPECT_NE(r.err.find("inadmissible_lambda"), std::string::npos) << r.err;
}

TEST(Cli, RequestFromStdinAndFlagsOverride) {
    const std::string req = R"({"p":3,"e":1,"a1":0,"a2":0,"chi1":{"exp":1,"frob":"1"},"chi2":{"exp":0,"frob":"1"}})";
    const auto a = run({"wexplicit", "--in", "-"}, req);
    EXPECT_EQ(a.code, 0) << a.err;
    EXPECT_EQ(a.out, "{\"jdelta\":[{\"J\":\"full\",\"delta\":0}],\"lcrys\":1,\"lflat\":1,\"exceptional\":false}\n");
    const auto b = run({"wexplicit", "--in", "-", "--irreducible", "--exp", "0"}, req);
    EXPECT_EQ(b.out, "{\"member\":false}\n");
    EXPECT_EQ(run({"wexplicit", "--in", "-"}, "{not json").code, 2);
}

TEST(Cli, VerifyDeterministicAndWritesFile) {
    const auto a = run({"verify", "--sweep", "3,1,1"});
    const auto b = run({"verify", "--sweep", "3,1,1"});
    EXPECT_EQ(a.code, 0) << a.err;
    EXPECT_EQ(a.out, b.out);
    std::istringstream lines(a.out);
    std::string line, last;
    int n = 0;
    while (std::getline(lines, line)) {
        const auto j = nlohmann::json::parse(line);
        if (!j.contains("summary")) {
            EXPECT_TRUE(j.contains("params"));
            EXPECT_TRUE(j.contains("status"));
        }
        last = line;
        ++n;
    }
    EXPECT_GT(n, 1);
    EXPECT_EQ(nlohmann::json::parse(last)["summary"]["failures"], 0);

    const auto path = std::filesystem::temp_directory_path() / "crysext_cli_report.jsonl";
    const auto c = run({"verify", "--sweep", "3,1,1", "--checks", "dimensions", "--out", path.string()});
    EXPECT_EQ(c.code, 0);
    EXPECT_TRUE(c.out.empty());
    std::ifstream file(path);
    std::stringstream buf;
    buf << file.rdbuf();
    EXPECT_NE(buf.str().find("\"summary\""), std::string::npos);
    std::filesystem::remove(path);
}

TEST(Cli, VerifyOnlyExceptionalIsAllSkipped) {
    // with only dimension checks, every exceptional row is skipped and the run passes
    const auto r = run({"verify", "--sweep", "3,1,1", "--checks", "dimensions"});
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("skipped-exceptional"), std::string::npos);
}

TEST(Cli, VerifyBudgetExceeded) {
    const auto r = run({"verify", "--sweep", "5,1,1", "--checks", "uniqueness", "--budget-ms", "1"});
    EXPECT_EQ(r.code, 3) << r.err;
}

}  // namespace
