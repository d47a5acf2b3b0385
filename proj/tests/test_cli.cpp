#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <sstream>
#include <string>
#include <sys/wait.h>

#include "strassen/commands.hpp"
#include "support/ensemble.hpp"

using namespace strassen;
using namespace strassen::cli;
namespace fs = std::filesystem;

namespace {

class CliTest : public ::testing::Test {
protected:
    void SetUp() override {
        dir_ = fs::temp_directory_path() /
               ("strassen_cli_" + std::to_string(::getpid()) + "_" +
                ::testing::UnitTest::GetInstance()->current_test_info()->name());
        fs::create_directories(dir_);
    }
    void TearDown() override { fs::remove_all(dir_); }

    std::string path(const std::string& name) const { return (dir_ / name).string(); }

    std::string write(const std::string& name, const std::string& text) const {
        io::write_text(path(name), text);
        return path(name);
    }

    std::ostringstream out_;
    std::ostringstream err_;

private:
    fs::path dir_;
};

const char* kJensen = R"({
  "order": "cv", "dimension": 1, "cone": {"type": "orthant"},
  "Y": {"points": [[0], [2]], "probs": ["1/2", "1/2"]},
  "Z": {"points": [[1]], "probs": [1]}
})";

const char* kReversed = R"({
  "order": "icv", "dimension": 1, "cone": {"type": "orthant"},
  "Y": {"points": [[1]], "probs": [1]},
  "Z": {"points": [[2], [0]], "probs": ["1/2", "2/4"]}
})";

const char* kPlane = R"({
  "order": "icv", "dimension": 2, "cone": {"type": "orthant"},
  "Y": {"points": [[1, 1]], "probs": [1]},
  "Z": {"points": [[2, 0]], "probs": [1]}
})";

const char* kPlaneHalfspace = R"({
  "order": "icv", "dimension": 2, "cone": {"type": "halfspace", "w": [1, 1]},
  "Y": {"points": [[1, 1]], "probs": [1]},
  "Z": {"points": [[2, 0]], "probs": [1]}
})";

int run_binary(const std::string& args) {
    const std::string cmd = std::string(STRASSEN_CLI_PATH) + " " + args + " > /dev/null 2>&1";
    const int status = std::system(cmd.c_str());
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

}  // namespace

TEST(ProblemFile, ParsesRationalStringsAndIntegers) {
    const auto p = io::parse_problem(io::json::parse(kReversed));
    EXPECT_EQ(p.order(), OrderKind::ICV);
    EXPECT_EQ(p.Z().points(), (std::vector<Vector>{{0}, {2}}));
    EXPECT_EQ(p.Z().probs(), (std::vector<Rational>{Rational(1, 2), Rational(1, 2)}));
}

TEST(ProblemFile, DiagnosticsNameTheField) {
    auto expect_error = [](const std::string& text, const std::string& needle) {
        try {
            io::parse_problem(io::json::parse(text));
            ADD_FAILURE() << "accepted: " << text;
        } catch (const InputError& e) {
            EXPECT_NE(std::string(e.what()).find(needle), std::string::npos) << e.what();
        }
    };
    expect_error(R"({"order":"icv","dimension":1,"cone":{"type":"orthant"},
                   "Y":{"points":[[0]]},"Z":{"points":[[0]],"probs":[1]}})",
                 "\"probs\"");
    expect_error(R"({"order":"up","dimension":1,"cone":{"type":"orthant"},
                   "Y":{"points":[[0]],"probs":[1]},"Z":{"points":[[0]],"probs":[1]}})",
                 "order");
    expect_error(R"({"order":"icv","dimension":1,"cone":{"type":"orthant"},
                   "Y":{"points":[[0]],"probs":[0.5]},"Z":{"points":[[0]],"probs":[1]}})",
                 "Y.probs[0]");
    expect_error(R"({"order":"icv","dimension":2,"cone":{"type":"ray","w":[0,0]},
                   "Y":{"points":[[0,0]],"probs":[1]},"Z":{"points":[[0,0]],"probs":[1]}})",
                 "cone");
    expect_error(R"({"order":"icv","dimension":2,"cone":{"type":"orthant"},
                   "Y":{"points":[[0]],"probs":[1]},"Z":{"points":[[0,0]],"probs":[1]}})",
                 "Y.points[0]");
    expect_error(R"({"order":"icv","dimension":1,"cone":{"type":"cube"},
                   "Y":{"points":[[0]],"probs":[1]},"Z":{"points":[[0]],"probs":[1]}})",
                 "cone.type");
    expect_error(R"({"order":"icv","dimension":1,"cone":{"type":"orthant"},
                   "Y":{"points":[[0],[1]],"probs":["1/3","1/3"]},"Z":{"points":[[0]],"probs":[1]}})",
                 "sum");
}

TEST(ProblemFile, CanonicalRoundTrip) {
    for (const auto& p : fixtures::ensemble(606, 40)) {
        const auto text = io::dump(io::problem_to_json(p));
        const auto reparsed = io::parse_problem(io::json::parse(text));
        EXPECT_EQ(io::dump(io::problem_to_json(reparsed)), text);
    }
}

TEST(WitnessFile, CanonicalRoundTrip) {
    for (const auto& p : fixtures::ensemble(607, 40)) {
        const auto v = check_dominance(p);
        const auto text = io::dump(io::verdict_to_json(v));
        EXPECT_EQ(io::dump(io::verdict_to_json(io::parse_witness(io::json::parse(text)))), text);
    }
}

TEST(WitnessFile, RejectsUnknownVerdict) {
    EXPECT_THROW(io::parse_witness(io::json::parse(R"({"verdict":"maybe"})")), InputError);
    EXPECT_THROW(io::parse_witness(io::json::parse(R"({"verdict":"dominates","coupling":{"p":[["1"],["1","2"]]}})")),
                 InputError);
}

TEST_F(CliTest, CheckJensenWritesCoupling) {
    const auto problem = write("jensen.json", kJensen);
    EXPECT_EQ(cmd_check(problem, path("w.json"), out_, err_), kDominates);
    EXPECT_NE(out_.str().find("dominates"), std::string::npos);
    const auto doc = io::json::parse(io::read_text(path("w.json")));
    EXPECT_EQ(doc["verdict"], "dominates");
    EXPECT_EQ(doc["coupling"]["p"], io::json::parse(R"([["1/2"],["1/2"]])"));
}

TEST_F(CliTest, CheckReversedWritesCertificate) {
    const auto problem = write("rev.json", kReversed);
    EXPECT_EQ(cmd_check(problem, path("w.json"), out_, err_), kNotDominates);
    EXPECT_NE(out_.str().find("gap -1"), std::string::npos);
    const auto p = io::read_problem(problem);
    const auto v = io::read_witness(path("w.json"));
    ASSERT_TRUE(std::holds_alternative<NotDominates>(v));
    EXPECT_EQ(certificate_gap(p, std::get<NotDominates>(v).certificate), -1);
}

TEST_F(CliTest, CheckInputErrors) {
    const auto bad = write("bad.json", R"({"order":"icv","dimension":1,"cone":{"type":"orthant"},
        "Y":{"points":[[0]]},"Z":{"points":[[0]],"probs":[1]}})");
    EXPECT_EQ(cmd_check(bad, std::nullopt, out_, err_), kInputError);
    EXPECT_NE(err_.str().find("probs"), std::string::npos);
    EXPECT_EQ(cmd_check(path("missing.json"), std::nullopt, out_, err_), kInputError);
    const auto junk = write("junk.json", "{ not json");
    EXPECT_EQ(cmd_check(junk, std::nullopt, out_, err_), kInputError);
    EXPECT_NE(err_.str().find("line"), std::string::npos);
}

TEST_F(CliTest, VerifyOwnWitnessAndPerturbations) {
    const auto problem = write("jensen.json", kJensen);
    ASSERT_EQ(cmd_check(problem, path("w.json"), out_, err_), kDominates);
    EXPECT_EQ(cmd_verify(problem, path("w.json"), out_, err_), kVerifyPass);

    write("perturbed.json", R"({"verdict":"dominates","coupling":{"p":[["1/3"],["1/2"]]}})");
    out_.str("");
    EXPECT_EQ(cmd_verify(problem, path("perturbed.json"), out_, err_), kVerifyFail);
    EXPECT_NE(out_.str().find("row 0"), std::string::npos);

    write("shape.json", R"({"verdict":"dominates","coupling":{"p":[["1/2","0"],["1/2","0"]]}})");
    EXPECT_EQ(cmd_verify(problem, path("shape.json"), out_, err_), kInputError);
    write("cert.json", R"({"verdict":"not_dominates","certificate":{"a":["0","0"],"b":["0"],"c":[["1","2"]]}})");
    EXPECT_EQ(cmd_verify(problem, path("cert.json"), out_, err_), kInputError);
}

TEST_F(CliTest, CheckThenVerifyAlwaysVerifies) {
    for (std::uint64_t seed = 1; seed <= 15; ++seed) {
        const auto problem = path("gen.json");
        ASSERT_EQ(cmd_gen(seed, 1 + static_cast<long long>(seed % 3), 3, 3, seed % 2 ? "icv" : "cv",
                          "generators", problem, out_, err_),
                  0);
        const int rc = cmd_check(problem, path("w.json"), out_, err_);
        EXPECT_TRUE(rc == kDominates || rc == kNotDominates);
        EXPECT_EQ(cmd_verify(problem, path("w.json"), out_, err_), kVerifyPass) << seed;
    }
}

TEST_F(CliTest, OracleMatchesCheck) {
    for (const char* text : {kJensen, kReversed, kPlaneHalfspace}) {
        const auto problem = write("p.json", text);
        EXPECT_EQ(cmd_oracle(problem, out_, err_), cmd_check(problem, std::nullopt, out_, err_));
    }
    const auto plane = write("plane.json", kPlane);
    EXPECT_EQ(cmd_oracle(plane, out_, err_), kInputError);
    EXPECT_NE(err_.str().find("no closed-form oracle"), std::string::npos);
}

TEST_F(CliTest, GenIsDeterministicAndParses) {
    ASSERT_EQ(cmd_gen(1, 1, 3, 3, "icv", "orthant", path("a.json"), out_, err_), 0);
    ASSERT_EQ(cmd_gen(1, 1, 3, 3, "icv", "orthant", path("b.json"), out_, err_), 0);
    EXPECT_EQ(io::read_text(path("a.json")), io::read_text(path("b.json")));
    const auto p = io::read_problem(path("a.json"));
    EXPECT_EQ(p.Y().size(), 3U);
    EXPECT_EQ(p.Z().size(), 3U);
    for (const auto& pt : p.Y().points()) {
        EXPECT_TRUE(pt[0] >= -5 && pt[0] <= 5 && pt[0].get_den() == 1);
    }
    for (const auto& q : p.Z().probs()) EXPECT_LE(q.get_den(), 20);

    ASSERT_EQ(cmd_gen(2, 1, 3, 3, "icv", "orthant", path("c.json"), out_, err_), 0);
    EXPECT_NE(io::read_text(path("a.json")), io::read_text(path("c.json")));
}

TEST_F(CliTest, GenRejectsBadSizes) {
    EXPECT_EQ(cmd_gen(1, 1, 0, 3, "icv", "orthant", path("a.json"), out_, err_), kInputError);
    EXPECT_EQ(cmd_gen(1, 0, 1, 3, "icv", "orthant", path("a.json"), out_, err_), kInputError);
    EXPECT_EQ(cmd_gen(1, 1, 12, 3, "icv", "orthant", path("a.json"), out_, err_), kInputError);
    EXPECT_EQ(cmd_gen(1, 1, 1, 3, "up", "orthant", path("a.json"), out_, err_), kInputError);
    EXPECT_EQ(cmd_gen(1, 1, 1, 3, "icv", "cube", path("a.json"), out_, err_), kInputError);
}

TEST_F(CliTest, PlotIsConcave) {
    const auto problem = write("rev.json", kReversed);
    ASSERT_EQ(cmd_check(problem, path("w.json"), out_, err_), kNotDominates);
    ASSERT_EQ(cmd_plot(problem, path("w.json"), path("u.csv"), out_, err_), 0);
    std::istringstream csv(io::read_text(path("u.csv")));
    std::string line;
    std::getline(csv, line);
    EXPECT_EQ(line, "x,u,s");
    std::vector<Rational> xs, us;
    while (std::getline(csv, line)) {
        const auto c1 = line.find(',');
        const auto c2 = line.find(',', c1 + 1);
        xs.push_back(parse_rational(line.substr(0, c1)));
        us.push_back(parse_rational(line.substr(c1 + 1, c2 - c1 - 1)));
    }
    ASSERT_GE(xs.size(), 3U);
    for (std::size_t i = 1; i < xs.size(); ++i) EXPECT_LT(xs[i - 1], xs[i]);
    // Nonincreasing secant slopes on the (nonuniform) grid.
    for (std::size_t i = 2; i < xs.size(); ++i) {
        const Rational left = (us[i - 1] - us[i - 2]) / (xs[i - 1] - xs[i - 2]);
        const Rational right = (us[i] - us[i - 1]) / (xs[i] - xs[i - 1]);
        EXPECT_LE(right, left);
    }
}

TEST_F(CliTest, PlotSinglePieceIsAffine) {
    const auto problem = write("p.json", R"({"order":"icv","dimension":1,"cone":{"type":"orthant"},
        "Y":{"points":[[1]],"probs":[1]},"Z":{"points":[[0]],"probs":[1]}})");
    write("w.json", R"({"verdict":"not_dominates","certificate":{"a":["1"],"b":["0"],"c":[["1"]]}})");
    ASSERT_EQ(cmd_plot(problem, path("w.json"), path("u.csv"), out_, err_), 0);
    EXPECT_EQ(io::read_text(path("u.csv")), "x,u,s\n0,0,1\n1/2,1/2,1\n1,1,1\n");
}

TEST_F(CliTest, PlotRejectsCouplingsAndVectors) {
    const auto jensen = write("j.json", kJensen);
    ASSERT_EQ(cmd_check(jensen, path("w.json"), out_, err_), kDominates);
    EXPECT_EQ(cmd_plot(jensen, path("w.json"), path("u.csv"), out_, err_), kInputError);
    const auto plane = write("plane.json", kPlane);
    ASSERT_EQ(cmd_check(plane, path("w2.json"), out_, err_), kNotDominates);
    EXPECT_EQ(cmd_plot(plane, path("w2.json"), path("u.csv"), out_, err_), kInputError);
}

TEST_F(CliTest, BinaryExitCodes) {
    const auto jensen = write("j.json", kJensen);
    const auto rev = write("r.json", kReversed);
    EXPECT_EQ(run_binary("check " + jensen + " -w " + path("wj.json")), 0);
    EXPECT_EQ(run_binary("verify " + jensen + " " + path("wj.json")), 0);
    EXPECT_EQ(run_binary("check " + rev + " --witness " + path("wr.json")), 1);
    EXPECT_EQ(run_binary("verify " + rev + " " + path("wr.json")), 0);
    EXPECT_EQ(run_binary("oracle " + rev), 1);
    EXPECT_EQ(run_binary("plot " + rev + " " + path("wr.json") + " -o " + path("u.csv")), 0);
    EXPECT_EQ(run_binary("gen --seed 4 --dim 2 --ny 2 --nz 3 --order cv --cone ray -o " + path("g.json")), 0);
    EXPECT_EQ(run_binary("gen --seed 4 --ny 0 -o " + path("g.json")), 2);
    EXPECT_EQ(run_binary("check " + path("nope.json")), 2);
    EXPECT_EQ(run_binary("frobnicate"), 2);
}
