#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "gauge5/abelian_group.hpp"
#include "gauge5/cli.hpp"
#include "gauge5/decomp.hpp"

using namespace gauge5;

namespace {

struct Result {
    int status;
    std::string out;
    std::string err;
};

Result run(std::vector<std::string> args) {
    std::ostringstream out, err;
    int status = cli::run(args, out, err);
    return {status, out.str(), err.str()};
}

std::filesystem::path temp_file(const std::string& name, const std::string& text) {
    auto path = std::filesystem::temp_directory_path() / name;
    std::ofstream(path) << text;
    return path;
}

}  // namespace

TEST(Cli, DecomposeSpinExample) {
    auto r = run({"decompose", "--c", "5", "--m", "2", "--spin", "--group", "SU:4", "--k", "1", "--loops", "2"});
    EXPECT_EQ(r.status, 0);
    EXPECT_EQ(r.out, "Ω²G₁(P⁴(5)) × Ω³G{5} × Ω⁷G × Ω⁴G × Ω⁵G\n");
}

TEST(Cli, ExceptionalTableAtFive) {
    auto r = run({"exponent", "--table", "exceptional", "--p", "5"});
    EXPECT_EQ(r.status, 0);
    EXPECT_NE(r.out.find("G2    p=5      max(7, ν_p(c)+1)"), std::string::npos);
    EXPECT_NE(r.out.find("F4    p=5      max(15, ν_p(c)+3)"), std::string::npos);
    EXPECT_NE(r.out.find("E6    p=5      max(15, ν_p(c)+3)"), std::string::npos);
    EXPECT_EQ(r.out.find("E7"), std::string::npos);
}

TEST(Cli, HypothesisFailureExitsNonzero) {
    auto r = run({"classify", "--c", "6", "--m", "2", "--group", "SU:3", "--loops", "2"});
    EXPECT_NE(r.status, 0);
    EXPECT_NE(r.err.find("hypothesis 6∤c fails"), std::string::npos);
    EXPECT_TRUE(r.out.empty());
}

TEST(Cli, ParseErrorsNameTheFlag) {
    auto r = run({"classify", "--bogus", "3"});
    EXPECT_NE(r.status, 0);
    EXPECT_NE(r.err.find("--bogus"), std::string::npos);
    r = run({"decompose", "--c", "five", "--m", "2", "--group", "SU:4"});
    EXPECT_NE(r.status, 0);
    EXPECT_NE(r.err.find("--c"), std::string::npos);
    r = run({"decompose", "--c", "5", "--m", "2", "--group", "SU:4", "--at-p", "5", "--rational"});
    EXPECT_NE(r.status, 0);
    r = run({});
    EXPECT_NE(r.status, 0);
}

TEST(Cli, MissingArgumentsAreErrors) {
    auto r = run({"decompose", "--m", "2", "--group", "SU:4"});
    EXPECT_EQ(r.status, 1);
    EXPECT_NE(r.err.find("--c"), std::string::npos);
    r = run({"decompose", "--c", "5", "--m", "2", "--group", "SU:1"});
    EXPECT_EQ(r.status, 1);
}

TEST(Cli, MachineDecomposeRoundTrips) {
    auto text = run({"decompose", "--c", "5", "--m", "3", "--group", "G2", "--k", "2", "--format", "machine"});
    ASSERT_EQ(text.status, 0);
    auto e = decomp::SpaceExpr::parse(text.out);
    EXPECT_EQ(e.to_string() + "\n", run({"decompose", "--c", "5", "--m", "3", "--group", "G2", "--k", "2"}).out);
    EXPECT_EQ(decomp::normalize(e), e);
}

TEST(Cli, MachineGroupsRoundTrip) {
    auto r = run({"--format", "machine", "homology", "--c", "15", "--m", "4"});
    ASSERT_EQ(r.status, 0);
    std::istringstream in(r.out);
    std::string line;
    int rows = 0;
    while (std::getline(in, line)) {
        auto rec = nlohmann::json::parse(line);
        EXPECT_EQ(rec.at("record"), "group");
        auto g = FGAbelianGroup::parse(rec.at("value").get<std::string>());
        EXPECT_EQ(g.serialize(), rec.at("value").get<std::string>());
        ++rows;
    }
    EXPECT_EQ(rows, 6);
}

TEST(Cli, ConfigFile) {
    auto path = temp_file("gauge5_cli_manifold.cfg", "c = 5\nm = 2\nspin = yes\n");
    auto r = run({"decompose", "--config", path.string(), "--group", "SU:4", "--k", "1"});
    EXPECT_EQ(r.status, 0);
    EXPECT_EQ(r.out, "Ω²G₁(P⁴(5)) × Ω³G{5} × Ω⁷G × Ω⁴G × Ω⁵G\n");
    r = run({"decompose", "--config", path.string(), "--c", "7", "--group", "SU:4"});
    EXPECT_NE(r.status, 0);
    std::filesystem::remove(path);
}

TEST(Cli, CatalogOverride) {
    auto path = temp_file("gauge5_cli_catalog.txt",
                          "catalog-version 9\n"
                          "ord | SU | 3 | integral | 48\n");
    ::setenv("GAUGE_CATALOG", path.string().c_str(), 1);
    auto r = run({"classify", "--c", "16", "--group", "SU:3"});
    ::unsetenv("GAUGE_CATALOG");
    std::filesystem::remove(path);
    EXPECT_EQ(r.status, 0);
    EXPECT_NE(r.out.find("ord = 48"), std::string::npos);
    EXPECT_NE(run({"classify", "--c", "16", "--group", "SU:3"}).out.find("ord = 24"), std::string::npos);
}

TEST(Cli, OtherVerbs) {
    EXPECT_EQ(run({"bott", "--c", "5", "--m", "2", "--spin", "--family", "Spin", "--r", "14"}).out, "pi_14 = Z ⊕ (Z/2)^2\n");
    EXPECT_EQ(run({"rational", "--manifold-m", "2", "--model", "exterior=3", "--what", "ring"}).out,
              "Λ(x₁) ⊗ Λ(x₃)\n");
    EXPECT_EQ(run({"rational", "--betti", "1,0,1", "--group", "SU:3", "--what", "rank", "--q", "3"}).out, "rank = 2\n");
    EXPECT_EQ(run({"moore", "--what", "pi6", "--c", "15"}).out, "pi_6(P^4(c)) = (Z/3)^2 ⊕ Z/5\n");
    EXPECT_EQ(run({"moore", "--what", "bundles", "--c", "5", "--m", "1", "--group", "SU:2"}).status, 2);
    EXPECT_EQ(run({"exponent", "--group", "SU:4", "--p", "5", "--c", "25", "--m", "2", "--route", "closed"}).status, 0);
    auto best = run({"exponent", "--group", "SU:4", "--p", "5", "--nu", "2"});
    EXPECT_NE(best.out.find("best: exp_5 <= 5^4"), std::string::npos);
}
