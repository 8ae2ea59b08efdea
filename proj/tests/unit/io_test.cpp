#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

#include "support.hpp"

using namespace recform;
using recform::testing::Gen;
using recform::testing::rats;

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    std::stringstream s;
    s << in.rdbuf();
    return s.str();
}

}  // namespace

TEST(ProblemFile, ParsesFamilyAndCassiniModes) {
    auto p = parse_problem(std::string(R"({"k": 2, "gammas": ["1", "1"], "sequences": [["0", "1"], ["2", "1"]]})"));
    EXPECT_EQ(p.mode, ProblemMode::family);
    EXPECT_EQ(p.family().delta(), Rat(-2));

    auto c = parse_problem(std::string(R"({"k": 3, "gammas": ["1", "1", "1"], "sequences": [["0", "0", "1"]], "mode": "cassini"})"));
    EXPECT_EQ(c.mode, ProblemMode::cassini);
    EXPECT_EQ(c.family().initial_matrix(), (RatMatrix{{0, 0, 1}, {0, 1, 1}, {1, 1, 2}}));
}

TEST(ProblemFile, RationalStrings) {
    auto p = parse_problem(std::string(R"({"k": 2, "gammas": ["1/2", "-3/4"], "sequences": [["1/3", "0"], ["0", "5"]]})"));
    EXPECT_EQ(p.gammas, (std::vector<Rat>{Rat(1, 2), Rat(-3, 4)}));
    EXPECT_EQ(p.sequences[0][0], Rat(1, 3));
}

TEST(ProblemFile, MalformedInputsAreRejected) {
    const char* bad[] = {
        "not json",
        R"([1, 2])",
        R"({"gammas": ["1", "1"], "sequences": [["0", "1"], ["2", "1"]]})",
        R"({"k": 1, "gammas": ["1"], "sequences": [["0"]]})",
        R"({"k": 2, "gammas": ["1"], "sequences": [["0", "1"], ["2", "1"]]})",
        R"({"k": 2, "gammas": ["1", "x"], "sequences": [["0", "1"], ["2", "1"]]})",
        R"({"k": 2, "gammas": ["1", "1"], "sequences": [["0", "1"]]})",
        R"({"k": 2, "gammas": ["1", "1"], "sequences": [["0", "1", "2"], ["2", "1"]]})",
        R"({"k": 2, "gammas": ["1", "1"], "sequences": [["0", "1"], ["2", "1"]], "mode": "other"})",
        R"({"k": 2, "gammas": ["1", "1"], "sequences": [["0", "1"], ["2", "1"]], "mode": "cassini"})",
    };
    for (const char* text : bad) EXPECT_THROW(parse_problem(std::string(text)), FormatError) << text;
}

TEST(ProblemFile, ZeroGammaIsADomainError) {
    auto p = parse_problem(std::string(R"({"k": 2, "gammas": ["0", "1"], "sequences": [["0", "1"], ["2", "1"]]})"));
    EXPECT_THROW(p.family(), DomainError);
}

TEST(ProblemFile, ShippedFilesMatchBundledProblems) {
    for (const auto& [name, text] : golden_problems()) {
        const std::string path = std::string(RECFORM_SOURCE_DIR) + "/problems/" + name + ".json";
        EXPECT_EQ(parse_problem(read_file(path)), parse_problem(text)) << path;
    }
    EXPECT_FALSE(golden_problem("nonexistent").has_value());
}

TEST(ProblemFile, JsonRoundTrip) {
    for (const auto& [name, text] : golden_problems()) {
        auto p = parse_problem(text);
        EXPECT_EQ(parse_problem(to_json(p)), p) << name;
    }
}

TEST(FormPackageJson, RoundTripGolden) {
    for (const auto& [name, text] : golden_problems()) {
        auto pkg = build_form(parse_problem(text).family());
        EXPECT_EQ(parse_form_package(json::parse(to_json(pkg).dump())), pkg) << name;
    }
}

TEST(FormPackageJson, RoundTripRandom) {
    Gen gen(0x5eed0a01);
    for (int trial = 0; trial < 100; ++trial) {
        auto pkg = build_form(gen.family(static_cast<std::size_t>(gen.integer(2, 4)), 20));
        EXPECT_EQ(parse_form_package(json::parse(to_json(pkg).dump())), pkg);
    }
}

TEST(FormPackageJson, DenseListingIncludesZeros) {
    auto pkg = build_form(golden_problem("table1-row4")->family());
    auto j = to_json(pkg);
    EXPECT_EQ(j["form_f_tilde"]["terms"].size(), 3u);
    EXPECT_EQ(j["form_f_tilde"]["terms"][0]["coeff"], "0");
    EXPECT_EQ(j["form_f_tilde"]["terms"][1]["coeff"], "9");
}

TEST(Render, FormText) {
    auto pkg = build_form(golden_problem("fibonacci-lucas")->family());
    auto text = render_text(pkg);
    EXPECT_NE(text.find("-5·x1² + 1·x2² = 4·(-1)ⁿ"), std::string::npos) << text;
    EXPECT_NE(text.find("Δ = -2"), std::string::npos);
    EXPECT_NE(text.find("δ = -1"), std::string::npos);
}

TEST(Render, DecompositionText) {
    auto d = decompose_form(golden_problem("table1-row2")->family());
    EXPECT_NE(render_text(d).find("(-1/2·x1 + 1/2·x2)², exact, residual 0"), std::string::npos) << render_text(d);
}

TEST(Render, PowerBase) {
    EXPECT_EQ(power_str(Rat(10)), "10ⁿ");
    EXPECT_EQ(power_str(Rat(-1)), "(-1)ⁿ");
    EXPECT_EQ(power_str(Rat(1, 2)), "(1/2)ⁿ");
}
