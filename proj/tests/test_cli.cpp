#include <gtest/gtest.h>

#include <sstream>
#include <string>
#include <vector>

#include <realgz/cli.hpp>

using namespace realgz;
using namespace realgz::cli;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run_cli(std::vector<std::string> args)
{
    std::ostringstream out, err;
    const int code = run(args, out, err);
    return {code, out.str(), err.str()};
}

} // namespace

TEST(CliSeries, WelschingerExample)
{
    const auto r = run_cli({"series", "--kind", "welschinger", "--er", "20", "--ec", "24", "--order", "3", "--json"});
    ASSERT_EQ(r.code, 0) << r.err;
    const auto rec = parse_record(r.out);
    EXPECT_EQ(rec.mode, "welschinger");
    EXPECT_EQ(rec.order, 3u);
    EXPECT_EQ(std::get<NumericTopology>(rec.topology), (NumericTopology{20, 24}));
    const std::vector<std::pair<std::size_t, std::string>> expected{{0, "1"}, {1, "-20"}, {2, "192"}, {3, "-1200"}};
    EXPECT_EQ(rec.coefficients, expected);
}

TEST(CliSeries, SymbolicHilbertText)
{
    const auto r = run_cli({"series", "--kind", "hilbert-real", "--symbolic", "--order", "2"});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_NE(r.out.find("q^1  a\n"), std::string::npos) << r.out;
    EXPECT_NE(r.out.find("q^2  (1/2)a^2 - a + (1/2)c\n"), std::string::npos) << r.out;
}

TEST(CliSeries, DefaultsEcTo24)
{
    const auto with = run_cli({"series", "--kind", "hilbert-real", "--er", "-16", "--ec", "24", "--order", "3"});
    const auto without = run_cli({"series", "--kind", "hilbert-real", "--er", "-16", "--order", "3"});
    EXPECT_EQ(with.code, 0);
    EXPECT_EQ(with.out, without.out);
    EXPECT_NE(without.out.find("q^3  -1152"), std::string::npos);
}

TEST(CliSeries, ComplexAndSymmetricKinds)
{
    const auto yz = run_cli({"series", "--kind", "complex", "--order", "4", "--json"});
    ASSERT_EQ(yz.code, 0) << yz.err;
    const auto rec = parse_record(yz.out);
    EXPECT_EQ(rec.coefficients.back().second, "25650");
    EXPECT_FALSE(std::get<NumericTopology>(rec.topology).er.has_value());

    const auto sym = run_cli({"series", "--kind", "symmetric", "--er", "2", "--ec", "4", "--order", "2"});
    ASSERT_EQ(sym.code, 0);
    EXPECT_NE(sym.out.find("t^2  4\n"), std::string::npos) << sym.out;
}

TEST(CliSeries, UsageErrors)
{
    const auto parity = run_cli({"series", "--kind", "welschinger", "--er", "3", "--ec", "24", "--order", "3"});
    EXPECT_EQ(parity.code, 2);
    EXPECT_NE(parity.err.find("e_C = e_R mod 2"), std::string::npos) << parity.err;

    EXPECT_EQ(run_cli({"series", "--kind", "welschinger", "--order", "3"}).code, 2);
    EXPECT_EQ(run_cli({"series", "--kind", "bogus", "--er", "2", "--order", "3"}).code, 2);
    EXPECT_EQ(run_cli({"series", "--kind", "welschinger", "--er", "2"}).code, 2);
    EXPECT_EQ(run_cli({"series", "--kind", "welschinger", "--er", "2", "--symbolic", "--order", "2"}).code, 2);
    EXPECT_EQ(run_cli({"frobnicate"}).code, 2);
    EXPECT_EQ(run_cli({}).code, 2);
}

TEST(CliExamples, PassesAndIsDeterministic)
{
    const auto first = run_cli({"examples"});
    const auto second = run_cli({"examples"});
    EXPECT_EQ(first.code, 0) << first.out;
    EXPECT_EQ(first.out, second.out);
    EXPECT_EQ(first.out.find("MISMATCH"), std::string::npos);
    EXPECT_NE(first.out.find("1536"), std::string::npos);
    EXPECT_NE(first.out.find("192"), std::string::npos);
}

TEST(CliVerify, AgreesAcrossSeeds)
{
    for (const char* seed : {"1", "99"}) {
        const auto r = run_cli({"verify", "--order", "12", "--seed", seed, "--trials", "5", "--json"});
        ASSERT_EQ(r.code, 0) << r.out << r.err;
        const auto rec = parse_record(r.out);
        EXPECT_EQ(rec.mode, "verify");
        ASSERT_TRUE(rec.checks.has_value());
        EXPECT_EQ(rec.checks->size(), 13u);
        for (const auto& [n, ok] : *rec.checks) {
            EXPECT_TRUE(ok) << n;
        }
    }
}

TEST(CliPicard, Example)
{
    const auto r = run_cli({"picard", "--cross", "1", "--solitary", "1", "--pairs", "0"});
    ASSERT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("g = 2\n"), std::string::npos);
    EXPECT_NE(r.out.find("e(Pic^g_R) = -1\n"), std::string::npos);
    EXPECT_NE(r.out.find("welschinger sign = -1\n"), std::string::npos);
    EXPECT_NE(r.out.find("consistent"), std::string::npos);

    const auto debug = run_cli({"picard", "--cross", "2", "--pairs", "1", "--degree-debug", "--json"});
    ASSERT_EQ(debug.code, 0);
    const auto rec = parse_record(debug.out);
    EXPECT_EQ(rec.order, 4u);
    EXPECT_EQ(rec.coefficients.front().second, "1");
    EXPECT_EQ(rec.curve->sign, 1);
}

TEST(Record, JsonRoundTripIsByteIdentical)
{
    const std::vector<std::vector<std::string>> invocations{
        {"series", "--kind", "welschinger", "--er", "-18", "--order", "6", "--json"},
        {"series", "--kind", "hilbert-real", "--symbolic", "--order", "5", "--json"},
        {"series", "--kind", "complex", "--ec", "24", "--order", "3", "--json"},
        {"verify", "--order", "6", "--trials", "3", "--json"},
        {"picard", "--cross", "3", "--solitary", "2", "--json"},
    };
    for (const auto& args : invocations) {
        const auto r = run_cli(args);
        ASSERT_EQ(r.code, 0) << r.err;
        std::string line = r.out;
        ASSERT_FALSE(line.empty());
        line.pop_back();
        EXPECT_EQ(render(parse_record(line)), line);
    }
}

TEST(Record, MalformedInputIsUsageError)
{
    EXPECT_THROW(parse_record("{not json"), usage_error);
    EXPECT_THROW(parse_record(R"({"mode":"x"})"), usage_error);
    EXPECT_THROW(parse_record(R"({"mode":"x","topology":"numeric","order":1,"coefficients":[]})"), usage_error);
}
