#include "test_support.hpp"

#include "wrep/twist.hpp"

#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sys/wait.h>

using namespace wrep;
using json = nlohmann::ordered_json;

namespace {

struct Result
{
	int code = -1;
	std::string out;
	json doc() const { return json::parse(out); }
};

Result wrep_cli(const std::string &args)
{
	std::string cmd = std::string(WREP_CLI_PATH) + " " + args + " 2>/dev/null";
	Result r;
	FILE *pipe = popen(cmd.c_str(), "r");
	if (!pipe)
		return r;
	char buf[4096];
	size_t n;
	while ((n = fread(buf, 1, sizeof buf, pipe)) > 0)
		r.out.append(buf, n);
	int st = pclose(pipe);
	r.code = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
	return r;
}

std::string fx(const std::string &name) { return "'" + fixture(name) + "'"; }

std::string temp_file(const std::string &name, const std::string &content)
{
	auto p = std::filesystem::temp_directory_path() / ("wrep_cli_" + std::to_string(::getpid()) + "_" + name);
	std::ofstream(p) << content;
	return p.string();
}

} // namespace

TEST(Cli, ValidateAcceptsTheFixtures)
{
	for (auto name : {"picard_c3.json", "picard_c9.json", "three_components.json"})
	{
		auto r = wrep_cli("validate " + fx(name));
		EXPECT_EQ(r.code, 0) << name;
		EXPECT_TRUE(r.doc()["ok"].get<bool>());
	}
}

TEST(Cli, ValidationAndParseFailuresExitWith2)
{
	auto r = wrep_cli("validate " + fx("invalid_n_equals_p.json"));
	EXPECT_EQ(r.code, 2);
	EXPECT_FALSE(r.doc()["ok"].get<bool>());
	EXPECT_NE(r.out.find("ExponentDivisibleByP"), std::string::npos);
	EXPECT_EQ(wrep_cli("zeta " + fx("invalid_n_equals_p.json")).code, 2);
	for (auto cmd : {"validate", "count", "zeta", "report"})
		EXPECT_EQ(wrep_cli(std::string(cmd) + " " + fx("invalid_element_length.json")).code, 2) << cmd;
	EXPECT_EQ(wrep_cli("validate /nonexistent/problem.json").code, 2);
	EXPECT_EQ(wrep_cli("validate '" + temp_file("broken.json", "{\"field\": [") + "'").code, 2);
	EXPECT_EQ(wrep_cli("frobnicate " + fx("picard_c3.json")).code, 2);
	EXPECT_EQ(wrep_cli("count " + fx("picard_c3.json") + " --jobs many").code, 2);
	EXPECT_EQ(wrep_cli("zeta " + fx("picard_c3.json") + " --element nosuch").code, 2);
	EXPECT_EQ(wrep_cli("decompose " + fx("picard_c9.json")).code, 2); // no character table
	// a table for a different group
	EXPECT_EQ(wrep_cli("decompose " + fx("picard_c3.json") + " --character-table " + fx("ct_24_14.json")).code, 2);
}

TEST(Cli, CountsMatchOracle)
{
	auto r = wrep_cli("count " + fx("picard_c3.json") + " --ext 4");
	ASSERT_EQ(r.code, 0);
	auto counts = r.doc()["counts"];
	ASSERT_EQ(counts.size(), 4u);
	for (int m = 1; m <= 4; ++m)
	{
		FieldPtr E = canonical_field(2, m);
		uint64_t expect = oracle::smooth_count(oracle::naive(*E), {0, 1, 0, 0, 1}, 3);
		EXPECT_EQ(counts[m - 1].get<uint64_t>(), expect) << m;
	}
	auto s = wrep_cli("count " + fx("picard_c3.json") + " --ext 4 --kernel scalar");
	auto v = wrep_cli("count " + fx("picard_c3.json") + " --ext 4 --kernel avx2");
	EXPECT_EQ(s.out, r.out);
	if (v.code == 0)
		EXPECT_EQ(v.out, r.out);
}

TEST(Cli, ZetaGolden)
{
	auto z = [](const std::string &args) { return wrep_cli("zeta " + fx("picard_c3.json") + " " + args); };
	auto a = z("");
	ASSERT_EQ(a.code, 0);
	EXPECT_EQ(a.doc()["polynomial"]["text"], "1 0 0 0 0 0 8");
	EXPECT_EQ(a.doc()["artin_order"], 6);
	auto b = z("--element tau2");
	EXPECT_EQ(b.doc()["polynomial"]["text"], "1 0 4 0 8 0 8");
	EXPECT_EQ(b.doc()["artin_order"], 12);
	auto c = z("--frobenius-power 6 --element tau1");
	EXPECT_EQ(c.doc()["polynomial"]["text"], "1 -16 -64 2048 -4096 -65536 262144");
	EXPECT_EQ(c.doc()["artin_order"], 2);
	EXPECT_EQ(c.doc()["eigenvalue_classes"][0]["c"], 64);
	auto d = wrep_cli("zeta " + fx("picard_c9.json") + " --frobenius-power 6 --element psi");
	EXPECT_EQ(d.doc()["polynomial"]["text"], "1 0 0 -512 0 0 262144");
	// an ordinary curve has a polynomial but no finite class
	auto e = wrep_cli("zeta " + fx("ordinary_elliptic.json"));
	EXPECT_EQ(e.code, 0);
	EXPECT_EQ(e.doc()["polynomial"]["text"], "1 3 5");
	EXPECT_TRUE(e.doc()["eigenvalue_classes"].is_null());
}

TEST(Cli, TwistOutputIsAProblemFile)
{
	auto r = wrep_cli("twist " + fx("picard_c3.json") + " --element tau2");
	ASSERT_EQ(r.code, 0);
	json j = r.doc();
	EXPECT_TRUE(j.contains("twist"));
	ProblemFile Q = parse_problem(j);
	EXPECT_EQ(Q.model.field->size(), 2u);
	EXPECT_TRUE(models_equivalent(*Q.model.field, Q.model.components[0].f, {1, 1, 0, 0, 1}, 3));
	EXPECT_TRUE(same_problem(Q, parse_problem(problem_to_json(Q))));
	// the emitted file is itself a valid input
	std::string path = temp_file("twisted.json", r.out);
	auto z = wrep_cli("zeta '" + path + "'");
	EXPECT_EQ(z.code, 0);
	EXPECT_EQ(z.doc()["polynomial"]["text"], "1 0 4 0 8 0 8");
	std::filesystem::remove(path);
}

TEST(Cli, BoundAndSolvabilityExitWith3)
{
	EXPECT_EQ(wrep_cli("twist " + fx("picard_c3.json") + " --element tau2 --max-field-bits 3").code, 3);
	EXPECT_EQ(wrep_cli("report " + fx("picard_c9.json") + " --max-field-bits 8").code, 3);
}

TEST(Cli, MathInconsistencyExitsWith4)
{
	EXPECT_EQ(wrep_cli("trace-table " + fx("ordinary_elliptic.json")).code, 4);
	EXPECT_EQ(wrep_cli("report " + fx("ordinary_elliptic.json")).code, 4);
}

TEST(Cli, Reports)
{
	auto r = wrep_cli("report " + fx("three_components.json"));
	ASSERT_EQ(r.code, 0);
	json j = r.doc();
	EXPECT_EQ(j["frobenius_polynomial"]["text"], "1 0 6 0 12 0 8");
	EXPECT_TRUE(j.contains("decomposition"));
	auto n = wrep_cli("report " + fx("picard_c9.json"));
	ASSERT_EQ(n.code, 0);
	EXPECT_FALSE(n.doc().contains("decomposition"));
	EXPECT_EQ(n.doc()["group"]["order"], 216);
	auto t = wrep_cli("trace-table " + fx("picard_c3.json"));
	ASSERT_EQ(t.code, 0);
	EXPECT_EQ(t.doc()["trace_table"]["classes"].size(), 27u);
}

TEST(Cli, ParallelRunsAreByteIdentical)
{
	for (auto name : {"picard_c3.json", "three_components.json"})
	{
		auto a = wrep_cli("report " + fx(name) + " --jobs 1");
		auto b = wrep_cli("report " + fx(name) + " --jobs 8");
		EXPECT_EQ(a.code, 0);
		EXPECT_EQ(a.out, b.out) << name;
	}
}
