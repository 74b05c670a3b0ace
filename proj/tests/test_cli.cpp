#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "report_json.hpp"

using namespace fcomp;
using namespace fcomp::cli;

namespace {

const std::filesystem::path kFixtures = FCOMP_FIXTURE_DIR;

struct Result {
	int status;
	std::string out;
	std::string err;
};

Result invoke(std::vector<std::string> args) {
	args.insert(args.begin(), "fcomp");
	std::ostringstream out;
	std::ostringstream err;
	const int status = run_cli(args, out, err);
	return {status, out.str(), err.str()};
}

std::string fixture(const std::string& name) { return (kFixtures / name).string(); }

} // namespace

TEST_CASE("uwl on S_4") {
	const auto r = invoke({"uwl", fixture("s4.txt")});
	CHECK(r.status == kExitOk);
	CHECK(r.out.find("uwl=25\n") != std::string::npos);
	CHECK(r.out.find("witness=baaaabbbaaaaabbbbaaaabbba\n") != std::string::npos);
}

TEST_CASE("check") {
	auto r = invoke({"check", fixture("ab.txt")});
	CHECK(r.status == kExitOk);
	CHECK(r.out == "COMPLETE\n");
	r = invoke({"check", fixture("s3.txt")});
	CHECK(r.status == kExitOk);
	CHECK(r.out == "NON-COMPLETE\n");
}

TEST_CASE("forbidden") {
	const auto r = invoke({"forbidden", fixture("s3.txt"), "baaabbbaaabba"});
	CHECK(r.status == kExitOk);
	CHECK(r.out == "pos=0\npos=1\npos=2\npos=4\npos=5\npos=7\npos=10\n"
	               "blocks=[0,1,2]\nblocks=[2,0]\nblocks=[1]\nblocks=[0]\n"
	               "occ u @0 local={0,1,2}\nocc v @5 local={0,2}\nocc u @6 local={1}\nocc v @10 local={0}\n");
}

TEST_CASE("family") {
	auto r = invoke({"family", "sk", "--k", "3"});
	CHECK(r.status == kExitOk);
	CHECK(r.out == "ab\nba\naaa\naab\naba\nabb\nbab\nbbb\n");
	r = invoke({"family", "omega", "--k", "4"});
	CHECK(r.out.size() == 26);
	const auto a = invoke({"--seed", "7", "family", "omega", "--k", "6", "--random-fill"});
	const auto b = invoke({"family", "omega", "--k", "6", "--random-fill", "--seed", "7"});
	CHECK(a.out == b.out);
	CHECK(a.out.size() == 5 * 36 - 17 * 6 + 13 + 1);
	r = invoke({"family", "nope"});
	CHECK(r.status == kExitUsage);
}

TEST_CASE("dump automaton goes to stderr") {
	const auto r = invoke({"check", fixture("ab.txt"), "--dump-automaton"});
	CHECK(r.err == "node 0 path= accepting=false\nnode 1 path=a accepting=true\nnode 2 path=b accepting=true\n"
	               "edge 0 a 1\nedge 0 b 2\n");
}

TEST_CASE("exit status matrix") {
	CHECK(invoke({"check", fixture("ab.txt")}).status == kExitOk);
	CHECK(invoke({"check", fixture("s4.txt")}).status == kExitOk);
	CHECK(invoke({"uwl", fixture("ab.txt")}).status == kExitOk);

	auto r = invoke({"check", fixture("malformed.txt")});
	CHECK(r.status == kExitUsage);
	CHECK(r.err.find("line 3") != std::string::npos);
	CHECK(invoke({"check", fixture("missing.txt")}).status == kExitUsage);
	CHECK(invoke({"check"}).status == kExitUsage);
	CHECK(invoke({"frobnicate"}).status == kExitUsage);
	CHECK(invoke({"search", "--max-len", "4"}).status == kExitUsage);
	CHECK(invoke({"search", "--max-len", "3", "--min-count", "bad"}).status == kExitUsage);
	CHECK(invoke({"--format", "xml", "check", fixture("ab.txt")}).status == kExitUsage);

	r = invoke({"uwl", fixture("s4.txt"), "--max-states", "10"});
	CHECK(r.status == kExitResourceLimit);
	CHECK(r.out.find("RESOURCE LIMIT") != std::string::npos);
	CHECK(invoke({"--format", "json", "uwl", fixture("s4.txt"), "--max-length", "5"}).status == kExitResourceLimit);
	CHECK(invoke({"uwl", "--all-minimal", fixture("s4.txt"), "--max-states", "10"}).status == kExitResourceLimit);

	CHECK(invoke({"--help"}).status == kExitOk);
}

TEST_CASE("json round trips") {
	SUBCASE("uwl") {
		const auto r = invoke({"--format", "json", "uwl", fixture("s4.txt")});
		REQUIRE(r.status == kExitOk);
		const auto j = json::parse(r.out);
		CHECK(j.at("uwl") == 25);
		CHECK(j.at("complete") == false);
		const auto v = verdict_from_json(j);
		CHECK(verdict_to_json(v) == j);
		CHECK(v.witness->str() == j.at("witness"));
	}
	SUBCASE("check complete") {
		const auto j = json::parse(invoke({"--format", "json", "check", fixture("ab.txt")}).out);
		CHECK(j.at("complete") == true);
		CHECK(j.at("uwl").is_null());
		CHECK(verdict_to_json(verdict_from_json(j)) == j);
	}
	SUBCASE("resource limit") {
		const auto j = json::parse(invoke({"--format", "json", "uwl", fixture("s4.txt"), "--max-states", "3"}).out);
		CHECK(j.at("outcome") == "resource_limit");
		CHECK(verdict_to_json(verdict_from_json(j)) == j);
	}
	SUBCASE("all minimal") {
		const auto j = json::parse(invoke({"--format", "json", "uwl", "--all-minimal", fixture("s3.txt")}).out);
		CHECK(j.at("uwl") == 13);
		CHECK(minimal_words_to_json(minimal_words_from_json(j)) == j);
	}
	SUBCASE("forbidden") {
		const auto j =
		    json::parse(invoke({"--format", "json", "forbidden", fixture("s3.txt"), "baaabbbaaabba"}).out);
		CHECK(j.at("positions") == json::array({0, 1, 2, 4, 5, 7, 10}));
		const auto rep = forbidden_from_json(j);
		CHECK(forbidden_to_json(rep) == j);
		CHECK(rep.occurrences.size() == 4);
	}
	SUBCASE("family") {
		const auto j = json::parse(invoke({"--format", "json", "family", "extreme4"}).out);
		CHECK(j.at("m") == 18);
		CHECK(set_to_json("extreme4", set_from_json(j)) == j);
		const auto o = json::parse(invoke({"--format", "json", "family", "omega", "--k", "5"}).out);
		CHECK(o.at("length") == 53);
	}
	SUBCASE("search") {
		const auto j = json::parse(invoke({"--format", "json", "search", "--max-len", "3", "--all"}).out);
		CHECK(j.at("maximal_sets") == 58);
		CHECK(j.at("classes").size() == 19);
		CHECK(j.at("top_uwl") == 13);
		CHECK(search_to_json(search_from_json(j)) == j);
	}
}

TEST_CASE("text and json carry the same verdict") {
	const auto text = invoke({"uwl", fixture("s3.txt")}).out;
	const auto j = json::parse(invoke({"--format", "json", "uwl", fixture("s3.txt")}).out);
	CHECK(text.find("uwl=" + std::to_string(j.at("uwl").get<int>())) != std::string::npos);
	CHECK(text.find("witness=" + j.at("witness").get<std::string>()) != std::string::npos);
	CHECK(text.find("explored_states=" + std::to_string(j.at("explored_states").get<int>())) != std::string::npos);
}
