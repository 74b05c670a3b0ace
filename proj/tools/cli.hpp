#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "fcomp/search.hpp"
#include "fcomp/shortest_word.hpp"

namespace fcomp::cli {

enum class Format { text, json };

/// Exit statuses.
inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitResourceLimit = 2;

struct RunConfig {
	/// check, uwl, forbidden, family, search
	std::string subcommand;
	std::string input;
	std::optional<std::string> alphabet;
	SearchLimits limits;
	Format format = Format::text;
	bool verbose = false;
	std::uint64_t seed = 0;

	// check / uwl
	bool dump_automaton = false;
	bool all_minimal = false;

	// forbidden
	std::string word;
	std::optional<std::size_t> family_k;

	// family
	std::string family;
	std::size_t k = 4;
	std::string fill;
	bool random_fill = false;

	// search
	SearchOptions search;
	bool list_all = false;
};

/// Runs a parsed configuration. Errors in the input are reported on `err`
/// and mapped to kExitUsage.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Parses argv (argv[0] is the program name) and runs it.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace fcomp::cli
