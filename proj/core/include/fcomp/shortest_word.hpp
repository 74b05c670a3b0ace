#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "fcomp/prefix_automaton.hpp"
#include "fcomp/words.hpp"

namespace fcomp {

struct SearchLimits {
	/// Cap on distinct subset states stored by the BFS.
	std::uint64_t max_states = std::uint64_t{1} << 26;
	/// Give up (resource limit) before exploring words longer than this.
	std::optional<std::size_t> max_length;
	std::optional<std::chrono::milliseconds> time_budget;
	/// Cap for all_minimal_words.
	std::size_t max_words = 100000;
};

enum class Outcome { complete, non_complete, resource_limit };

std::string_view to_string(Outcome o);

struct CompletenessVerdict {
	Outcome outcome = Outcome::resource_limit;
	/// Shortlex-least minimal uncompletable word.
	std::optional<Word> witness;
	std::optional<std::size_t> uwl;
	std::uint64_t explored_states = 0;
	std::chrono::nanoseconds elapsed{0};
	/// Which limit stopped the search, when outcome == resource_limit.
	std::string limit_reason;

	bool complete() const noexcept { return outcome == Outcome::complete; }
	bool non_complete() const noexcept { return outcome == Outcome::non_complete; }
};

/// Breadth-first search over subset states of the prefix automaton, from the
/// universal state towards the empty one. Reaching the empty state at depth d
/// means uwl(S) = d; exhausting the reachable states means S is complete.
/// Letters are expanded in alphabet order, so the witness is shortlex-least.
CompletenessVerdict decide(const PrefixAutomaton& automaton, const SearchLimits& limits = {});
CompletenessVerdict decide(const WordSet& set, const SearchLimits& limits = {});

/// 2^(||S|| - m + 1), the classical upper bound on uwl(S).
boost::multiprecision::cpp_int exp_bound(const WordSet& set);

struct MinimalWords {
	Outcome outcome = Outcome::resource_limit;
	std::optional<std::size_t> uwl;
	/// Shortlex order.
	std::vector<Word> words;
	/// True when the max_words cap cut the enumeration short.
	bool truncated = false;
	std::uint64_t explored_states = 0;
	std::string limit_reason;
};

/// Every uncompletable word of length uwl(S), read off all shortest paths to
/// the empty state. A complete set yields outcome complete and no words.
MinimalWords all_minimal_words(const PrefixAutomaton& automaton, const SearchLimits& limits = {});
MinimalWords all_minimal_words(const WordSet& set, const SearchLimits& limits = {});

} // namespace fcomp
