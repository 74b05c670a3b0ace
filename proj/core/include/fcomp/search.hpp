#pragma once

#include <chrono>
#include <cstdint>
#include <string>
#include <vector>

#include "fcomp/shortest_word.hpp"
#include "fcomp/words.hpp"

namespace fcomp {

/// Shortlex-least serialization among the images of `set` under identity,
/// mirror, rename and mirror_rename. Binary alphabets only.
WordSet canonical_form(const WordSet& set);

/// Number of distinct images of `set` under the four symmetries (1, 2 or 4).
std::size_t orbit_size(const WordSet& set);

/// Lexicographic comparison of shortlex-sorted word lists.
std::strong_ordering compare_serialized(const WordSet& lhs, const WordSet& rhs);

/// True iff `set` is non-complete and adding any single word of
/// universe \ set makes it complete. Requires set ⊆ universe.
bool is_maximal_non_complete(const WordSet& set, const WordSet& universe, const SearchLimits& limits = {});

/// Keep only sets with |Σ^length ∩ S| >= min_count.
struct LengthFilter {
	std::size_t length = 0;
	std::size_t min_count = 0;

	bool operator==(const LengthFilter&) const = default;
};

/// Parses "4:11".
LengthFilter parse_length_filter(const std::string& text);

struct SearchOptions {
	/// Universe is Σ^{<=max_len} over {a, b}.
	std::size_t max_len = 3;
	std::vector<LengthFilter> filters;
	/// Group maximal sets into symmetry classes.
	bool symmetry_reduction = true;
	std::size_t threads = 1;
};

struct SearchClass {
	WordSet canonical;
	std::size_t orbit_size = 1;
	std::size_t uwl = 0;
	Word witness;
};

struct SearchReport {
	std::string universe;
	std::string filters;
	/// Ranked by uwl descending, then canonical serialization.
	std::vector<SearchClass> classes;
	/// Maximal non-complete sets found before grouping.
	std::size_t maximal_sets = 0;
	/// Candidate sets whose completeness was tested.
	std::uint64_t sets_examined = 0;
	std::chrono::nanoseconds elapsed{0};

	/// Classes reaching the maximum uwl.
	std::vector<SearchClass> top_classes() const;
};

/// Finds every maximal non-complete subset of Σ^{<=max_len} passing the
/// filters and ranks them by uwl. max_len must be at most 4, and 4 needs at
/// least one filter; violations throw Error naming the missing filter.
///
/// max_len <= 3 sweeps all subsets. Larger universes use a depth-first
/// enumeration of non-complete sets that stops as soon as a branch's full
/// candidate union is itself non-complete. The report does not depend on
/// the thread count.
SearchReport exhaustive_search(const SearchOptions& options);

namespace detail {

/// Completeness test for subsets of Σ^{<=4} given as a bitmask over
/// words_up_to(binary, 4) in shortlex order. Independent of
/// PrefixAutomaton; used by the search and cross-checked in tests.
class SmallCompletenessOracle {
public:
	explicit SmallCompletenessOracle(std::size_t max_len);
	bool is_complete(std::uint32_t subset);

private:
	std::size_t max_len_;
	std::size_t nodes_;  // heap-indexed binary tree: 1 .. 2^(max_len+1) - 1
	std::vector<std::uint32_t> move_[2];  // [letter][byte pos * 256 + byte]
	std::vector<std::uint32_t> keys_;
	std::vector<std::uint32_t> stamp_;
	std::uint32_t generation_ = 0;
	std::vector<std::uint32_t> stack_;
};

} // namespace detail

} // namespace fcomp
