#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "fcomp/subset_state.hpp"
#include "fcomp/words.hpp"

namespace fcomp {

using NodeId = std::int32_t;

/// Trie of a finite word set S with restart at the root after every complete
/// word. Read nondeterministically, it accepts Pref(S*); its determinization
/// over SubsetStates decides membership in Pref(S*) and Fact(S*).
///
/// Nodes are the distinct prefixes of S (including the empty word), numbered
/// in shortlex order of their path words, so node 0 is the root.
class PrefixAutomaton {
public:
	static constexpr NodeId kRoot = 0;
	static constexpr NodeId kNoChild = -1;

	/// Throws Error("empty set") for an empty S.
	explicit PrefixAutomaton(WordSet set);

	const WordSet& source_set() const noexcept { return set_; }
	const Alphabet& alphabet() const noexcept { return set_.alphabet(); }
	std::size_t node_count() const noexcept { return paths_.size(); }
	std::size_t letter_count() const noexcept { return set_.alphabet().size(); }

	NodeId child(NodeId node, Letter c) const noexcept {
		return children_[static_cast<std::size_t>(node) * letter_count() + c];
	}
	bool accepting(NodeId node) const noexcept { return accepting_.test(static_cast<std::size_t>(node)); }
	const SubsetState& accepting_mask() const noexcept { return accepting_; }
	const Word& path(NodeId node) const { return paths_.at(static_cast<std::size_t>(node)); }

	/// Every node; each is reached by reading its own path word.
	SubsetState initial_universal() const { return SubsetState::full(node_count()); }
	/// closure({root}), the start state for Pref(S*).
	SubsetState root_state() const;

	/// Adds the root when the set meets an accepting node.
	SubsetState closure(SubsetState state) const;
	/// Closes, moves every node along `c`, closes again. Empty stays empty.
	SubsetState step(const SubsetState& state, Letter c) const;
	/// Steps through every letter of `w`; throws Error for letters outside
	/// the alphabet.
	SubsetState run(SubsetState state, const Word& w) const;

	std::vector<Letter> letters_of(const Word& w) const;

	bool member_pref_star(const Word& w) const;
	bool member_fact_star(const Word& w) const;
	bool is_uncompletable(const Word& w) const { return !member_fact_star(w); }

	/// Debug listing: "node <id> path=<word> accepting=<bool>" lines, then
	/// "edge <from> <letter> <to>" lines sorted by id then letter.
	std::string dump() const;

private:
	WordSet set_;
	std::vector<Word> paths_;
	std::vector<NodeId> children_;
	SubsetState accepting_;
};

/// Byte-indexed lookup tables for stepping raw block arrays: the move of a
/// state is the OR over its bytes of a precomputed image. Used by the
/// breadth-first searches; agrees with PrefixAutomaton::step.
class StepTable {
public:
	explicit StepTable(const PrefixAutomaton& automaton);

	std::size_t blocks() const noexcept { return blocks_; }
	std::size_t letter_count() const noexcept { return letters_; }

	/// out = closure(move(closure(in), c)). `in` and `out` hold blocks()
	/// words each and must not alias.
	void step(const std::uint64_t* in, Letter c, std::uint64_t* out) const noexcept;

	const std::uint64_t* accepting() const noexcept { return accepting_.data(); }

private:
	std::size_t blocks_;
	std::size_t bytes_;
	std::size_t letters_;
	// [letter][byte position][byte value] -> blocks_ words
	std::vector<std::uint64_t> table_;
	std::vector<std::uint64_t> accepting_;
	std::vector<std::uint64_t> root_move_;  // [letter] -> blocks_ words
};

} // namespace fcomp
