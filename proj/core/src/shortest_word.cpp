#include "fcomp/shortest_word.hpp"

#include <algorithm>
#include <cstring>
#include <limits>

namespace fcomp {

std::string_view to_string(Outcome o) {
	switch (o) {
	case Outcome::complete: return "complete";
	case Outcome::non_complete: return "non_complete";
	case Outcome::resource_limit: return "resource_limit";
	}
	return "?";
}

namespace {

using Clock = std::chrono::steady_clock;

// Visited table for the subset BFS. States live contiguously in `arena_` in
// discovery order, so BFS levels are contiguous index ranges.
class StateStore {
public:
	explicit StateStore(std::size_t blocks) : blocks_(blocks) { rehash(1 << 10); }

	std::size_t blocks() const noexcept { return blocks_; }
	std::size_t size() const noexcept { return parent_.size(); }
	const std::uint64_t* state(std::size_t i) const noexcept { return &arena_[i * blocks_]; }
	std::uint32_t parent(std::size_t i) const noexcept { return parent_[i]; }
	Letter via(std::size_t i) const noexcept { return via_[i]; }

	/// Index of `s`, or npos.
	std::size_t find(const std::uint64_t* s) const noexcept {
		std::size_t slot = SubsetState::hash_blocks(s, blocks_) & mask_;
		while (slots_[slot] != 0) {
			const std::size_t idx = slots_[slot] - 1;
			if (std::memcmp(state(idx), s, blocks_ * sizeof(std::uint64_t)) == 0) {
				return idx;
			}
			slot = (slot + 1) & mask_;
		}
		return npos;
	}

	/// Returns {index, inserted}.
	std::pair<std::size_t, bool> insert(const std::uint64_t* s, std::uint32_t parent, Letter via) {
		std::size_t slot = SubsetState::hash_blocks(s, blocks_) & mask_;
		while (slots_[slot] != 0) {
			const std::size_t idx = slots_[slot] - 1;
			if (std::memcmp(state(idx), s, blocks_ * sizeof(std::uint64_t)) == 0) {
				return {idx, false};
			}
			slot = (slot + 1) & mask_;
		}
		const std::size_t idx = size();
		arena_.insert(arena_.end(), s, s + blocks_);
		parent_.push_back(parent);
		via_.push_back(via);
		slots_[slot] = static_cast<std::uint32_t>(idx + 1);
		if (2 * size() > slots_.size()) {
			rehash(slots_.size() * 2);
		}
		return {idx, true};
	}

	static constexpr std::size_t npos = std::numeric_limits<std::size_t>::max();

private:
	void rehash(std::size_t capacity) {
		slots_.assign(capacity, 0);
		mask_ = capacity - 1;
		for (std::size_t idx = 0; idx < size(); ++idx) {
			std::size_t slot = SubsetState::hash_blocks(state(idx), blocks_) & mask_;
			while (slots_[slot] != 0) {
				slot = (slot + 1) & mask_;
			}
			slots_[slot] = static_cast<std::uint32_t>(idx + 1);
		}
	}

	std::size_t blocks_;
	std::vector<std::uint64_t> arena_;
	std::vector<std::uint32_t> parent_;
	std::vector<Letter> via_;
	std::vector<std::uint32_t> slots_;
	std::size_t mask_ = 0;
};

struct BfsResult {
	Outcome outcome = Outcome::resource_limit;
	std::string limit_reason;
	// Set when the empty state was reached: the state that stepped into it
	// and the letter used. uwl = depth(dead_parent) + 1.
	std::size_t dead_parent = StateStore::npos;
	Letter dead_letter = 0;
	std::size_t depth = 0;
	std::vector<std::size_t> level_start;
};

bool is_zero(const std::uint64_t* s, std::size_t blocks) noexcept {
	for (std::size_t i = 0; i < blocks; ++i) {
		if (s[i]) {
			return false;
		}
	}
	return true;
}

BfsResult run_bfs(const PrefixAutomaton& automaton, const StepTable& table, StateStore& store,
                  const SearchLimits& limits, Clock::time_point start) {
	BfsResult result;
	const std::size_t blocks = table.blocks();
	const std::size_t sigma = table.letter_count();
	const std::uint64_t max_states =
		std::min<std::uint64_t>(limits.max_states, std::numeric_limits<std::uint32_t>::max() - 1);

	const SubsetState universal = automaton.initial_universal();
	store.insert(universal.blocks().data(), 0, 0);
	result.level_start = {0, 1};

	std::vector<std::uint64_t> next(blocks);
	std::size_t depth = 0;  // depth of the level being expanded
	std::uint64_t expansions = 0;
	while (true) {
		const std::size_t begin = result.level_start[depth];
		const std::size_t end = result.level_start[depth + 1];
		if (begin == end) {
			result.outcome = Outcome::complete;
			return result;
		}
		if (limits.max_length && depth + 1 > *limits.max_length) {
			result.limit_reason = "max_length " + std::to_string(*limits.max_length) + " reached";
			return result;
		}
		for (std::size_t idx = begin; idx < end; ++idx) {
			for (std::size_t c = 0; c < sigma; ++c) {
				table.step(store.state(idx), static_cast<Letter>(c), next.data());
				if (is_zero(next.data(), blocks)) {
					result.outcome = Outcome::non_complete;
					result.dead_parent = idx;
					result.dead_letter = static_cast<Letter>(c);
					result.depth = depth + 1;
					return result;
				}
				auto [_, inserted] = store.insert(next.data(), static_cast<std::uint32_t>(idx), static_cast<Letter>(c));
				if (inserted && store.size() > max_states) {
					result.limit_reason = "max_states " + std::to_string(limits.max_states) + " exceeded";
					return result;
				}
			}
			if (limits.time_budget && (++expansions & 0xFFF) == 0 &&
			    Clock::now() - start > *limits.time_budget) {
				result.limit_reason = "time budget exceeded";
				return result;
			}
		}
		result.level_start.push_back(store.size());
		++depth;
	}
}

Word path_to(const StateStore& store, const Alphabet& alphabet, std::size_t idx) {
	std::string letters;
	while (idx != 0) {
		letters += alphabet.symbol(store.via(idx));
		idx = store.parent(idx);
	}
	std::reverse(letters.begin(), letters.end());
	return Word(std::move(letters));
}

} // namespace

CompletenessVerdict decide(const PrefixAutomaton& automaton, const SearchLimits& limits) {
	const auto start = Clock::now();
	const StepTable table(automaton);
	StateStore store(table.blocks());
	const BfsResult bfs = run_bfs(automaton, table, store, limits, start);

	CompletenessVerdict verdict;
	verdict.outcome = bfs.outcome;
	verdict.limit_reason = bfs.limit_reason;
	verdict.explored_states = store.size();
	if (bfs.outcome == Outcome::non_complete) {
		Word w = path_to(store, automaton.alphabet(), bfs.dead_parent);
		w += automaton.alphabet().symbol(bfs.dead_letter);
		verdict.uwl = w.size();
		verdict.witness = std::move(w);
	}
	verdict.elapsed = Clock::now() - start;
	return verdict;
}

CompletenessVerdict decide(const WordSet& set, const SearchLimits& limits) {
	return decide(PrefixAutomaton(set), limits);
}

boost::multiprecision::cpp_int exp_bound(const WordSet& set) {
	if (set.empty()) {
		throw Error("empty set");
	}
	boost::multiprecision::cpp_int bound = 1;
	bound <<= static_cast<unsigned>(set.total_length() - set.size() + 1);
	return bound;
}

MinimalWords all_minimal_words(const PrefixAutomaton& automaton, const SearchLimits& limits) {
	const auto start = Clock::now();
	const StepTable table(automaton);
	StateStore store(table.blocks());
	const BfsResult bfs = run_bfs(automaton, table, store, limits, start);

	MinimalWords out;
	out.outcome = bfs.outcome;
	out.limit_reason = bfs.limit_reason;
	out.explored_states = store.size();
	if (bfs.outcome != Outcome::non_complete) {
		return out;
	}
	const std::size_t uwl = bfs.depth;
	out.uwl = uwl;

	const std::size_t blocks = table.blocks();
	const std::size_t sigma = table.letter_count();
	std::vector<std::uint64_t> next(blocks);

	// good[i]: state i lies on a shortest path to the empty state. Every
	// state at depth uwl-1 is stored (they were found expanding depth uwl-2).
	std::vector<char> good(store.size(), 0);
	for (std::size_t depth = uwl; depth-- > 0;) {
		const std::size_t begin = bfs.level_start[depth];
		const std::size_t end = depth + 1 < bfs.level_start.size() ? bfs.level_start[depth + 1] : store.size();
		for (std::size_t idx = begin; idx < end; ++idx) {
			for (std::size_t c = 0; c < sigma && !good[idx]; ++c) {
				table.step(store.state(idx), static_cast<Letter>(c), next.data());
				if (depth + 1 == uwl) {
					good[idx] = is_zero(next.data(), blocks);
				} else {
					const std::size_t to = store.find(next.data());
					const std::size_t to_begin = bfs.level_start[depth + 1];
					const std::size_t to_end = bfs.level_start[depth + 2];
					good[idx] = to != StateStore::npos && to >= to_begin && to < to_end && good[to];
				}
			}
		}
	}

	// Depth-first walk through good states in letter order yields the words
	// in shortlex order.
	const Alphabet& alphabet = automaton.alphabet();
	std::string prefix;
	std::vector<std::pair<std::size_t, std::size_t>> stack;  // (state, next letter)
	if (!good[0]) {
		return out;
	}
	stack.emplace_back(0, 0);
	while (!stack.empty()) {
		auto& [idx, c] = stack.back();
		if (c == sigma) {
			stack.pop_back();
			if (!prefix.empty()) {
				prefix.pop_back();
			}
			continue;
		}
		const Letter letter = static_cast<Letter>(c++);
		const std::size_t depth = stack.size() - 1;
		table.step(store.state(idx), letter, next.data());
		if (depth + 1 == uwl) {
			if (is_zero(next.data(), blocks)) {
				if (out.words.size() == limits.max_words) {
					out.truncated = true;
					break;
				}
				out.words.emplace_back(prefix + alphabet.symbol(letter));
			}
			continue;
		}
		const std::size_t to = store.find(next.data());
		if (to == StateStore::npos || to < bfs.level_start[depth + 1] || to >= bfs.level_start[depth + 2] ||
		    !good[to]) {
			continue;
		}
		prefix += alphabet.symbol(letter);
		stack.emplace_back(to, 0);
	}
	return out;
}

MinimalWords all_minimal_words(const WordSet& set, const SearchLimits& limits) {
	return all_minimal_words(PrefixAutomaton(set), limits);
}

} // namespace fcomp
