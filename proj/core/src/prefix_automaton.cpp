#include "fcomp/prefix_automaton.hpp"

#include <algorithm>
#include <cstring>
#include <set>
#include <sstream>

namespace fcomp {

PrefixAutomaton::PrefixAutomaton(WordSet set) : set_(std::move(set)) {
	if (set_.empty()) {
		throw Error("empty set");
	}
	std::set<std::string> prefixes;
	for (const auto& w : set_) {
		for (std::size_t len = 0; len <= w.size(); ++len) {
			prefixes.insert(w.str().substr(0, len));
		}
	}
	paths_.reserve(prefixes.size());
	for (const auto& p : prefixes) {
		paths_.emplace_back(p);
	}
	std::sort(paths_.begin(), paths_.end(), ShortlexLess{&set_.alphabet()});

	const std::size_t n = paths_.size();
	const std::size_t sigma = letter_count();
	children_.assign(n * sigma, kNoChild);
	accepting_ = SubsetState(n);

	// Parents precede children in shortlex order, so a map from path to id
	// filled in order resolves every edge.
	std::vector<std::pair<std::string, NodeId>> index;
	index.reserve(n);
	for (std::size_t i = 0; i < n; ++i) {
		index.emplace_back(paths_[i].str(), static_cast<NodeId>(i));
	}
	std::sort(index.begin(), index.end());
	auto lookup = [&](const std::string& p) {
		auto it = std::lower_bound(index.begin(), index.end(), std::make_pair(p, NodeId{-1}));
		return it->second;
	};
	for (std::size_t i = 1; i < n; ++i) {
		const auto& p = paths_[i].str();
		const NodeId parent = lookup(p.substr(0, p.size() - 1));
		const Letter c = *alphabet().index_of(p.back());
		children_[static_cast<std::size_t>(parent) * sigma + c] = static_cast<NodeId>(i);
		if (set_.contains(paths_[i])) {
			accepting_.set(i);
		}
	}
}

SubsetState PrefixAutomaton::root_state() const {
	SubsetState s(node_count());
	s.set(kRoot);
	return closure(std::move(s));
}

SubsetState PrefixAutomaton::closure(SubsetState state) const {
	if (state.intersects(accepting_)) {
		state.set(kRoot);
	}
	return state;
}

SubsetState PrefixAutomaton::step(const SubsetState& state, Letter c) const {
	const SubsetState closed = closure(state);
	SubsetState next(node_count());
	for (auto q : closed.members()) {
		const NodeId to = child(static_cast<NodeId>(q), c);
		if (to != kNoChild) {
			next.set(static_cast<std::size_t>(to));
		}
	}
	return closure(std::move(next));
}

std::vector<Letter> PrefixAutomaton::letters_of(const Word& w) const {
	std::vector<Letter> out;
	out.reserve(w.size());
	for (char ch : w) {
		const auto idx = alphabet().index_of(ch);
		if (!idx) {
			throw Error(std::string("letter '") + ch + "' outside the alphabet");
		}
		out.push_back(*idx);
	}
	return out;
}

SubsetState PrefixAutomaton::run(SubsetState state, const Word& w) const {
	for (Letter c : letters_of(w)) {
		if (state.empty()) {
			break;
		}
		state = step(state, c);
	}
	return state;
}

bool PrefixAutomaton::member_pref_star(const Word& w) const { return !run(root_state(), w).empty(); }

bool PrefixAutomaton::member_fact_star(const Word& w) const { return !run(initial_universal(), w).empty(); }

std::string PrefixAutomaton::dump() const {
	std::ostringstream out;
	for (std::size_t i = 0; i < node_count(); ++i) {
		out << "node " << i << " path=" << paths_[i].str()
		    << " accepting=" << (accepting_.test(i) ? "true" : "false") << '\n';
	}
	for (std::size_t i = 0; i < node_count(); ++i) {
		for (std::size_t c = 0; c < letter_count(); ++c) {
			const NodeId to = children_[i * letter_count() + c];
			if (to != kNoChild) {
				out << "edge " << i << ' ' << alphabet().symbol(static_cast<Letter>(c)) << ' ' << to
				    << '\n';
			}
		}
	}
	return out.str();
}

namespace {

// Beyond this many table words the byte tables stop paying off; stepping
// falls back to iterating set bits.
constexpr std::size_t kMaxTableWords = std::size_t{1} << 24;

} // namespace

StepTable::StepTable(const PrefixAutomaton& automaton)
	: blocks_(SubsetState::block_count(automaton.node_count())),
	  bytes_((automaton.node_count() + 7) / 8),
	  letters_(automaton.letter_count()),
	  accepting_(automaton.accepting_mask().blocks().begin(), automaton.accepting_mask().blocks().end()),
	  root_move_(letters_ * blocks_, 0) {
	const std::size_t n = automaton.node_count();
	auto set_bit = [](std::uint64_t* blocks, std::size_t i) {
		blocks[i / 64] |= std::uint64_t{1} << (i % 64);
	};
	for (std::size_t c = 0; c < letters_; ++c) {
		const NodeId to = automaton.child(PrefixAutomaton::kRoot, static_cast<Letter>(c));
		if (to != PrefixAutomaton::kNoChild) {
			set_bit(&root_move_[c * blocks_], static_cast<std::size_t>(to));
		}
	}

	const std::size_t words = letters_ * bytes_ * 256 * blocks_;
	if (words <= kMaxTableWords) {
		table_.assign(words, 0);
		for (std::size_t c = 0; c < letters_; ++c) {
			for (std::size_t pos = 0; pos < bytes_; ++pos) {
				for (std::size_t value = 1; value < 256; ++value) {
					std::uint64_t* out = &table_[((c * bytes_ + pos) * 256 + value) * blocks_];
					for (std::size_t bit = 0; bit < 8; ++bit) {
						const std::size_t node = pos * 8 + bit;
						if (!((value >> bit) & 1U) || node >= n) {
							continue;
						}
						const NodeId to = automaton.child(static_cast<NodeId>(node), static_cast<Letter>(c));
						if (to != PrefixAutomaton::kNoChild) {
							set_bit(out, static_cast<std::size_t>(to));
						}
					}
				}
			}
		}
	} else {
		// Per-node move images, one block array each.
		table_.assign(letters_ * n * blocks_, 0);
		for (std::size_t c = 0; c < letters_; ++c) {
			for (std::size_t node = 0; node < n; ++node) {
				const NodeId to = automaton.child(static_cast<NodeId>(node), static_cast<Letter>(c));
				if (to != PrefixAutomaton::kNoChild) {
					set_bit(&table_[(c * n + node) * blocks_], static_cast<std::size_t>(to));
				}
			}
		}
		bytes_ = 0;
	}
}

void StepTable::step(const std::uint64_t* in, Letter c, std::uint64_t* out) const noexcept {
	std::memset(out, 0, blocks_ * sizeof(std::uint64_t));
	bool meets_accepting = false;
	for (std::size_t b = 0; b < blocks_; ++b) {
		meets_accepting |= (in[b] & accepting_[b]) != 0;
	}
	if (bytes_ != 0) {
		const std::uint64_t* base = &table_[c * bytes_ * 256 * blocks_];
		for (std::size_t b = 0; b < blocks_; ++b) {
			std::uint64_t word = in[b];
			std::size_t pos = b * 8;
			while (word) {
				const unsigned value = static_cast<unsigned>(word & 0xFF);
				if (value) {
					const std::uint64_t* img = base + (pos * 256 + value) * blocks_;
					for (std::size_t i = 0; i < blocks_; ++i) {
						out[i] |= img[i];
					}
				}
				word >>= 8;
				++pos;
			}
		}
	} else {
		const std::size_t n = table_.size() / (letters_ * blocks_);
		const std::uint64_t* base = &table_[c * n * blocks_];
		for (std::size_t b = 0; b < blocks_; ++b) {
			std::uint64_t word = in[b];
			while (word) {
				const std::size_t node = b * 64 + static_cast<std::size_t>(std::countr_zero(word));
				const std::uint64_t* img = base + node * blocks_;
				for (std::size_t i = 0; i < blocks_; ++i) {
					out[i] |= img[i];
				}
				word &= word - 1;
			}
		}
	}
	if (meets_accepting) {
		const std::uint64_t* img = &root_move_[c * blocks_];
		for (std::size_t i = 0; i < blocks_; ++i) {
			out[i] |= img[i];
		}
	}
	for (std::size_t b = 0; b < blocks_; ++b) {
		if (out[b] & accepting_[b]) {
			out[0] |= 1U;
			break;
		}
	}
}

} // namespace fcomp
