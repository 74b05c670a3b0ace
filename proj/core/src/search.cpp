#include "fcomp/search.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <map>
#include <mutex>
#include <set>
#include <sstream>
#include <thread>
#include <unordered_set>

namespace fcomp {

std::strong_ordering compare_serialized(const WordSet& lhs, const WordSet& rhs) {
	const auto& a = lhs.words();
	const auto& b = rhs.words();
	const std::size_t n = std::min(a.size(), b.size());
	for (std::size_t i = 0; i < n; ++i) {
		if (auto c = lex_compare(lhs.alphabet(), a[i], b[i]); c != 0) {
			return c;
		}
	}
	return a.size() <=> b.size();
}

WordSet canonical_form(const WordSet& set) {
	if (!set.alphabet().is_binary()) {
		throw Error("canonical forms are defined for binary alphabets only");
	}
	WordSet best = set;
	for (Symmetry s : kAllSymmetries) {
		WordSet image = apply_symmetry_set(set, s);
		if (compare_serialized(image, best) < 0) {
			best = std::move(image);
		}
	}
	return best;
}

std::size_t orbit_size(const WordSet& set) {
	if (!set.alphabet().is_binary()) {
		throw Error("orbits are defined for binary alphabets only");
	}
	std::vector<WordSet> images;
	for (Symmetry s : kAllSymmetries) {
		WordSet image = apply_symmetry_set(set, s);
		if (std::find(images.begin(), images.end(), image) == images.end()) {
			images.push_back(std::move(image));
		}
	}
	return images.size();
}

namespace {

Outcome checked_outcome(const WordSet& set, const SearchLimits& limits) {
	if (set.empty()) {
		return Outcome::non_complete;
	}
	const auto verdict = decide(set, limits);
	if (verdict.outcome == Outcome::resource_limit) {
		throw Error("resource limit while deciding " + to_string(set) + ": " + verdict.limit_reason);
	}
	return verdict.outcome;
}

} // namespace

bool is_maximal_non_complete(const WordSet& set, const WordSet& universe, const SearchLimits& limits) {
	for (const auto& w : set) {
		if (!universe.contains(w)) {
			throw Error("word '" + w.str() + "' is not in the universe");
		}
	}
	if (checked_outcome(set, limits) != Outcome::non_complete) {
		return false;
	}
	for (const auto& x : universe) {
		if (set.contains(x)) {
			continue;
		}
		if (checked_outcome(set.with(x), limits) != Outcome::complete) {
			return false;
		}
	}
	return true;
}

LengthFilter parse_length_filter(const std::string& text) {
	const auto colon = text.find(':');
	if (colon == std::string::npos) {
		throw Error("filter '" + text + "' is not of the form LENGTH:MIN_COUNT");
	}
	try {
		std::size_t used = 0;
		LengthFilter f;
		f.length = std::stoul(text.substr(0, colon), &used);
		if (used != colon) {
			throw Error("bad length");
		}
		const auto rest = text.substr(colon + 1);
		f.min_count = std::stoul(rest, &used);
		if (used != rest.size()) {
			throw Error("bad count");
		}
		return f;
	} catch (const std::exception&) {
		throw Error("filter '" + text + "' is not of the form LENGTH:MIN_COUNT");
	}
}

std::vector<SearchClass> SearchReport::top_classes() const {
	std::vector<SearchClass> out;
	for (const auto& c : classes) {
		if (c.uwl == classes.front().uwl) {
			out.push_back(c);
		}
	}
	return out;
}

namespace detail {

SmallCompletenessOracle::SmallCompletenessOracle(std::size_t max_len)
	: max_len_(max_len), nodes_((std::size_t{1} << (max_len + 1)) - 1) {
	if (max_len < 1 || max_len > 4) {
		throw Error("small completeness oracle supports 1 <= max_len <= 4");
	}
	for (std::uint32_t c = 0; c < 2; ++c) {
		move_[c].assign(4 * 256, 0);
		for (std::uint32_t pos = 0; pos < 4; ++pos) {
			for (std::uint32_t value = 0; value < 256; ++value) {
				std::uint32_t out = 0;
				for (std::uint32_t bit = 0; bit < 8; ++bit) {
					const std::uint32_t node = pos * 8 + bit;
					if (!((value >> bit) & 1U) || node == 0) {
						continue;
					}
					const std::uint32_t child = 2 * node + c;
					if (child <= nodes_) {
						out |= std::uint32_t{1} << child;
					}
				}
				move_[c][pos * 256 + value] = out;
			}
		}
	}
	keys_.assign(1 << 12, 0);
	stamp_.assign(1 << 12, 0);
}

bool SmallCompletenessOracle::is_complete(std::uint32_t subset) {
	if (subset == 0) {
		return false;
	}
	// Word i of the universe is heap node i + 2; the root is node 1.
	const std::uint32_t accepting = subset << 2;
	constexpr std::uint32_t root = 1U << 1;
	std::uint32_t prefixes = 0;
	for (std::uint32_t bits = accepting; bits;) {
		for (std::uint32_t h = static_cast<std::uint32_t>(std::countr_zero(bits)); h; h >>= 1) {
			prefixes |= std::uint32_t{1} << h;
		}
		bits &= bits - 1;
	}
	auto step = [&](std::uint32_t x, int c) {
		if (x & accepting) {
			x |= root;
		}
		const auto& t = move_[c];
		std::uint32_t y = t[x & 0xFF] | t[256 + ((x >> 8) & 0xFF)] | t[512 + ((x >> 16) & 0xFF)] |
		                  t[768 + (x >> 24)];
		y &= prefixes;
		if (y & accepting) {
			y |= root;
		}
		return y;
	};

	if (++generation_ == 0) {
		std::fill(stamp_.begin(), stamp_.end(), 0);
		generation_ = 1;
	}
	std::size_t used = 0;
	auto insert = [&](std::uint32_t key) {
		if (2 * (used + 1) > keys_.size()) {
			std::vector<std::uint32_t> live;
			for (std::size_t i = 0; i < keys_.size(); ++i) {
				if (stamp_[i] == generation_) {
					live.push_back(keys_[i]);
				}
			}
			keys_.assign(keys_.size() * 2, 0);
			stamp_.assign(keys_.size(), 0);
			const std::size_t m = keys_.size() - 1;
			for (auto k : live) {
				std::size_t slot = (k * 0x9E3779B1U) & m;
				while (stamp_[slot] == generation_) {
					slot = (slot + 1) & m;
				}
				keys_[slot] = k;
				stamp_[slot] = generation_;
			}
		}
		const std::size_t m = keys_.size() - 1;
		std::size_t slot = (key * 0x9E3779B1U) & m;
		while (stamp_[slot] == generation_) {
			if (keys_[slot] == key) {
				return false;
			}
			slot = (slot + 1) & m;
		}
		keys_[slot] = key;
		stamp_[slot] = generation_;
		++used;
		return true;
	};

	stack_.clear();
	const std::uint32_t start = prefixes | (prefixes & accepting ? root : 0);
	insert(start);
	stack_.push_back(start);
	while (!stack_.empty()) {
		const std::uint32_t x = stack_.back();
		stack_.pop_back();
		for (int c = 0; c < 2; ++c) {
			const std::uint32_t y = step(x, c);
			if (y == 0) {
				return false;
			}
			if (insert(y)) {
				stack_.push_back(y);
			}
		}
	}
	return true;
}

} // namespace detail

namespace {

std::string describe_filters(const std::vector<LengthFilter>& filters) {
	if (filters.empty()) {
		return "none";
	}
	std::ostringstream out;
	for (std::size_t i = 0; i < filters.size(); ++i) {
		if (i) {
			out << ", ";
		}
		out << "|S ∩ Σ^" << filters[i].length << "| >= " << filters[i].min_count;
	}
	return out.str();
}

struct Universe {
	std::vector<Word> words;  // shortlex
	std::vector<std::uint32_t> length_masks;  // [length] -> bits of words of that length

	explicit Universe(std::size_t n) : words(words_up_to(Alphabet::binary(), n)), length_masks(n + 1, 0) {
		for (std::size_t i = 0; i < words.size(); ++i) {
			length_masks[words[i].size()] |= std::uint32_t{1} << i;
		}
	}

	WordSet to_set(std::uint32_t mask) const {
		std::vector<Word> out;
		for (std::size_t i = 0; i < words.size(); ++i) {
			if ((mask >> i) & 1U) {
				out.push_back(words[i]);
			}
		}
		return WordSet(Alphabet::binary(), std::move(out));
	}
};

bool passes(const Universe& u, const std::vector<LengthFilter>& filters, std::uint32_t mask) {
	for (const auto& f : filters) {
		const std::uint32_t stratum = f.length < u.length_masks.size() ? u.length_masks[f.length] : 0;
		if (static_cast<std::size_t>(std::popcount(mask & stratum)) < f.min_count) {
			return false;
		}
	}
	return true;
}

// Every subset decided once; maximality read from the table.
std::vector<std::uint32_t> sweep(const Universe& u, const SearchOptions& options, std::uint64_t& examined) {
	const std::size_t n = u.words.size();
	const std::uint32_t total = std::uint32_t{1} << n;
	std::vector<char> complete(total, 0);
	const std::size_t threads = std::max<std::size_t>(1, options.threads);
	std::vector<std::thread> pool;
	for (std::size_t t = 0; t < threads; ++t) {
		pool.emplace_back([&, t] {
			detail::SmallCompletenessOracle oracle(options.max_len);
			for (std::uint32_t mask = static_cast<std::uint32_t>(t); mask < total; mask += static_cast<std::uint32_t>(threads)) {
				complete[mask] = oracle.is_complete(mask) ? 1 : 0;
			}
		});
	}
	for (auto& th : pool) {
		th.join();
	}
	examined = total;

	std::vector<std::uint32_t> maximal;
	for (std::uint32_t mask = 1; mask < total; ++mask) {
		if (complete[mask] || !passes(u, options.filters, mask)) {
			continue;
		}
		bool is_max = true;
		for (std::size_t i = 0; i < n && is_max; ++i) {
			const std::uint32_t bit = std::uint32_t{1} << i;
			if (!(mask & bit) && !complete[mask | bit]) {
				is_max = false;
			}
		}
		if (is_max) {
			maximal.push_back(mask);
		}
	}
	return maximal;
}

// Depth-first enumeration of non-complete sets. `order` lists universe
// indices; a node is (head, tail) with head non-complete and tail the later
// words each of which keeps head non-complete on its own.
class MaximalEnumerator {
public:
	MaximalEnumerator(const Universe& u, const SearchOptions& options)
		: u_(u), options_(options), oracle_(options.max_len) {}

	void run_branch(std::uint32_t head, const std::vector<int>& tail) { visit(head, tail); }

	std::vector<int> root_tail(const std::vector<int>& order) {
		std::vector<int> tail;
		for (int x : order) {
			++examined_;
			if (!oracle_.is_complete(std::uint32_t{1} << x)) {
				tail.push_back(x);
			}
		}
		return tail;
	}

	std::vector<int> child_tail(std::uint32_t head, const std::vector<int>& tail, std::size_t from) {
		std::vector<int> out;
		for (std::size_t j = from; j < tail.size(); ++j) {
			++examined_;
			if (!oracle_.is_complete(head | (std::uint32_t{1} << tail[j]))) {
				out.push_back(tail[j]);
			}
		}
		return out;
	}

	std::set<std::uint32_t> candidates;
	std::uint64_t examined_ = 0;

private:
	void visit(std::uint32_t head, const std::vector<int>& tail) {
		std::uint32_t all = head;
		for (int x : tail) {
			all |= std::uint32_t{1} << x;
		}
		if (!passes(u_, options_.filters, all)) {
			return;
		}
		++examined_;
		if (!oracle_.is_complete(all)) {
			candidates.insert(all);
			return;
		}
		for (std::size_t i = 0; i < tail.size(); ++i) {
			const std::uint32_t next = head | (std::uint32_t{1} << tail[i]);
			visit(next, child_tail(next, tail, i + 1));
		}
	}

	const Universe& u_;
	const SearchOptions& options_;
	detail::SmallCompletenessOracle oracle_;
};

std::vector<std::uint32_t> enumerate(const Universe& u, const SearchOptions& options, std::uint64_t& examined) {
	// Longest words first: maximal sets keep most long words, and the length
	// filters then prune branches early.
	std::vector<int> order(u.words.size());
	for (std::size_t i = 0; i < order.size(); ++i) {
		order[i] = static_cast<int>(order.size() - 1 - i);
	}

	MaximalEnumerator root(u, options);
	const std::vector<int> tail = root.root_tail(order);
	examined = root.examined_;

	const std::size_t threads = std::max<std::size_t>(1, options.threads);
	std::atomic<std::size_t> next_branch{0};
	std::mutex merge;
	std::set<std::uint32_t> candidates;
	std::vector<std::thread> pool;
	for (std::size_t t = 0; t < threads; ++t) {
		pool.emplace_back([&] {
			MaximalEnumerator worker(u, options);
			for (std::size_t i = next_branch++; i < tail.size(); i = next_branch++) {
				const std::uint32_t head = std::uint32_t{1} << tail[i];
				worker.run_branch(head, worker.child_tail(head, tail, i + 1));
			}
			std::lock_guard lock(merge);
			candidates.insert(worker.candidates.begin(), worker.candidates.end());
			examined += worker.examined_;
		});
	}
	for (auto& th : pool) {
		th.join();
	}

	detail::SmallCompletenessOracle oracle(options.max_len);
	const std::uint32_t full = (u.words.size() == 32) ? ~0U : ((std::uint32_t{1} << u.words.size()) - 1);
	std::vector<std::uint32_t> maximal;
	for (std::uint32_t c : candidates) {
		bool is_max = true;
		for (std::uint32_t rest = full & ~c; rest && is_max; rest &= rest - 1) {
			is_max = oracle.is_complete(c | (rest & (~rest + 1)));
		}
		if (is_max) {
			maximal.push_back(c);
		}
	}
	return maximal;
}

} // namespace

SearchReport exhaustive_search(const SearchOptions& options) {
	const auto start = std::chrono::steady_clock::now();
	if (options.max_len < 1) {
		throw Error("search needs --max-len >= 1");
	}
	if (options.max_len > 4) {
		throw Error("search over Σ^{<=" + std::to_string(options.max_len) +
		            "} is outside the resource policy (max-len <= 4)");
	}
	if (options.max_len == 4 && options.filters.empty()) {
		throw Error("search over Σ^{<=4} needs a length filter, e.g. --min-count 4:11");
	}
	for (const auto& f : options.filters) {
		if (f.length < 1 || f.length > options.max_len) {
			throw Error("filter length " + std::to_string(f.length) + " outside 1.." + std::to_string(options.max_len));
		}
	}

	const Universe u(options.max_len);
	SearchReport report;
	report.universe = "Σ^{<=" + std::to_string(options.max_len) + "} over {a, b}";
	report.filters = describe_filters(options.filters);

	std::vector<std::uint32_t> maximal = options.max_len <= 3 ? sweep(u, options, report.sets_examined)
	                                                           : enumerate(u, options, report.sets_examined);
	report.maximal_sets = maximal.size();

	// Group by canonical form; classes are keyed by their serialization.
	std::vector<WordSet> representatives;
	std::vector<std::size_t> counts;
	{
		std::map<std::vector<std::string>, std::size_t> index;
		for (std::uint32_t mask : maximal) {
			WordSet set = u.to_set(mask);
			WordSet key = options.symmetry_reduction ? canonical_form(set) : set;
			std::vector<std::string> serial;
			for (const auto& w : key) {
				serial.push_back(w.str());
			}
			auto [it, inserted] = index.emplace(std::move(serial), representatives.size());
			if (inserted) {
				representatives.push_back(std::move(key));
				counts.push_back(0);
			}
			++counts[it->second];
		}
	}

	for (std::size_t i = 0; i < representatives.size(); ++i) {
		const auto verdict = decide(representatives[i]);
		if (verdict.outcome != Outcome::non_complete) {
			throw Error("internal: maximal set " + to_string(representatives[i]) + " is not non-complete");
		}
		SearchClass cls;
		cls.canonical = representatives[i];
		cls.orbit_size = options.symmetry_reduction ? orbit_size(representatives[i]) : 1;
		cls.uwl = *verdict.uwl;
		cls.witness = *verdict.witness;
		if (options.symmetry_reduction && counts[i] != cls.orbit_size) {
			throw Error("internal: class " + to_string(cls.canonical) + " has " + std::to_string(counts[i]) +
			            " members but orbit size " + std::to_string(cls.orbit_size));
		}
		report.classes.push_back(std::move(cls));
	}
	std::sort(report.classes.begin(), report.classes.end(), [](const SearchClass& a, const SearchClass& b) {
		if (a.uwl != b.uwl) {
			return a.uwl > b.uwl;
		}
		return compare_serialized(a.canonical, b.canonical) < 0;
	});
	report.elapsed = std::chrono::steady_clock::now() - start;
	return report;
}

} // namespace fcomp
