#include "fcomp/families.hpp"

#include <algorithm>

namespace fcomp {

namespace {

std::vector<Word> all_except(std::size_t n, std::initializer_list<Word> excluded) {
	std::vector<Word> out;
	for (auto& w : words_of_length(Alphabet::binary(), n)) {
		if (std::find(excluded.begin(), excluded.end(), w) == excluded.end()) {
			out.push_back(std::move(w));
		}
	}
	return out;
}

void append(std::vector<Word>& dst, std::vector<Word> src) {
	dst.insert(dst.end(), std::make_move_iterator(src.begin()), std::make_move_iterator(src.end()));
}

// Expands a pattern where 'S' stands for either letter.
std::vector<Word> expand(const std::string& pattern) {
	std::vector<std::string> out{""};
	for (char c : pattern) {
		std::vector<std::string> next;
		for (const auto& prefix : out) {
			if (c == 'S') {
				next.push_back(prefix + 'a');
				next.push_back(prefix + 'b');
			} else {
				next.push_back(prefix + c);
			}
		}
		out = std::move(next);
	}
	return {out.begin(), out.end()};
}

std::string repeat(char c, std::size_t n) { return std::string(n, c); }

} // namespace

WordSet s_k(std::size_t k) {
	if (k < 3) {
		throw Error("S_k is defined for k >= 3");
	}
	auto words = all_except(k, {Word("b") + power('a', k - 1), power('b', k - 1) + Word("a")});
	append(words, all_except(k - 1, {power('a', k - 1), power('b', k - 1)}));
	return WordSet(Alphabet::binary(), std::move(words));
}

WordSet t_k(std::size_t k) {
	if (k < 3) {
		throw Error("T_k is defined for k >= 3");
	}
	auto words = all_except(k, {power('a', k - 1) + Word("b"), Word("a") + power('b', k - 1)});
	append(words, all_except(k - 1, {power('a', k - 1), power('b', k - 1)}));
	return WordSet(Alphabet::binary(), std::move(words));
}

WordSet j_k(std::size_t k) {
	if (k < 4) {
		throw Error("J_k needs k >= 4");
	}
	std::vector<Word> words;
	for (std::size_t i = 1; i <= k - 3; ++i) {
		append(words, expand("b" + repeat('a', i) + "S"));
		words.push_back(Word(repeat('a', i) + "b"));
	}
	return WordSet(Alphabet::binary(), std::move(words));
}

RkExpansion r_k_expanded(std::size_t k) {
	if (k <= 6) {
		throw Error("R_k defined for k > 6");
	}
	std::vector<Word> words = all_except(k, {Word(repeat('a', k - 2) + "bb")});
	append(words, expand("Sb" + repeat('a', k - 4) + "S"));
	append(words, expand("Sba"));
	words.push_back(Word("bbbb"));
	append(words, j_k(k).words());
	const std::size_t raw = words.size();
	return RkExpansion{WordSet(Alphabet::binary(), std::move(words)), raw};
}

WordSet r_k(std::size_t k) { return r_k_expanded(k).set; }

std::map<std::string, WordSet> extreme_sets() {
	std::map<std::string, WordSet> out;
	out.emplace("extreme3a", s_k(3));

	auto b3 = all_except(3, {Word("baa"), Word("bba")});
	append(b3, all_except(2, {Word("ab"), Word("ba")}));
	out.emplace("extreme3b", WordSet(Alphabet::binary(), std::move(b3)));

	auto e4 = all_except(4, {Word("aabb"), Word("abaa"), Word("abbb")});
	append(e4, all_except(3, {Word("aba"), Word("bba"), Word("bbb")}));
	out.emplace("extreme4", WordSet(Alphabet::binary(), std::move(e4)));
	return out;
}

WordSet extreme_set(const std::string& name) {
	auto all = extreme_sets();
	auto it = all.find(name);
	if (it == all.end()) {
		throw Error("unknown extreme set '" + name + "'");
	}
	return it->second;
}

Word omega(const OmegaSpec& spec) {
	const std::size_t k = spec.k;
	if (k < 4) {
		throw Error("omega needs k >= 4");
	}
	const std::size_t slots = OmegaSpec::slot_count(k);
	std::string fill = spec.fill.empty() ? std::string(slots, 'a') : spec.fill;
	if (fill.size() != slots) {
		throw Error("omega(k=" + std::to_string(k) + ") needs " + std::to_string(slots) + " fill letters, got " +
		            std::to_string(fill.size()));
	}
	for (char c : fill) {
		if (c != 'a' && c != 'b') {
			throw Error(std::string("fill letter '") + c + "' is not in {a, b}");
		}
	}
	const std::string u = "b" + repeat('a', k - 1);
	const std::string v = repeat('b', k - 1) + "a";
	const std::string r = repeat('b', k - 1) + repeat('a', k - 1);

	std::size_t slot = 0;
	std::string out = u;
	out += fill[slot++];
	for (std::size_t i = 1; i <= k - 3; ++i) {
		out += r + repeat('a', i);
		out += fill[slot++];
		out += repeat('b', k - 2 - i) + r;
		out += fill[slot++];
	}
	out += v;
	return Word(std::move(out));
}

std::int64_t s_formula(std::size_t k) {
	if (k < 4) {
		throw Error("5k^2 - 17k + 13 applies for k >= 4");
	}
	const auto kk = static_cast<std::int64_t>(k);
	return 5 * kk * kk - 17 * kk + 13;
}

RFormula r_formula(std::size_t k) {
	const auto kk = static_cast<std::int64_t>(k);
	return RFormula{3 * kk * kk - 9 * kk + 1, k < 7 || k > 12};
}

} // namespace fcomp
