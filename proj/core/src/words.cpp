#include "fcomp/words.hpp"

#include <algorithm>
#include <cctype>

namespace fcomp {

Alphabet::Alphabet() : Alphabet("ab") {}

Alphabet::Alphabet(std::string_view letters) : letters_(letters) {
	index_.fill(-1);
	if (letters_.empty()) {
		throw Error("alphabet must contain at least one letter");
	}
	if (letters_.size() > 255) {
		throw Error("alphabet too large");
	}
	for (std::size_t i = 0; i < letters_.size(); ++i) {
		const auto c = static_cast<unsigned char>(letters_[i]);
		if (std::isspace(c) || c == '#' || !std::isprint(c)) {
			throw Error(std::string("invalid alphabet symbol '") + letters_[i] + "'");
		}
		if (index_[c] >= 0) {
			throw Error(std::string("duplicate alphabet symbol '") + letters_[i] + "'");
		}
		index_[c] = static_cast<std::int16_t>(i);
	}
}

std::optional<Letter> Alphabet::index_of(char c) const noexcept {
	const auto idx = index_[static_cast<unsigned char>(c)];
	if (idx < 0) {
		return std::nullopt;
	}
	return static_cast<Letter>(idx);
}

Word power(char c, std::size_t n) { return Word(std::string(n, c)); }

std::strong_ordering lex_compare(const Alphabet& alphabet, const Word& lhs, const Word& rhs) {
	if (lhs.size() != rhs.size()) {
		return lhs.size() <=> rhs.size();
	}
	for (std::size_t i = 0; i < lhs.size(); ++i) {
		if (lhs[i] == rhs[i]) {
			continue;
		}
		const auto a = alphabet.index_of(lhs[i]);
		const auto b = alphabet.index_of(rhs[i]);
		// Foreign letters sort after the alphabet, by raw value.
		const int ra = a ? *a : 256 + static_cast<unsigned char>(lhs[i]);
		const int rb = b ? *b : 256 + static_cast<unsigned char>(rhs[i]);
		return ra <=> rb;
	}
	return std::strong_ordering::equal;
}

WordSet::WordSet(Alphabet alphabet, std::vector<Word> words)
	: alphabet_(std::move(alphabet)), words_(std::move(words)) {
	for (const auto& w : words_) {
		if (w.empty()) {
			throw Error("word sets may not contain the empty word");
		}
		for (char c : w) {
			if (!alphabet_.contains(c)) {
				throw Error("word '" + w.str() + "' uses letter '" + c + "' outside the alphabet");
			}
		}
	}
	std::sort(words_.begin(), words_.end(), ShortlexLess{&alphabet_});
	words_.erase(std::unique(words_.begin(), words_.end()), words_.end());
	for (const auto& w : words_) {
		total_length_ += w.size();
		max_length_ = std::max(max_length_, w.size());
	}
}

WordSet::WordSet(Alphabet alphabet, std::initializer_list<const char*> words)
	: WordSet(std::move(alphabet), std::vector<Word>(words.begin(), words.end())) {}

bool WordSet::contains(const Word& w) const {
	return std::binary_search(words_.begin(), words_.end(), w, ShortlexLess{&alphabet_});
}

WordSet WordSet::with(const Word& w) const {
	auto words = words_;
	words.push_back(w);
	return WordSet(alphabet_, std::move(words));
}

std::string to_string(const WordSet& set) {
	std::string out = "{";
	for (std::size_t i = 0; i < set.size(); ++i) {
		if (i) {
			out += ", ";
		}
		out += set.words()[i].str();
	}
	return out + "}";
}

std::vector<Word> words_of_length(const Alphabet& alphabet, std::size_t n) {
	std::vector<Word> layer{Word()};
	for (std::size_t len = 0; len < n; ++len) {
		std::vector<Word> next;
		next.reserve(layer.size() * alphabet.size());
		for (const auto& w : layer) {
			for (char c : alphabet.letters()) {
				next.push_back(w + Word(std::string(1, c)));
			}
		}
		layer = std::move(next);
	}
	return layer;
}

std::vector<Word> words_up_to(const Alphabet& alphabet, std::size_t n) {
	std::vector<Word> out;
	for (std::size_t len = 1; len <= n; ++len) {
		auto layer = words_of_length(alphabet, len);
		out.insert(out.end(), layer.begin(), layer.end());
	}
	return out;
}

std::string_view to_string(Symmetry s) {
	switch (s) {
	case Symmetry::identity: return "identity";
	case Symmetry::mirror: return "mirror";
	case Symmetry::rename: return "rename";
	case Symmetry::mirror_rename: return "mirror_rename";
	}
	return "?";
}

LetterPermutation default_renaming(const Alphabet& alphabet) {
	LetterPermutation perm(alphabet.size());
	for (std::size_t i = 0; i < perm.size(); ++i) {
		perm[i] = static_cast<Letter>(alphabet.size() - 1 - i);
	}
	return perm;
}

Word apply_symmetry(const Word& w, Symmetry s, const Alphabet& alphabet) {
	return apply_symmetry(w, s, alphabet, default_renaming(alphabet));
}

Word apply_symmetry(const Word& w, Symmetry s, const Alphabet& alphabet,
                    const LetterPermutation& renaming) {
	std::string out = w.str();
	if (s == Symmetry::mirror || s == Symmetry::mirror_rename) {
		std::reverse(out.begin(), out.end());
	}
	if (s == Symmetry::rename || s == Symmetry::mirror_rename) {
		if (renaming.size() != alphabet.size()) {
			throw Error("renaming permutation does not match alphabet size");
		}
		for (char& c : out) {
			const auto idx = alphabet.index_of(c);
			if (!idx) {
				throw Error(std::string("letter '") + c + "' outside the alphabet");
			}
			c = alphabet.symbol(renaming[*idx]);
		}
	}
	return Word(std::move(out));
}

WordSet apply_symmetry_set(const WordSet& set, Symmetry s) {
	return apply_symmetry_set(set, s, default_renaming(set.alphabet()));
}

WordSet apply_symmetry_set(const WordSet& set, Symmetry s, const LetterPermutation& renaming) {
	std::vector<Word> out;
	out.reserve(set.size());
	for (const auto& w : set) {
		out.push_back(apply_symmetry(w, s, set.alphabet(), renaming));
	}
	return WordSet(set.alphabet(), std::move(out));
}

} // namespace fcomp
