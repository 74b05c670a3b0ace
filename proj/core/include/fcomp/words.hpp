#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace fcomp {

/// Base exception for invalid input (bad words, empty sets, out-of-range
/// family parameters).
class Error : public std::runtime_error {
public:
	using std::runtime_error::runtime_error;
};

/// Index of a symbol inside its Alphabet; 0 is the smallest letter.
using Letter = std::uint8_t;

/// Ordered list of distinct symbols. The order defines the lexicographic
/// order on words. Defaults to {a, b}.
class Alphabet {
public:
	Alphabet();
	explicit Alphabet(std::string_view letters);

	static Alphabet binary() { return Alphabet(); }

	std::size_t size() const noexcept { return letters_.size(); }
	std::string_view letters() const noexcept { return letters_; }
	char symbol(Letter l) const { return letters_.at(l); }
	std::optional<Letter> index_of(char c) const noexcept;
	bool contains(char c) const noexcept { return index_[static_cast<unsigned char>(c)] >= 0; }
	bool is_binary() const noexcept { return letters_.size() == 2; }

	bool operator==(const Alphabet& other) const noexcept { return letters_ == other.letters_; }

private:
	std::string letters_;
	std::array<std::int16_t, 256> index_{};
};

/// A finite sequence of symbols. Stored as raw characters; the alphabet is
/// supplied wherever order or letter indices matter.
class Word {
public:
	Word() = default;
	explicit Word(std::string letters) : letters_(std::move(letters)) {}
	explicit Word(const char* letters) : letters_(letters) {}

	const std::string& str() const noexcept { return letters_; }
	std::size_t size() const noexcept { return letters_.size(); }
	bool empty() const noexcept { return letters_.empty(); }
	char operator[](std::size_t i) const { return letters_[i]; }
	auto begin() const noexcept { return letters_.begin(); }
	auto end() const noexcept { return letters_.end(); }

	Word substr(std::size_t pos, std::size_t len = std::string::npos) const {
		return Word(letters_.substr(pos, len));
	}
	bool starts_with(const Word& p) const noexcept { return letters_.starts_with(p.letters_); }
	bool ends_with(const Word& s) const noexcept { return letters_.ends_with(s.letters_); }

	Word& operator+=(const Word& rhs) {
		letters_ += rhs.letters_;
		return *this;
	}
	Word& operator+=(char c) {
		letters_ += c;
		return *this;
	}
	friend Word operator+(Word lhs, const Word& rhs) { return lhs += rhs; }

	/// Raw character order; use lex_compare for the alphabet's shortlex order.
	friend auto operator<=>(const Word&, const Word&) = default;

private:
	std::string letters_;
};

/// `c` repeated `n` times.
Word power(char c, std::size_t n);

/// Shortlex order: shorter words first, equal lengths compared letterwise in
/// alphabet order.
std::strong_ordering lex_compare(const Alphabet& alphabet, const Word& lhs, const Word& rhs);

/// Strict-weak-ordering functor over lex_compare.
struct ShortlexLess {
	const Alphabet* alphabet;
	bool operator()(const Word& lhs, const Word& rhs) const {
		return lex_compare(*alphabet, lhs, rhs) < 0;
	}
};

/// Finite set of non-empty words over an alphabet, kept in shortlex order.
class WordSet {
public:
	WordSet() = default;
	/// Duplicates are merged. Throws Error on the empty word or on letters
	/// outside the alphabet.
	WordSet(Alphabet alphabet, std::vector<Word> words);
	WordSet(Alphabet alphabet, std::initializer_list<const char*> words);

	const Alphabet& alphabet() const noexcept { return alphabet_; }
	const std::vector<Word>& words() const noexcept { return words_; }
	auto begin() const noexcept { return words_.begin(); }
	auto end() const noexcept { return words_.end(); }

	/// m: number of elements.
	std::size_t size() const noexcept { return words_.size(); }
	bool empty() const noexcept { return words_.empty(); }
	/// ||S||: sum of word lengths.
	std::size_t total_length() const noexcept { return total_length_; }
	/// k: maximal word length (0 for the empty set).
	std::size_t max_length() const noexcept { return max_length_; }

	bool contains(const Word& w) const;
	WordSet with(const Word& w) const;

	bool operator==(const WordSet& other) const noexcept {
		return alphabet_ == other.alphabet_ && words_ == other.words_;
	}

private:
	Alphabet alphabet_;
	std::vector<Word> words_;
	std::size_t total_length_ = 0;
	std::size_t max_length_ = 0;
};

std::string to_string(const WordSet& set);

/// All words of length exactly `n`, in shortlex order.
std::vector<Word> words_of_length(const Alphabet& alphabet, std::size_t n);
/// All non-empty words of length at most `n`, in shortlex order.
std::vector<Word> words_up_to(const Alphabet& alphabet, std::size_t n);

enum class Symmetry { identity, mirror, rename, mirror_rename };

inline constexpr std::array<Symmetry, 4> kAllSymmetries = {
	Symmetry::identity, Symmetry::mirror, Symmetry::rename, Symmetry::mirror_rename};

std::string_view to_string(Symmetry s);

/// Image of each letter index under renaming. The default reverses the
/// alphabet, which is the swap a <-> b on a binary alphabet.
using LetterPermutation = std::vector<Letter>;

LetterPermutation default_renaming(const Alphabet& alphabet);

Word apply_symmetry(const Word& w, Symmetry s, const Alphabet& alphabet);
Word apply_symmetry(const Word& w, Symmetry s, const Alphabet& alphabet,
                    const LetterPermutation& renaming);
WordSet apply_symmetry_set(const WordSet& set, Symmetry s);
WordSet apply_symmetry_set(const WordSet& set, Symmetry s, const LetterPermutation& renaming);

} // namespace fcomp
