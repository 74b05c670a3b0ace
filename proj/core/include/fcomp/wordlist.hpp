#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "fcomp/words.hpp"

namespace fcomp {

/// Malformed word-list input. `line()` is 1-based.
class ParseError : public Error {
public:
	ParseError(std::size_t line, const std::string& what)
		: Error("line " + std::to_string(line) + ": " + what), line_(line) {}
	std::size_t line() const noexcept { return line_; }

private:
	std::size_t line_;
};

struct LoadedSet {
	WordSet set;
	std::vector<std::string> warnings;
};

/// Parses the word-list text format: one word per line over [a-z], '#'
/// comment lines skipped, duplicates dropped with a warning.
///
/// An empty or all-blank line is the empty word and is rejected. When
/// `alphabet` is not given, it is {a, b} extended with every letter used,
/// in alphabetical order.
LoadedSet parse_word_list(std::string_view text, const std::optional<Alphabet>& alphabet = {});

LoadedSet load_set(const std::filesystem::path& path, const std::optional<Alphabet>& alphabet = {});

/// Inverse of parse_word_list (no comments, shortlex order).
std::string render_word_list(const WordSet& set);

} // namespace fcomp
