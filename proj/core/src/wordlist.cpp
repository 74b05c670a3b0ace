#include "fcomp/wordlist.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

namespace fcomp {

LoadedSet parse_word_list(std::string_view text, const std::optional<Alphabet>& alphabet) {
	std::vector<Word> words;
	std::vector<std::string> warnings;
	std::set<std::string> seen;
	std::string used = "ab";

	std::size_t line_no = 0;
	std::size_t pos = 0;
	while (pos < text.size()) {
		auto eol = text.find('\n', pos);
		if (eol == std::string_view::npos) {
			eol = text.size();
		}
		std::string_view line = text.substr(pos, eol - pos);
		pos = eol + 1;
		++line_no;

		if (!line.empty() && line.back() == '\r') {
			line.remove_suffix(1);
		}
		if (!line.empty() && line.front() == '#') {
			continue;
		}
		// Trailing whitespace is tolerated; an empty or all-blank line is an
		// attempt to list the empty word.
		const auto last = line.find_last_not_of(" \t");
		if (last == std::string_view::npos) {
			throw ParseError(line_no, "empty word is not allowed");
		}
		line = line.substr(0, last + 1);

		for (char c : line) {
			if (c < 'a' || c > 'z') {
				throw ParseError(line_no, std::string("letter '") + c + "' outside [a-z]");
			}
			if (alphabet && !alphabet->contains(c)) {
				throw ParseError(line_no, std::string("letter '") + c + "' outside the alphabet");
			}
			if (used.find(c) == std::string::npos) {
				used += c;
			}
		}
		std::string w(line);
		if (!seen.insert(w).second) {
			warnings.push_back("line " + std::to_string(line_no) + ": duplicate word '" + w +
			                   "' ignored");
			continue;
		}
		words.emplace_back(std::move(w));
	}

	std::sort(used.begin(), used.end());
	Alphabet alpha = alphabet ? *alphabet : Alphabet(used);
	return LoadedSet{WordSet(std::move(alpha), std::move(words)), std::move(warnings)};
}

LoadedSet load_set(const std::filesystem::path& path, const std::optional<Alphabet>& alphabet) {
	std::ifstream in(path, std::ios::binary);
	if (!in) {
		throw Error("cannot open " + path.string());
	}
	std::ostringstream buf;
	buf << in.rdbuf();
	return parse_word_list(buf.str(), alphabet);
}

std::string render_word_list(const WordSet& set) {
	std::string out;
	for (const auto& w : set) {
		out += w.str();
		out += '\n';
	}
	return out;
}

} // namespace fcomp
