#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "fcomp/words.hpp"
#include "oracle.hpp"

namespace support {

inline oracle::Words plain(const fcomp::WordSet& s) {
	oracle::Words out;
	for (const auto& w : s) {
		out.push_back(w.str());
	}
	return out;
}

// Subset of Σ^{<=n} selected by the bits of `mask`, in shortlex order.
inline fcomp::WordSet subset_of(std::size_t n, std::uint64_t mask) {
	const auto universe = fcomp::words_up_to(fcomp::Alphabet(), n);
	std::vector<fcomp::Word> words;
	for (std::size_t i = 0; i < universe.size(); ++i) {
		if (mask >> i & 1U) {
			words.push_back(universe[i]);
		}
	}
	return fcomp::WordSet(fcomp::Alphabet(), std::move(words));
}

inline fcomp::Word random_word(std::mt19937_64& rng, std::size_t len, const std::string& letters = "ab") {
	std::string w;
	for (std::size_t i = 0; i < len; ++i) {
		w += letters[rng() % letters.size()];
	}
	return fcomp::Word(w);
}

} // namespace support
