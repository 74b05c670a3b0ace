#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "fcomp/words.hpp"

namespace fcomp {

// Generators for the binary word-set families studied here. All sets are
// over the alphabet {a, b}.

/// (Σ^k \ {b a^(k-1), b^(k-1) a}) ∪ (Σ^(k-1) \ {a^(k-1), b^(k-1)}); k >= 3.
WordSet s_k(std::size_t k);

/// (Σ^k \ {a^(k-1) b, a b^(k-1)}) ∪ (Σ^(k-1) \ {a^(k-1), b^(k-1)}); k >= 3.
/// The mirror image and the letter-swap image of s_k(k).
WordSet t_k(std::size_t k);

struct RkExpansion {
	WordSet set;
	/// Words produced by the union's terms before duplicates were merged.
	std::size_t raw_count = 0;
};

/// Σ^k \ {a^(k-2) bb} ∪ Σ b a^(k-4) Σ ∪ Σ b a ∪ b^4 ∪ J_k, where
/// J_k = ∪_{i=1..k-3} (b a^i Σ ∪ a^i b). Every Σ expands to both letters.
/// Defined for k > 6.
RkExpansion r_k_expanded(std::size_t k);
WordSet r_k(std::size_t k);

/// The J_k term alone, for inspection.
WordSet j_k(std::size_t k);

/// Named extremal sets: "extreme3a" (= S_3), "extreme3b", "extreme4".
std::map<std::string, WordSet> extreme_sets();
WordSet extreme_set(const std::string& name);

/// Wildcard assignment for the omega witness word: k >= 4 and one
/// letter per slot (1 + 2(k-3) slots), left to right.
struct OmegaSpec {
	std::size_t k = 4;
	/// Empty means all 'a'.
	std::string fill;

	static std::size_t slot_count(std::size_t k) { return 1 + 2 * (k - 3); }
};

/// u · ∏_{i=1..k-3} (r a^i · b^(k-2-i) r ·) · v, where each · is the next
/// fill letter. Length 5k² - 17k + 13.
Word omega(const OmegaSpec& spec);

/// 5k² - 17k + 13, for k >= 4.
std::int64_t s_formula(std::size_t k);

struct RFormula {
	std::int64_t value;
	/// True outside 7 <= k <= 12, where the value was never confirmed.
	bool conjectured;
};

/// 3k² - 9k + 1.
RFormula r_formula(std::size_t k);

} // namespace fcomp
