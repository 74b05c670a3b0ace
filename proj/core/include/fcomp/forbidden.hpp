#pragma once

#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "fcomp/prefix_automaton.hpp"
#include "fcomp/words.hpp"

namespace fcomp {

/// The words excluded from the S_k family at length k: u = b a^(k-1),
/// v = b^(k-1) a, and r = b^(k-1) a^(k-1), the 2-letter overlap of v and u.
/// Over the binary alphabet {a, b}.
struct FamilyContext {
	explicit FamilyContext(std::size_t k);

	std::size_t k;
	Word u;
	Word v;
	Word r;
};

/// Sorted set of 0-based positions j in [0, |w|-1] such that the suffix of
/// w starting at index j is not in Pref(S*).
using ForbiddenSet = std::set<std::size_t>;

/// Definitional computation: one Pref(S*) membership run per suffix.
ForbiddenSet forbidden_positions(const PrefixAutomaton& automaton, const Word& w);

/// Cyclic-run partition of residues mod k. Runs are ordered by their first
/// element; a run that wraps through k-1 -> 0 is placed last.
using BlockForm = std::vector<std::vector<std::size_t>>;

/// Throws Error if a residue is >= k or k == 0.
BlockForm blocks(const ForbiddenSet& residues, std::size_t k);
ForbiddenSet flatten(const BlockForm& form);
/// "[5,6; 8; 10,0,1,2]"
std::string render_blocks(const BlockForm& form);
/// "{0,2}"
std::string render_set(const ForbiddenSet& set);

enum class OccurrenceKind { u, v };

std::string_view to_string(OccurrenceKind kind);

struct Occurrence {
	OccurrenceKind which;
	/// 0-based index of the first letter.
	std::size_t start;
	/// Forbidden positions inside the window, as offsets 0..k-1.
	ForbiddenSet local_forbidden;

	bool operator==(const Occurrence&) const = default;
};

/// All occurrences of u and v in w, ordered by start. Occurrences of u and v
/// are distinct windows; adjacent entries of the list are exactly the
/// consecutive pairs.
std::vector<Occurrence> occurrences(const FamilyContext& ctx, const Word& w, const ForbiddenSet& forbidden);

/// Checks for S_k: for every forbidden j >= k, j-k is forbidden iff
/// j-1 is forbidden or the (k-1)-letter window starting at j-k is a^(k-1) or
/// b^(k-1). Returns the violating j values.
std::vector<std::size_t> check_lemma1(const FamilyContext& ctx, const Word& w, const ForbiddenSet& forbidden);

/// Position 0 is forbidden in every v occurrence; in a u occurrence 0 is
/// forbidden iff k-1 is.
bool check_lemma2_zero(const FamilyContext& ctx, const Occurrence& occ);

/// The relation between two occurrences p (left) and q (right).
struct PairGeometry {
	bool overlap = false;
	/// |x| for the factor p x q; 0 when overlapping.
	std::size_t gap = 0;
};

/// Geometry of p and q; throws Error when p does not start before q or when
/// they overlap in any way other than v followed by u sharing 2 letters.
PairGeometry pair_geometry(const FamilyContext& ctx, const Occurrence& p, const Occurrence& q);

/// Shift inclusion between consecutive occurrences:
/// non-overlapping: F_p ⊆ {(j + |x|) mod k : j ∈ F_q} ∪ {0};
/// overlapping v,u: F_p ⊆ {(j - 2) mod k : j ∈ F_q} ∪ {0}.
bool check_shift_inclusion(const FamilyContext& ctx, const Occurrence& p, const Occurrence& q,
                           const PairGeometry& geometry);

/// Checked form taking the full occurrence list: throws Error("not
/// consecutive") when another occurrence lies strictly between p and q.
bool check_shift_inclusion(const FamilyContext& ctx, const std::vector<Occurrence>& all, std::size_t p_index,
                           std::size_t q_index);

enum class PairCase { none, i, ii, iii };

std::string_view to_string(PairCase c);

struct PairClass {
	PairCase which = PairCase::none;
	/// |x| mod k when the classification depends on it (case iii).
	std::optional<std::size_t> gap_residue;
	/// j for case i; i for case iii.
	std::optional<std::size_t> parameter;
};

/// Matches an increasing pair (|F_p| > |F_q|) against the three closed forms
/// of an increasing pair. Returns case none when the pair is not
/// increasing or matches no form.
///
///   i:   p = q = u, F_p = {0, k-j..k-1}, F_q = {1..j}, 1 <= j <= k-2
///   ii:  p = v, q = u overlapping, F_p = {0, k-1}, F_q = {1}
///   iii: p = u, q = v, F_q = {0..i} ∪ {j..k-1} with j != i+1 (j = k allowed
///        for an empty tail), F_p = {0, j-i-1..k-1}, |x| ≡ k-1-i (mod k)
PairClass classify_pair(const FamilyContext& ctx, OccurrenceKind p, OccurrenceKind q, const ForbiddenSet& f_p,
                        const ForbiddenSet& f_q, const PairGeometry& geometry);

enum class PairVerdict { consistent, unconstrained, inconsistent };

std::string_view to_string(PairVerdict v);

struct PairReport {
	std::size_t p_index;
	std::size_t q_index;
	PairGeometry geometry;
	bool shift_inclusion_ok;
	bool increasing;
	PairClass classification;
	/// Which statement constrained the pair ("increase", "uu-equal", ...).
	std::string rule;
	PairVerdict verdict;
	std::string detail;
};

struct StructureReport {
	std::size_t k = 0;
	Word word;
	bool uncompletable = false;
	bool has_u_prefix = false;
	bool has_v_suffix = false;
	ForbiddenSet forbidden;
	std::vector<Occurrence> occurrences;
	std::vector<std::size_t> lemma1_violations;
	std::vector<std::size_t> lemma2_violations;  // occurrence indices
	std::vector<PairReport> pairs;
	std::size_t increasing_occurrences = 0;

	std::size_t inconsistencies() const;
	/// Prefix/suffix shape, no inconsistencies, >= k-1 increasing occurrences.
	bool consistent_minimal() const;
};

/// Checks the known structure of minimal uncompletable words for S_k on a
/// concrete word: u prefix and v suffix, check_lemma1 and check_lemma2_zero, shift
/// inclusions, the increase classification of every increasing pair, and
/// the equal-cardinality pair rules. Pairs outside every hypothesis are
/// reported as unconstrained. Throws Error when w is not uncompletable.
StructureReport validate_minimal_structure(const FamilyContext& ctx, const Word& w, const PrefixAutomaton& s_k);

} // namespace fcomp
