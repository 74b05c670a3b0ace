#include "fcomp/forbidden.hpp"

#include <algorithm>
#include <sstream>

namespace fcomp {

FamilyContext::FamilyContext(std::size_t k_) : k(k_) {
	if (k < 3) {
		throw Error("family context needs k >= 3");
	}
	u = Word("b") + power('a', k - 1);
	v = power('b', k - 1) + Word("a");
	r = power('b', k - 1) + power('a', k - 1);
}

ForbiddenSet forbidden_positions(const PrefixAutomaton& automaton, const Word& w) {
	ForbiddenSet out;
	for (std::size_t j = 0; j < w.size(); ++j) {
		if (!automaton.member_pref_star(w.substr(j))) {
			out.insert(j);
		}
	}
	return out;
}

BlockForm blocks(const ForbiddenSet& residues, std::size_t k) {
	if (k == 0) {
		throw Error("block form needs k >= 1");
	}
	BlockForm runs;
	for (std::size_t r : residues) {
		if (r >= k) {
			throw Error("residue " + std::to_string(r) + " out of range for k = " + std::to_string(k));
		}
		if (runs.empty() || runs.back().back() + 1 != r) {
			runs.emplace_back();
		}
		runs.back().push_back(r);
	}
	if (runs.size() > 1 && runs.front().front() == 0 && runs.back().back() == k - 1) {
		auto head = std::move(runs.front());
		runs.erase(runs.begin());
		runs.back().insert(runs.back().end(), head.begin(), head.end());
	}
	return runs;
}

ForbiddenSet flatten(const BlockForm& form) {
	ForbiddenSet out;
	for (const auto& run : form) {
		out.insert(run.begin(), run.end());
	}
	return out;
}

std::string render_blocks(const BlockForm& form) {
	std::ostringstream out;
	out << '[';
	for (std::size_t b = 0; b < form.size(); ++b) {
		if (b) {
			out << "; ";
		}
		for (std::size_t i = 0; i < form[b].size(); ++i) {
			if (i) {
				out << ',';
			}
			out << form[b][i];
		}
	}
	out << ']';
	return out.str();
}

std::string render_set(const ForbiddenSet& set) {
	std::ostringstream out;
	out << '{';
	bool first = true;
	for (auto j : set) {
		if (!first) {
			out << ',';
		}
		first = false;
		out << j;
	}
	out << '}';
	return out.str();
}

std::string_view to_string(OccurrenceKind kind) { return kind == OccurrenceKind::u ? "u" : "v"; }

std::vector<Occurrence> occurrences(const FamilyContext& ctx, const Word& w, const ForbiddenSet& forbidden) {
	std::vector<Occurrence> out;
	const std::size_t k = ctx.k;
	if (w.size() < k) {
		return out;
	}
	const std::string& s = w.str();
	for (std::size_t start = 0; start + k <= s.size(); ++start) {
		std::optional<OccurrenceKind> which;
		if (s.compare(start, k, ctx.u.str()) == 0) {
			which = OccurrenceKind::u;
		} else if (s.compare(start, k, ctx.v.str()) == 0) {
			which = OccurrenceKind::v;
		}
		if (!which) {
			continue;
		}
		Occurrence occ{*which, start, {}};
		for (auto it = forbidden.lower_bound(start); it != forbidden.end() && *it < start + k; ++it) {
			occ.local_forbidden.insert(*it - start);
		}
		out.push_back(std::move(occ));
	}
	return out;
}

std::vector<std::size_t> check_lemma1(const FamilyContext& ctx, const Word& w, const ForbiddenSet& forbidden) {
	std::vector<std::size_t> violations;
	const std::size_t k = ctx.k;
	const Word all_a = power('a', k - 1);
	const Word all_b = power('b', k - 1);
	for (std::size_t j : forbidden) {
		if (j < k) {
			continue;
		}
		const Word window = w.substr(j - k, k - 1);
		const bool lhs = forbidden.contains(j - k);
		const bool rhs = forbidden.contains(j - 1) || window == all_a || window == all_b;
		if (lhs != rhs) {
			violations.push_back(j);
		}
	}
	return violations;
}

bool check_lemma2_zero(const FamilyContext& ctx, const Occurrence& occ) {
	const bool zero = occ.local_forbidden.contains(0);
	if (occ.which == OccurrenceKind::v) {
		return zero;
	}
	return zero == occ.local_forbidden.contains(ctx.k - 1);
}

PairGeometry pair_geometry(const FamilyContext& ctx, const Occurrence& p, const Occurrence& q) {
	if (p.start >= q.start) {
		throw Error("left occurrence must start before the right one");
	}
	const std::size_t k = ctx.k;
	if (q.start >= p.start + k) {
		return PairGeometry{false, q.start - p.start - k};
	}
	if (p.which == OccurrenceKind::v && q.which == OccurrenceKind::u && q.start == p.start + k - 2) {
		return PairGeometry{true, 0};
	}
	throw Error("occurrences overlap in an impossible way");
}

bool check_shift_inclusion(const FamilyContext& ctx, const Occurrence& p, const Occurrence& q,
                           const PairGeometry& geometry) {
	const std::size_t k = ctx.k;
	ForbiddenSet allowed{0};
	for (std::size_t j : q.local_forbidden) {
		allowed.insert(geometry.overlap ? (j + k - 2) % k : (j + geometry.gap) % k);
	}
	return std::includes(allowed.begin(), allowed.end(), p.local_forbidden.begin(), p.local_forbidden.end());
}

bool check_shift_inclusion(const FamilyContext& ctx, const std::vector<Occurrence>& all, std::size_t p_index,
                           std::size_t q_index) {
	if (p_index >= all.size() || q_index >= all.size() || p_index >= q_index) {
		throw Error("occurrence indices out of order");
	}
	if (q_index != p_index + 1) {
		throw Error("not consecutive");
	}
	const auto& p = all[p_index];
	const auto& q = all[q_index];
	return check_shift_inclusion(ctx, p, q, pair_geometry(ctx, p, q));
}

std::string_view to_string(PairCase c) {
	switch (c) {
	case PairCase::none: return "none";
	case PairCase::i: return "i";
	case PairCase::ii: return "ii";
	case PairCase::iii: return "iii";
	}
	return "?";
}

std::string_view to_string(PairVerdict v) {
	switch (v) {
	case PairVerdict::consistent: return "consistent";
	case PairVerdict::unconstrained: return "unconstrained";
	case PairVerdict::inconsistent: return "inconsistent";
	}
	return "?";
}

namespace {

ForbiddenSet range(std::size_t first, std::size_t last) {
	ForbiddenSet out;
	for (std::size_t j = first; j <= last; ++j) {
		out.insert(j);
	}
	return out;
}

ForbiddenSet zero_and_range(std::size_t first, std::size_t last) {
	auto out = first <= last ? range(first, last) : ForbiddenSet{};
	out.insert(0);
	return out;
}

// i such that f == {0} ∪ {i..last} with lo <= i <= last.
std::optional<std::size_t> zero_plus_run(const ForbiddenSet& f, std::size_t lo, std::size_t last) {
	for (std::size_t i = lo; i <= last; ++i) {
		if (f == zero_and_range(i, last)) {
			return i;
		}
	}
	return std::nullopt;
}

} // namespace

PairClass classify_pair(const FamilyContext& ctx, OccurrenceKind p, OccurrenceKind q, const ForbiddenSet& f_p,
                        const ForbiddenSet& f_q, const PairGeometry& geometry) {
	PairClass out;
	const std::size_t k = ctx.k;
	if (f_p.size() <= f_q.size()) {
		return out;
	}
	using K = OccurrenceKind;
	if (p == K::u && q == K::u && !geometry.overlap) {
		const std::size_t j = f_q.size();
		if (j >= 1 && j <= k - 2 && f_q == range(1, j) && f_p == zero_and_range(k - j, k - 1)) {
			out.which = PairCase::i;
			out.parameter = j;
			out.gap_residue = geometry.gap % k;
		}
		return out;
	}
	if (p == K::v && q == K::u && geometry.overlap) {
		if (f_p == ForbiddenSet{0, k - 1} && f_q == ForbiddenSet{1}) {
			out.which = PairCase::ii;
		}
		return out;
	}
	if (p == K::u && q == K::v && !geometry.overlap) {
		if (!f_q.contains(0)) {
			return out;
		}
		std::size_t i = 0;
		while (i + 1 < k && f_q.contains(i + 1)) {
			++i;
		}
		std::size_t j = k;
		for (std::size_t x = i + 2; x < k; ++x) {
			if (f_q.contains(x)) {
				j = x;
				break;
			}
		}
		// j ≡ i+1 (mod k) means F_q is everything.
		if (i + 1 == k) {
			return out;
		}
		ForbiddenSet expected_q = range(0, i);
		if (j < k) {
			auto tail = range(j, k - 1);
			expected_q.insert(tail.begin(), tail.end());
		}
		if (f_q != expected_q) {
			return out;
		}
		const std::size_t residue = geometry.gap % k;
		if (f_p == zero_and_range(j - i - 1, k - 1) && residue == (k - 1 - i) % k) {
			out.which = PairCase::iii;
			out.parameter = i;
			out.gap_residue = residue;
		}
		return out;
	}
	return out;
}

std::size_t StructureReport::inconsistencies() const {
	std::size_t n = lemma1_violations.size() + lemma2_violations.size();
	for (const auto& p : pairs) {
		n += p.verdict == PairVerdict::inconsistent ? 1 : 0;
	}
	return n;
}

bool StructureReport::consistent_minimal() const {
	return uncompletable && has_u_prefix && has_v_suffix && inconsistencies() == 0 && increasing_occurrences + 1 >= k;
}

StructureReport validate_minimal_structure(const FamilyContext& ctx, const Word& w, const PrefixAutomaton& s_k) {
	if (!s_k.is_uncompletable(w)) {
		throw Error("word '" + w.str() + "' is not uncompletable");
	}
	const std::size_t k = ctx.k;
	StructureReport rep;
	rep.k = k;
	rep.word = w;
	rep.uncompletable = true;
	rep.has_u_prefix = w.starts_with(ctx.u);
	rep.has_v_suffix = w.ends_with(ctx.v);
	rep.forbidden = forbidden_positions(s_k, w);
	rep.occurrences = occurrences(ctx, w, rep.forbidden);
	rep.lemma1_violations = check_lemma1(ctx, w, rep.forbidden);
	for (std::size_t i = 0; i < rep.occurrences.size(); ++i) {
		if (!check_lemma2_zero(ctx, rep.occurrences[i])) {
			rep.lemma2_violations.push_back(i);
		}
	}

	using K = OccurrenceKind;
	for (std::size_t idx = 0; idx + 1 < rep.occurrences.size(); ++idx) {
		const auto& p = rep.occurrences[idx];
		const auto& q = rep.occurrences[idx + 1];
		const auto& fp = p.local_forbidden;
		const auto& fq = q.local_forbidden;

		PairReport pr{};
		pr.p_index = idx;
		pr.q_index = idx + 1;
		pr.geometry = pair_geometry(ctx, p, q);
		pr.shift_inclusion_ok = check_shift_inclusion(ctx, p, q, pr.geometry);
		pr.increasing = fp.size() > fq.size();
		pr.verdict = PairVerdict::unconstrained;

		auto fail = [&](std::string rule, std::string detail) {
			pr.rule = std::move(rule);
			pr.verdict = PairVerdict::inconsistent;
			pr.detail = std::move(detail);
		};
		auto pass = [&](std::string rule) {
			pr.rule = std::move(rule);
			pr.verdict = PairVerdict::consistent;
		};

		if (pr.increasing) {
			++rep.increasing_occurrences;
			pr.classification = classify_pair(ctx, p.which, q.which, fp, fq, pr.geometry);
			if (fp.size() != fq.size() + 1) {
				fail("increase", "forbidden count rose by more than one");
			} else if (pr.classification.which == PairCase::none) {
				fail("increase", "increasing pair matches no closed form");
			} else {
				pass("increase");
			}
		} else if (p.which == K::v && q.which == K::v && k >= 3 && zero_plus_run(fq, 1, k - 2)) {
			if (fp.size() < fq.size()) {
				pass("vv-decrease");
			} else {
				fail("vv-decrease", "v,v pair with F_q = {0,i..k-2} did not decrease");
			}
		} else if (fp.size() == fq.size()) {
			if (p.which == K::u && q.which == K::u && zero_plus_run(fq, 1, k - 1)) {
				if (fp == fq) {
					pass("uu-equal");
				} else {
					fail("uu-equal", "equal-size u,u pair with F_q = {0,i..k-1} has F_p != F_q");
				}
			} else if (auto i = zero_plus_run(fq, 2, k - 1); p.which == K::v && q.which == K::u && i) {
				if (pr.geometry.overlap && fp == zero_and_range(*i - 1, k - 2)) {
					pass("vu-equal");
				} else {
					fail("vu-equal", "equal-size v,u pair is not the overlapping {0,i-1..k-2} shape");
				}
			} else if (auto i2 = zero_plus_run(fq, 2, k - 2);
			           p.which == K::u && q.which == K::v && i2 && blocks(fp, k).size() == 1) {
				auto first = zero_and_range(*i2 + 2, k - 1);
				first.insert(1);
				const auto second = zero_and_range(*i2 + 1, k - 1);
				if (fp == first || fp == second) {
					pass("uv-equal");
				} else {
					fail("uv-equal", "equal-size single-block u,v pair has an unexpected F_p");
				}
			}
		}
		if (!pr.shift_inclusion_ok) {
			fail(pr.rule.empty() ? "shift" : pr.rule, "shift inclusion fails");
		}
		rep.pairs.push_back(std::move(pr));
	}
	return rep;
}

} // namespace fcomp
