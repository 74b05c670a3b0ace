#include <doctest.h>

#include "fcomp/families.hpp"
#include "fcomp/shortest_word.hpp"
#include "support.hpp"

using namespace fcomp;

TEST_CASE("trivial sets") {
	CHECK(decide(WordSet(Alphabet(), {"a", "b"})).complete());
	auto v = decide(WordSet(Alphabet(), {"a"}));
	REQUIRE(v.non_complete());
	CHECK(v.uwl == 1u);
	CHECK(v.witness == Word("b"));
	auto ab = decide(WordSet(Alphabet(), {"ab"}));
	CHECK(ab.uwl == 2u);
	CHECK(ab.witness == Word("aa"));
}

TEST_CASE("all subsets of Σ^{<=2} agree with both oracles") {
	for (std::uint64_t mask = 1; mask < 64; ++mask) {
		const WordSet set = support::subset_of(2, mask);
		const auto plain = support::plain(set);
		CAPTURE(to_string(set));
		const auto v = decide(set);
		REQUIRE(v.outcome != Outcome::resource_limit);
		const auto ref = oracle::decide(plain, "ab");
		CHECK(v.complete() == ref.complete);
		if (v.non_complete()) {
			CHECK(v.witness->str() == ref.witness);
			CHECK(*v.uwl == v.witness->size());
			const auto first = oracle::first_uncompletable(plain, "ab", *v.uwl);
			REQUIRE(first);
			CHECK(*first == v.witness->str());
			CHECK(boost::multiprecision::cpp_int(*v.uwl) <= exp_bound(set));
		} else {
			CHECK_FALSE(oracle::first_uncompletable(plain, "ab", 12));
		}
	}
}

TEST_CASE("ternary alphabet") {
	const WordSet set(Alphabet("abc"), {"a", "b", "cc", "ca"});
	const auto v = decide(set);
	const auto ref = oracle::decide(support::plain(set), "abc");
	CHECK(v.complete() == ref.complete);
	if (!ref.complete) {
		CHECK(v.witness->str() == ref.witness);
	}
}

TEST_CASE("family values") {
	CHECK(decide(s_k(3)).uwl == 13u);
	const auto v4 = decide(s_k(4));
	CHECK(v4.uwl == 25u);
	CHECK(v4.witness->starts_with(Word("baaa")));
	CHECK(v4.witness->ends_with(Word("bbba")));
	CHECK(decide(s_k(5)).uwl == 53u);
	CHECK(decide(t_k(4)).uwl == 25u);
	CHECK(decide(extreme_set("extreme4")).uwl == 31u);
}

TEST_CASE("witness is uncompletable and every proper factor is completable") {
	for (auto set : {s_k(3), s_k(4), extreme_set("extreme3b")}) {
		const PrefixAutomaton a(set);
		const auto v = decide(a);
		REQUIRE(v.witness);
		const Word& w = *v.witness;
		CHECK(a.is_uncompletable(w));
		CHECK(a.member_fact_star(w.substr(1)));
		CHECK(a.member_fact_star(w.substr(0, w.size() - 1)));
	}
}

TEST_CASE("determinism") {
	const auto a = decide(s_k(5));
	const auto b = decide(s_k(5));
	CHECK(a.witness == b.witness);
	CHECK(a.explored_states == b.explored_states);
}

TEST_CASE("bound") {
	const WordSet s3 = s_k(3);
	CHECK(exp_bound(s3) == boost::multiprecision::pow(boost::multiprecision::cpp_int(2), 15));
	CHECK(boost::multiprecision::cpp_int(*decide(s3).uwl) <= exp_bound(s3));
}

TEST_CASE("limits") {
	SearchLimits few;
	few.max_states = 5;
	auto v = decide(s_k(4), few);
	CHECK(v.outcome == Outcome::resource_limit);
	CHECK_FALSE(v.limit_reason.empty());

	SearchLimits shallow;
	shallow.max_length = 24;
	CHECK(decide(s_k(4), shallow).outcome == Outcome::resource_limit);
	shallow.max_length = 25;
	CHECK(decide(s_k(4), shallow).uwl == 25u);

	SearchLimits instant;
	instant.time_budget = std::chrono::milliseconds(0);
	CHECK(decide(s_k(8), instant).outcome == Outcome::resource_limit);
}

TEST_CASE("all minimal words") {
	const auto m = all_minimal_words(s_k(3));
	REQUIRE(m.outcome == Outcome::non_complete);
	CHECK(m.uwl == 13u);
	REQUIRE_FALSE(m.words.empty());
	CHECK(m.words.front() == *decide(s_k(3)).witness);

	const auto plain = support::plain(s_k(3));
	std::vector<Word> expected;
	for (const auto& w : oracle::words_of_length("ab", 13)) {
		if (!oracle::in_fact_star(plain, w)) {
			expected.emplace_back(w);
		}
	}
	CHECK(m.words == expected);

	SearchLimits cap;
	cap.max_words = 1;
	const auto capped = all_minimal_words(s_k(4), cap);
	CHECK(capped.words.size() == 1);
	CHECK(capped.truncated);

	CHECK(all_minimal_words(WordSet(Alphabet(), {"a", "b"})).outcome == Outcome::complete);
}
