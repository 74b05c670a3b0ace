#include <doctest.h>

#include <random>

#include "fcomp/families.hpp"
#include "fcomp/search.hpp"
#include "support.hpp"

using namespace fcomp;

TEST_CASE("small oracle agrees with decide") {
	for (std::size_t n = 1; n <= 3; ++n) {
		detail::SmallCompletenessOracle small(n);
		const std::uint64_t count = std::uint64_t{1} << ((std::size_t{2} << n) - 2);
		std::mt19937_64 rng(n);
		for (int trial = 0; trial < 600; ++trial) {
			const std::uint64_t mask = count <= 600 ? trial % count : rng() % count;
			if (mask == 0) {
				continue;
			}
			const WordSet set = support::subset_of(n, mask);
			CAPTURE(to_string(set));
			CHECK(small.is_complete(static_cast<std::uint32_t>(mask)) == decide(set).complete());
		}
	}
	detail::SmallCompletenessOracle four(4);
	std::mt19937_64 rng(4);
	for (int trial = 0; trial < 300; ++trial) {
		const auto mask = static_cast<std::uint32_t>(rng() & rng() & 0x3fffffffU);
		if (mask == 0) {
			continue;
		}
		CHECK(four.is_complete(mask) == decide(support::subset_of(4, mask)).complete());
	}
}

TEST_CASE("canonical form") {
	const WordSet s3 = s_k(3);
	const WordSet c = canonical_form(s3);
	CHECK(canonical_form(c) == c);
	for (auto sym : kAllSymmetries) {
		CHECK(canonical_form(apply_symmetry_set(s3, sym)) == c);
		CHECK(compare_serialized(c, apply_symmetry_set(s3, sym)) <= 0);
	}
	CHECK(orbit_size(s3) == 2);
	CHECK(orbit_size(WordSet(Alphabet(), {"a", "b"})) == 1);
	CHECK(orbit_size(WordSet(Alphabet(), {"a", "ab"})) == 4);
	CHECK(orbit_size(extreme_set("extreme4")) == 4);
}

TEST_CASE("maximality") {
	const WordSet universe(Alphabet(), words_up_to(Alphabet(), 3));
	CHECK(is_maximal_non_complete(s_k(3), universe));
	CHECK(is_maximal_non_complete(extreme_set("extreme3b"), universe));
	CHECK_FALSE(is_maximal_non_complete(WordSet(Alphabet(), {"ab"}), universe));
	CHECK_FALSE(is_maximal_non_complete(WordSet(Alphabet(), {"a", "b"}), universe));
}

TEST_CASE("length filters") {
	CHECK(parse_length_filter("4:11") == LengthFilter{4, 11});
	CHECK_THROWS_AS(parse_length_filter("4"), Error);
	CHECK_THROWS_AS(parse_length_filter("x:1"), Error);
	CHECK_THROWS_AS(exhaustive_search({4, {}, true, 1}), Error);
	CHECK_THROWS_AS(exhaustive_search({5, {{5, 1}}, true, 1}), Error);
	CHECK_THROWS_AS(exhaustive_search({3, {{4, 1}}, true, 1}), Error);
}

TEST_CASE("n = 1 and n = 2") {
	const auto r1 = exhaustive_search({1, {}, true, 1});
	REQUIRE(r1.classes.size() == 1);
	CHECK(r1.classes[0].canonical == WordSet(Alphabet(), {"a"}));
	CHECK(r1.classes[0].orbit_size == 2);
	CHECK(r1.classes[0].uwl == 1);
	CHECK(r1.maximal_sets == 2);

	const auto r2 = exhaustive_search({2, {}, true, 1});
	CHECK(r2.classes.size() == 3);
	CHECK(r2.classes.front().uwl == 5);
}

TEST_CASE("n = 2 against brute force") {
	const auto universe = words_up_to(Alphabet(), 2);
		std::size_t maximal = 0;
	for (std::uint64_t mask = 1; mask < 64; ++mask) {
		const WordSet set = support::subset_of(2, mask);
		if (oracle::decide(support::plain(set), "ab").complete) {
			continue;
		}
		bool is_max = true;
		for (const auto& w : universe) {
			if (!set.contains(w) && !oracle::decide(support::plain(set.with(w)), "ab").complete) {
				is_max = false;
			}
		}
		maximal += is_max ? 1 : 0;
	}
	CHECK(exhaustive_search({2, {}, true, 1}).maximal_sets == maximal);
}

TEST_CASE("n = 3") {
	const auto r = exhaustive_search({3, {}, true, 1});
	CHECK(r.maximal_sets == 58);
	CHECK(r.classes.size() == 19);
	std::size_t orbit_total = 0;
	for (const auto& c : r.classes) {
		orbit_total += c.orbit_size;
		CHECK(decide(c.canonical).uwl == c.uwl);
	}
	CHECK(orbit_total == r.maximal_sets);
	const auto top = r.top_classes();
	REQUIRE(top.size() == 2);
	CHECK(top[0].uwl == 13);
	CHECK(top[0].canonical == canonical_form(extreme_set("extreme3b")));
	CHECK(top[1].canonical == canonical_form(s_k(3)));

	const auto plain = exhaustive_search({3, {}, false, 1});
	CHECK(plain.classes.size() == 58);
	CHECK(plain.top_classes().size() == 4);
}

TEST_CASE("filters and threads do not change the answer") {
	const auto one = exhaustive_search({3, {{3, 6}}, true, 1});
	const auto four = exhaustive_search({3, {{3, 6}}, true, 4});
	REQUIRE(one.classes.size() == four.classes.size());
	for (std::size_t i = 0; i < one.classes.size(); ++i) {
		CHECK(one.classes[i].canonical == four.classes[i].canonical);
	}
	for (const auto& c : one.classes) {
		std::size_t len3 = 0;
		for (const auto& w : c.canonical) {
			len3 += w.size() == 3 ? 1 : 0;
		}
		CHECK(len3 >= 6);
	}
}

TEST_CASE("n = 4 with a tight filter") {
	const auto a = exhaustive_search({4, {{4, 13}}, true, 1});
	const auto b = exhaustive_search({4, {{4, 13}}, true, 3});
	CHECK(a.maximal_sets == b.maximal_sets);
	REQUIRE(a.classes.size() == b.classes.size());
	for (std::size_t i = 0; i < a.classes.size(); ++i) {
		CHECK(a.classes[i].canonical == b.classes[i].canonical);
		CHECK(a.classes[i].uwl == b.classes[i].uwl);
	}
	const WordSet universe(Alphabet(), words_up_to(Alphabet(), 4));
	for (const auto& c : a.classes) {
		CHECK(is_maximal_non_complete(c.canonical, universe));
	}
}
