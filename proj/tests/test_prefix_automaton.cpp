#include <doctest.h>

#include <random>

#include "fcomp/families.hpp"
#include "fcomp/prefix_automaton.hpp"
#include "support.hpp"

using namespace fcomp;

TEST_CASE("trie shape") {
	PrefixAutomaton a(WordSet(Alphabet(), {"a", "ab", "ba"}));
	// ε, a, b, ab, ba
	REQUIRE(a.node_count() == 5);
	CHECK(a.path(PrefixAutomaton::kRoot) == Word(""));
	CHECK(a.path(1) == Word("a"));
	CHECK(a.path(2) == Word("b"));
	CHECK(a.accepting(1));
	CHECK_FALSE(a.accepting(2));
	CHECK(a.child(0, 0) == 1);
	CHECK(a.child(1, 0) == PrefixAutomaton::kNoChild);
	CHECK_THROWS_AS(PrefixAutomaton{WordSet{}}, Error);
}

TEST_CASE("closure adds the root exactly when an accepting node is present") {
	PrefixAutomaton a(WordSet(Alphabet(), {"ab", "b"}));
	SubsetState s(a.node_count());
	s.set(1);  // "a"
	CHECK_FALSE(a.closure(s).test(0));
	SubsetState t(a.node_count());
	t.set(2);  // "b"
	CHECK(a.closure(t).test(0));
	CHECK(a.closure(a.closure(t)) == a.closure(t));
}

TEST_CASE("empty state is absorbing and steps are monotone") {
	PrefixAutomaton a(s_k(3));
	SubsetState empty(a.node_count());
	for (Letter c = 0; c < 2; ++c) {
		CHECK(a.step(empty, c).empty());
	}
	std::mt19937_64 rng(0);
	for (int trial = 0; trial < 200; ++trial) {
		SubsetState big(a.node_count());
		SubsetState small(a.node_count());
		for (std::size_t i = 0; i < a.node_count(); ++i) {
			if (rng() & 1U) {
				big.set(i);
				if (rng() & 1U) {
					small.set(i);
				}
			}
		}
		const Letter c = rng() & 1U;
		CHECK(a.step(small, c).is_subset_of(a.step(big, c)));
	}
}

TEST_CASE("step table agrees with the set-level step") {
	for (auto set : {s_k(3), s_k(5), r_k(7)}) {
		PrefixAutomaton a(set);
		StepTable table(a);
		std::mt19937_64 rng(1);
		for (int trial = 0; trial < 100; ++trial) {
			SubsetState s(a.node_count());
			for (std::size_t i = 0; i < a.node_count(); ++i) {
				if (rng() % 3 == 0) {
					s.set(i);
				}
			}
			for (Letter c = 0; c < 2; ++c) {
				std::vector<std::uint64_t> out(table.blocks());
				table.step(s.blocks().data(), c, out.data());
				const auto expected = a.step(s, c);
				CHECK(std::vector<std::uint64_t>(expected.blocks().begin(), expected.blocks().end()) == out);
			}
		}
	}
}

TEST_CASE("membership agrees with the decomposition oracle") {
	std::mt19937_64 rng(0);
	for (std::uint64_t mask = 1; mask < 64; ++mask) {
		const WordSet set = support::subset_of(2, mask);
		const auto plain = support::plain(set);
		PrefixAutomaton a(set);
		for (int trial = 0; trial < 40; ++trial) {
			const Word w = support::random_word(rng, 1 + rng() % 12);
			CHECK(a.member_fact_star(w) == oracle::in_fact_star(plain, w.str()));
			CHECK(a.member_pref_star(w) == oracle::in_pref_star(plain, w.str()));
		}
	}
}

TEST_CASE("single-node-start run agrees with universal start") {
	// w is completable iff some start node survives reading w.
	PrefixAutomaton a(s_k(4));
	std::mt19937_64 rng(2);
	for (int trial = 0; trial < 200; ++trial) {
		const Word w = support::random_word(rng, 1 + rng() % 30);
		bool any = false;
		for (std::size_t n = 0; n < a.node_count() && !any; ++n) {
			SubsetState s(a.node_count());
			s.set(n);
			any = !a.run(s, w).empty();
		}
		CHECK(any == a.member_fact_star(w));
		CHECK(any == !a.run(a.initial_universal(), w).empty());
	}
}

TEST_CASE("dump is stable") {
	PrefixAutomaton a(WordSet(Alphabet(), {"a", "ba"}));
	const std::string expected = "node 0 path= accepting=false\n"
	                             "node 1 path=a accepting=true\n"
	                             "node 2 path=b accepting=false\n"
	                             "node 3 path=ba accepting=true\n"
	                             "edge 0 a 1\n"
	                             "edge 0 b 2\n"
	                             "edge 2 a 3\n";
	CHECK(a.dump() == expected);
	CHECK(PrefixAutomaton(WordSet(Alphabet(), {"a", "ba"})).dump() == expected);
}

TEST_CASE("letters outside the alphabet are rejected") {
	PrefixAutomaton a(WordSet(Alphabet(), {"a", "b"}));
	CHECK_THROWS_AS(a.run(a.root_state(), Word("ac")), Error);
}
