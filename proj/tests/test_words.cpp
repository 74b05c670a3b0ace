#include <doctest.h>

#include "fcomp/words.hpp"

using namespace fcomp;

TEST_CASE("alphabet") {
	Alphabet ab;
	CHECK(ab.letters() == "ab");
	CHECK(ab.index_of('b') == 1);
	CHECK_FALSE(ab.contains('c'));
	CHECK_THROWS_AS(Alphabet("aa"), Error);
	CHECK_THROWS_AS(Alphabet(""), Error);
}

TEST_CASE("shortlex order") {
	Alphabet ab;
	CHECK(lex_compare(ab, Word("b"), Word("aa")) < 0);
	CHECK(lex_compare(ab, Word("ab"), Word("ba")) < 0);
	CHECK(lex_compare(ab, Word("ab"), Word("ab")) == 0);
	Alphabet ba("ba");
	CHECK(lex_compare(ba, Word("ab"), Word("ba")) > 0);
}

TEST_CASE("word set stats and normalization") {
	WordSet s(Alphabet(), {"ab", "a", "ab", "bbb"});
	CHECK(s.size() == 3);
	CHECK(s.total_length() == 6);
	CHECK(s.max_length() == 3);
	CHECK(to_string(s) == "{a, ab, bbb}");
	CHECK(s.contains(Word("ab")));
	CHECK_FALSE(s.contains(Word("b")));
	CHECK(s.with(Word("b")).size() == 4);
	CHECK_THROWS_AS(WordSet(Alphabet(), {""}), Error);
	CHECK_THROWS_AS(WordSet(Alphabet(), {"ac"}), Error);
}

TEST_CASE("word enumeration") {
	Alphabet ab;
	auto w3 = words_of_length(ab, 3);
	REQUIRE(w3.size() == 8);
	CHECK(w3.front() == Word("aaa"));
	CHECK(w3.back() == Word("bbb"));
	CHECK(words_up_to(ab, 2).size() == 6);
	CHECK(power('b', 3) == Word("bbb"));
}

TEST_CASE("symmetries") {
	Alphabet ab;
	Word w("aab");
	CHECK(apply_symmetry(w, Symmetry::identity, ab) == w);
	CHECK(apply_symmetry(w, Symmetry::mirror, ab) == Word("baa"));
	CHECK(apply_symmetry(w, Symmetry::rename, ab) == Word("bba"));
	CHECK(apply_symmetry(w, Symmetry::mirror_rename, ab) == Word("abb"));
	for (auto s : kAllSymmetries) {
		CHECK(apply_symmetry(apply_symmetry(w, s, ab), s, ab) == w);
	}

	Alphabet abc("abc");
	CHECK(apply_symmetry(Word("abc"), Symmetry::rename, abc) == Word("cba"));
	LetterPermutation cycle{1, 2, 0};
	CHECK(apply_symmetry(Word("abc"), Symmetry::rename, abc, cycle) == Word("bca"));

	WordSet s(ab, {"a", "ab"});
	CHECK(apply_symmetry_set(s, Symmetry::rename) == WordSet(ab, {"b", "ba"}));
	CHECK(apply_symmetry_set(s, Symmetry::mirror) == WordSet(ab, {"a", "ba"}));
}
