#include <hilbert/errors.hpp>
#include <hilbert/monoid.hpp>

#include "oracles.hpp"
#include "test_util.hpp"

#include <algorithm>
#include <set>

using namespace hilbert;

TEST_SUITE("monoid") {
  TEST_CASE("word text") {
    const Alphabet ab{2, true};
    CHECK(parse_word("x1 x2 y x1", ab) == Word{0, 1, 2, 0});
    CHECK(parse_word("1", ab).empty());
    CHECK(parse_word("", ab).empty());
    CHECK(format_word(Word{0, 1, 2, 0}, ab) == "x1 x2 y x1");
    CHECK(format_word(Word{}, ab) == "1");
    CHECK_THROWS_AS(parse_word("x3", ab), ParseError);
    CHECK_THROWS_AS(parse_word("y", Alphabet{2, false}), ParseError);
    CHECK_THROWS_AS(parse_word("z", ab), ParseError);
  }

  TEST_CASE("factor containment") {
    CHECK(contains_factor(Word{0, 1, 2}, Word{1, 2}));
    CHECK_FALSE(contains_factor(Word{0, 1, 2}, Word{0, 2}));
    CHECK(contains_factor(Word{0}, Word{}));
    CHECK_FALSE(contains_factor(Word{}, Word{0}));
  }

  TEST_CASE("enumerate_words") {
    CHECK(enumerate_words(2, 0) == std::vector<Word>{Word{}});
    CHECK(enumerate_words(2, 2) == std::vector<Word>{{0, 0}, {0, 1}, {1, 0}, {1, 1}});
    const auto three = enumerate_words(3, 2);
    CHECK(std::vector<Word>(three.begin(), three.begin() + 3) == std::vector<Word>{{0, 0}, {0, 1}, {0, 2}});
    for (unsigned d = 1; d <= 3; ++d) {
      for (std::size_t n = 0; n <= 5; ++n) {
        const auto all = enumerate_words(d, n);
        CHECK(Integer(static_cast<unsigned long>(all.size())) == capacity(d, n, false));
        CHECK(std::is_sorted(all.begin(), all.end()));
        CHECK(std::adjacent_find(all.begin(), all.end()) == all.end());
        for (std::size_t k = 0; k < all.size(); ++k) CHECK(lex_rank(all[k], d) == static_cast<unsigned long>(k));
        CHECK(first_words(d, n, all.size() / 2) == std::vector<Word>(all.begin(), all.begin() + all.size() / 2));
      }
    }
  }

  TEST_CASE("enumerate_comm") {
    CHECK(enumerate_comm(2, 2) == std::vector<CommMonomial>{{{0, 2}}, {{1, 1}}, {{2, 0}}});
    CHECK(enumerate_comm(2, 3).size() == 4);
    CHECK(enumerate_comm(3, 2).size() == 6);
    for (unsigned d = 1; d <= 4; ++d) {
      for (std::size_t n = 0; n <= 6; ++n) {
        const auto all = enumerate_comm(d, n);
        CHECK(Integer(static_cast<unsigned long>(all.size())) == binomial(n + d - 1, d - 1));
        CHECK(std::is_sorted(all.begin(), all.end()));
        CHECK(std::adjacent_find(all.begin(), all.end()) == all.end());
        for (std::size_t k = 0; k < all.size(); ++k) {
          CHECK(all[k].degree() == n);
          CHECK(lex_rank(all[k]) == static_cast<unsigned long>(k));
        }
      }
    }
    CHECK(commutative_image(Word{1, 0, 1}, 3) == CommMonomial{{1, 2, 0}});
  }

  TEST_CASE("realize_A picks the lexicographically first words") {
    const IntSeries p = generate(series::Partition{}, 6);
    const ASetRealization a = realize_A(p, 2, false);
    CHECK(a.words(2) == std::vector<Word>{{0, 0}, {0, 1}});
    CHECK(a.contains(Word{0, 1}));
    CHECK_FALSE(a.contains(Word{1, 0}));
    CHECK(a.contains(Word{}));
    for (std::size_t n = 0; n <= 6; ++n) {
      const auto members = a.words(n);
      CHECK(Integer(static_cast<unsigned long>(members.size())) == p[n]);
      std::size_t counted = 0;
      for (const auto& w : enumerate_words(2, n)) counted += a.contains(w) ? 1 : 0;
      CHECK(counted == members.size());
    }
    CHECK_THROWS_AS(a.contains(Word(7, 0)), InvalidSpecError);
  }

  TEST_CASE("commutative realization") {
    const IntSeries a{1, 2, 2, 3};
    const ASetRealization r = realize_A(a, 2, true);
    CHECK(r.monomials(2) == std::vector<CommMonomial>{{{0, 2}}, {{1, 1}}});
    CHECK(r.contains(Word{1, 0}));
    CHECK(r.contains(Word{0, 1}));
    CHECK_FALSE(r.contains(Word{0, 0}));
    CHECK(r.contains(CommMonomial{{1, 2}}));
  }

  TEST_CASE("capacity errors name the degree") {
    try {
      realize_A(IntSeries{0, 3}, 2, false);
      FAIL("expected a capacity error");
    } catch (const CapacityError& e) {
      CHECK(e.degree() == 1);
    }
    CHECK_THROWS_AS(realize_A(IntSeries{2, 0}, 5, false), CapacityError);
    // p(5) = 7 but only 6 commutative monomials of degree 5 in two variables
    CHECK_THROWS_AS(realize_A(generate(series::Partition{}, 5), 2, true), CapacityError);
    const ASetRealization empty = realize_A(IntSeries(9), 3, false);
    for (std::size_t n = 0; n <= 9; ++n) CHECK(empty.words(n).empty());
  }

  TEST_CASE("minimal_d") {
    CHECK(minimal_d(generate(series::Partition{}, 30), false) == 2);
    CHECK(minimal_d(IntSeries(10), false) == 1);
    CHECK(minimal_d(IntSeries(10), true) == 1);
    // Catalan(n-1) <= 3^n holds through n = 20 while 2^n fails at n = 10.
    const IntSeries catalan = generate(series::CatalanTrees{}, 20);
    bool three_ok = true;
    bool two_ok = true;
    for (std::size_t n = 0; n <= 20; ++n) {
      three_ok = three_ok && catalan[n] <= pow_integer(3, n);
      two_ok = two_ok && catalan[n] <= pow_integer(2, n);
    }
    CHECK(three_ok);
    CHECK_FALSE(two_ok);
    CHECK(minimal_d(catalan, false) == 3);
    CHECK(minimal_d(IntSeries{1, 1, 2, 3}, true) == 2);
    CHECK(minimal_d(IntSeries{1, 3, 6, 10, 15}, true) == 3);
    CHECK_THROWS_AS(minimal_d(IntSeries{2, 0}, false), CapacityError);
  }
}
