#include <catch_amalgamated.hpp>

#include "burau_lab/burau_lab.hpp"

using namespace burau_lab;

namespace {
  Word w(char const* text, int s = 4) {
    return parse_word(text, s);
  }
}  // namespace

TEST_CASE("reduce cancels and merges", "[word]") {
  CHECK(reduce(3, std::vector<Letter>{{1, 1}, {1, -1}}).empty());
  CHECK(reduce(3, std::vector<Letter>{{2, 1}, {2, 1}}) == Word::generator(3, 2, 2));
  CHECK(reduce(3, std::vector<Letter>{{1, 1}, {2, 1}, {2, -1}, {1, 1}})
        == Word::generator(3, 1, 2));
  CHECK_THROWS_AS(reduce(3, std::vector<Letter>{{3, 1}}), std::out_of_range);
  CHECK_THROWS_AS(reduce(3, std::vector<Letter>{{0, 1}}), std::out_of_range);
}

TEST_CASE("reduce is idempotent and concatenation is associative", "[word][property]") {
  Rng rng(7);
  for (int rep = 0; rep < 200; ++rep) {
    int const  s = static_cast<int>(uniform(rng, 3, 7));
    Word const a = random_word(rng, s, 12);
    Word const b = random_word(rng, s, 12);
    Word const c = random_word(rng, s, 12);
    CHECK(reduce(s, a.letters()) == a);
    CHECK((a * b) * c == a * (b * c));
    for (std::size_t k = 1; k < a.size(); ++k) {
      CHECK(a.letters()[k].gen != a.letters()[k - 1].gen);
    }
  }
}

TEST_CASE("group laws", "[word]") {
  CHECK(multiply(w("x1"), w("x1^-1")).empty());
  CHECK(invert(w("x1 x2")) == w("x2^-1 x1^-1"));
  CHECK(multiply(w("x1^2"), w("x1^-1 x2")) == w("x1 x2"));
  CHECK_THROWS_AS(multiply(w("x1", 3), w("x1", 4)), std::invalid_argument);

  Rng rng(11);
  for (int rep = 0; rep < 100; ++rep) {
    Word const u = random_word(rng, 5, 15);
    CHECK((u * invert(u)).empty());
    CHECK(invert(invert(u)) == u);
  }
}

TEST_CASE("power and conjugate", "[word]") {
  Word const g = w("x2 x3^-1");
  CHECK(power(g, 0).empty());
  CHECK(power(g, 3) == g * g * g);
  CHECK(power(g, -2) == invert(g) * invert(g));
  Word const c = conjugate(w("x1^4"), w("x2 x3"));
  CHECK(c == w("x2 x3 x1^4 x3^-1 x2^-1"));
  CHECK(power(c, 5) == w("x2 x3 x1^20 x3^-1 x2^-1"));
  CHECK(power(c, -3) == invert(c) * invert(c) * invert(c));

  Rng rng(13);
  for (int rep = 0; rep < 200; ++rep) {
    Word const u = random_word(rng, 4, 10);
    auto const e = uniform(rng, -4, 4);
    Word       slow(4);
    for (std::int64_t k = 0; k < (e < 0 ? -e : e); ++k) {
      slow = slow * (e < 0 ? invert(u) : u);
    }
    CHECK(power(u, e) == slow);
  }
}

TEST_CASE("expand_xs is the inverse of x_1 ... x_{s-1}", "[word]") {
  CHECK(expand_xs(3) == parse_word("x2^-1 x1^-1", 3));
  CHECK(expand_xs(4) == parse_word("x3^-1 x2^-1 x1^-1", 4));
  for (int s = 3; s <= 9; ++s) {
    Word prod(s);
    for (int k = 1; k <= s - 1; ++k) {
      prod = prod * Word::generator(s, k);
    }
    CHECK((prod * expand_xs(s)).empty());
  }
  CHECK_THROWS_AS(expand_xs(2), std::invalid_argument);
}

TEST_CASE("winding is the exponent sum", "[word]") {
  CHECK(winding(w("x1")) == 1);
  CHECK(winding(w("x1 x2^-1 x3^2")) == 2);
  CHECK(winding(Word(4)) == 0);
  Rng rng(3);
  for (int rep = 0; rep < 100; ++rep) {
    Word const u = random_word(rng, 6, 10);
    Word const v = random_word(rng, 6, 10);
    CHECK(winding(u * v) == winding(u) + winding(v));
  }
}

TEST_CASE("text format round-trips", "[word][format]") {
  CHECK(to_string(Word(4)) == "1");
  CHECK(parse_word("1", 4).empty());
  CHECK(parse_word("", 4).empty());
  CHECK(to_string(w("x1 x2^-1 x3^2")) == "x1 x2^-1 x3^2");
  CHECK(parse_word("  x1   x1 ", 3) == Word::generator(3, 1, 2));
  CHECK_THROWS_AS(parse_word("x4", 4), ParseError);
  CHECK_THROWS_AS(parse_word("y1", 4), ParseError);
  CHECK_THROWS_AS(parse_word("x1^", 4), ParseError);
  CHECK_THROWS_AS(parse_word("x1^2a", 4), ParseError);

  Rng rng(5);
  for (int rep = 0; rep < 100; ++rep) {
    Word const u = random_word(rng, 7, 12);
    CHECK(parse_word(to_string(u), 7) == u);
  }

  CHECK(to_string(parse_braid("s1 s2^-1")) == "s1 s2^-1");
  CHECK(parse_braid("1").empty());
  CHECK(to_string(BraidWord()) == "1");
  CHECK(parse_braid("s3") == sigma(3));
  CHECK_THROWS_AS(parse_braid("s1^2"), ParseError);
  CHECK_THROWS_AS(parse_braid("s0"), ParseError);
  CHECK_THROWS_AS(parse_braid("x1"), ParseError);
}

TEST_CASE("braid words", "[word]") {
  BraidWord const b = sigma(1) * sigma(2, -1);
  CHECK(b.inverse() == sigma(2) * sigma(1, -1));
  CHECK(b.max_index() == 2);
  CHECK_NOTHROW(b.check_range(3));
  CHECK_THROWS_AS(b.check_range(2), std::out_of_range);
}
