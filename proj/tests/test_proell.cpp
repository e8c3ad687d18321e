#include <catch_amalgamated.hpp>

#include "burau_lab/burau_lab.hpp"
#include "oracles.hpp"

using namespace burau_lab;

namespace {
  std::int64_t random_unit(Rng& rng, std::int64_t l, std::int64_t hi) {
    for (;;) {
      auto const n = uniform(rng, 1, hi);
      if (n % l != 0) {
        return n;
      }
    }
  }

  GaloisElemData random_galois_data(Rng& rng, int s, TruncationParams p, std::int64_t n_max, std::size_t len) {
    std::vector<Word> words;
    for (int i = 2; i <= s - 1; ++i) {
      words.push_back(random_word(rng, s, len));
    }
    return GaloisElemData(s, p, Integer(random_unit(rng, p.l(), n_max)), std::move(words));
  }
}  // namespace

TEST_CASE("decomposition of words", "[proell]") {
  Word const w = parse_word("x2 x1^-1 x3", 4);
  auto const d = decompose(w);
  CHECK(d.a == std::vector<std::int64_t>{-1, 1, 1});
  CHECK(d.tail(4) == parse_word("x1^-1 x2 x3", 4));
  CHECK(d.B == parse_word("x2 x1^-1 x2^-1 x1", 4));
  CHECK(d.b == oracle::fox_abelianize_R0(d.B));
  CHECK(d.b[2] == LaurentPoly(1) - LaurentPoly::t(-1));
  CHECK(d.reconstruct(4) == w);

  Rng rng(61);
  for (int rep = 0; rep < 200; ++rep) {
    int const  s = static_cast<int>(uniform(rng, 3, 7));
    Word const u = random_word(rng, s, 12);
    auto const e = decompose(u);
    CHECK(e.reconstruct(s) == u);
    CHECK(winding(e.B) == 0);
  }
}

TEST_CASE("geometric-sum lemmas", "[proell][lemma]") {
  LaurentPoly const t = LaurentPoly::t();
  CHECK(abelianize_R0(parse_word("x2^2 x1^-2", 3)) == (1 + t) * HomologyVector<LaurentPoly>::unit(3, 2, LaurentPoly()));
  for (int s = 3; s <= 6; ++s) {
    for (int i = 2; i <= s - 1; ++i) {
      for (std::int64_t a = 0; a <= 6; ++a) {
        CHECK(write_inv_check(i, a, s));
        for (std::int64_t N = 0; N <= 6; ++N) {
          CHECK(pass_over_check(i, a, N, s));
        }
      }
    }
  }
  CHECK_THROWS_AS(write_inv_check(1, 2, 3), std::out_of_range);
  CHECK_THROWS_AS(pass_over_check(2, -1, 1, 3), std::domain_error);
}

TEST_CASE("Galois data", "[proell]") {
  TruncationParams const p(3, 2, 2);
  auto const             id = GaloisElemData::identity(4, p);
  CHECK(id.w(1).empty());
  CHECK(id.automorphism() == Automorphism(4));

  Word const     w1 = parse_word("x1 x2", 3);
  Word const     w2 = parse_word("x2^-1", 3);
  GaloisElemData d(3, p, Integer(2), {w2}, w1);
  CHECK(d.w(2) == invert(w1) * w2);
  CHECK(d.automorphism().apply(Word::generator(3, 1)) == Word::generator(3, 1, 2));

  CHECK_THROWS_AS(GaloisElemData(3, p, Integer(3), {Word(3)}), std::domain_error);
  CHECK_THROWS_AS(GaloisElemData(3, p, Integer(0), {Word(3)}), std::domain_error);
  CHECK_THROWS_AS(GaloisElemData(4, p, Integer(1), {Word(4)}), std::invalid_argument);
  CHECK_THROWS_AS(GaloisElemData(3, p, Integer(1), {Word(4)}), std::invalid_argument);
  // negative N is a unit of Z_l and maps to its representative
  CHECK(GaloisElemData(3, p, Integer(-1), {Word(3)}).N().value() == 80);
}

TEST_CASE("matrix of the identity element", "[proell]") {
  for (int s = 3; s <= 5; ++s) {
    for (auto const& p : {TruncationParams(3, 2, 2), TruncationParams(2, 1, 3)}) {
      auto const d = GaloisElemData::identity(s, p);
      CHECK(assemble_matburau(d).is_identity());
      CHECK(direct_oracle(d).is_identity());
    }
  }
}

TEST_CASE("matrix examples", "[proell]") {
  TruncationParams const p(3, 2, 2);
  // N = 1 + l, w_2 = x_1: column is t + t^2 + t^3 + t^4
  GaloisElemData const d(3, p, Integer(4), {parse_word("x1", 3)});
  auto const           expect = TruncatedCompletedElem(p, {0, 1, 1, 1, 1, 0, 0, 0, 0});
  CHECK(assemble_matburau(d)(0, 0) == expect);
  CHECK(direct_oracle(d)(0, 0) == expect);

  GaloisElemData const two(3, p, Integer(2), {Word(3)});
  CHECK(direct_oracle(two)(0, 0) == TruncatedCompletedElem(p, {1, 1, 0, 0, 0, 0, 0, 0, 0}));
  CHECK(assemble_matburau(two) == direct_oracle(two));

  TruncationParams const q(2, 2, 2);
  GaloisElemData const   three(4, q, Integer(3), {parse_word("x2 x1^-1", 4), Word(4)});
  CHECK(assemble_matburau(three) == direct_oracle(three));
  CHECK(three_term_split_check(three));
}

TEST_CASE("closed form agrees with the word oracle", "[proell][property]") {
  Rng rng(67);
  for (auto const& p : {TruncationParams(3, 2, 2), TruncationParams(2, 2, 2), TruncationParams(5, 1, 2)}) {
    for (int rep = 0; rep < 60; ++rep) {
      int const  s = static_cast<int>(uniform(rng, 3, 5));
      auto const d = random_galois_data(rng, s, p, 5, 6);
      CHECK(assemble_matburau(d) == direct_oracle(d));
      CHECK(three_term_split_check(d));
    }
  }
}

TEST_CASE("semilinear commutation with t", "[proell][property]") {
  Rng                    rng(71);
  TruncationParams const p(3, 2, 2);
  for (int rep = 0; rep < 60; ++rep) {
    int const  s = static_cast<int>(uniform(rng, 3, 5));
    auto const d = random_galois_data(rng, s, p, 5, 4);
    CHECK(twisted_commutation_check(d, random_r0_word(rng, s, 4, 2)));
    CHECK(twisted_commutation_check(d, Word(s)));
  }
  GaloisElemData const two(3, p, Integer(2), {Word(3)});
  CHECK(twisted_commutation_check(two, parse_word("x2 x1^-1", 3)));
}
