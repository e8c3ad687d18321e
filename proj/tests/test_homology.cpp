#include <catch_amalgamated.hpp>

#include "burau_lab/burau_lab.hpp"
#include "oracles.hpp"

using namespace burau_lab;

namespace {
  using LVec = HomologyVector<LaurentPoly>;

  LVec e(int s, int j) {
    return LVec::unit(s, j, LaurentPoly());
  }
}  // namespace

TEST_CASE("abelianization in R_0, examples", "[homology]") {
  LaurentPoly const t = LaurentPoly::t();
  CHECK(abelianize_R0(parse_word("x2 x1^-1", 3)) == e(3, 2));
  CHECK(abelianize_R0(parse_word("x1 x2 x1^-2", 3)) == t * e(3, 2));
  CHECK(abelianize_R0(parse_word("x1 x2 x1^-1 x2^-1", 3)) == (t - 1) * e(3, 2));
  CHECK(abelianize_R0(parse_word("x3 x2^-1", 4)) == e(4, 3) - e(4, 2));
  CHECK(abelianize_R0(Word(4)) == LVec::zero(4, LaurentPoly()));
  CHECK_THROWS_AS(abelianize_R0(parse_word("x2", 3)), NotInSubgroup);
  CHECK_THROWS_AS(abelianize_R0(parse_word("x2 x1^-1", 3), Transversal::finite_cyclic(3, 2)),
                  std::invalid_argument);
}

TEST_CASE("abelianization in R_0 matches Fox calculus", "[homology][property]") {
  Rng rng(23);
  for (int rep = 0; rep < 300; ++rep) {
    int const  s = static_cast<int>(uniform(rng, 3, 7));
    Word const w = random_r0_word(rng, s, 8, 3);
    Word const v = random_r0_word(rng, s, 8, 3);
    CHECK(abelianize_R0(w) == oracle::fox_abelianize_R0(w));
    CHECK(abelianize_R0(w * v) == abelianize_R0(w) + abelianize_R0(v));
    Word const x1 = Word::generator(s, 1);
    CHECK(abelianize_R0(x1 * w * invert(x1)) == LaurentPoly::t() * abelianize_R0(w));
    // commutators of R_0 die
    CHECK(abelianize_R0(w * v * invert(w) * invert(v)) == LVec::zero(s, LaurentPoly()));
  }
}

TEST_CASE("abelianization in R_n, examples", "[homology]") {
  auto const x23 = abelianize_Rn(parse_word("x2^3", 3), 3);
  CHECK(x23[2] == CyclicAlgebraElem::norm(3));
  CHECK(x23.extra == Integer(1));

  for (std::int64_t n = 2; n <= 5; ++n) {
    auto const x1n = abelianize_Rn(Word::generator(4, 1, n), n);
    CHECK(x1n.coords == std::vector<CyclicAlgebraElem>(2, CyclicAlgebraElem(n)));
    CHECK(x1n.extra == Integer(1));
  }

  auto const beta = abelianize_Rn(parse_word("x1 x3 x1^-2", 4), 3);
  CHECK(beta[3] == CyclicAlgebraElem::sigma_power(3, 1));
  CHECK(beta[2] == CyclicAlgebraElem(3));
  CHECK(beta.extra == Integer(0));
  CHECK_THROWS_AS(abelianize_Rn(parse_word("x1", 3), 2), NotInSubgroup);
}

TEST_CASE("abelianization in R_n matches Fox calculus", "[homology][property]") {
  Rng rng(29);
  for (int rep = 0; rep < 300; ++rep) {
    int const          s = static_cast<int>(uniform(rng, 3, 6));
    std::int64_t const n = uniform(rng, 2, 5);
    auto const         t = Transversal::finite_cyclic(s, n);
    Word const         w = random_subgroup_word(rng, t, 8);
    Word const         v = random_subgroup_word(rng, t, 8);
    CHECK(abelianize_Rn(w, n) == oracle::fox_abelianize_Rn(w, n));
    CHECK(abelianize_Rn(w * v, n) == abelianize_Rn(w, n) + abelianize_Rn(v, n));

    // conjugation by x_1 multiplies by sigma and fixes the extra slot
    Word const x1    = Word::generator(s, 1);
    auto const plain = abelianize_Rn(w, n);
    auto       moved = abelianize_Rn(x1 * w * invert(x1), n);
    for (int j = 2; j <= s - 1; ++j) {
      CHECK(moved[j] == CyclicAlgebraElem::sigma_power(n, 1) * plain[j]);
    }
    CHECK(moved.extra == plain.extra);
  }
}

TEST_CASE("companion matrix", "[homology]") {
  Matrix<Integer> a2(1, 1, Integer(0));
  a2(0, 0) = -1;
  CHECK(companion_matrix(2) == a2);

  Matrix<Integer> a3(2, 2, Integer(0));
  a3(0, 1) = -1;
  a3(1, 0) = 1;
  a3(1, 1) = -1;
  CHECK(companion_matrix(3) == a3);

  for (std::int64_t n = 2; n <= 7; ++n) {
    auto const      a = companion_matrix(n);
    Matrix<Integer> sum(a.rows(), a.cols(), Integer(0));
    for (std::int64_t k = 0; k < n; ++k) {
      sum += power(a, static_cast<std::size_t>(k));
    }
    CHECK(power(a, static_cast<std::size_t>(n)).is_identity());
    CHECK(sum.is_zero_matrix());
    CHECK(evaluate_at_companion(LaurentPoly::t(-1), n) == power(a, static_cast<std::size_t>(n - 1)));
    CHECK(evaluate_at_companion(LaurentPoly(1) + LaurentPoly::t(), n)
          == Matrix<Integer>::identity(a.rows(), Integer(0)) + a);
  }
  CHECK_THROWS_AS(companion_matrix(1), std::invalid_argument);
}

TEST_CASE("completion kills the punctures", "[homology]") {
  auto const v = project_complete(abelianize_Rn(parse_word("x1 x3 x1^-2", 4), 3));
  CHECK(flatten(v) == std::vector<Integer>{0, 0, 0, 1});
  CHECK(complete_rank(3, 4) == 4);
  CHECK(complete_rank(5, 6) == 16);

  Rng rng(31);
  for (std::int64_t n = 2; n <= 4; ++n) {
    for (int s = 3; s <= 5; ++s) {
      for (int rep = 0; rep < 10; ++rep) {
        Word const g = random_word(rng, s, 6);
        int const  j = static_cast<int>(uniform(rng, 1, s - 1));
        Word const c = conjugate(Word::generator(s, j, n), g);
        auto const p = project_complete(abelianize_Rn(c, n));
        CHECK(flatten(p) == std::vector<Integer>(static_cast<std::size_t>(complete_rank(n, s)), Integer(0)));
      }
    }
  }
}
