#include <catch_amalgamated.hpp>

#include "burau_lab/burau_lab.hpp"
#include "oracles.hpp"

using namespace burau_lab;

namespace {
  LaurentMatrix laurent(std::vector<std::vector<LaurentPoly>> const& rows) {
    LaurentMatrix m(rows.size(), rows.size(), LaurentPoly());
    for (std::size_t i = 0; i < rows.size(); ++i) {
      for (std::size_t j = 0; j < rows.size(); ++j) {
        m(i, j) = rows[i][j];
      }
    }
    return m;
  }

  IntegerMatrix integer(std::vector<std::vector<int>> const& rows) {
    IntegerMatrix m(rows.size(), rows.size(), Integer(0));
    for (std::size_t i = 0; i < rows.size(); ++i) {
      for (std::size_t j = 0; j < rows.size(); ++j) {
        m(i, j) = rows[i][j];
      }
    }
    return m;
  }

  IntegerMatrix permutation(std::size_t d, std::size_t a, std::size_t b) {
    IntegerMatrix m = IntegerMatrix::identity(d, Integer(0));
    m(a, a)         = 0;
    m(b, b)         = 0;
    m(a, b)         = 1;
    m(b, a)         = 1;
    return m;
  }
}  // namespace

TEST_CASE("Burau generators for s = 4", "[burau]") {
  LaurentPoly const t = LaurentPoly::t();
  LaurentPoly const one(1);
  LaurentPoly const zero;
  CHECK(burau_generator(1, 4) == laurent({{-t, -t}, {zero, one}}));
  CHECK(burau_generator(2, 4) == laurent({{one - t, one}, {t, zero}}));
  CHECK(burau_oracle(1, 4) == burau_generator(1, 4));
  CHECK(burau_oracle(2, 4) == burau_generator(2, 4));
  // sigma_1(x_4 x_1^-1) = x_4 x_1 x_2^-1 x_1^-1
  CHECK(burau_oracle(1, 5).column(2) == std::vector<LaurentPoly>{-t, zero, one});
}

TEST_CASE("closed forms agree with the rewriting oracle", "[burau]") {
  for (int s = 3; s <= 8; ++s) {
    for (int i = 1; i <= s - 2; ++i) {
      CHECK(burau_generator(i, s) == burau_oracle(i, s));
      CHECK(determinant(burau_generator(i, s)) == -LaurentPoly::t());
    }
  }
}

TEST_CASE("sigma_{s-1} is rejected", "[burau]") {
  for (int s = 3; s <= 6; ++s) {
    CHECK_THROWS_AS(burau_generator(s - 1, s), std::domain_error);
    CHECK_THROWS_AS(burau_oracle(s - 1, s), std::domain_error);
    CHECK_THROWS_AS(burau_of_braid(sigma(s - 1, -1), s), std::domain_error);
    CHECK_THROWS_AS(reduced_burau(sigma(s - 1), 3, s), std::domain_error);
    CHECK_THROWS_AS(invariant_span_action(sigma(s - 1), 3, s), std::domain_error);
    CHECK_THROWS_AS(burau_generator(s, s), std::out_of_range);
    CHECK_THROWS_AS(burau_generator(0, s), std::out_of_range);
  }
}

TEST_CASE("burau_of_braid is a representation", "[burau][property]") {
  Rng rng(37);
  for (int rep = 0; rep < 80; ++rep) {
    int const        s = static_cast<int>(uniform(rng, 3, 7));
    BraidWord const  b = random_braid(rng, s - 2, 6);
    BraidWord const  c = random_braid(rng, s - 2, 6);
    LaurentMatrix const mb = burau_of_braid(b, s);
    CHECK(mb == burau_oracle_of(b, s));
    CHECK(burau_of_braid(b * c, s) == mb * burau_of_braid(c, s));
    CHECK((mb * burau_of_braid(b.inverse(), s)).is_identity());
    CHECK(is_laurent_unit(determinant(mb)));
  }
  CHECK(burau_of_braid(BraidWord(), 5).is_identity());
}

TEST_CASE("braid relations for Burau matrices", "[burau]") {
  for (int s = 3; s <= 7; ++s) {
    for (int i = 1; i <= s - 2; ++i) {
      if (i + 1 <= s - 2) {
        CHECK(burau_of_braid(sigma(i) * sigma(i + 1) * sigma(i), s)
              == burau_of_braid(sigma(i + 1) * sigma(i) * sigma(i + 1), s));
      }
      for (int j = i + 2; j <= s - 2; ++j) {
        CHECK(burau_of_braid(sigma(i) * sigma(j), s) == burau_of_braid(sigma(j) * sigma(i), s));
      }
    }
  }
}

TEST_CASE("reduced Burau at level n", "[burau][reduced]") {
  CHECK(reduced_burau(sigma(1), 2, 3) == integer({{1}}));
  CHECK(reduced_burau(sigma(1), 2, 4) == integer({{1, 1}, {0, 1}}));
  CHECK(reduced_burau(sigma(2), 2, 4) == integer({{2, 1}, {-1, 0}}));
  CHECK(reduced_burau_oracle(sigma(1), 2, 4) == integer({{1, 1}, {0, 1}}));
  CHECK(reduced_burau_oracle(sigma(2), 2, 4) == integer({{2, 1}, {-1, 0}}));
  CHECK(reduced_burau(BraidWord(), 3, 5).is_identity());
  CHECK(reduced_burau(sigma(1), 3, 5).rows() == static_cast<std::size_t>(complete_rank(3, 5)));
  CHECK_THROWS_AS(reduced_burau(sigma(1), 1, 4), std::invalid_argument);

  Rng rng(41);
  for (int rep = 0; rep < 60; ++rep) {
    int const          s = static_cast<int>(uniform(rng, 3, 6));
    std::int64_t const n = uniform(rng, 2, 5);
    BraidWord const    b = random_braid(rng, s - 2, 5);
    IntegerMatrix const r = reduced_burau(b, n, s);
    CHECK(r == reduced_burau_oracle(b, n, s));
    Integer const det = determinant(r);
    CHECK((det == 1 || det == -1));
    CHECK((r * reduced_burau(b.inverse(), n, s)).is_identity());
  }
}

TEST_CASE("specialization at roots of unity", "[burau][eigen]") {
  auto const m = eigen_specialize(sigma(1), 3, 4, 1);
  CHECK(m(0, 0) == CyclotomicElem::x_power(3, 1, -1));
  CHECK(m(1, 1) == CyclotomicElem::constant(3, 1));
  auto const m2 = eigen_specialize(sigma(1), 3, 4, 2);
  CHECK(m2(0, 1) == CyclotomicElem::x_power(3, 2, -1));
  CHECK_THROWS_AS(eigen_specialize(sigma(1), 3, 4, 0), std::out_of_range);
  CHECK_THROWS_AS(eigen_specialize(sigma(1), 3, 4, 3), std::out_of_range);

  Rng rng(43);
  for (int rep = 0; rep < 30; ++rep) {
    int const          s  = static_cast<int>(uniform(rng, 3, 6));
    std::int64_t const n  = uniform(rng, 2, 5);
    std::int64_t const nu = uniform(rng, 1, n - 1);
    BraidWord const    b  = random_braid(rng, s - 2, 4);
    BraidWord const    c  = random_braid(rng, s - 2, 4);
    CHECK(eigen_specialize(b * c, n, s, nu) == eigen_specialize(b, n, s, nu) * eigen_specialize(c, n, s, nu));
  }
}

TEST_CASE("action on the span of the x_j^n", "[burau][span]") {
  for (std::int64_t n = 2; n <= 4; ++n) {
    for (int s = 3; s <= 6; ++s) {
      auto const d = static_cast<std::size_t>(s - 1);
      for (int i = 1; i <= s - 2; ++i) {
        auto const idx = static_cast<std::size_t>(i - 1);
        CHECK(invariant_span_action(sigma(i), n, s) == permutation(d, idx, idx + 1));
      }
    }
  }
  Rng rng(47);
  for (int rep = 0; rep < 30; ++rep) {
    int const          s = static_cast<int>(uniform(rng, 3, 6));
    std::int64_t const n = uniform(rng, 2, 4);
    BraidWord const    b = random_braid(rng, s - 2, 4);
    BraidWord const    c = random_braid(rng, s - 2, 4);
    CHECK(invariant_span_action(b * c, n, s) == invariant_span_action(b, n, s) * invariant_span_action(c, n, s));
  }
}

TEST_CASE("characteristic polynomial factorization", "[burau][charpoly]") {
  auto const cmp = charpoly_factorization(sigma(1) * sigma(2), 3, 4);
  CHECK(cmp.equal());
  CHECK(cmp.reduced.size() == 5);

  Rng rng(53);
  for (std::int64_t n : {2, 3, 5}) {
    for (int rep = 0; rep < 5; ++rep) {
      int const       s = static_cast<int>(uniform(rng, 3, 5));
      BraidWord const b = random_braid(rng, s - 2, 4);
      CHECK(charpoly_factorization(b, n, s).equal());
    }
  }
}

TEST_CASE("Vandermonde diagonalization", "[burau][vandermonde]") {
  Rng rng(59);
  for (int rep = 0; rep < 20; ++rep) {
    int const          s = static_cast<int>(uniform(rng, 3, 6));
    std::int64_t const n = uniform(rng, 2, 5);
    BraidWord const    b = random_braid(rng, s - 2, 4);
    CHECK(vandermonde_deviation(b, n, s) < vandermonde_tolerance);
  }
}
