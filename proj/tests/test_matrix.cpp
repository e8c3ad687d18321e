#include <catch_amalgamated.hpp>

#include "burau_lab/burau_lab.hpp"
#include "oracles.hpp"

using namespace burau_lab;

namespace {
  Matrix<Integer> random_integer_matrix(Rng& rng, std::size_t d) {
    Matrix<Integer> m(d, d, Integer(0));
    for (std::size_t i = 0; i < d; ++i) {
      for (std::size_t j = 0; j < d; ++j) {
        m(i, j) = uniform(rng, -5, 5);
      }
    }
    return m;
  }

  Matrix<LaurentPoly> random_laurent_matrix(Rng& rng, std::size_t d) {
    Matrix<LaurentPoly> m(d, d, LaurentPoly());
    for (std::size_t i = 0; i < d; ++i) {
      for (std::size_t j = 0; j < d; ++j) {
        for (int k = 0; k < 2; ++k) {
          m(i, j).add_term(uniform(rng, -2, 2), Integer(uniform(rng, -3, 3)));
        }
      }
    }
    return m;
  }
}  // namespace

TEST_CASE("matrix arithmetic", "[matrix]") {
  Matrix<Integer> a(2, 2, Integer(0));
  a(0, 0) = 1;
  a(0, 1) = 2;
  a(1, 0) = 3;
  a(1, 1) = 4;
  Matrix<Integer> const sq = a * a;
  CHECK(sq(0, 0) == 7);
  CHECK(sq(0, 1) == 10);
  CHECK(sq(1, 0) == 15);
  CHECK(sq(1, 1) == 22);
  CHECK(power(a, 2) == sq);
  CHECK(power(a, 0).is_identity());
  CHECK((a - a).is_zero_matrix());
  CHECK(a.apply({Integer(1), Integer(-1)}) == std::vector<Integer>{-1, -1});
  CHECK(a.column(1) == std::vector<Integer>{2, 4});
  CHECK(determinant(a) == -2);
  CHECK(charpoly(a) == std::vector<Integer>{1, -5, -2});
  CHECK_THROWS_AS(a.at(2, 0), std::out_of_range);
  CHECK_THROWS_AS(a * Matrix<Integer>(3, 3, Integer(0)), std::invalid_argument);
  CHECK_THROWS_AS(inverse(a), std::domain_error);
}

TEST_CASE("charpoly and determinant against Leibniz", "[matrix][property]") {
  Rng rng(17);
  for (int rep = 0; rep < 60; ++rep) {
    std::size_t const     d = static_cast<std::size_t>(uniform(rng, 1, 5));
    Matrix<Integer> const m = random_integer_matrix(rng, d);
    CHECK(charpoly(m) == oracle::interpolated_charpoly(m));
    CHECK(determinant(m) == oracle::leibniz_det(m));
  }
  for (int rep = 0; rep < 30; ++rep) {
    std::size_t const         d = static_cast<std::size_t>(uniform(rng, 1, 4));
    Matrix<LaurentPoly> const m = random_laurent_matrix(rng, d);
    CHECK(determinant(m) == oracle::leibniz_det(m));
  }
}

TEST_CASE("inverse over a ring with units", "[matrix][property]") {
  Rng rng(19);
  // products of elementary matrices have unit determinant
  for (int rep = 0; rep < 40; ++rep) {
    std::size_t const   d = static_cast<std::size_t>(uniform(rng, 1, 4));
    Matrix<LaurentPoly> m = Matrix<LaurentPoly>::identity(d, LaurentPoly());
    for (int k = 0; k < 6; ++k) {
      Matrix<LaurentPoly> e = Matrix<LaurentPoly>::identity(d, LaurentPoly());
      auto const          i = static_cast<std::size_t>(uniform(rng, 0, static_cast<std::int64_t>(d) - 1));
      auto const          j = static_cast<std::size_t>(uniform(rng, 0, static_cast<std::int64_t>(d) - 1));
      if (i == j) {
        e(i, i) = LaurentPoly::monomial(uniform(rng, -2, 2), uniform(rng, 0, 1) ? 1 : -1);
      } else {
        e(i, j) = LaurentPoly::monomial(uniform(rng, -2, 2), Integer(uniform(rng, -3, 3)));
      }
      m = m * e;
    }
    auto const inv = inverse(m);
    CHECK((m * inv).is_identity());
    CHECK((inv * m).is_identity());
  }
}
