#ifndef BURAU_LAB_BURAU_HPP_
#define BURAU_LAB_BURAU_HPP_

// Discrete Burau matrices over Z[t,t^-1] in the basis beta_2 ... beta_{s-1}
// (column j holds the image of beta_{j+2}, 0-indexed), their reduction to
// J^(s-2) by t -> companion matrix, specialization t -> x^nu in
// Z[x]/(1 + x + ... + x^{n-1}), and the action on the span of the x_j^n.
//
// Only sigma_1 ... sigma_{s-2} preserve the kernel of the winding map;
// sigma_{s-1} is rejected with std::domain_error everywhere in this file.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <map>
#include <numbers>
#include <stdexcept>
#include <string>
#include <vector>

#include "artin.hpp"
#include "cyclic.hpp"
#include "errors.hpp"
#include "homology.hpp"
#include "integer.hpp"
#include "laurent.hpp"
#include "matrix.hpp"
#include "word.hpp"

namespace burau_lab {

  using LaurentMatrix    = Matrix<LaurentPoly>;
  using IntegerMatrix    = Matrix<Integer>;
  using CyclotomicMatrix = Matrix<CyclotomicElem>;

  namespace detail {
    inline void check_braid_index(int i, int s) {
      Word::check_s(s);
      if (i < 1 || i > s - 1) {
        throw std::out_of_range("braid index " + std::to_string(i) + " outside 1.."
                                + std::to_string(s - 1));
      }
      if (i == s - 1) {
        throw std::domain_error("sigma_" + std::to_string(i)
                                + " does not preserve the winding number, so it has "
                                  "no Burau matrix on the beta basis");
      }
    }

    inline void check_braid(BraidWord const& b, int s) {
      b.check_range(s);
      for (auto const& l : b.letters()) {
        check_braid_index(l.index, s);
      }
    }

    inline Word beta_word(int s, int j) {
      return Word::generator(s, j) * Word::generator(s, 1, -1);
    }
  }  // namespace detail

  // Closed forms.  sigma_1: first row (-t, ..., -t), identity elsewhere.
  // sigma_i, 2 <= i <= s-2: block [[1-t, 1], [t, 0]] on beta_i, beta_{i+1}.
  inline LaurentMatrix burau_generator(int i, int s) {
    detail::check_braid_index(i, s);
    std::size_t const d = static_cast<std::size_t>(s - 2);
    LaurentMatrix     m = LaurentMatrix::identity(d, LaurentPoly());
    LaurentPoly const t = LaurentPoly::t();
    if (i == 1) {
      for (std::size_t c = 0; c < d; ++c) {
        m(0, c) = -t;
      }
    } else {
      std::size_t const a = static_cast<std::size_t>(i - 2);
      m(a, a)             = LaurentPoly(1) - t;
      m(a, a + 1)         = LaurentPoly(1);
      m(a + 1, a)         = t;
      m(a + 1, a + 1)     = LaurentPoly();
    }
    return m;
  }

  // Column j: abelianization of sigma_i(beta_{j+2}), by Schreier rewriting.
  inline LaurentMatrix burau_oracle_of(BraidWord const& b, int s) {
    detail::check_braid(b, s);
    std::size_t const d = static_cast<std::size_t>(s - 2);
    LaurentMatrix     m(d, d, LaurentPoly());
    for (int j = 2; j <= s - 1; ++j) {
      auto v = abelianize_R0(artin_apply(b, detail::beta_word(s, j)));
      m.set_column(static_cast<std::size_t>(j - 2), v.coords);
    }
    return m;
  }

  inline LaurentMatrix burau_oracle(int i, int s) {
    detail::check_braid_index(i, s);
    return burau_oracle_of(sigma(i), s);
  }

  inline LaurentMatrix burau_of_braid(BraidWord const& b, int s) {
    detail::check_braid(b, s);
    std::size_t const                      d = static_cast<std::size_t>(s - 2);
    std::map<std::pair<int, int>, LaurentMatrix> cache;
    LaurentMatrix result = LaurentMatrix::identity(d, LaurentPoly());
    for (auto const& l : b.letters()) {
      auto key = std::pair(l.index, l.sign);
      auto it  = cache.find(key);
      if (it == cache.end()) {
        LaurentMatrix g = burau_generator(l.index, s);
        it = cache.emplace(key, l.sign > 0 ? g : inverse(g)).first;
      }
      result = result * it->second;
    }
    return result;
  }

  // Entrywise p(t) -> p(A), A the companion matrix of 1 + x + ... + x^{n-1};
  // entry p at (a, b) becomes the block at rows a(n-1).., cols b(n-1)...
  inline IntegerMatrix substitute_companion(LaurentMatrix const& m, std::int64_t n) {
    std::size_t const k = static_cast<std::size_t>(n - 1);
    IntegerMatrix     out(m.rows() * k, m.cols() * k, Integer(0));
    for (std::size_t a = 0; a < m.rows(); ++a) {
      for (std::size_t b = 0; b < m.cols(); ++b) {
        if (is_zero(m(a, b))) {
          continue;
        }
        IntegerMatrix blk = evaluate_at_companion(m(a, b), n);
        for (std::size_t i = 0; i < k; ++i) {
          for (std::size_t j = 0; j < k; ++j) {
            out(a * k + i, b * k + j) = blk(i, j);
          }
        }
      }
    }
    return out;
  }

  inline IntegerMatrix reduced_burau(BraidWord const& b, std::int64_t n, int s) {
    if (n < 2) {
      throw std::invalid_argument("reduced Burau needs n >= 2");
    }
    return substitute_companion(burau_of_braid(b, s), n);
  }

  // Independent path: act on x_1^i x_j x_1^{-i-1}, abelianize in R_n, then
  // fill in the punctures.
  inline IntegerMatrix reduced_burau_oracle(BraidWord const& b, std::int64_t n, int s) {
    detail::check_braid(b, s);
    std::size_t const d = static_cast<std::size_t>(complete_rank(n, s));
    IntegerMatrix     m(d, d, Integer(0));
    for (int j = 2; j <= s - 1; ++j) {
      for (std::int64_t i = 0; i < n - 1; ++i) {
        Word const g   = SubgroupGenerator::beta(s, i, j).expansion();
        auto const col = flatten(project_complete(abelianize_Rn(artin_apply(b, g), n)));
        m.set_column(static_cast<std::size_t>((j - 2) * (n - 1) + i), col);
      }
    }
    return m;
  }

  // t -> x^nu, reduced modulo 1 + x + ... + x^{n-1}.  For gcd(nu, n) > 1 the
  // entries still live in the full quotient; x^nu then has order n / gcd.
  inline CyclotomicMatrix eigen_specialize(BraidWord const& b, std::int64_t n, int s,
                                           std::int64_t nu) {
    if (n < 2) {
      throw std::invalid_argument("specialization needs n >= 2");
    }
    if (nu < 1 || nu > n - 1) {
      throw std::out_of_range("nu must lie in 1.." + std::to_string(n - 1));
    }
    return burau_of_braid(b, s).map(
        [&](LaurentPoly const& p) { return CyclotomicElem::specialize(n, p, nu); },
        CyclotomicElem(n));
  }

  // Column k: coordinates of b(x_k^n) in the span of x_1^n ... x_{s-1}^n,
  // read off from the R_n abelianization where
  //   [x_1^n] = extra,  [x_j^n] = norm e_j + extra  (j >= 2).
  inline IntegerMatrix invariant_span_action(BraidWord const& b, std::int64_t n, int s) {
    detail::check_braid(b, s);
    std::size_t const d = static_cast<std::size_t>(s - 1);
    IntegerMatrix     m(d, d, Integer(0));
    for (int k = 1; k <= s - 1; ++k) {
      auto const v = abelianize_Rn(artin_apply(b, Word::generator(s, k, n)), n);
      std::vector<Integer> c(d, Integer(0));
      Integer              rest = *v.extra;
      for (int j = 2; j <= s - 1; ++j) {
        auto const& cj = v[j];
        for (auto const& x : cj.coeffs()) {
          if (x != cj[0]) {
            throw std::logic_error("image of x_" + std::to_string(k)
                                   + "^n left the span of the x_j^n");
          }
        }
        c[static_cast<std::size_t>(j - 1)] = cj[0];
        rest -= cj[0];
      }
      c[0] = rest;
      m.set_column(static_cast<std::size_t>(k - 1), c);
    }
    return m;
  }

  inline bool is_laurent_unit(LaurentPoly const& p) {
    return p.is_unit();
  }

  // Product of polynomials with coefficients in R, highest degree first.
  template <Ring R>
  std::vector<R> poly_multiply(std::vector<R> const& a, std::vector<R> const& b) {
    std::vector<R> out(a.size() + b.size() - 1, zero_like(a.front()));
    for (std::size_t i = 0; i < a.size(); ++i) {
      for (std::size_t j = 0; j < b.size(); ++j) {
        out[i + j] = out[i + j] + a[i] * b[j];
      }
    }
    return out;
  }

  // charpoly(reduced_burau) against the product over nu of
  // charpoly(eigen_specialize_nu), both in Z[x]/(1 + ... + x^{n-1}).  The
  // identity holds when that quotient is the n-th cyclotomic ring (n prime).
  struct CharpolyComparison {
    std::vector<CyclotomicElem> reduced;  // integer charpoly as constants
    std::vector<CyclotomicElem> product;
    bool                        equal() const {
      return reduced == product;
    }
  };

  inline CharpolyComparison charpoly_factorization(BraidWord const& b, std::int64_t n, int s) {
    CharpolyComparison out;
    for (auto const& c : charpoly(reduced_burau(b, n, s))) {
      out.reduced.push_back(CyclotomicElem::constant(n, c));
    }
    out.product = {CyclotomicElem::constant(n, 1)};
    for (std::int64_t nu = 1; nu < n; ++nu) {
      out.product = poly_multiply(out.product, charpoly(eigen_specialize(b, n, s, nu)));
    }
    return out;
  }

  // Floating-point diagnostic for the diagonalization of the companion
  // matrix by the Vandermonde matrix W with rows (zeta^{nu k})_k: checks
  // (I (x) W) R = D (I (x) W), D the block matrix with entries p_ab(zeta^nu)
  // on the nu-diagonal.  Returns the largest entrywise deviation.
  inline double vandermonde_deviation(BraidWord const& b, std::int64_t n, int s) {
    using C                 = std::complex<double>;
    LaurentMatrix const lm  = burau_of_braid(b, s);
    IntegerMatrix const r   = substitute_companion(lm, n);
    std::size_t const   k   = static_cast<std::size_t>(n - 1);
    std::size_t const   d   = lm.rows();
    std::size_t const   dim = d * k;
    C const zeta = std::polar(1.0, 2.0 * std::numbers::pi / static_cast<double>(n));

    auto eval = [&](LaurentPoly const& p, std::size_t nu) {
      C acc = 0;
      for (auto const& [e, c] : p.terms()) {
        acc += c.convert_to<double>() * std::pow(zeta, static_cast<double>(e) * (nu + 1));
      }
      return acc;
    };
    // row (a, nu) of I (x) W
    auto w = [&](std::size_t row, std::size_t col) -> C {
      if (row / k != col / k) {
        return 0;
      }
      return std::pow(zeta, static_cast<double>((row % k + 1) * (col % k)));
    };

    double worst = 0;
    for (std::size_t row = 0; row < dim; ++row) {
      for (std::size_t col = 0; col < dim; ++col) {
        C lhs = 0;
        for (std::size_t m = 0; m < dim; ++m) {
          lhs += w(row, m) * r(m, col).convert_to<double>();
        }
        // D (I (x) W): D is nonzero only where nu(row) == nu(m)
        C rhs = 0;
        for (std::size_t bb = 0; bb < d; ++bb) {
          std::size_t const m = bb * k + row % k;
          rhs += eval(lm(row / k, bb), row % k) * w(m, col);
        }
        worst = std::max(worst, std::abs(lhs - rhs));
      }
    }
    return worst;
  }

  inline constexpr double vandermonde_tolerance = 1e-9;

}  // namespace burau_lab

#endif  // BURAU_LAB_BURAU_HPP_
