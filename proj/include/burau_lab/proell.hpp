#ifndef BURAU_LAB_PROELL_HPP_
#define BURAU_LAB_PROELL_HPP_

// Pro-l Burau matrices of the automorphisms
//
//   x_1 -> x_1^N,   x_i -> w_i x_i^N w_i^-1   (i = 2 ... s-1)
//
// with entries in the truncation Z/l^K[Z/l^M] of Z_l[[Z_l]].  Writing
// w_i = B_i x_1^{a_1} ... x_{s-1}^{a_{s-1}} with B_i of winding zero, column i
// of the matrix is
//
//   t^{a_1+...+a_{s-1}} gamma(N) e_i
//     + (1 - t^N) sum_{j>=2} t^{a_1+...+a_{j-1}} gamma(a_j) e_j
//     + (1 - t^N) [B_i].
//
// The word oracle instead abelianizes w_i x_i^N w_i^-1 x_1^-N directly.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "artin.hpp"
#include "gamma.hpp"
#include "homology.hpp"
#include "integer.hpp"
#include "laurent.hpp"
#include "matrix.hpp"
#include "truncated.hpp"
#include "word.hpp"

namespace burau_lab {

  using TruncatedMatrix = Matrix<TruncatedCompletedElem>;

  class GaloisElemData {
   public:
    // words[i-2] is w_i.  If w_1 is given, every w_i is replaced by
    // w_1^-1 w_i, which composes with the inner automorphism making w_1 = 1.
    GaloisElemData(int s, TruncationParams p, Integer const& N, std::vector<Word> words,
                   std::optional<Word> w1 = std::nullopt)
        : _s(s), _p(p), _N(p, N), _words(std::move(words)) {
      Word::check_s(s);
      if (!_N.is_unit()) {
        throw std::domain_error("N = " + to_string(N) + " is not a unit mod "
                                + std::to_string(p.l()));
      }
      if (_words.size() != static_cast<std::size_t>(s - 2)) {
        throw std::invalid_argument("need words w_2 ... w_{s-1}");
      }
      for (auto const& w : _words) {
        if (w.s() != s) {
          throw std::invalid_argument("word over wrong ambient s");
        }
      }
      if (w1) {
        Word const inv = invert(*w1);
        for (auto& w : _words) {
          w = inv * w;
        }
      }
    }

    static GaloisElemData identity(int s, TruncationParams p) {
      return GaloisElemData(s, p, Integer(1), std::vector<Word>(s - 2, Word(s)));
    }

    int s() const noexcept {
      return _s;
    }
    TruncationParams const& params() const noexcept {
      return _p;
    }
    LadicExponent const& N() const noexcept {
      return _N;
    }
    // w_i for i = 1 ... s-1 (w_1 = 1).
    Word w(int i) const {
      if (i == 1) {
        return Word(_s);
      }
      return _words.at(static_cast<std::size_t>(i - 2));
    }
    std::vector<Word> const& words() const noexcept {
      return _words;
    }

    // The automorphism itself, with N replaced by its representative in
    // [1, l^(M+K)).
    Automorphism automorphism() const {
      std::int64_t const n = _N.value();
      std::vector<Word>  im{Word::generator(_s, 1, n)};
      for (int i = 2; i <= _s - 1; ++i) {
        im.push_back(conjugate(Word::generator(_s, i, n), w(i)));
      }
      return Automorphism(_s, std::move(im));
    }

   private:
    int               _s;
    TruncationParams  _p;
    LadicExponent     _N;
    std::vector<Word> _words;
  };

  struct WordDecomposition {
    std::vector<std::int64_t>   a;  // a[j-1] = exponent sum of x_j
    Word                        B;  // w (x_1^a_1 ... x_{s-1}^a_{s-1})^-1
    HomologyVector<LaurentPoly> b;  // [B] in R_0 / R_0'

    Word tail(int s) const {
      std::vector<Letter> raw;
      for (std::size_t j = 0; j < a.size(); ++j) {
        raw.push_back({static_cast<int>(j + 1), a[j]});
      }
      return reduce(s, raw);
    }
    Word reconstruct(int s) const {
      return B * tail(s);
    }
  };

  inline WordDecomposition decompose(Word const& w) {
    int const         s = w.s();
    WordDecomposition d;
    for (int j = 1; j <= s - 1; ++j) {
      d.a.push_back(exponent_sum(w, j));
    }
    d.B = w * invert(d.tail(s));
    d.b = abelianize_R0(d.B);
    return d;
  }

  namespace detail {
    inline void check_sum_args(int i, std::int64_t a, std::int64_t N, int s) {
      Word::check_s(s);
      if (i < 2 || i > s - 1) {
        throw std::out_of_range("generator index must lie in 2..s-1");
      }
      if (a < 0 || N < 0) {
        throw std::domain_error("geometric-sum checks take a, N >= 0");
      }
    }

    inline HomologyVector<TruncatedCompletedElem>
    truncate(HomologyVector<LaurentPoly> const& v, TruncationParams const& p) {
      HomologyVector<TruncatedCompletedElem> out;
      for (auto const& c : v.coords) {
        out.coords.push_back(TruncatedCompletedElem::from_laurent(p, c));
      }
      return out;
    }
  }  // namespace detail

  // [x_k^a x_1^-a] = gamma(a) e_k
  inline bool write_inv_check(int k, std::int64_t a, int s) {
    detail::check_sum_args(k, a, 0, s);
    Word const lhs = Word::generator(s, k, a) * Word::generator(s, 1, -a);
    return abelianize_R0(lhs) == gamma(a) * HomologyVector<LaurentPoly>::unit(s, k, LaurentPoly());
  }

  // [x_i^a x_1^N x_i^-a x_1^-N] = gamma(a) (1 - t^N) e_i
  inline bool pass_over_check(int i, std::int64_t a, std::int64_t N, int s) {
    detail::check_sum_args(i, a, N, s);
    Word const lhs = Word::generator(s, i, a) * Word::generator(s, 1, N)
                     * Word::generator(s, i, -a) * Word::generator(s, 1, -N);
    LaurentPoly const c = gamma(a) * (LaurentPoly(1) - LaurentPoly::t(N));
    return abelianize_R0(lhs) == c * HomologyVector<LaurentPoly>::unit(s, i, LaurentPoly());
  }

  // The three summands of a column, in the truncated ring.
  struct MatBurauColumn {
    std::vector<TruncatedCompletedElem> L;  // gamma(N) t^{a_1+...+a_{s-1}} e_i
    std::vector<TruncatedCompletedElem> M;  // (1 - t^N) sum_j t^{a_1+...+a_{j-1}} gamma(a_j) e_j
    std::vector<TruncatedCompletedElem> K;  // (1 - t^N) [B]
    std::vector<TruncatedCompletedElem> total() const {
      std::vector<TruncatedCompletedElem> out;
      for (std::size_t k = 0; k < L.size(); ++k) {
        out.push_back(L[k] + M[k] + K[k]);
      }
      return out;
    }
  };

  inline MatBurauColumn matburau_column(GaloisElemData const& d, int i) {
    auto const&                  p    = d.params();
    int const                    s    = d.s();
    std::size_t const            dim  = static_cast<std::size_t>(s - 2);
    TruncatedCompletedElem const zero(p);
    TruncatedCompletedElem const one_minus_tN =
        TruncatedCompletedElem::constant(p, 1) - TruncatedCompletedElem::monomial(d.N());
    WordDecomposition const dec = decompose(d.w(i));

    MatBurauColumn col{std::vector(dim, zero), std::vector(dim, zero), std::vector(dim, zero)};
    Integer        total = 0;
    for (auto a : dec.a) {
      total += a;
    }
    col.L[static_cast<std::size_t>(i - 2)] =
        gamma(d.N()) * TruncatedCompletedElem::monomial(LadicExponent(p, total));

    Integer prefix = dec.a[0];
    for (int j = 2; j <= s - 1; ++j) {
      auto const aj = dec.a[static_cast<std::size_t>(j - 1)];
      col.M[static_cast<std::size_t>(j - 2)] =
          one_minus_tN * gamma(LadicExponent(p, aj))
          * TruncatedCompletedElem::monomial(LadicExponent(p, prefix));
      prefix += aj;
    }
    auto const bt = detail::truncate(dec.b, p);
    for (std::size_t k = 0; k < dim; ++k) {
      col.K[k] = one_minus_tN * bt.coords[k];
    }
    return col;
  }

  // Closed form: gamma(N) L + (1 - t^N)(M + K).
  inline TruncatedMatrix assemble_matburau(GaloisElemData const& d) {
    std::size_t const dim = static_cast<std::size_t>(d.s() - 2);
    TruncatedMatrix   m(dim, dim, TruncatedCompletedElem(d.params()));
    for (int i = 2; i <= d.s() - 1; ++i) {
      m.set_column(static_cast<std::size_t>(i - 2), matburau_column(d, i).total());
    }
    return m;
  }

  // Column i: [w_i x_i^N w_i^-1 x_1^-N] by word reduction and rewriting, with
  // N taken as its representative in [1, l^(M+K)).
  inline TruncatedMatrix direct_oracle(GaloisElemData const& d) {
    int const          s   = d.s();
    std::int64_t const N   = d.N().value();
    std::size_t const  dim = static_cast<std::size_t>(s - 2);
    TruncatedMatrix    m(dim, dim, TruncatedCompletedElem(d.params()));
    for (int i = 2; i <= s - 1; ++i) {
      Word const word = conjugate(Word::generator(s, i, N), d.w(i)) * Word::generator(s, 1, -N);
      m.set_column(static_cast<std::size_t>(i - 2),
                   detail::truncate(abelianize_R0(word), d.params()).coords);
    }
    return m;
  }

  // Recompute each summand of the closed form from its own word:
  //   L:  P x_i^N x_1^-N P^-1
  //   M:  P x_1^N P^-1 x_1^-N
  //   K:  B x_1^N B^-1 x_1^-N
  // where w_i = B P, and check they sum to the oracle column.
  inline bool three_term_split_check(GaloisElemData const& d) {
    int const          s = d.s();
    std::int64_t const N = d.N().value();
    auto const&        p = d.params();
    Word const         x1N = Word::generator(s, 1, N);
    auto tr = [&](Word const& w) { return detail::truncate(abelianize_R0(w), p).coords; };
    TruncatedMatrix const oracle = direct_oracle(d);
    for (int i = 2; i <= s - 1; ++i) {
      auto const dec = decompose(d.w(i));
      Word const P   = dec.tail(s);
      auto const col = matburau_column(d, i);
      auto const L   = tr(P * Word::generator(s, i, N) * invert(x1N) * invert(P));
      auto const M   = tr(P * x1N * invert(P) * invert(x1N));
      auto const K   = tr(dec.B * x1N * invert(dec.B) * invert(x1N));
      if (L != col.L || M != col.M || K != col.K) {
        return false;
      }
      if (col.total() != oracle.column(static_cast<std::size_t>(i - 2))) {
        return false;
      }
    }
    return true;
  }

  // [sigma(x_1 w x_1^-1)] = t^N [sigma(w)] for w in R_0, over Z[t,t^-1].
  inline bool twisted_commutation_check(GaloisElemData const& d, Word const& w) {
    auto const        sigma = d.automorphism();
    Word const        x1    = Word::generator(d.s(), 1);
    auto const        lhs   = abelianize_R0(sigma.apply(x1 * w * invert(x1)));
    auto const        rhs   = abelianize_R0(sigma.apply(w));
    LaurentPoly const tN    = LaurentPoly::t(d.N().value());
    return lhs == tN * rhs;
  }

}  // namespace burau_lab

#endif  // BURAU_LAB_PROELL_HPP_
