#ifndef BURAU_LAB_HOMOLOGY_HPP_
#define BURAU_LAB_HOMOLOGY_HPP_

// First homology of the cyclic covers, as abelianized subgroups:
//
//   R_0 / R_0'  = Z[t,t^-1]^(s-2)            basis beta_2 ... beta_{s-1}
//   R_n / R_n'  = Z[Z/nZ]^(s-2) + Z          extra slot counts x_1^n
//   J^(s-2),  J = Z[Z/nZ] / (norm)           after filling the punctures
//
// beta_j = x_j x_1^-1, and conjugation by x_1 acts as multiplication by t.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "cyclic.hpp"
#include "integer.hpp"
#include "laurent.hpp"
#include "matrix.hpp"
#include "schreier.hpp"
#include "word.hpp"

namespace burau_lab {

  template <Ring R>
  struct HomologyVector {
    std::vector<R>         coords;  // coords[j-2] is the beta_j coordinate
    std::optional<Integer> extra;

    static HomologyVector zero(int s, R const& proto) {
      return HomologyVector{std::vector<R>(static_cast<std::size_t>(s - 2), zero_like(proto)),
                            std::nullopt};
    }
    static HomologyVector unit(int s, int j, R const& proto) {
      auto v                            = zero(s, proto);
      v.coords.at(static_cast<std::size_t>(j - 2)) = one_like(proto);
      return v;
    }

    R const& operator[](int j) const {
      return coords.at(static_cast<std::size_t>(j - 2));
    }
    R& operator[](int j) {
      return coords.at(static_cast<std::size_t>(j - 2));
    }

    HomologyVector& operator+=(HomologyVector const& o) {
      if (o.coords.size() != coords.size() || o.extra.has_value() != extra.has_value()) {
        throw std::invalid_argument("homology vectors of different shape");
      }
      for (std::size_t k = 0; k < coords.size(); ++k) {
        coords[k] = coords[k] + o.coords[k];
      }
      if (extra) {
        *extra += *o.extra;
      }
      return *this;
    }
    HomologyVector operator-() const {
      HomologyVector v = *this;
      for (auto& c : v.coords) {
        c = -c;
      }
      if (v.extra) {
        *v.extra = -*v.extra;
      }
      return v;
    }
    friend HomologyVector operator+(HomologyVector a, HomologyVector const& b) {
      return a += b;
    }
    friend HomologyVector operator-(HomologyVector a, HomologyVector const& b) {
      return a += -b;
    }
    friend HomologyVector operator*(R const& c, HomologyVector v) {
      for (auto& x : v.coords) {
        x = c * x;
      }
      if (v.extra) {
        throw std::invalid_argument("scalar action on a vector with an extra slot");
      }
      return v;
    }

    bool operator==(HomologyVector const&) const = default;
  };

  template <Ring R, typename ToString>
  std::string format_vector(HomologyVector<R> const& v, ToString&& str) {
    std::ostringstream os;
    os << '(';
    for (std::size_t k = 0; k < v.coords.size(); ++k) {
      os << (k ? ", " : "") << str(v.coords[k]);
    }
    if (v.extra) {
      os << " | " << *v.extra;
    }
    os << ')';
    return os.str();
  }

  // Beta(i, j) -> t^i e_j.  Throws NotInSubgroup or WindowExceeded.
  inline HomologyVector<LaurentPoly> abelianize_R0(Word const& w, Transversal const& window) {
    if (window.is_finite()) {
      throw std::invalid_argument("abelianize_R0 needs a window transversal");
    }
    auto v = HomologyVector<LaurentPoly>::zero(w.s(), LaurentPoly());
    for (auto const& term : rewrite(w, window)) {
      auto const& b = term.generator.as_beta();
      v[b.j].add_term(b.i, term.sign);
    }
    return v;
  }

  // Same, with the smallest window that suffices.
  inline HomologyVector<LaurentPoly> abelianize_R0(Word const& w) {
    if (winding(w) != 0) {
      throw NotInSubgroup("word '" + to_string(w) + "' has winding "
                          + std::to_string(winding(w)) + ", not in R_0");
    }
    auto [lo, hi] = required_window(w);
    return abelianize_R0(w, Transversal::window(w.s(), lo, hi));
  }

  // Beta(i, j) -> sigma^i e_j,  Tail(j) = Beta(n-1, j) x_1^n -> sigma^(n-1) e_j + extra,
  // Tail(1) = x_1^n -> extra.
  inline HomologyVector<CyclicAlgebraElem> abelianize_Rn(Word const& w, std::int64_t n) {
    auto const t = Transversal::finite_cyclic(w.s(), n);
    auto       v = HomologyVector<CyclicAlgebraElem>::zero(w.s(), CyclicAlgebraElem(n));
    v.extra      = Integer(0);
    for (auto const& term : rewrite(w, t)) {
      auto const& g = term.generator;
      if (g.is_beta()) {
        v[g.as_beta().j][static_cast<std::size_t>(g.as_beta().i)] += term.sign;
      } else {
        if (g.as_tail().j != 1) {
          v[g.as_tail().j][static_cast<std::size_t>(n - 1)] += term.sign;
        }
        *v.extra += term.sign;
      }
    }
    return v;
  }

  // Fill in the punctures: kill the extra slot and the norm element.
  inline HomologyVector<CyclotomicElem> project_complete(HomologyVector<CyclicAlgebraElem> const& v) {
    HomologyVector<CyclotomicElem> out;
    for (auto const& c : v.coords) {
      out.coords.push_back(CyclotomicElem::from_cyclic(c));
    }
    return out;
  }

  // Integer coordinates of J^(s-2): slot (j-2)(n-1) + i holds sigma^i beta_j.
  inline std::vector<Integer> flatten(HomologyVector<CyclotomicElem> const& v) {
    std::vector<Integer> out;
    for (auto const& c : v.coords) {
      out.insert(out.end(), c.coeffs().begin(), c.coeffs().end());
    }
    return out;
  }

  // Multiplication by sigma on J in the basis sigma^0 ... sigma^(n-2):
  // ones on the subdiagonal, last column -1.
  inline Matrix<Integer> companion_matrix(std::int64_t n) {
    if (n < 2) {
      throw std::invalid_argument("companion matrix needs n >= 2");
    }
    std::size_t const d = static_cast<std::size_t>(n - 1);
    Matrix<Integer>   a(d, d, Integer(0));
    for (std::size_t i = 0; i + 1 < d; ++i) {
      a(i + 1, i) = 1;
    }
    for (std::size_t i = 0; i < d; ++i) {
      a(i, d - 1) = -1;
    }
    return a;
  }

  // p(A) for a Laurent polynomial p, using A^-1 = A^(n-1).
  inline Matrix<Integer> evaluate_at_companion(LaurentPoly const& p, std::int64_t n) {
    Matrix<Integer> const a = companion_matrix(n);
    std::size_t const     d = a.rows();
    Matrix<Integer>       out(d, d, Integer(0));
    std::vector<Matrix<Integer>> powers{Matrix<Integer>::identity(d, Integer(0))};
    for (std::int64_t k = 1; k < n; ++k) {
      powers.push_back(powers.back() * a);
    }
    for (auto const& [k, c] : p.terms()) {
      out += c * powers[static_cast<std::size_t>(mod_floor(k, n))];
    }
    return out;
  }

  // Rank of J^(s-2), which is 2g for the genus g of the complete curve.
  inline std::int64_t complete_rank(std::int64_t n, int s) {
    return (n - 1) * (s - 2);
  }

}  // namespace burau_lab

#endif  // BURAU_LAB_HOMOLOGY_HPP_
