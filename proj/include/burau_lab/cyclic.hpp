#ifndef BURAU_LAB_CYCLIC_HPP_
#define BURAU_LAB_CYCLIC_HPP_

// Finite cyclic coefficient rings over Z:
//
//   CyclicAlgebraElem  Z[Z/nZ] with basis sigma^0 ... sigma^{n-1}
//   CyclotomicElem     Z[x]/(1 + x + ... + x^{n-1}) with basis 1 ... x^{n-2}
//
// The second ring is the co-augmentation module J = Z[Z/nZ]/(norm) with its
// ring structure; x^{n-1} = -(1 + x + ... + x^{n-2}).

#include <cstdint>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "integer.hpp"
#include "laurent.hpp"

namespace burau_lab {

  class CyclicAlgebraElem {
   public:
    CyclicAlgebraElem() = default;
    explicit CyclicAlgebraElem(std::int64_t n) : _coeffs(check_n(n)) {}
    CyclicAlgebraElem(std::int64_t n, std::vector<Integer> coeffs)
        : _coeffs(std::move(coeffs)) {
      if (static_cast<std::int64_t>(_coeffs.size()) != n || n < 1) {
        throw std::invalid_argument("Z[Z/nZ] element needs exactly n coefficients");
      }
    }

    static CyclicAlgebraElem sigma_power(std::int64_t n, std::int64_t k,
                                         Integer c = 1) {
      CyclicAlgebraElem e(n);
      e._coeffs[mod_floor(k, n)] = std::move(c);
      return e;
    }
    static CyclicAlgebraElem constant(std::int64_t n, Integer c) {
      return sigma_power(n, 0, std::move(c));
    }
    // sum_{i<n} sigma^i
    static CyclicAlgebraElem norm(std::int64_t n) {
      return CyclicAlgebraElem(n, std::vector<Integer>(check_n(n), Integer(1)));
    }
    // image of a Laurent polynomial under t -> sigma
    static CyclicAlgebraElem from_laurent(std::int64_t n, LaurentPoly const& p) {
      CyclicAlgebraElem e(n);
      for (auto const& [k, c] : p.terms()) {
        e._coeffs[mod_floor(k, n)] += c;
      }
      return e;
    }

    std::int64_t n() const noexcept {
      return static_cast<std::int64_t>(_coeffs.size());
    }
    std::vector<Integer> const& coeffs() const noexcept {
      return _coeffs;
    }
    Integer const& operator[](std::size_t i) const {
      return _coeffs.at(i);
    }
    Integer& operator[](std::size_t i) {
      return _coeffs.at(i);
    }
    bool is_zero() const {
      for (auto const& c : _coeffs) {
        if (!c.is_zero()) {
          return false;
        }
      }
      return true;
    }

    CyclicAlgebraElem& operator+=(CyclicAlgebraElem const& o) {
      check_same(o);
      for (std::size_t i = 0; i < _coeffs.size(); ++i) {
        _coeffs[i] += o._coeffs[i];
      }
      return *this;
    }
    CyclicAlgebraElem& operator-=(CyclicAlgebraElem const& o) {
      check_same(o);
      for (std::size_t i = 0; i < _coeffs.size(); ++i) {
        _coeffs[i] -= o._coeffs[i];
      }
      return *this;
    }
    CyclicAlgebraElem operator-() const {
      CyclicAlgebraElem e = *this;
      for (auto& c : e._coeffs) {
        c = -c;
      }
      return e;
    }
    friend CyclicAlgebraElem operator+(CyclicAlgebraElem a,
                                       CyclicAlgebraElem const& b) {
      return a += b;
    }
    friend CyclicAlgebraElem operator-(CyclicAlgebraElem a,
                                       CyclicAlgebraElem const& b) {
      return a -= b;
    }
    friend CyclicAlgebraElem operator*(CyclicAlgebraElem const& a,
                                       CyclicAlgebraElem const& b) {
      a.check_same(b);
      std::size_t const n = a._coeffs.size();
      CyclicAlgebraElem r(static_cast<std::int64_t>(n));
      for (std::size_t i = 0; i < n; ++i) {
        if (a._coeffs[i].is_zero()) {
          continue;
        }
        for (std::size_t j = 0; j < n; ++j) {
          r._coeffs[(i + j) % n] += a._coeffs[i] * b._coeffs[j];
        }
      }
      return r;
    }

    bool operator==(CyclicAlgebraElem const&) const = default;

   private:
    static std::size_t check_n(std::int64_t n) {
      if (n < 1) {
        throw std::invalid_argument("cyclic group order must be >= 1");
      }
      return static_cast<std::size_t>(n);
    }
    void check_same(CyclicAlgebraElem const& o) const {
      if (o._coeffs.size() != _coeffs.size()) {
        throw std::invalid_argument("Z[Z/nZ] elements with different n");
      }
    }
    std::vector<Integer> _coeffs;
  };

  inline CyclicAlgebraElem zero_like(CyclicAlgebraElem const& e) {
    return CyclicAlgebraElem(e.n());
  }
  inline CyclicAlgebraElem one_like(CyclicAlgebraElem const& e) {
    return CyclicAlgebraElem::constant(e.n(), 1);
  }
  inline bool is_zero(CyclicAlgebraElem const& e) {
    return e.is_zero();
  }
  // Only the trivial units +-sigma^k are recognised.
  inline std::optional<CyclicAlgebraElem> unit_inverse(CyclicAlgebraElem const& e) {
    std::optional<std::size_t> at;
    for (std::size_t i = 0; i < e.coeffs().size(); ++i) {
      if (!e.coeffs()[i].is_zero()) {
        if (at) {
          return std::nullopt;
        }
        at = i;
      }
    }
    if (!at || (e.coeffs()[*at] != 1 && e.coeffs()[*at] != -1)) {
      return std::nullopt;
    }
    return CyclicAlgebraElem::sigma_power(
        e.n(), -static_cast<std::int64_t>(*at), e.coeffs()[*at]);
  }

  inline std::string to_string(CyclicAlgebraElem const& e) {
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < e.coeffs().size(); ++i) {
      os << (i ? "," : "") << e.coeffs()[i];
    }
    os << ']';
    return os.str();
  }

  ////////////////////////////////////////////////////////////////////////
  // Z[x]/(Phi), Phi = 1 + x + ... + x^{n-1}
  ////////////////////////////////////////////////////////////////////////

  class CyclotomicElem {
   public:
    CyclotomicElem() = default;
    explicit CyclotomicElem(std::int64_t n) : _n(check_n(n)), _coeffs(n - 1) {}
    CyclotomicElem(std::int64_t n, std::vector<Integer> coeffs)
        : _n(check_n(n)), _coeffs(std::move(coeffs)) {
      if (static_cast<std::int64_t>(_coeffs.size()) != n - 1) {
        throw std::invalid_argument("cyclotomic element needs n-1 coefficients");
      }
    }

    // x^k for any integer k (x^n = 1 in this ring).
    static CyclotomicElem x_power(std::int64_t n, std::int64_t k, Integer c = 1) {
      CyclotomicElem e(n);
      e.add_power(mod_floor(k, n), c);
      return e;
    }
    static CyclotomicElem constant(std::int64_t n, Integer c) {
      return x_power(n, 0, std::move(c));
    }
    // Image of p under t -> x^nu.
    static CyclotomicElem specialize(std::int64_t n, LaurentPoly const& p,
                                     std::int64_t nu) {
      CyclotomicElem e(n);
      for (auto const& [k, c] : p.terms()) {
        e.add_power(mod_floor(static_cast<Integer>(k) * nu, n), c);
      }
      return e;
    }
    // Reduction of a Z[Z/nZ] element modulo the norm element.
    static CyclotomicElem from_cyclic(CyclicAlgebraElem const& a) {
      CyclotomicElem e(a.n());
      for (std::int64_t k = 0; k < a.n(); ++k) {
        e.add_power(k, a[k]);
      }
      return e;
    }

    std::int64_t n() const noexcept {
      return _n;
    }
    std::vector<Integer> const& coeffs() const noexcept {
      return _coeffs;
    }
    Integer const& operator[](std::size_t i) const {
      return _coeffs.at(i);
    }
    bool is_zero() const {
      for (auto const& c : _coeffs) {
        if (!c.is_zero()) {
          return false;
        }
      }
      return true;
    }
    // Does this element lie in Z (constant)?
    bool is_constant() const {
      for (std::size_t i = 1; i < _coeffs.size(); ++i) {
        if (!_coeffs[i].is_zero()) {
          return false;
        }
      }
      return true;
    }

    CyclotomicElem& operator+=(CyclotomicElem const& o) {
      check_same(o);
      for (std::size_t i = 0; i < _coeffs.size(); ++i) {
        _coeffs[i] += o._coeffs[i];
      }
      return *this;
    }
    CyclotomicElem& operator-=(CyclotomicElem const& o) {
      check_same(o);
      for (std::size_t i = 0; i < _coeffs.size(); ++i) {
        _coeffs[i] -= o._coeffs[i];
      }
      return *this;
    }
    CyclotomicElem operator-() const {
      CyclotomicElem e = *this;
      for (auto& c : e._coeffs) {
        c = -c;
      }
      return e;
    }
    friend CyclotomicElem operator+(CyclotomicElem a, CyclotomicElem const& b) {
      return a += b;
    }
    friend CyclotomicElem operator-(CyclotomicElem a, CyclotomicElem const& b) {
      return a -= b;
    }
    // Multiply in Z[x]/(x^n - 1), then fold x^{n-1} back.
    friend CyclotomicElem operator*(CyclotomicElem const& a,
                                    CyclotomicElem const& b) {
      a.check_same(b);
      std::size_t const    n = static_cast<std::size_t>(a._n);
      std::vector<Integer> full(n);
      for (std::size_t i = 0; i + 1 < n; ++i) {
        if (a._coeffs[i].is_zero()) {
          continue;
        }
        for (std::size_t j = 0; j + 1 < n; ++j) {
          full[(i + j) % n] += a._coeffs[i] * b._coeffs[j];
        }
      }
      CyclotomicElem r(a._n);
      for (std::size_t k = 0; k < n; ++k) {
        r.add_power(static_cast<std::int64_t>(k), full[k]);
      }
      return r;
    }

    bool operator==(CyclotomicElem const&) const = default;

   private:
    // this += c x^k, 0 <= k < n
    void add_power(std::int64_t k, Integer const& c) {
      if (k == _n - 1) {
        for (auto& v : _coeffs) {
          v -= c;
        }
      } else {
        _coeffs[static_cast<std::size_t>(k)] += c;
      }
    }
    static std::int64_t check_n(std::int64_t n) {
      if (n < 2) {
        throw std::invalid_argument("cyclotomic quotient needs n >= 2");
      }
      return n;
    }
    void check_same(CyclotomicElem const& o) const {
      if (o._n != _n) {
        throw std::invalid_argument("cyclotomic elements with different n");
      }
    }
    std::int64_t         _n = 2;
    std::vector<Integer> _coeffs;
  };

  inline CyclotomicElem zero_like(CyclotomicElem const& e) {
    return CyclotomicElem(e.n());
  }
  inline CyclotomicElem one_like(CyclotomicElem const& e) {
    return CyclotomicElem::constant(e.n(), 1);
  }
  inline bool is_zero(CyclotomicElem const& e) {
    return e.is_zero();
  }
  // Recognises the units +-x^k.
  inline std::optional<CyclotomicElem> unit_inverse(CyclotomicElem const& e) {
    for (std::int64_t k = 0; k < e.n(); ++k) {
      for (int sgn : {1, -1}) {
        if (CyclotomicElem::x_power(e.n(), k, sgn) == e) {
          return CyclotomicElem::x_power(e.n(), -k, sgn);
        }
      }
    }
    return std::nullopt;
  }

  inline std::string to_string(CyclotomicElem const& e) {
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < e.coeffs().size(); ++i) {
      os << (i ? "," : "") << e.coeffs()[i];
    }
    os << ']';
    return os.str();
  }

}  // namespace burau_lab

#endif  // BURAU_LAB_CYCLIC_HPP_
