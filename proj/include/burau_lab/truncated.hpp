#ifndef BURAU_LAB_TRUNCATED_HPP_
#define BURAU_LAB_TRUNCATED_HPP_

// Desk-scale truncation of the completed group algebra Z_l[[Z_l]]:
//
//   Z/l^K [ Z/l^M ]
//
// coefficients mod l^K, group Z/l^M generated by t.  An l-adic exponent used
// as a power of t, or inside gamma(a) = (t^a - 1)/(t - 1), is needed modulo
// l^(M+K): gamma(a) only sees q = floor(a / l^M) mod l^K and a mod l^M.

#include <cstdint>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "integer.hpp"
#include "laurent.hpp"

namespace burau_lab {

  class TruncationParams {
   public:
    TruncationParams() = default;
    TruncationParams(std::int64_t l, int K, int M) : _l(l), _K(K), _M(M) {
      if (l < 2 || !is_prime(l)) {
        throw std::invalid_argument("l must be prime, got " + std::to_string(l));
      }
      if (K < 1 || M < 1) {
        throw std::invalid_argument("truncation precisions K, M must be >= 1");
      }
      // exponents live mod l^(M+K); keep products of coefficients in 128 bits
      // and the group small enough to store densely
      _coef_mod  = checked_pow(l, K, std::int64_t(1) << 62);
      _group     = checked_pow(l, M, std::int64_t(1) << 20);
      _exp_mod   = checked_pow(l, M + K, std::int64_t(1) << 62);
    }

    std::int64_t l() const noexcept {
      return _l;
    }
    int K() const noexcept {
      return _K;
    }
    int M() const noexcept {
      return _M;
    }
    // l^K
    std::int64_t coefficient_modulus() const noexcept {
      return _coef_mod;
    }
    // l^M
    std::int64_t group_order() const noexcept {
      return _group;
    }
    // l^(M+K)
    std::int64_t exponent_modulus() const noexcept {
      return _exp_mod;
    }

    bool operator==(TruncationParams const&) const = default;

   private:
    static bool is_prime(std::int64_t p) {
      for (std::int64_t d = 2; d * d <= p; ++d) {
        if (p % d == 0) {
          return false;
        }
      }
      return true;
    }
    static std::int64_t checked_pow(std::int64_t b, int e, std::int64_t limit) {
      std::int64_t r = 1;
      for (int i = 0; i < e; ++i) {
        if (r > limit / b) {
          throw std::overflow_error("truncation parameters too large");
        }
        r *= b;
      }
      return r;
    }

    std::int64_t _l        = 2;
    int          _K        = 1;
    int          _M        = 1;
    std::int64_t _coef_mod = 2;
    std::int64_t _group    = 2;
    std::int64_t _exp_mod  = 4;
  };

  // Truncated l-adic integer used as an exponent, stored in [0, l^(M+K)).
  class LadicExponent {
   public:
    LadicExponent() = default;
    LadicExponent(TruncationParams p, std::int64_t a)
        : _p(p), _value(mod_floor(a, p.exponent_modulus())) {}
    LadicExponent(TruncationParams p, Integer const& a)
        : _p(p), _value(mod_floor(a, p.exponent_modulus())) {}

    TruncationParams const& params() const noexcept {
      return _p;
    }
    std::int64_t value() const noexcept {
      return _value;
    }
    bool is_unit() const noexcept {
      return _value % _p.l() != 0;
    }

    LadicExponent operator+(LadicExponent const& o) const {
      check_same(o);
      return LadicExponent(_p, Integer(_value) + o._value);
    }
    LadicExponent operator*(LadicExponent const& o) const {
      check_same(o);
      return LadicExponent(_p, Integer(_value) * o._value);
    }
    LadicExponent operator-() const {
      return LadicExponent(_p, -_value);
    }

    bool operator==(LadicExponent const&) const = default;

   private:
    void check_same(LadicExponent const& o) const {
      if (!(o._p == _p)) {
        throw std::invalid_argument("l-adic exponents with different truncation");
      }
    }
    TruncationParams _p;
    std::int64_t     _value = 0;
  };

  class TruncatedCompletedElem {
   public:
    TruncatedCompletedElem() = default;
    explicit TruncatedCompletedElem(TruncationParams p)
        : _p(p), _coeffs(static_cast<std::size_t>(p.group_order()), 0) {}
    TruncatedCompletedElem(TruncationParams p, std::vector<std::int64_t> coeffs)
        : _p(p), _coeffs(std::move(coeffs)) {
      if (static_cast<std::int64_t>(_coeffs.size()) != p.group_order()) {
        throw std::invalid_argument("truncated element needs l^M coefficients");
      }
      for (auto& c : _coeffs) {
        c = mod_floor(c, p.coefficient_modulus());
      }
    }

    // c t^k, k any integer (reduced mod l^M).
    static TruncatedCompletedElem monomial(TruncationParams p, std::int64_t k,
                                           std::int64_t c = 1) {
      TruncatedCompletedElem e(p);
      e._coeffs[mod_floor(k, p.group_order())] = mod_floor(c, p.coefficient_modulus());
      return e;
    }
    static TruncatedCompletedElem monomial(LadicExponent const& k,
                                           std::int64_t c = 1) {
      return monomial(k.params(), k.value(), c);
    }
    static TruncatedCompletedElem constant(TruncationParams p, std::int64_t c) {
      return monomial(p, 0, c);
    }
    // Image of a Laurent polynomial: t^k -> t^(k mod l^M), coefficients mod l^K.
    static TruncatedCompletedElem from_laurent(TruncationParams p,
                                               LaurentPoly const& poly) {
      TruncatedCompletedElem e(p);
      std::int64_t const     m = p.coefficient_modulus();
      for (auto const& [k, c] : poly.terms()) {
        auto& slot = e._coeffs[mod_floor(k, p.group_order())];
        slot       = (slot + mod_floor(c, m)) % m;
      }
      return e;
    }

    TruncationParams const& params() const noexcept {
      return _p;
    }
    std::vector<std::int64_t> const& coeffs() const noexcept {
      return _coeffs;
    }
    std::int64_t operator[](std::size_t i) const {
      return _coeffs.at(i);
    }
    bool is_zero() const {
      for (auto c : _coeffs) {
        if (c != 0) {
          return false;
        }
      }
      return true;
    }

    TruncatedCompletedElem& operator+=(TruncatedCompletedElem const& o) {
      check_same(o);
      std::int64_t const m = _p.coefficient_modulus();
      for (std::size_t i = 0; i < _coeffs.size(); ++i) {
        _coeffs[i] = (_coeffs[i] + o._coeffs[i]) % m;
      }
      return *this;
    }
    TruncatedCompletedElem& operator-=(TruncatedCompletedElem const& o) {
      check_same(o);
      std::int64_t const m = _p.coefficient_modulus();
      for (std::size_t i = 0; i < _coeffs.size(); ++i) {
        _coeffs[i] = mod_floor(_coeffs[i] - o._coeffs[i], m);
      }
      return *this;
    }
    TruncatedCompletedElem operator-() const {
      TruncatedCompletedElem e(_p);
      return e -= *this;
    }
    friend TruncatedCompletedElem operator+(TruncatedCompletedElem a,
                                            TruncatedCompletedElem const& b) {
      return a += b;
    }
    friend TruncatedCompletedElem operator-(TruncatedCompletedElem a,
                                            TruncatedCompletedElem const& b) {
      return a -= b;
    }
    friend TruncatedCompletedElem operator*(TruncatedCompletedElem const& a,
                                            TruncatedCompletedElem const& b) {
      a.check_same(b);
      std::size_t const      n = a._coeffs.size();
      std::int64_t const     m = a._p.coefficient_modulus();
      std::vector<__int128>  acc(n, 0);
      for (std::size_t i = 0; i < n; ++i) {
        if (a._coeffs[i] == 0) {
          continue;
        }
        for (std::size_t j = 0; j < n; ++j) {
          auto& slot = acc[(i + j) % n];
          slot       = (slot + static_cast<__int128>(a._coeffs[i]) * b._coeffs[j]) % m;
        }
      }
      TruncatedCompletedElem r(a._p);
      for (std::size_t k = 0; k < n; ++k) {
        r._coeffs[k] = static_cast<std::int64_t>(acc[k]);
      }
      return r;
    }

    bool operator==(TruncatedCompletedElem const&) const = default;

   private:
    void check_same(TruncatedCompletedElem const& o) const {
      if (!(o._p == _p)) {
        throw std::invalid_argument("truncated elements with different (l, K, M)");
      }
    }
    TruncationParams          _p;
    std::vector<std::int64_t> _coeffs;
  };

  inline TruncatedCompletedElem zero_like(TruncatedCompletedElem const& e) {
    return TruncatedCompletedElem(e.params());
  }
  inline TruncatedCompletedElem one_like(TruncatedCompletedElem const& e) {
    return TruncatedCompletedElem::constant(e.params(), 1);
  }
  inline bool is_zero(TruncatedCompletedElem const& e) {
    return e.is_zero();
  }
  // Recognises c t^k with c a unit mod l^K.
  inline std::optional<TruncatedCompletedElem>
  unit_inverse(TruncatedCompletedElem const& e) {
    std::optional<std::size_t> at;
    for (std::size_t i = 0; i < e.coeffs().size(); ++i) {
      if (e.coeffs()[i] != 0) {
        if (at) {
          return std::nullopt;
        }
        at = i;
      }
    }
    if (!at || e.coeffs()[*at] % e.params().l() == 0) {
      return std::nullopt;
    }
    std::int64_t const m = e.params().coefficient_modulus();
    // extended Euclid for c^-1 mod l^K
    std::int64_t r0 = m, r1 = e.coeffs()[*at], s0 = 0, s1 = 1;
    while (r1 != 0) {
      std::int64_t q = r0 / r1;
      std::tie(r0, r1) = std::pair(r1, r0 - q * r1);
      std::tie(s0, s1) = std::pair(s1, s0 - q * s1);
    }
    return TruncatedCompletedElem::monomial(
        e.params(), -static_cast<std::int64_t>(*at), mod_floor(s0, m));
  }

  inline std::string to_string(TruncatedCompletedElem const& e) {
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < e.coeffs().size(); ++i) {
      os << (i ? "," : "") << e.coeffs()[i];
    }
    os << "] mod " << e.params().coefficient_modulus();
    return os.str();
  }

}  // namespace burau_lab

#endif  // BURAU_LAB_TRUNCATED_HPP_
