#ifndef BURAU_LAB_LAURENT_HPP_
#define BURAU_LAB_LAURENT_HPP_

// Z[t, t^-1] = Z[Z] as a sparse exponent -> coefficient map.

#include <cstdint>
#include <map>
#include <optional>
#include <sstream>
#include <string>

#include "integer.hpp"

namespace burau_lab {

  class LaurentPoly {
   public:
    using terms_type = std::map<std::int64_t, Integer>;

    LaurentPoly() = default;
    LaurentPoly(Integer c) {  // NOLINT(runtime/explicit)
      if (!c.is_zero()) {
        _terms.emplace(0, std::move(c));
      }
    }
    LaurentPoly(int c) : LaurentPoly(Integer(c)) {}  // NOLINT

    static LaurentPoly monomial(std::int64_t k, Integer c = 1) {
      LaurentPoly p;
      if (!c.is_zero()) {
        p._terms.emplace(k, std::move(c));
      }
      return p;
    }
    static LaurentPoly t(std::int64_t k = 1) {
      return monomial(k, 1);
    }

    terms_type const& terms() const noexcept {
      return _terms;
    }
    bool is_zero() const noexcept {
      return _terms.empty();
    }

    Integer coeff(std::int64_t k) const {
      auto it = _terms.find(k);
      return it == _terms.end() ? Integer(0) : it->second;
    }

    void add_term(std::int64_t k, Integer const& c) {
      if (c.is_zero()) {
        return;
      }
      auto [it, inserted] = _terms.emplace(k, c);
      if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) {
          _terms.erase(it);
        }
      }
    }

    std::optional<std::int64_t> min_degree() const {
      if (_terms.empty()) {
        return std::nullopt;
      }
      return _terms.begin()->first;
    }
    std::optional<std::int64_t> max_degree() const {
      if (_terms.empty()) {
        return std::nullopt;
      }
      return _terms.rbegin()->first;
    }

    // +-t^k ?
    bool is_unit() const {
      return _terms.size() == 1
             && (_terms.begin()->second == 1 || _terms.begin()->second == -1);
    }

    LaurentPoly& operator+=(LaurentPoly const& o) {
      for (auto const& [k, c] : o._terms) {
        add_term(k, c);
      }
      return *this;
    }
    LaurentPoly& operator-=(LaurentPoly const& o) {
      for (auto const& [k, c] : o._terms) {
        add_term(k, -c);
      }
      return *this;
    }
    LaurentPoly operator-() const {
      LaurentPoly p;
      for (auto const& [k, c] : _terms) {
        p._terms.emplace(k, -c);
      }
      return p;
    }
    friend LaurentPoly operator+(LaurentPoly a, LaurentPoly const& b) {
      return a += b;
    }
    friend LaurentPoly operator-(LaurentPoly a, LaurentPoly const& b) {
      return a -= b;
    }
    friend LaurentPoly operator*(LaurentPoly const& a, LaurentPoly const& b) {
      LaurentPoly p;
      for (auto const& [i, ci] : a._terms) {
        for (auto const& [j, cj] : b._terms) {
          p.add_term(i + j, ci * cj);
        }
      }
      return p;
    }
    LaurentPoly& operator*=(LaurentPoly const& o) {
      return *this = *this * o;
    }

    // Multiply by t^k.
    LaurentPoly shifted(std::int64_t k) const {
      LaurentPoly p;
      for (auto const& [e, c] : _terms) {
        p._terms.emplace(e + k, c);
      }
      return p;
    }

    // p(t^{-1})
    LaurentPoly bar() const {
      LaurentPoly p;
      for (auto const& [e, c] : _terms) {
        p._terms.emplace(-e, c);
      }
      return p;
    }

    bool operator==(LaurentPoly const&) const = default;

   private:
    terms_type _terms;
  };

  inline LaurentPoly zero_like(LaurentPoly const&) {
    return LaurentPoly();
  }
  inline LaurentPoly one_like(LaurentPoly const&) {
    return LaurentPoly(1);
  }
  inline bool is_zero(LaurentPoly const& p) {
    return p.is_zero();
  }
  inline std::optional<LaurentPoly> unit_inverse(LaurentPoly const& p) {
    if (!p.is_unit()) {
      return std::nullopt;
    }
    auto const& [k, c] = *p.terms().begin();
    return LaurentPoly::monomial(-k, c);
  }

  // Human-readable, highest degree first: "-t^2 + 3t - 1 + t^-1".
  inline std::string to_string(LaurentPoly const& p) {
    if (p.is_zero()) {
      return "0";
    }
    std::ostringstream os;
    bool               first = true;
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
      auto const& [k, c] = *it;
      Integer mag        = c < 0 ? Integer(-c) : c;
      if (first) {
        if (c < 0) {
          os << '-';
        }
      } else {
        os << (c < 0 ? " - " : " + ");
      }
      first = false;
      if (k == 0 || mag != 1) {
        os << mag;
      }
      if (k != 0) {
        os << 't';
        if (k != 1) {
          os << '^' << k;
        }
      }
    }
    return os.str();
  }

  inline std::ostream& operator<<(std::ostream& os, LaurentPoly const& p) {
    return os << to_string(p);
  }

}  // namespace burau_lab

#endif  // BURAU_LAB_LAURENT_HPP_
