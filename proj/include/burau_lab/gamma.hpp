#ifndef BURAU_LAB_GAMMA_HPP_
#define BURAU_LAB_GAMMA_HPP_

// gamma(a) = (t^a - 1)/(t - 1) = 1 + t + ... + t^(a-1).
//
// In Z/l^K[Z/l^M], with a = q l^M + r (0 <= r < l^M),
//   gamma(a) = q * (sum of all group elements) + 1 + t + ... + t^(r-1),
// so gamma depends on a only modulo l^(M+K).

#include <cstdint>
#include <stdexcept>
#include <string>

#include "cyclic.hpp"
#include "laurent.hpp"
#include "truncated.hpp"

namespace burau_lab {

  inline LaurentPoly gamma(std::int64_t a) {
    if (a < 0) {
      throw std::domain_error("gamma over Z[t,t^-1] needs a >= 0, got "
                              + std::to_string(a));
    }
    LaurentPoly p;
    for (std::int64_t v = 0; v < a; ++v) {
      p.add_term(v, 1);
    }
    return p;
  }

  inline TruncatedCompletedElem gamma(LadicExponent const& a) {
    auto const&        p = a.params();
    std::int64_t const g = p.group_order();
    std::int64_t const m = p.coefficient_modulus();
    std::int64_t const q = (a.value() / g) % m;
    std::int64_t const r = a.value() % g;
    std::vector<std::int64_t> c(static_cast<std::size_t>(g), q);
    for (std::int64_t v = 0; v < r; ++v) {
      c[static_cast<std::size_t>(v)] = (q + 1) % m;
    }
    return TruncatedCompletedElem(p, std::move(c));
  }

  inline TruncatedCompletedElem gamma(TruncationParams const& p, std::int64_t a) {
    return gamma(LadicExponent(p, a));
  }

  inline CyclicAlgebraElem gamma_cyclic(std::int64_t n, std::int64_t a) {
    if (a < 0) {
      throw std::domain_error("gamma over Z[Z/nZ] needs a >= 0, got "
                              + std::to_string(a));
    }
    CyclicAlgebraElem e(n);
    for (std::int64_t v = 0; v < n; ++v) {
      e[static_cast<std::size_t>(v)] = Integer(a / n + (v < a % n ? 1 : 0));
    }
    return e;
  }

}  // namespace burau_lab

#endif  // BURAU_LAB_GAMMA_HPP_
