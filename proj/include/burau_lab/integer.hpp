#ifndef BURAU_LAB_INTEGER_HPP_
#define BURAU_LAB_INTEGER_HPP_

#include <cstdint>
#include <optional>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace burau_lab {

  // Expression templates off: values returned from arithmetic are plain
  // integers, which keeps `auto` safe in generic ring code.
  using Integer = boost::multiprecision::number<
      boost::multiprecision::cpp_int_backend<>,
      boost::multiprecision::et_off>;

  inline Integer zero_like(Integer const&) {
    return Integer(0);
  }
  inline Integer one_like(Integer const&) {
    return Integer(1);
  }
  inline bool is_zero(Integer const& x) {
    return x.is_zero();
  }
  inline std::optional<Integer> unit_inverse(Integer const& x) {
    if (x == 1 || x == -1) {
      return x;
    }
    return std::nullopt;
  }

  inline std::string to_string(Integer const& x) {
    return x.str();
  }

  // Nonnegative residue of a modulo m (m > 0).
  inline std::int64_t mod_floor(std::int64_t a, std::int64_t m) {
    std::int64_t r = a % m;
    return r < 0 ? r + m : r;
  }

  inline std::int64_t mod_floor(Integer const& a, std::int64_t m) {
    Integer r = a % m;
    if (r < 0) {
      r += m;
    }
    return static_cast<std::int64_t>(r);
  }

  // Floor division for m > 0.
  inline std::int64_t div_floor(std::int64_t a, std::int64_t m) {
    std::int64_t q = a / m;
    if ((a % m) != 0 && a < 0) {
      --q;
    }
    return q;
  }

}  // namespace burau_lab

#endif  // BURAU_LAB_INTEGER_HPP_
