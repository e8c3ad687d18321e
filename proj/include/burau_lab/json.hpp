#ifndef BURAU_LAB_JSON_HPP_
#define BURAU_LAB_JSON_HPP_

// JSON encodings (nlohmann::json, keys sorted):
//
//   Integer                 number, or decimal string beyond 64 bits
//   LaurentPoly             {"<exp>": coeff, ...}
//   CyclicAlgebraElem       [c_0, ..., c_{n-1}]
//   CyclotomicElem          {"phi_n": n, "coeffs": [c_0, ..., c_{n-2}]}
//   TruncatedCompletedElem  {"l": l, "K": K, "M": M, "coeffs": [...]}
//   Matrix                  row-major nested arrays of entries
//   Word, BraidWord         text format strings

#include <cstdint>
#include <limits>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "cyclic.hpp"
#include "errors.hpp"
#include "integer.hpp"
#include "laurent.hpp"
#include "matrix.hpp"
#include "truncated.hpp"
#include "word.hpp"

namespace burau_lab {

  using json = nlohmann::json;

  inline json integer_to_json(Integer const& x) {
    if (x >= std::numeric_limits<std::int64_t>::min()
        && x <= std::numeric_limits<std::int64_t>::max()) {
      return json(x.convert_to<std::int64_t>());
    }
    return json(x.str());
  }

  inline Integer integer_from_json(json const& j) {
    if (j.is_number_integer()) {
      return Integer(j.get<std::int64_t>());
    }
    if (j.is_string()) {
      try {
        return Integer(j.get<std::string>());
      } catch (std::runtime_error const&) {
      }
    }
    throw ParseError("expected an integer, got " + j.dump());
  }

  inline void to_json(json& j, LaurentPoly const& p) {
    j = json::object();
    for (auto const& [k, c] : p.terms()) {
      j[std::to_string(k)] = integer_to_json(c);
    }
  }
  inline void from_json(json const& j, LaurentPoly& p) {
    if (!j.is_object()) {
      throw ParseError("Laurent polynomial must be a JSON object");
    }
    p = LaurentPoly();
    for (auto const& [k, c] : j.items()) {
      std::size_t  used = 0;
      std::int64_t e    = 0;
      try {
        e = std::stoll(k, &used);
      } catch (std::exception const&) {
        used = 0;
      }
      if (used != k.size() || k.empty()) {
        throw ParseError("bad Laurent exponent key '" + k + "'");
      }
      p.add_term(e, integer_from_json(c));
    }
  }

  inline void to_json(json& j, CyclicAlgebraElem const& e) {
    j = json::array();
    for (auto const& c : e.coeffs()) {
      j.push_back(integer_to_json(c));
    }
  }
  inline void from_json(json const& j, CyclicAlgebraElem& e) {
    if (!j.is_array() || j.empty()) {
      throw ParseError("Z[Z/nZ] element must be a nonempty array");
    }
    std::vector<Integer> c;
    for (auto const& x : j) {
      c.push_back(integer_from_json(x));
    }
    e = CyclicAlgebraElem(static_cast<std::int64_t>(c.size()), std::move(c));
  }

  inline void to_json(json& j, CyclotomicElem const& e) {
    json c = json::array();
    for (auto const& x : e.coeffs()) {
      c.push_back(integer_to_json(x));
    }
    j = json{{"phi_n", e.n()}, {"coeffs", std::move(c)}};
  }
  inline void from_json(json const& j, CyclotomicElem& e) {
    std::vector<Integer> c;
    for (auto const& x : j.at("coeffs")) {
      c.push_back(integer_from_json(x));
    }
    e = CyclotomicElem(j.at("phi_n").get<std::int64_t>(), std::move(c));
  }

  inline void to_json(json& j, TruncatedCompletedElem const& e) {
    auto const& p = e.params();
    j = json{{"l", p.l()}, {"K", p.K()}, {"M", p.M()}, {"coeffs", e.coeffs()}};
  }
  inline void from_json(json const& j, TruncatedCompletedElem& e) {
    TruncationParams p(j.at("l").get<std::int64_t>(), j.at("K").get<int>(), j.at("M").get<int>());
    e = TruncatedCompletedElem(p, j.at("coeffs").get<std::vector<std::int64_t>>());
  }

  template <Ring R>
  json element_to_json(R const& x) {
    if constexpr (std::is_same_v<R, Integer>) {
      return integer_to_json(x);
    } else {
      return json(x);
    }
  }

  template <Ring R>
  R element_from_json(json const& j) {
    if constexpr (std::is_same_v<R, Integer>) {
      return integer_from_json(j);
    } else {
      return j.get<R>();
    }
  }

  template <Ring R>
  json matrix_to_json(Matrix<R> const& m) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
      json row = json::array();
      for (std::size_t k = 0; k < m.cols(); ++k) {
        row.push_back(element_to_json(m(i, k)));
      }
      rows.push_back(std::move(row));
    }
    return rows;
  }

  // The zero prototype is taken from the first entry, so empty matrices
  // decode with a default-constructed zero.
  template <Ring R>
  Matrix<R> matrix_from_json(json const& j) {
    if (!j.is_array()) {
      throw ParseError("matrix must be an array of rows");
    }
    std::size_t const rows = j.size();
    std::size_t const cols = rows ? j[0].size() : 0;
    R const           proto = rows && cols ? zero_like(element_from_json<R>(j[0][0])) : R{};
    Matrix<R>         m(rows, cols, proto);
    for (std::size_t i = 0; i < rows; ++i) {
      if (!j[i].is_array() || j[i].size() != cols) {
        throw ParseError("ragged matrix rows");
      }
      for (std::size_t k = 0; k < cols; ++k) {
        m(i, k) = element_from_json<R>(j[i][k]);
      }
    }
    return m;
  }

}  // namespace burau_lab

#endif  // BURAU_LAB_JSON_HPP_
