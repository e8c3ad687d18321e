#ifndef BURAU_LAB_MATRIX_HPP_
#define BURAU_LAB_MATRIX_HPP_

// Dense matrices over a commutative ring R.
//
// A ring type supplies +, -, *, unary -, ==, and the free functions
// zero_like(x), one_like(x), is_zero(x), unit_inverse(x).  Ring elements may
// carry parameters (n, or (l, K, M)), so every matrix keeps a zero prototype.
//
// Convention throughout the library: column j holds the image of the j-th
// basis vector.

#include <concepts>
#include <cstddef>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace burau_lab {

  template <typename R>
  concept Ring = std::regular<R> && requires(R const& a, R const& b) {
    { a + b } -> std::convertible_to<R>;
    { a - b } -> std::convertible_to<R>;
    { a * b } -> std::convertible_to<R>;
    { -a } -> std::convertible_to<R>;
    { zero_like(a) } -> std::convertible_to<R>;
    { one_like(a) } -> std::convertible_to<R>;
    { is_zero(a) } -> std::convertible_to<bool>;
    { unit_inverse(a) } -> std::convertible_to<std::optional<R>>;
  };

  template <Ring R>
  class Matrix {
   public:
    using value_type = R;

    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols, R const& zero)
        : _rows(rows), _cols(cols), _zero(zero_like(zero)), _data(rows * cols, _zero) {}

    static Matrix identity(std::size_t d, R const& proto) {
      Matrix m(d, d, proto);
      R const one = one_like(proto);
      for (std::size_t i = 0; i < d; ++i) {
        m(i, i) = one;
      }
      return m;
    }

    std::size_t rows() const noexcept {
      return _rows;
    }
    std::size_t cols() const noexcept {
      return _cols;
    }
    bool is_square() const noexcept {
      return _rows == _cols;
    }
    R const& zero() const noexcept {
      return _zero;
    }

    R& operator()(std::size_t i, std::size_t j) {
      return _data[i * _cols + j];
    }
    R const& operator()(std::size_t i, std::size_t j) const {
      return _data[i * _cols + j];
    }
    R& at(std::size_t i, std::size_t j) {
      check_index(i, j);
      return (*this)(i, j);
    }
    R const& at(std::size_t i, std::size_t j) const {
      check_index(i, j);
      return (*this)(i, j);
    }

    std::vector<R> column(std::size_t j) const {
      std::vector<R> c;
      c.reserve(_rows);
      for (std::size_t i = 0; i < _rows; ++i) {
        c.push_back((*this)(i, j));
      }
      return c;
    }
    void set_column(std::size_t j, std::vector<R> const& c) {
      if (c.size() != _rows) {
        throw std::invalid_argument("column length mismatch");
      }
      for (std::size_t i = 0; i < _rows; ++i) {
        (*this)(i, j) = c[i];
      }
    }

    Matrix& operator+=(Matrix const& o) {
      check_same_shape(o);
      for (std::size_t k = 0; k < _data.size(); ++k) {
        _data[k] = _data[k] + o._data[k];
      }
      return *this;
    }
    Matrix& operator-=(Matrix const& o) {
      check_same_shape(o);
      for (std::size_t k = 0; k < _data.size(); ++k) {
        _data[k] = _data[k] - o._data[k];
      }
      return *this;
    }
    friend Matrix operator+(Matrix a, Matrix const& b) {
      return a += b;
    }
    friend Matrix operator-(Matrix a, Matrix const& b) {
      return a -= b;
    }
    friend Matrix operator*(R const& c, Matrix m) {
      for (auto& x : m._data) {
        x = c * x;
      }
      return m;
    }
    friend Matrix operator*(Matrix const& a, Matrix const& b) {
      if (a._cols != b._rows) {
        throw std::invalid_argument("matrix product shape mismatch");
      }
      Matrix r(a._rows, b._cols, a._zero);
      for (std::size_t i = 0; i < a._rows; ++i) {
        for (std::size_t k = 0; k < a._cols; ++k) {
          R const& aik = a(i, k);
          if (is_zero(aik)) {
            continue;
          }
          for (std::size_t j = 0; j < b._cols; ++j) {
            if (!is_zero(b(k, j))) {
              r(i, j) = r(i, j) + aik * b(k, j);
            }
          }
        }
      }
      return r;
    }
    Matrix& operator*=(Matrix const& o) {
      return *this = *this * o;
    }

    std::vector<R> apply(std::vector<R> const& v) const {
      if (v.size() != _cols) {
        throw std::invalid_argument("vector length mismatch");
      }
      std::vector<R> out(_rows, _zero);
      for (std::size_t i = 0; i < _rows; ++i) {
        for (std::size_t j = 0; j < _cols; ++j) {
          out[i] = out[i] + (*this)(i, j) * v[j];
        }
      }
      return out;
    }

    bool is_identity() const {
      if (!is_square()) {
        return false;
      }
      R const one = one_like(_zero);
      for (std::size_t i = 0; i < _rows; ++i) {
        for (std::size_t j = 0; j < _cols; ++j) {
          if ((*this)(i, j) != (i == j ? one : _zero)) {
            return false;
          }
        }
      }
      return true;
    }

    bool is_zero_matrix() const {
      for (auto const& x : _data) {
        if (!is_zero(x)) {
          return false;
        }
      }
      return true;
    }

    // Entrywise image under a ring map R -> S.
    template <typename F>
    auto map(F&& f, decltype(f(std::declval<R const&>())) const& zero_s) const
        -> Matrix<decltype(f(std::declval<R const&>()))> {
      Matrix<decltype(f(std::declval<R const&>()))> out(_rows, _cols, zero_s);
      for (std::size_t i = 0; i < _rows; ++i) {
        for (std::size_t j = 0; j < _cols; ++j) {
          out(i, j) = f((*this)(i, j));
        }
      }
      return out;
    }

    bool operator==(Matrix const& o) const {
      return _rows == o._rows && _cols == o._cols && _data == o._data;
    }

   private:
    void check_index(std::size_t i, std::size_t j) const {
      if (i >= _rows || j >= _cols) {
        throw std::out_of_range("matrix index out of range");
      }
    }
    void check_same_shape(Matrix const& o) const {
      if (_rows != o._rows || _cols != o._cols) {
        throw std::invalid_argument("matrix shape mismatch");
      }
    }

    std::size_t    _rows = 0;
    std::size_t    _cols = 0;
    R              _zero{};
    std::vector<R> _data;
  };

  template <Ring R>
  Matrix<R> power(Matrix<R> const& m, std::size_t e) {
    Matrix<R> result = Matrix<R>::identity(m.rows(), m.zero());
    Matrix<R> base   = m;
    while (e > 0) {
      if (e & 1U) {
        result = result * base;
      }
      base = base * base;
      e >>= 1U;
    }
    return result;
  }

  // Characteristic polynomial det(lambda I - A) by the division-free
  // Samuelson-Berkowitz recursion.  Returns c with
  //   det(lambda I - A) = c[0] lambda^d + c[1] lambda^{d-1} + ... + c[d],
  // c[0] = 1.
  template <Ring R>
  std::vector<R> charpoly(Matrix<R> const& a) {
    if (!a.is_square()) {
      throw std::invalid_argument("charpoly of a non-square matrix");
    }
    R const        zero = a.zero();
    R const        one  = one_like(zero);
    std::vector<R> vect{one};
    for (std::size_t r = 0; r < a.rows(); ++r) {
      // leading (r+1)x(r+1) block: [[S, C], [Rw, a_rr]]
      std::vector<R> toeplitz{one, -a(r, r)};
      std::vector<R> x(r, zero);  // S^k C
      for (std::size_t i = 0; i < r; ++i) {
        x[i] = a(i, r);
      }
      for (std::size_t k = 0; k < r; ++k) {
        R dot = zero;
        for (std::size_t i = 0; i < r; ++i) {
          dot = dot + a(r, i) * x[i];
        }
        toeplitz.push_back(-dot);
        std::vector<R> nx(r, zero);
        for (std::size_t i = 0; i < r; ++i) {
          for (std::size_t j = 0; j < r; ++j) {
            nx[i] = nx[i] + a(i, j) * x[j];
          }
        }
        x = std::move(nx);
      }
      std::vector<R> next(r + 2, zero);
      for (std::size_t i = 0; i < r + 2; ++i) {
        for (std::size_t j = 0; j <= std::min(i, r); ++j) {
          next[i] = next[i] + toeplitz[i - j] * vect[j];
        }
      }
      vect = std::move(next);
    }
    return vect;
  }

  template <Ring R>
  R determinant(Matrix<R> const& a) {
    auto c = charpoly(a);
    // c[d] = det(-A) = (-1)^d det A
    return a.rows() % 2 == 0 ? c.back() : -c.back();
  }

  // Exact inverse via Cayley-Hamilton; requires a unit determinant.
  template <Ring R>
  Matrix<R> inverse(Matrix<R> const& a) {
    auto const        c = charpoly(a);
    std::size_t const d = a.rows();
    auto const        inv_cd = unit_inverse(c[d]);
    if (!inv_cd) {
      throw std::domain_error("matrix determinant is not a recognised unit");
    }
    // A (A^{d-1} + c1 A^{d-2} + ... + c_{d-1} I) = -c_d I
    Matrix<R> acc = Matrix<R>::identity(d, a.zero());
    for (std::size_t k = 1; k < d; ++k) {
      acc = acc * a + c[k] * Matrix<R>::identity(d, a.zero());
    }
    return (-*inv_cd) * acc;
  }

  template <Ring R, typename ToString>
  std::string format_matrix(Matrix<R> const& m, ToString&& str) {
    std::vector<std::string> cells;
    std::size_t              width = 1;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      for (std::size_t j = 0; j < m.cols(); ++j) {
        cells.push_back(str(m(i, j)));
        width = std::max(width, cells.back().size());
      }
    }
    std::ostringstream os;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      os << "[ ";
      for (std::size_t j = 0; j < m.cols(); ++j) {
        auto const& c = cells[i * m.cols() + j];
        os << std::string(width - c.size(), ' ') << c << (j + 1 < m.cols() ? "  " : " ");
      }
      os << "]\n";
    }
    return os.str();
  }

}  // namespace burau_lab

#endif  // BURAU_LAB_MATRIX_HPP_
