#ifndef BURAU_LAB_ERRORS_HPP_
#define BURAU_LAB_ERRORS_HPP_

#include <cstdint>
#include <stdexcept>
#include <string>

namespace burau_lab {

  // Malformed word / braid / element text.
  class ParseError : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
  };

  // A word was handed to a subgroup routine but does not lie in the subgroup.
  class NotInSubgroup : public std::domain_error {
   public:
    using std::domain_error::domain_error;
  };

  // Rewriting against a finite window [lo, hi] of the infinite transversal
  // needed generators outside the window.  `lo()`/`hi()` give the smallest
  // window (containing 0) that suffices.
  class WindowExceeded : public std::out_of_range {
   public:
    WindowExceeded(std::int64_t lo, std::int64_t hi)
        : std::out_of_range("rewriting needs window " + std::to_string(lo)
                            + ":" + std::to_string(hi)),
          _lo(lo),
          _hi(hi) {}

    std::int64_t lo() const noexcept {
      return _lo;
    }
    std::int64_t hi() const noexcept {
      return _hi;
    }

   private:
    std::int64_t _lo;
    std::int64_t _hi;
  };

}  // namespace burau_lab

#endif  // BURAU_LAB_ERRORS_HPP_
