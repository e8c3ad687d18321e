#ifndef BURAU_LAB_ARTIN_HPP_
#define BURAU_LAB_ARTIN_HPP_

// Artin action of braid generators on F_{s-1}.
//
//   sigma_i(x_i)     = x_i x_{i+1} x_i^-1
//   sigma_i(x_{i+1}) = x_i
//   sigma_i(x_k)     = x_k                  otherwise,        1 <= i <= s-2
//
// and the extra generator sigma_{s-1}, which fixes x_1 ... x_{s-2} and sends
// x_{s-1} to x_{s-1} x_s x_{s-1}^-1 = x_{s-2}^-1 ... x_1^-1 x_{s-1}^-1.
//
// Inverses use the closed forms
//   sigma_i^-1:     x_i -> x_{i+1},  x_{i+1} -> x_{i+1}^-1 x_i x_{i+1}
//   sigma_{s-1}^-1: x_{s-1} -> x_s = (x_1 ... x_{s-1})^-1.
//
// sigma_{s-1} does not preserve the winding number (x_s winds 1-s times), so
// it does not act on the kernel of the winding map; only sigma_1 ... sigma_{s-2}
// do.

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "word.hpp"

namespace burau_lab {

  // An endomorphism of F_{s-1} given by the images of x_1 ... x_{s-1}.
  class Automorphism {
   public:
    explicit Automorphism(int s) : _s(s) {
      Word::check_s(s);
      for (int k = 1; k <= s - 1; ++k) {
        _images.push_back(Word::generator(s, k));
      }
    }

    Automorphism(int s, std::vector<Word> images)
        : _s(s), _images(std::move(images)) {
      Word::check_s(s);
      if (_images.size() != static_cast<std::size_t>(s - 1)) {
        throw std::invalid_argument("need exactly s-1 generator images");
      }
      for (auto const& w : _images) {
        if (w.s() != s) {
          throw std::invalid_argument("generator image over wrong ambient s");
        }
      }
    }

    int s() const noexcept {
      return _s;
    }

    Word const& image(int k) const {
      if (k < 1 || k > _s - 1) {
        throw std::out_of_range("generator index " + std::to_string(k));
      }
      return _images[k - 1];
    }

    Word apply(Word const& w) const {
      if (w.s() != _s) {
        throw std::invalid_argument("word over wrong ambient s");
      }
      std::vector<Letter> raw;
      for (auto const& l : w.letters()) {
        Word p = power(_images[l.gen - 1], l.exp);
        raw.insert(raw.end(), p.letters().begin(), p.letters().end());
      }
      return reduce(_s, raw);
    }

    // (*this) o other, i.e. apply `other` first.
    Automorphism compose(Automorphism const& other) const {
      std::vector<Word> im;
      im.reserve(_images.size());
      for (auto const& w : other._images) {
        im.push_back(apply(w));
      }
      return Automorphism(_s, std::move(im));
    }

    bool operator==(Automorphism const&) const = default;

   private:
    int               _s;
    std::vector<Word> _images;
  };

  inline Automorphism artin_generator(int i, int sign, int s) {
    Word::check_s(s);
    if (i < 1 || i > s - 1) {
      throw std::out_of_range("braid index " + std::to_string(i)
                              + " outside 1.." + std::to_string(s - 1));
    }
    std::vector<Word> im;
    for (int k = 1; k <= s - 1; ++k) {
      im.push_back(Word::generator(s, k));
    }
    auto x = [s](int k, std::int64_t e = 1) { return Word::generator(s, k, e); };
    if (i <= s - 2) {
      if (sign > 0) {
        im[i - 1] = x(i) * x(i + 1) * x(i, -1);
        im[i]     = x(i);
      } else {
        im[i - 1] = x(i + 1);
        im[i]     = x(i + 1, -1) * x(i) * x(i + 1);
      }
    } else {
      Word xs = expand_xs(s);
      if (sign > 0) {
        im[s - 2] = x(s - 1) * xs * x(s - 1, -1);
      } else {
        im[s - 2] = xs;
      }
    }
    return Automorphism(s, std::move(im));
  }

  // sigma_{i_1}^{e_1} o ... o sigma_{i_k}^{e_k}: the rightmost letter acts
  // first, so matrices of braids multiply left to right in the same order.
  inline Automorphism artin_automorphism(BraidWord const& b, int s) {
    b.check_range(s);
    Automorphism result(s);
    for (auto const& l : b.letters()) {
      result = result.compose(artin_generator(l.index, l.sign, s));
    }
    return result;
  }

  inline Word artin_apply(BraidWord const& b, Word const& w) {
    b.check_range(w.s());
    Word out = w;
    auto ls  = b.letters();
    for (auto it = ls.rbegin(); it != ls.rend(); ++it) {
      out = artin_generator(it->index, it->sign, w.s()).apply(out);
    }
    return out;
  }

  // Does the braid only use sigma_1 ... sigma_{s-2}, the generators that
  // preserve winding numbers?
  inline bool preserves_winding(BraidWord const& b, int s) {
    return b.max_index() <= s - 2;
  }

}  // namespace burau_lab

#endif  // BURAU_LAB_ARTIN_HPP_
