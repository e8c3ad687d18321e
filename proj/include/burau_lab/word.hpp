#ifndef BURAU_LAB_WORD_HPP_
#define BURAU_LAB_WORD_HPP_

// Words in the free group F_{s-1} on x_1 ... x_{s-1}, and braid words.
//
// The ambient relation x_1 x_2 ... x_s = 1 is never stored: x_s is expanded
// on demand by expand_xs().  Words are freely reduced at construction, so
// structural equality is group equality.

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "errors.hpp"

namespace burau_lab {

  struct Letter {
    int          gen;  // 1 ... s-1
    std::int64_t exp;  // nonzero in a reduced word

    bool operator==(Letter const&) const = default;
  };

  class Word;
  Word reduce(int s, std::span<Letter const> raw);

  class Word {
   public:
    Word() = default;
    explicit Word(int s) : _s(s) {
      check_s(s);
    }
    Word(int s, std::span<Letter const> raw) : Word(reduce(s, raw)) {}
    Word(int s, std::initializer_list<Letter> raw)
        : Word(s, std::span<Letter const>(raw.begin(), raw.size())) {}

    static Word generator(int s, int k, std::int64_t e = 1) {
      return Word(s, {Letter{k, e}});
    }

    int s() const noexcept {
      return _s;
    }
    int rank() const noexcept {
      return _s - 1;
    }
    std::span<Letter const> letters() const noexcept {
      return _letters;
    }
    bool empty() const noexcept {
      return _letters.empty();
    }
    // number of syllables
    std::size_t size() const noexcept {
      return _letters.size();
    }
    // total number of letters, counting x^e as |e| letters
    std::int64_t length() const noexcept {
      std::int64_t n = 0;
      for (auto const& l : _letters) {
        n += l.exp < 0 ? -l.exp : l.exp;
      }
      return n;
    }

    bool operator==(Word const&) const = default;

    static void check_s(int s) {
      if (s < 3) {
        throw std::invalid_argument("ambient s must be >= 3, got "
                                    + std::to_string(s));
      }
    }

   private:
    friend Word reduce(int s, std::span<Letter const> raw);
    int                 _s = 3;
    std::vector<Letter> _letters;
  };

  // Free reduction with a stack: merge equal neighbours, drop zero exponents.
  inline Word reduce(int s, std::span<Letter const> raw) {
    Word w(s);
    auto& out = w._letters;
    out.reserve(raw.size());
    for (auto const& l : raw) {
      if (l.gen < 1 || l.gen > s - 1) {
        throw std::out_of_range("generator index " + std::to_string(l.gen)
                                + " outside 1.." + std::to_string(s - 1));
      }
      if (l.exp == 0) {
        continue;
      }
      if (!out.empty() && out.back().gen == l.gen) {
        out.back().exp += l.exp;
        if (out.back().exp == 0) {
          out.pop_back();
        }
      } else {
        out.push_back(l);
      }
    }
    return w;
  }

  inline void check_same_s(Word const& u, Word const& v) {
    if (u.s() != v.s()) {
      throw std::invalid_argument("words over different ambient s ("
                                  + std::to_string(u.s()) + " vs "
                                  + std::to_string(v.s()) + ")");
    }
  }

  inline Word multiply(Word const& u, Word const& v) {
    check_same_s(u, v);
    std::vector<Letter> raw(u.letters().begin(), u.letters().end());
    raw.insert(raw.end(), v.letters().begin(), v.letters().end());
    return reduce(u.s(), raw);
  }

  inline Word operator*(Word const& u, Word const& v) {
    return multiply(u, v);
  }

  inline Word invert(Word const& w) {
    std::vector<Letter> raw;
    raw.reserve(w.size());
    for (auto it = w.letters().rbegin(); it != w.letters().rend(); ++it) {
      raw.push_back({it->gen, -it->exp});
    }
    return reduce(w.s(), raw);
  }

  // g u g^-1
  inline Word conjugate(Word const& u, Word const& g) {
    return g * u * invert(g);
  }

  namespace detail {
    // Writes w = u c u^-1 with c cyclically reduced.
    inline void cyclic_split(Word const& w, Word& u, Word& c) {
      std::vector<Letter> core(w.letters().begin(), w.letters().end());
      std::vector<Letter> head;
      std::size_t         b = 0, e = core.size();
      while (e - b >= 2 && core[b].gen == core[e - 1].gen) {
        Letter const first = core[b];
        Letter const last  = core[e - 1];
        // w' = x^a M x^b = x^{-b} (x^{a+b} M) x^b
        head.push_back({last.gen, -last.exp});
        --e;
        core[b].exp = first.exp + last.exp;
        if (core[b].exp == 0) {
          ++b;
        }
      }
      u = reduce(w.s(), head);
      c = reduce(w.s(), std::span<Letter const>(core.data() + b, e - b));
    }
  }  // namespace detail

  // w^e for any integer e.  Conjugates of a single syllable stay short, so
  // x_1^N-style images with large N are cheap.
  inline Word power(Word const& w, std::int64_t e) {
    if (e == 0 || w.empty()) {
      return Word(w.s());
    }
    if (e < 0) {
      return power(invert(w), -e);
    }
    Word u, c;
    detail::cyclic_split(w, u, c);
    std::vector<Letter> raw;
    if (c.size() == 1) {
      raw.push_back({c.letters()[0].gen, c.letters()[0].exp * e});
    } else {
      raw.reserve(c.size() * static_cast<std::size_t>(e));
      for (std::int64_t k = 0; k < e; ++k) {
        raw.insert(raw.end(), c.letters().begin(), c.letters().end());
      }
    }
    return u * reduce(w.s(), raw) * invert(u);
  }

  // x_s = (x_1 x_2 ... x_{s-1})^{-1}
  inline Word expand_xs(int s) {
    Word::check_s(s);
    std::vector<Letter> raw;
    for (int k = s - 1; k >= 1; --k) {
      raw.push_back({k, -1});
    }
    return reduce(s, raw);
  }

  // Exponent sum: the winding-number homomorphism F_{s-1} -> Z.
  inline std::int64_t winding(Word const& w) {
    std::int64_t total = 0;
    for (auto const& l : w.letters()) {
      total += l.exp;
    }
    return total;
  }

  inline std::int64_t exponent_sum(Word const& w, int gen) {
    std::int64_t total = 0;
    for (auto const& l : w.letters()) {
      if (l.gen == gen) {
        total += l.exp;
      }
    }
    return total;
  }

  ////////////////////////////////////////////////////////////////////////
  // Braid words
  ////////////////////////////////////////////////////////////////////////

  struct BraidLetter {
    int index;  // 1 ... s-1
    int sign;   // +1 or -1

    bool operator==(BraidLetter const&) const = default;
  };

  class BraidWord {
   public:
    BraidWord() = default;
    BraidWord(std::initializer_list<BraidLetter> l) : _letters(l) {
      for (auto const& b : _letters) {
        check_letter(b);
      }
    }
    explicit BraidWord(std::vector<BraidLetter> l) : _letters(std::move(l)) {
      for (auto const& b : _letters) {
        check_letter(b);
      }
    }

    std::span<BraidLetter const> letters() const noexcept {
      return _letters;
    }
    bool empty() const noexcept {
      return _letters.empty();
    }
    std::size_t size() const noexcept {
      return _letters.size();
    }
    int max_index() const noexcept {
      int m = 0;
      for (auto const& b : _letters) {
        m = std::max(m, b.index);
      }
      return m;
    }

    // Throws unless every index lies in 1 ... s-1.
    void check_range(int s) const {
      for (auto const& b : _letters) {
        if (b.index > s - 1) {
          throw std::out_of_range("braid index " + std::to_string(b.index)
                                  + " outside 1.." + std::to_string(s - 1));
        }
      }
    }

    BraidWord operator*(BraidWord const& other) const {
      std::vector<BraidLetter> l = _letters;
      l.insert(l.end(), other._letters.begin(), other._letters.end());
      return BraidWord(std::move(l));
    }

    BraidWord inverse() const {
      std::vector<BraidLetter> l;
      for (auto it = _letters.rbegin(); it != _letters.rend(); ++it) {
        l.push_back({it->index, -it->sign});
      }
      return BraidWord(std::move(l));
    }

    bool operator==(BraidWord const&) const = default;

   private:
    static void check_letter(BraidLetter const& b) {
      if (b.index < 1) {
        throw std::out_of_range("braid index must be >= 1");
      }
      if (b.sign != 1 && b.sign != -1) {
        throw std::invalid_argument("braid letter sign must be +1 or -1");
      }
    }
    std::vector<BraidLetter> _letters;
  };

  inline BraidWord sigma(int i, int sign = 1) {
    return BraidWord{{i, sign}};
  }

  ////////////////////////////////////////////////////////////////////////
  // Text format: "x1 x2^-1 x3^2", identity printed as "1";
  // braids "s1 s2^-1", trivial braid printed as "1".
  ////////////////////////////////////////////////////////////////////////

  namespace detail {
    inline std::int64_t parse_int(std::string_view text, std::string_view tok) {
      if (text.empty()) {
        throw ParseError("missing integer in token '" + std::string(tok) + "'");
      }
      std::size_t i   = 0;
      bool        neg = false;
      if (text[0] == '-' || text[0] == '+') {
        neg = text[0] == '-';
        i   = 1;
      }
      if (i == text.size()) {
        throw ParseError("missing digits in token '" + std::string(tok) + "'");
      }
      std::int64_t v = 0;
      for (; i < text.size(); ++i) {
        char c = text[i];
        if (c < '0' || c > '9') {
          throw ParseError("bad character in token '" + std::string(tok)
                           + "'");
        }
        if (v > (INT64_MAX - (c - '0')) / 10) {
          throw ParseError("integer overflow in token '" + std::string(tok)
                           + "'");
        }
        v = 10 * v + (c - '0');
      }
      return neg ? -v : v;
    }

    // token = <prefix><k>[^<e>]
    inline std::pair<std::int64_t, std::int64_t>
    parse_token(std::string_view tok, char prefix) {
      if (tok.size() < 2 || tok[0] != prefix) {
        throw ParseError("expected token of the form " + std::string(1, prefix)
                         + "<k>[^<e>], got '" + std::string(tok) + "'");
      }
      auto         caret = tok.find('^');
      std::int64_t k     = parse_int(tok.substr(1, caret == std::string_view::npos
                                                       ? std::string_view::npos
                                                       : caret - 1),
                                 tok);
      std::int64_t e = 1;
      if (caret != std::string_view::npos) {
        e = parse_int(tok.substr(caret + 1), tok);
      }
      return {k, e};
    }

    inline std::vector<std::string_view> split_ws(std::string_view text) {
      std::vector<std::string_view> out;
      std::size_t                   i = 0;
      while (i < text.size()) {
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) {
          ++i;
        }
        std::size_t j = i;
        while (j < text.size() && !std::isspace(static_cast<unsigned char>(text[j]))) {
          ++j;
        }
        if (j > i) {
          out.push_back(text.substr(i, j - i));
        }
        i = j;
      }
      return out;
    }
  }  // namespace detail

  inline Word parse_word(std::string_view text, int s) {
    Word::check_s(s);
    std::vector<Letter> raw;
    auto                toks = detail::split_ws(text);
    if (toks.size() == 1 && toks[0] == "1") {
      return Word(s);
    }
    for (auto tok : toks) {
      auto [k, e] = detail::parse_token(tok, 'x');
      if (k < 1 || k > s - 1) {
        throw ParseError("generator x" + std::to_string(k) + " outside x1..x"
                         + std::to_string(s - 1));
      }
      raw.push_back({static_cast<int>(k), e});
    }
    return reduce(s, raw);
  }

  inline std::string to_string(Word const& w) {
    if (w.empty()) {
      return "1";
    }
    std::ostringstream os;
    bool               first = true;
    for (auto const& l : w.letters()) {
      if (!first) {
        os << ' ';
      }
      first = false;
      os << 'x' << l.gen;
      if (l.exp != 1) {
        os << '^' << l.exp;
      }
    }
    return os.str();
  }

  inline BraidWord parse_braid(std::string_view text) {
    std::vector<BraidLetter> out;
    auto                     toks = detail::split_ws(text);
    if (toks.size() == 1 && toks[0] == "1") {
      return BraidWord();
    }
    for (auto tok : toks) {
      auto [k, e] = detail::parse_token(tok, 's');
      if (k < 1) {
        throw ParseError("braid index must be >= 1 in '" + std::string(tok)
                         + "'");
      }
      if (e != 1 && e != -1) {
        throw ParseError("braid exponent must be 1 or -1 in '"
                         + std::string(tok) + "'");
      }
      out.push_back({static_cast<int>(k), static_cast<int>(e)});
    }
    return BraidWord(std::move(out));
  }

  inline std::string to_string(BraidWord const& b) {
    if (b.empty()) {
      return "1";
    }
    std::ostringstream os;
    bool               first = true;
    for (auto const& l : b.letters()) {
      if (!first) {
        os << ' ';
      }
      first = false;
      os << 's' << l.index;
      if (l.sign == -1) {
        os << "^-1";
      }
    }
    return os.str();
  }

  inline std::ostream& operator<<(std::ostream& os, Word const& w) {
    return os << to_string(w);
  }
  inline std::ostream& operator<<(std::ostream& os, BraidWord const& b) {
    return os << to_string(b);
  }

}  // namespace burau_lab

#endif  // BURAU_LAB_WORD_HPP_
