#ifndef BURAU_LAB_SCHREIER_HPP_
#define BURAU_LAB_SCHREIER_HPP_

// Schreier transversals {x_1^i} for the kernels of the winding map
// (R_0, infinite cyclic quotient) and of the winding map mod n (R_n),
// Schreier generators gamma(t, x) = t x (overline{tx})^-1, and Reidemeister
// rewriting of subgroup elements into those generators.
//
// Generators are tagged
//   Beta(i, j) = x_1^i x_j x_1^{-i-1}     (j = 2 ... s-1)
//   Tail(j)    = x_1^{n-1} x_j            (j = 1 ... s-1, finite case only)
// Beta(i, 1) is trivial and never produced; Tail(1) = x_1^n is kept.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "errors.hpp"
#include "integer.hpp"
#include "word.hpp"

namespace burau_lab {

  class Transversal {
   public:
    enum class Kind { finite_cyclic, window };

    // Representatives x_1^0 ... x_1^{n-1} of F_{s-1} / R_n.
    static Transversal finite_cyclic(int s, std::int64_t n) {
      Word::check_s(s);
      if (n < 2) {
        throw std::invalid_argument("finite cyclic transversal needs n >= 2, got "
                                    + std::to_string(n));
      }
      return Transversal(Kind::finite_cyclic, s, n, 0, n - 1);
    }

    // Representatives x_1^lo ... x_1^hi, a finite slice of the infinite
    // transversal {x_1^i : i in Z} of F_{s-1} / R_0.
    static Transversal window(int s, std::int64_t lo, std::int64_t hi) {
      Word::check_s(s);
      if (lo > 0 || hi < 0) {
        throw std::invalid_argument("window must satisfy lo <= 0 <= hi");
      }
      return Transversal(Kind::window, s, 0, lo, hi);
    }

    Kind kind() const noexcept {
      return _kind;
    }
    bool is_finite() const noexcept {
      return _kind == Kind::finite_cyclic;
    }
    int s() const noexcept {
      return _s;
    }
    std::int64_t n() const noexcept {
      return _n;
    }
    std::int64_t lo() const noexcept {
      return _lo;
    }
    std::int64_t hi() const noexcept {
      return _hi;
    }

    // Coset index i with H w = H x_1^i; determined by winding alone.  For the
    // window kind the index is the winding itself and may fall outside
    // [lo, hi].
    std::int64_t coset_of(Word const& w) const {
      return reduce_index(winding(w));
    }

    std::int64_t reduce_index(std::int64_t i) const {
      return is_finite() ? mod_floor(i, _n) : i;
    }

    Word representative(std::int64_t i) const {
      return Word::generator(_s, 1, i);
    }

    std::vector<Word> representatives() const {
      std::vector<Word> out;
      for (std::int64_t i = _lo; i <= _hi; ++i) {
        out.push_back(representative(i));
      }
      return out;
    }

    bool operator==(Transversal const&) const = default;

   private:
    Transversal(Kind k, int s, std::int64_t n, std::int64_t lo, std::int64_t hi)
        : _kind(k), _s(s), _n(n), _lo(lo), _hi(hi) {}

    Kind         _kind;
    int          _s;
    std::int64_t _n;
    std::int64_t _lo;
    std::int64_t _hi;
  };

  struct BetaTag {
    std::int64_t i;
    int          j;
    bool         operator==(BetaTag const&) const = default;
  };

  struct TailTag {
    int  j;
    bool operator==(TailTag const&) const = default;
  };

  class SubgroupGenerator {
   public:
    static SubgroupGenerator beta(int s, std::int64_t i, int j) {
      if (j < 2 || j > s - 1) {
        throw std::out_of_range("Beta generator needs 2 <= j <= s-1");
      }
      Word e = Word(s, {Letter{1, i}, Letter{j, 1}, Letter{1, -i - 1}});
      return SubgroupGenerator(BetaTag{i, j}, std::move(e));
    }

    static SubgroupGenerator tail(int s, std::int64_t n, int j) {
      if (j < 1 || j > s - 1) {
        throw std::out_of_range("Tail generator needs 1 <= j <= s-1");
      }
      Word e = Word(s, {Letter{1, n - 1}, Letter{j, 1}});
      return SubgroupGenerator(TailTag{j}, std::move(e));
    }

    std::variant<BetaTag, TailTag> const& tag() const noexcept {
      return _tag;
    }
    bool is_beta() const noexcept {
      return std::holds_alternative<BetaTag>(_tag);
    }
    BetaTag const& as_beta() const {
      return std::get<BetaTag>(_tag);
    }
    TailTag const& as_tail() const {
      return std::get<TailTag>(_tag);
    }
    Word const& expansion() const noexcept {
      return _expansion;
    }

    std::string name() const {
      if (is_beta()) {
        return "Beta(" + std::to_string(as_beta().i) + ","
               + std::to_string(as_beta().j) + ")";
      }
      return "Tail(" + std::to_string(as_tail().j) + ")";
    }

    bool operator==(SubgroupGenerator const& other) const {
      return _tag == other._tag && _expansion == other._expansion;
    }

   private:
    SubgroupGenerator(std::variant<BetaTag, TailTag> t, Word e)
        : _tag(t), _expansion(std::move(e)) {}

    std::variant<BetaTag, TailTag> _tag;
    Word                           _expansion;
  };

  struct RewriteTerm {
    SubgroupGenerator generator;
    int               sign;  // +1 or -1

    bool operator==(RewriteTerm const&) const = default;
  };

  namespace detail {
    // gamma(x_1^i, x_j) where x_1^i is the representative of coset i.
    // Returns nullopt when the generator is trivial.
    inline std::optional<SubgroupGenerator>
    schreier_generator_at(Transversal const& t, std::int64_t i, int j) {
      int const s = t.s();
      if (t.is_finite() && i == t.n() - 1) {
        return SubgroupGenerator::tail(s, t.n(), j);
      }
      if (j == 1) {
        return std::nullopt;
      }
      return SubgroupGenerator::beta(s, i, j);
    }
  }  // namespace detail

  // Schreier's lemma applied to the transversal: every nontrivial
  // gamma(t, x) = t x (overline{tx})^-1, t in T, x in {x_1 ... x_{s-1}}.
  // For the window kind, t ranges over the window and overline is taken in
  // the full infinite transversal.
  inline std::vector<SubgroupGenerator>
  schreier_generators(Transversal const& t) {
    int const                      s = t.s();
    std::vector<SubgroupGenerator> out;
    for (std::int64_t i = t.lo(); i <= t.hi(); ++i) {
      Word const rep = t.representative(i);
      for (int j = 1; j <= s - 1; ++j) {
        Word const tx    = rep * Word::generator(s, j);
        Word const gamma = tx * invert(t.representative(t.coset_of(tx)));
        if (gamma.empty()) {
          continue;
        }
        auto g = detail::schreier_generator_at(t, i, j);
        if (!g || g->expansion() != gamma) {
          throw std::logic_error("Schreier generator classification mismatch");
        }
        out.push_back(std::move(*g));
      }
    }
    return out;
  }

  // Smallest window [lo, hi] (with lo <= 0 <= hi) for which rewrite(w, window)
  // succeeds.  Requires winding(w) == 0.
  inline std::pair<std::int64_t, std::int64_t> required_window(Word const& w) {
    std::int64_t coset = 0, lo = 0, hi = 0;
    for (auto const& l : w.letters()) {
      if (l.gen != 1) {
        // positive steps emit Beta(coset .. coset+e-1), negative steps
        // Beta(coset-1 .. coset+e)
        std::int64_t a = l.exp > 0 ? coset : coset + l.exp;
        std::int64_t b = l.exp > 0 ? coset + l.exp - 1 : coset - 1;
        lo             = std::min(lo, a);
        hi             = std::max(hi, b);
      }
      coset += l.exp;
    }
    return {lo, hi};
  }

  // Reidemeister rewriting: scan w letter by letter, tracking the coset
  // representative, and emit gamma(rep, x)^{+1} for a step by x and
  // gamma(rep', x)^{-1} for a step by x^-1 landing in coset rep'.
  inline std::vector<RewriteTerm> rewrite(Word const& w, Transversal const& t) {
    if (w.s() != t.s()) {
      throw std::invalid_argument("word and transversal over different s");
    }
    std::int64_t const wind = winding(w);
    if (t.is_finite() ? mod_floor(wind, t.n()) != 0 : wind != 0) {
      throw NotInSubgroup("word '" + to_string(w) + "' has winding "
                          + std::to_string(wind) + ", not in the subgroup");
    }
    if (!t.is_finite()) {
      auto [lo, hi] = required_window(w);
      if (lo < t.lo() || hi > t.hi()) {
        throw WindowExceeded(std::min(lo, t.lo()), std::max(hi, t.hi()));
      }
    }

    std::vector<RewriteTerm> out;
    std::int64_t             coset = 0;  // unreduced for the window kind
    for (auto const& l : w.letters()) {
      if (l.gen == 1 && !t.is_finite()) {
        coset += l.exp;
        continue;
      }
      std::int64_t const steps = l.exp > 0 ? l.exp : -l.exp;
      for (std::int64_t k = 0; k < steps; ++k) {
        if (l.exp > 0) {
          if (auto g = detail::schreier_generator_at(t, coset, l.gen)) {
            out.push_back({std::move(*g), 1});
          }
          coset = t.reduce_index(coset + 1);
        } else {
          coset = t.reduce_index(coset - 1);
          if (auto g = detail::schreier_generator_at(t, coset, l.gen)) {
            out.push_back({std::move(*g), -1});
          }
        }
      }
    }
    return out;
  }

  // Product of generator powers, freely reduced.
  inline Word expand(std::vector<RewriteTerm> const& terms, int s) {
    std::vector<Letter> raw;
    for (auto const& term : terms) {
      Word const g = term.sign > 0 ? term.generator.expansion()
                                   : invert(term.generator.expansion());
      raw.insert(raw.end(), g.letters().begin(), g.letters().end());
    }
    return reduce(s, raw);
  }

  // |schreier_generators(FiniteCyclic(n))| - 1 == n (s-2)
  inline bool index_check(std::int64_t n, int s) {
    auto const gens = schreier_generators(Transversal::finite_cyclic(s, n));
    return static_cast<std::int64_t>(gens.size()) - 1 == n * (s - 2);
  }

}  // namespace burau_lab

#endif  // BURAU_LAB_SCHREIER_HPP_
