#ifndef BURAU_LAB_VERIFY_HPP_
#define BURAU_LAB_VERIFY_HPP_

// Property suites over all modules.  Each suite expands into independent
// checks with their own seeded generator (derived from the run seed and the
// check's position in the suite), so reports do not depend on thread count.
// Reports are sorted by (name, params).

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <cstdlib>
#include <functional>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "artin.hpp"
#include "burau.hpp"
#include "gamma.hpp"
#include "homology.hpp"
#include "proell.hpp"
#include "random.hpp"
#include "schreier.hpp"
#include "truncated.hpp"
#include "word.hpp"

namespace burau_lab {

  struct CheckResult {
    std::string name;
    std::string params;
    bool        pass = false;
    std::string witness;  // counterexample when !pass
  };

  struct VerifyReport {
    std::string              suite;
    std::vector<CheckResult> checks;

    std::size_t failures() const {
      return static_cast<std::size_t>(
          std::count_if(checks.begin(), checks.end(), [](auto const& c) { return !c.pass; }));
    }
    bool passed() const {
      return failures() == 0;
    }
  };

  struct VerifyBounds {
    int           s_max = 6;
    std::int64_t  n_max = 5;
    std::int64_t  l     = 3;
    int           K     = 2;
    int           M     = 2;
    std::uint64_t seed  = 20240601;

    void validate() const {
      if (s_max < 3) {
        throw std::invalid_argument("s_max must be >= 3");
      }
      if (n_max < 2) {
        throw std::invalid_argument("n_max must be >= 2");
      }
      TruncationParams(l, K, M);
    }
  };

  // BURAU_LAB_THREADS caps the worker count.
  inline unsigned verify_threads() {
    unsigned n = std::max(1U, std::thread::hardware_concurrency());
    if (char const* env = std::getenv("BURAU_LAB_THREADS")) {
      char*      end = nullptr;
      long const cap = std::strtol(env, &end, 10);
      if (end != env && *end == '\0' && cap >= 1) {
        n = std::min(n, static_cast<unsigned>(cap));
      }
    }
    return n;
  }

  namespace detail {

    // A check returns nullopt on success or a witness string.
    using CheckFn = std::function<std::optional<std::string>(Rng&)>;

    struct Check {
      std::string name;
      std::string params;
      CheckFn     fn;
    };

    template <typename T>
    std::string str(T const& x) {
      if constexpr (requires { to_string(x); }) {
        return to_string(x);
      } else {
        std::ostringstream os;
        os << x;
        return os.str();
      }
    }

    template <typename R>
    std::string mat(Matrix<R> const& m) {
      return "\n" + format_matrix(m, [](R const& x) { return str(x); });
    }

    inline std::string kv(std::initializer_list<std::pair<char const*, std::int64_t>> ps) {
      std::string out;
      for (auto const& [k, v] : ps) {
        out += (out.empty() ? "" : " ") + std::string(k) + "=" + std::to_string(v);
      }
      return out;
    }

    inline std::optional<std::string> fail_if(bool bad, std::string const& witness) {
      if (bad) {
        return witness;
      }
      return std::nullopt;
    }

    //////////////////////////////////////////////////////////////////////

    inline void suite_artin(VerifyBounds const& b, std::vector<Check>& out) {
      for (int s = 3; s <= b.s_max; ++s) {
        out.push_back({"artin.homomorphism", kv({{"s", s}}), [s](Rng& rng) -> std::optional<std::string> {
                         for (int rep = 0; rep < 40; ++rep) {
                           auto const g = random_braid(rng, s - 1, 4);
                           auto const u = random_word(rng, s, 8);
                           auto const v = random_word(rng, s, 8);
                           auto const l = artin_apply(g, u * v);
                           auto const r = artin_apply(g, u) * artin_apply(g, v);
                           if (l != r) {
                             return "g=" + str(g) + " u=" + str(u) + " v=" + str(v)
                                    + " g(uv)=" + str(l) + " g(u)g(v)=" + str(r);
                           }
                         }
                         return std::nullopt;
                       }});
        out.push_back({"artin.braid-relations", kv({{"s", s}}), [s](Rng& rng) -> std::optional<std::string> {
                         for (int rep = 0; rep < 20; ++rep) {
                           auto const w = random_word(rng, s, 12);
                           for (int i = 1; i <= s - 1; ++i) {
                             for (int j = i + 1; j <= s - 1; ++j) {
                               BraidWord lhs, rhs;
                               if (j == i + 1) {
                                 lhs = sigma(i) * sigma(j) * sigma(i);
                                 rhs = sigma(j) * sigma(i) * sigma(j);
                               } else {
                                 lhs = sigma(i) * sigma(j);
                                 rhs = sigma(j) * sigma(i);
                               }
                               auto const l = artin_apply(lhs, w);
                               auto const r = artin_apply(rhs, w);
                               if (l != r) {
                                 return "w=" + str(w) + " " + str(lhs) + " -> " + str(l) + ", "
                                        + str(rhs) + " -> " + str(r);
                               }
                             }
                           }
                         }
                         return std::nullopt;
                       }});
        out.push_back({"artin.inverse", kv({{"s", s}}), [s](Rng& rng) -> std::optional<std::string> {
                         for (int rep = 0; rep < 20; ++rep) {
                           auto const w = random_word(rng, s, 12);
                           for (int i = 1; i <= s - 1; ++i) {
                             for (auto const& g : {sigma(i) * sigma(i, -1), sigma(i, -1) * sigma(i)}) {
                               if (artin_apply(g, w) != w) {
                                 return str(g) + " moves w=" + str(w) + " to "
                                        + str(artin_apply(g, w));
                               }
                             }
                           }
                         }
                         return std::nullopt;
                       }});
        out.push_back({"artin.winding", kv({{"s", s}}), [s](Rng& rng) -> std::optional<std::string> {
                         for (int rep = 0; rep < 40; ++rep) {
                           auto const g = random_braid(rng, s - 2, 5);
                           auto const w = random_word(rng, s, 10);
                           auto const img = artin_apply(g, w);
                           if (winding(img) != winding(w)) {
                             return "g=" + str(g) + " w=" + str(w) + " g(w)=" + str(img);
                           }
                         }
                         return std::nullopt;
                       }});
      }
    }

    inline void suite_schreier_index(VerifyBounds const& b, std::vector<Check>& out) {
      for (std::int64_t n = 2; n <= b.n_max; ++n) {
        for (int s = 3; s <= b.s_max; ++s) {
          out.push_back({"schreier.index", kv({{"n", n}, {"s", s}}), [n, s](Rng&) {
                           auto const r = schreier_generators(Transversal::finite_cyclic(s, n)).size();
                           return fail_if(!index_check(n, s),
                                          "r=" + std::to_string(r) + " expected "
                                              + std::to_string(n * (s - 2) + 1));
                         }});
        }
      }
    }

    inline void suite_schreier_roundtrip(VerifyBounds const& b, std::vector<Check>& out) {
      for (int s = 3; s <= b.s_max; ++s) {
        for (std::int64_t n = 2; n <= b.n_max; ++n) {
          out.push_back({"schreier.roundtrip-finite", kv({{"n", n}, {"s", s}}),
                         [n, s](Rng& rng) -> std::optional<std::string> {
                           auto const t = Transversal::finite_cyclic(s, n);
                           for (int rep = 0; rep < 30; ++rep) {
                             auto const w = random_subgroup_word(rng, t, 10);
                             auto const e = expand(rewrite(w, t), s);
                             if (e != w) {
                               return "w=" + str(w) + " expanded=" + str(e);
                             }
                           }
                           return std::nullopt;
                         }});
        }
        out.push_back({"schreier.roundtrip-window", kv({{"s", s}}),
                       [s](Rng& rng) -> std::optional<std::string> {
                         for (int rep = 0; rep < 30; ++rep) {
                           auto const w        = random_r0_word(rng, s, 10, 3);
                           auto const [lo, hi] = required_window(w);
                           auto const t        = Transversal::window(s, lo, hi);
                           auto const e        = expand(rewrite(w, t), s);
                           if (e != w) {
                             return "w=" + str(w) + " expanded=" + str(e);
                           }
                         }
                         return std::nullopt;
                       }});
      }
    }

    inline void suite_gamma(VerifyBounds const& b, std::vector<Check>& out) {
      std::vector<std::tuple<std::int64_t, int, int>> params{{b.l, b.K, b.M}};
      for (std::int64_t l : {2, 3, 5}) {
        for (int K = 1; K <= 3; ++K) {
          for (int M = 1; M <= 3; ++M) {
            if (!(l == b.l && K == b.K && M == b.M)) {
              params.emplace_back(l, K, M);
            }
          }
        }
      }
      for (auto [l, K, M] : params) {
        out.push_back({"gamma.truncated", kv({{"l", l}, {"K", K}, {"M", M}}),
                       [l, K, M](Rng& rng) -> std::optional<std::string> {
                         TruncationParams const p(l, K, M);
                         auto const             t   = TruncatedCompletedElem::monomial(p, 1);
                         auto const             one = TruncatedCompletedElem::constant(p, 1);
                         for (int rep = 0; rep < 300; ++rep) {
                           LadicExponent const a(p, uniform(rng, 0, p.exponent_modulus() - 1));
                           LadicExponent const c(p, uniform(rng, 0, p.exponent_modulus() - 1));
                           auto const lhs = (t - one) * gamma(a);
                           auto const rhs = TruncatedCompletedElem::monomial(a) - one;
                           if (lhs != rhs) {
                             return "a=" + std::to_string(a.value()) + " (t-1)gamma(a)=" + str(lhs)
                                    + " t^a-1=" + str(rhs);
                           }
                           auto const co = gamma(a) + TruncatedCompletedElem::monomial(a) * gamma(c);
                           if (gamma(a + c) != co) {
                             return "cocycle a=" + std::to_string(a.value())
                                    + " b=" + std::to_string(c.value());
                           }
                         }
                         return std::nullopt;
                       }});
      }
      out.push_back({"gamma.laurent", "", [](Rng& rng) -> std::optional<std::string> {
                       LaurentPoly const t = LaurentPoly::t();
                       for (int rep = 0; rep < 200; ++rep) {
                         auto const a = uniform(rng, 0, 60);
                         auto const c = uniform(rng, 0, 60);
                         if ((t - 1) * gamma(a) != LaurentPoly::t(a) - 1) {
                           return "a=" + std::to_string(a) + " gamma=" + str(gamma(a));
                         }
                         if (gamma(a + c) != gamma(a) + LaurentPoly::t(a) * gamma(c)) {
                           return "cocycle a=" + std::to_string(a) + " b=" + std::to_string(c);
                         }
                       }
                       return std::nullopt;
                     }});
    }

    inline void suite_burau_oracle(VerifyBounds const& b, std::vector<Check>& out) {
      for (int s = 3; s <= std::max(b.s_max, 8); ++s) {
        for (int i = 1; i <= s - 2; ++i) {
          out.push_back({"burau.oracle", kv({{"i", i}, {"s", s}}), [i, s](Rng&) {
                           auto const g = burau_generator(i, s);
                           auto const o = burau_oracle(i, s);
                           return fail_if(g != o, "closed form" + mat(g) + "oracle" + mat(o));
                         }});
          out.push_back({"burau.det-unit", kv({{"i", i}, {"s", s}}), [i, s](Rng&) {
                           auto const d = determinant(burau_generator(i, s));
                           return fail_if(!is_laurent_unit(d), "det=" + str(d));
                         }});
        }
        out.push_back({"burau.last-generator-rejected", kv({{"s", s}}),
                       [s](Rng&) -> std::optional<std::string> {
                         int rejected = 0;
                         try {
                           burau_generator(s - 1, s);
                         } catch (std::domain_error const&) {
                           ++rejected;
                         }
                         try {
                           burau_oracle_of(sigma(s - 1), s);
                         } catch (std::domain_error const&) {
                           ++rejected;
                         }
                         auto const img = artin_apply(sigma(s - 1), detail::beta_word(s, s - 1));
                         if (winding(img) == 0) {
                           return "sigma_{s-1}(beta_{s-1}) unexpectedly in R_0: " + str(img);
                         }
                         return fail_if(rejected != 2, "sigma_{s-1} accepted by one path");
                       }});
      }
      for (int s = 3; s <= b.s_max; ++s) {
        out.push_back({"burau.commutes-with-t", kv({{"s", s}}),
                       [s](Rng& rng) -> std::optional<std::string> {
                         Word const x1 = Word::generator(s, 1);
                         for (int rep = 0; rep < 20; ++rep) {
                           auto const g = random_braid(rng, s - 2, 3);
                           auto const w = random_r0_word(rng, s, 5);
                           auto const l = abelianize_R0(artin_apply(g, x1 * w * invert(x1)));
                           auto const r = LaurentPoly::t() * abelianize_R0(artin_apply(g, w));
                           if (l != r) {
                             return "g=" + str(g) + " w=" + str(w);
                           }
                         }
                         return std::nullopt;
                       }});
      }
    }

    inline void suite_braid_relations(VerifyBounds const& b, std::vector<Check>& out) {
      auto relations = [](int s) {
        std::vector<std::pair<BraidWord, BraidWord>> rel;
        for (int i = 1; i <= s - 2; ++i) {
          for (int j = i + 1; j <= s - 2; ++j) {
            if (j == i + 1) {
              rel.push_back({sigma(i) * sigma(j) * sigma(i), sigma(j) * sigma(i) * sigma(j)});
            } else {
              rel.push_back({sigma(i) * sigma(j), sigma(j) * sigma(i)});
            }
          }
          rel.push_back({sigma(i) * sigma(i, -1), BraidWord()});
        }
        return rel;
      };
      for (int s = 3; s <= b.s_max; ++s) {
        out.push_back({"braid.laurent", kv({{"s", s}}), [s, relations](Rng&) -> std::optional<std::string> {
                         for (auto const& [l, r] : relations(s)) {
                           auto const ml = burau_of_braid(l, s);
                           auto const mr = burau_of_braid(r, s);
                           if (ml != mr) {
                             return str(l) + mat(ml) + str(r) + mat(mr);
                           }
                         }
                         return std::nullopt;
                       }});
        std::vector<std::int64_t> ns{2, 3, 5};
        for (std::int64_t n = 2; n <= b.n_max; ++n) {
          if (std::find(ns.begin(), ns.end(), n) == ns.end()) {
            ns.push_back(n);
          }
        }
        for (std::int64_t n : ns) {
          out.push_back({"braid.reduced", kv({{"n", n}, {"s", s}}),
                         [s, n, relations](Rng&) -> std::optional<std::string> {
                           for (auto const& [l, r] : relations(s)) {
                             auto const ml = reduced_burau(l, n, s);
                             auto const mr = reduced_burau(r, n, s);
                             if (ml != mr) {
                               return str(l) + mat(ml) + str(r) + mat(mr);
                             }
                           }
                           return std::nullopt;
                         }});
          for (std::int64_t nu = 1; nu < n; ++nu) {
            out.push_back({"braid.cyclotomic", kv({{"n", n}, {"nu", nu}, {"s", s}}),
                           [s, n, nu, relations](Rng&) -> std::optional<std::string> {
                             for (auto const& [l, r] : relations(s)) {
                               auto const ml = eigen_specialize(l, n, s, nu);
                               auto const mr = eigen_specialize(r, n, s, nu);
                               if (ml != mr) {
                                 return str(l) + mat(ml) + str(r) + mat(mr);
                               }
                             }
                             return std::nullopt;
                           }});
          }
        }
      }
    }

    inline void suite_reduced(VerifyBounds const& b, std::vector<Check>& out) {
      for (int s = 3; s <= b.s_max; ++s) {
        for (std::int64_t n = 2; n <= b.n_max; ++n) {
          out.push_back({"reduced.oracle", kv({{"n", n}, {"s", s}}),
                         [s, n](Rng& rng) -> std::optional<std::string> {
                           for (int rep = 0; rep < 6; ++rep) {
                             auto const g  = random_braid(rng, s - 2, 4);
                             auto const m  = reduced_burau(g, n, s);
                             auto const o  = reduced_burau_oracle(g, n, s);
                             if (m != o) {
                               return "braid " + str(g) + " substituted" + mat(m) + "oracle" + mat(o);
                             }
                           }
                           return std::nullopt;
                         }});
          out.push_back({"reduced.rank-det", kv({{"n", n}, {"s", s}}),
                         [s, n](Rng& rng) -> std::optional<std::string> {
                           for (int rep = 0; rep < 6; ++rep) {
                             auto const g = random_braid(rng, s - 2, 4);
                             auto const m = reduced_burau(g, n, s);
                             if (static_cast<std::int64_t>(m.rows()) != complete_rank(n, s)) {
                               return "dimension " + std::to_string(m.rows());
                             }
                             auto const d = determinant(m);
                             if (d != 1 && d != -1) {
                               return "braid " + str(g) + " det=" + str(d);
                             }
                           }
                           return std::nullopt;
                         }});
        }
      }
    }

    inline void suite_invariant_span(VerifyBounds const& b, std::vector<Check>& out) {
      for (int s = 3; s <= b.s_max; ++s) {
        for (std::int64_t n = 2; n <= std::min<std::int64_t>(b.n_max, 4); ++n) {
          out.push_back({"invariant-span.generators", kv({{"n", n}, {"s", s}}),
                         [s, n](Rng& rng) -> std::optional<std::string> {
                           std::size_t const d = static_cast<std::size_t>(s - 1);
                           auto transposition  = [d](int i) {
                             IntegerMatrix p = IntegerMatrix::identity(d, Integer(0));
                             std::size_t   a = static_cast<std::size_t>(i - 1);
                             p(a, a) = p(a + 1, a + 1) = 0;
                             p(a, a + 1) = p(a + 1, a) = 1;
                             return p;
                           };
                           for (int i = 1; i <= s - 2; ++i) {
                             for (int sg : {1, -1}) {
                               auto const m = invariant_span_action(sigma(i, sg), n, s);
                               if (m != transposition(i)) {
                                 return "sigma_" + std::to_string(i) + "^" + std::to_string(sg) + mat(m);
                               }
                             }
                           }
                           auto const g = random_braid(rng, s - 2, 6);
                           IntegerMatrix expect = IntegerMatrix::identity(d, Integer(0));
                           for (auto const& l : g.letters()) {
                             expect = expect * transposition(l.index);
                           }
                           auto const m = invariant_span_action(g, n, s);
                           return fail_if(m != expect, "braid " + str(g) + mat(m) + "expected" + mat(expect));
                         }});
        }
      }
    }

    inline void suite_charpoly(VerifyBounds const& b, std::vector<Check>& out) {
      auto prime = [](std::int64_t n) {
        for (std::int64_t d = 2; d * d <= n; ++d) {
          if (n % d == 0) {
            return false;
          }
        }
        return n >= 2;
      };
      for (std::int64_t n = 2; n <= b.n_max; ++n) {
        if (!prime(n)) {
          continue;
        }
        for (int s = 3; s <= std::min(b.s_max, 5); ++s) {
          out.push_back({"charpoly.factorization", kv({{"n", n}, {"s", s}}),
                         [s, n](Rng& rng) -> std::optional<std::string> {
                           std::vector<BraidWord> braids{BraidWord(), random_braid(rng, s - 2, 4)};
                           if (s >= 4) {
                             braids.push_back(sigma(1) * sigma(2));
                           }
                           for (auto const& g : braids) {
                             auto const c = charpoly_factorization(g, n, s);
                             if (!c.equal()) {
                               std::string w = "braid " + str(g) + " reduced:";
                               for (auto const& x : c.reduced) w += " " + str(x);
                               w += " product:";
                               for (auto const& x : c.product) w += " " + str(x);
                               return w;
                             }
                           }
                           return std::nullopt;
                         }});
        }
      }
    }

    inline GaloisElemData random_galois_data(Rng& rng, int s, TruncationParams const& p,
                                             std::int64_t n_max, int max_len) {
      std::int64_t N = 0;
      do {
        N = uniform(rng, 1, n_max);
      } while (N % p.l() == 0);
      std::vector<Word> words;
      for (int i = 2; i <= s - 1; ++i) {
        words.push_back(random_word(rng, s, max_len));
      }
      return GaloisElemData(s, p, Integer(N), std::move(words));
    }

    inline std::string describe(GaloisElemData const& d) {
      std::string out = "N=" + std::to_string(d.N().value());
      for (int i = 2; i <= d.s() - 1; ++i) {
        out += " w" + std::to_string(i) + "=" + str(d.w(i));
      }
      return out;
    }

    inline void suite_matburau(VerifyBounds const& b, std::vector<Check>& out) {
      for (int s = 3; s <= std::min(b.s_max, 5); ++s) {
        out.push_back({"matburau.oracle", kv({{"l", b.l}, {"K", b.K}, {"M", b.M}, {"s", s}}),
                       [s, b](Rng& rng) -> std::optional<std::string> {
                         TruncationParams const p(b.l, b.K, b.M);
                         for (int rep = 0; rep < 40; ++rep) {
                           auto const d = random_galois_data(rng, s, p, 5, 6);
                           auto const a = assemble_matburau(d);
                           auto const o = direct_oracle(d);
                           if (a != o) {
                             return describe(d) + " assembled" + mat(a) + "oracle" + mat(o);
                           }
                         }
                         return std::nullopt;
                       }});
        out.push_back({"matburau.three-term", kv({{"l", b.l}, {"K", b.K}, {"M", b.M}, {"s", s}}),
                       [s, b](Rng& rng) -> std::optional<std::string> {
                         TruncationParams const p(b.l, b.K, b.M);
                         for (int rep = 0; rep < 20; ++rep) {
                           auto const d = random_galois_data(rng, s, p, 5, 6);
                           if (!three_term_split_check(d)) {
                             return describe(d);
                           }
                         }
                         return std::nullopt;
                       }});
        out.push_back({"matburau.twisted-commutation", kv({{"s", s}}),
                       [s, b](Rng& rng) -> std::optional<std::string> {
                         TruncationParams const p(b.l, b.K, b.M);
                         for (int rep = 0; rep < 20; ++rep) {
                           auto const d = random_galois_data(rng, s, p, 5, 4);
                           auto const w = random_r0_word(rng, s, 4);
                           if (!twisted_commutation_check(d, w)) {
                             return describe(d) + " w=" + str(w);
                           }
                         }
                         return std::nullopt;
                       }});
        out.push_back({"matburau.decompose", kv({{"s", s}}), [s](Rng& rng) -> std::optional<std::string> {
                         for (int rep = 0; rep < 40; ++rep) {
                           auto const w = random_word(rng, s, 10);
                           auto const d = decompose(w);
                           if (d.reconstruct(s) != w || winding(d.B) != 0) {
                             return "w=" + str(w) + " B=" + str(d.B);
                           }
                         }
                         return std::nullopt;
                       }});
      }
    }

    inline void suite_lemmas(VerifyBounds const& b, std::vector<Check>& out) {
      for (int s = 3; s <= b.s_max; ++s) {
        out.push_back({"lemma.write-inv", kv({{"s", s}}), [s](Rng&) -> std::optional<std::string> {
                         for (int k = 2; k <= s - 1; ++k) {
                           for (std::int64_t a = 0; a <= 6; ++a) {
                             if (!write_inv_check(k, a, s)) {
                               return kv({{"k", k}, {"a", a}});
                             }
                           }
                         }
                         return std::nullopt;
                       }});
        out.push_back({"lemma.pass-over", kv({{"s", s}}), [s](Rng&) -> std::optional<std::string> {
                         for (int i = 2; i <= s - 1; ++i) {
                           for (std::int64_t a = 0; a <= 6; ++a) {
                             for (std::int64_t N = 0; N <= 6; ++N) {
                               if (!pass_over_check(i, a, N, s)) {
                                 return kv({{"i", i}, {"a", a}, {"N", N}});
                               }
                             }
                           }
                         }
                         return std::nullopt;
                       }});
      }
    }

    using SuiteFn = void (*)(VerifyBounds const&, std::vector<Check>&);

    inline std::map<std::string, SuiteFn> const& suites() {
      static std::map<std::string, SuiteFn> const table{
          {"artin", suite_artin},
          {"braid-relations", suite_braid_relations},
          {"burau-oracle", suite_burau_oracle},
          {"charpoly", suite_charpoly},
          {"gamma", suite_gamma},
          {"invariant-span", suite_invariant_span},
          {"lemmas", suite_lemmas},
          {"matburau-oracle", suite_matburau},
          {"reduced", suite_reduced},
          {"schreier-index", suite_schreier_index},
          {"schreier-roundtrip", suite_schreier_roundtrip},
      };
      return table;
    }

  }  // namespace detail

  inline std::vector<std::string> suite_names() {
    std::vector<std::string> out{"all"};
    for (auto const& [k, v] : detail::suites()) {
      out.push_back(k);
    }
    return out;
  }

  inline VerifyReport run_verify(std::string const& suite, VerifyBounds const& bounds,
                                 unsigned threads = verify_threads()) {
    bounds.validate();
    std::vector<detail::Check> checks;
    if (suite == "all") {
      for (auto const& [name, fn] : detail::suites()) {
        fn(bounds, checks);
      }
    } else {
      auto it = detail::suites().find(suite);
      if (it == detail::suites().end()) {
        throw std::invalid_argument("unknown suite '" + suite + "'");
      }
      it->second(bounds, checks);
    }

    std::vector<CheckResult> results(checks.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
      for (std::size_t k = next++; k < checks.size(); k = next++) {
        auto const&  c = checks[k];
        std::seed_seq seq{static_cast<std::uint32_t>(bounds.seed),
                          static_cast<std::uint32_t>(bounds.seed >> 32),
                          static_cast<std::uint32_t>(k)};
        Rng          rng(seq);
        CheckResult  r{c.name, c.params, true, ""};
        try {
          if (auto w = c.fn(rng)) {
            r.pass    = false;
            r.witness = *w;
          }
        } catch (std::exception const& e) {
          r.pass    = false;
          r.witness = std::string("exception: ") + e.what();
        }
        results[k] = std::move(r);
      }
    };
    std::vector<std::thread> pool;
    unsigned const n = std::max(1U, std::min<unsigned>(threads, static_cast<unsigned>(checks.size())));
    for (unsigned t = 1; t < n; ++t) {
      pool.emplace_back(worker);
    }
    worker();
    for (auto& t : pool) {
      t.join();
    }
    std::stable_sort(results.begin(), results.end(), [](auto const& a, auto const& b) {
      return std::tie(a.name, a.params) < std::tie(b.name, b.params);
    });
    return VerifyReport{suite, std::move(results)};
  }

}  // namespace burau_lab

#endif  // BURAU_LAB_VERIFY_HPP_
