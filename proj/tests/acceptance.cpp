// Acceptance run: one PASS/FAIL line per criterion.  Every comparison is
// exact; each criterion also has a wall-clock limit.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>

#include "burau_lab/burau_lab.hpp"

using namespace burau_lab;

namespace {

  using Clock = std::chrono::steady_clock;

  // Returns an empty string on success, otherwise the first counterexample.
  using Body = std::function<std::string()>;

  struct Criterion {
    int         id;
    char const* name;
    double      limit_s;
    Body        body;
  };

  std::string params(int s, std::int64_t n = 0, std::int64_t extra = -1) {
    std::string out = "s=" + std::to_string(s);
    if (n) {
      out += " n=" + std::to_string(n);
    }
    if (extra >= 0) {
      out += " nu=" + std::to_string(extra);
    }
    return out;
  }

  std::string schreier_index() {
    for (std::int64_t n = 2; n <= 8; ++n) {
      for (int s = 3; s <= 8; ++s) {
        auto const count = static_cast<std::int64_t>(
            schreier_generators(Transversal::finite_cyclic(s, n)).size());
        if (count != n * (s - 2) + 1) {
          return params(s, n) + ": " + std::to_string(count) + " generators";
        }
      }
    }
    return {};
  }

  std::string burau_closed_form() {
    for (int s = 3; s <= 8; ++s) {
      for (int i = 1; i <= s - 2; ++i) {
        if (burau_generator(i, s) != burau_oracle(i, s)) {
          return params(s) + " i=" + std::to_string(i);
        }
      }
      // sigma_{s-1} has no matrix on this basis; both paths must refuse it.
      bool closed = false;
      bool oracle = false;
      try {
        burau_generator(s - 1, s);
      } catch (std::domain_error const&) {
        closed = true;
      }
      try {
        burau_oracle(s - 1, s);
      } catch (std::domain_error const&) {
        oracle = true;
      }
      if (!closed || !oracle) {
        return params(s) + ": sigma_{s-1} not rejected consistently";
      }
    }
    return {};
  }

  template <typename F>
  std::string relations(int s, F&& rep) {
    for (int i = 1; i <= s - 2; ++i) {
      if (i + 1 <= s - 2
          && rep(sigma(i) * sigma(i + 1) * sigma(i)) != rep(sigma(i + 1) * sigma(i) * sigma(i + 1))) {
        return "braid relation at i=" + std::to_string(i);
      }
      for (int j = i + 2; j <= s - 2; ++j) {
        if (rep(sigma(i) * sigma(j)) != rep(sigma(j) * sigma(i))) {
          return "far commutation at i=" + std::to_string(i) + " j=" + std::to_string(j);
        }
      }
    }
    return {};
  }

  std::string braid_relations() {
    for (int s = 3; s <= 6; ++s) {
      if (auto e = relations(s, [&](BraidWord const& b) { return burau_of_braid(b, s); }); !e.empty()) {
        return params(s) + " Laurent: " + e;
      }
      for (std::int64_t n : {2, 3, 5}) {
        if (auto e = relations(s, [&](BraidWord const& b) { return reduced_burau(b, n, s); });
            !e.empty()) {
          return params(s, n) + " reduced: " + e;
        }
        for (std::int64_t nu = 1; nu <= n - 1; ++nu) {
          if (auto e = relations(s, [&](BraidWord const& b) { return eigen_specialize(b, n, s, nu); });
              !e.empty()) {
            return params(s, n, nu) + " specialized: " + e;
          }
        }
      }
    }
    return {};
  }

  std::string rank_and_invertibility() {
    Rng rng(1);
    for (std::int64_t n = 2; n <= 5; ++n) {
      for (int s = 3; s <= 6; ++s) {
        std::vector<BraidWord> braids;
        for (int i = 1; i <= s - 2; ++i) {
          braids.push_back(sigma(i));
          braids.push_back(sigma(i, -1));
        }
        for (int k = 0; k < 5; ++k) {
          braids.push_back(random_braid(rng, s - 2, 6));
        }
        for (auto const& b : braids) {
          IntegerMatrix const r   = reduced_burau(b, n, s);
          auto const          dim = static_cast<std::size_t>(complete_rank(n, s));
          if (r.rows() != dim || r.cols() != dim) {
            return params(s, n) + ": dimension " + std::to_string(r.rows());
          }
          Integer const det = determinant(r);
          if (det != 1 && det != -1) {
            return params(s, n) + " b=" + to_string(b) + ": det " + det.str();
          }
        }
      }
    }
    return {};
  }

  std::string gamma_identity() {
    Rng rng(2);
    for (std::int64_t l : {2, 3, 5}) {
      for (int K = 1; K <= 3; ++K) {
        for (int M = 1; M <= 3; ++M) {
          TruncationParams const p(l, K, M);
          auto const             one = TruncatedCompletedElem::constant(p, 1);
          auto const             t   = TruncatedCompletedElem::monomial(p, 1);
          for (int rep = 0; rep < 300; ++rep) {
            LadicExponent const a(p, uniform(rng, 0, p.exponent_modulus() - 1));
            if ((t - one) * gamma(a) != TruncatedCompletedElem::monomial(a) - one) {
              return "l=" + std::to_string(l) + " K=" + std::to_string(K) + " M="
                     + std::to_string(M) + " a=" + std::to_string(a.value());
            }
          }
        }
      }
    }
    return {};
  }

  std::string matburau_oracle() {
    Rng                    rng(3);
    TruncationParams const p(3, 2, 2);
    for (int s = 3; s <= 5; ++s) {
      for (std::int64_t N : {1, 2, 4, 5}) {
        for (int rep = 0; rep < 40; ++rep) {
          std::vector<Word> words;
          for (int i = 2; i <= s - 1; ++i) {
            words.push_back(random_word(rng, s, 6));
          }
          GaloisElemData const d(s, p, Integer(N), words);
          if (assemble_matburau(d) != direct_oracle(d)) {
            std::string w;
            for (auto const& x : words) {
              w += " [" + to_string(x) + "]";
            }
            return params(s) + " N=" + std::to_string(N) + " w:" + w;
          }
        }
      }
    }
    return {};
  }

  std::string lemmas() {
    for (int s = 3; s <= 6; ++s) {
      for (int i = 2; i <= s - 1; ++i) {
        for (std::int64_t a = 0; a <= 6; ++a) {
          if (!write_inv_check(i, a, s)) {
            return "write_inv " + params(s) + " k=" + std::to_string(i) + " a=" + std::to_string(a);
          }
          for (std::int64_t N = 0; N <= 6; ++N) {
            if (!pass_over_check(i, a, N, s)) {
              return "pass_over " + params(s) + " i=" + std::to_string(i) + " a="
                     + std::to_string(a) + " N=" + std::to_string(N);
            }
          }
        }
      }
    }
    return {};
  }

  std::string invariant_span() {
    for (std::int64_t n = 2; n <= 4; ++n) {
      for (int s = 3; s <= 6; ++s) {
        auto const d = static_cast<std::size_t>(s - 1);
        for (int i = 1; i <= s - 2; ++i) {
          // sigma_i exchanges x_i^n and x_{i+1}^n up to conjugation
          IntegerMatrix expect = IntegerMatrix::identity(d, Integer(0));
          auto const    a      = static_cast<std::size_t>(i - 1);
          expect(a, a)         = 0;
          expect(a + 1, a + 1) = 0;
          expect(a, a + 1)     = 1;
          expect(a + 1, a)     = 1;
          if (invariant_span_action(sigma(i), n, s) != expect) {
            return params(s, n) + " i=" + std::to_string(i);
          }
        }
      }
    }
    return {};
  }

  std::string charpoly_factorization_check() {
    auto const cmp = charpoly_factorization(sigma(1) * sigma(2), 3, 4);
    if (!cmp.equal()) {
      std::string out = "reduced:";
      for (auto const& c : cmp.reduced) {
        out += " " + to_string(c);
      }
      out += " product:";
      for (auto const& c : cmp.product) {
        out += " " + to_string(c);
      }
      return out;
    }
    return {};
  }

}  // namespace

int main() {
  std::vector<Criterion> const criteria{
      {1, "schreier-index", 1.0, schreier_index},
      {2, "burau-closed-form", 5.0, burau_closed_form},
      {3, "braid-relations", 10.0, braid_relations},
      {4, "rank-invertibility", 10.0, rank_and_invertibility},
      {5, "gamma-identity", 10.0, gamma_identity},
      {6, "matburau-oracle", 30.0, matburau_oracle},
      {7, "lemmas", 10.0, lemmas},
      {8, "invariant-span", 10.0, invariant_span},
      {9, "charpoly-factorization", 10.0, charpoly_factorization_check},
  };

  int failed = 0;
  for (auto const& c : criteria) {
    auto const  start = Clock::now();
    std::string witness;
    try {
      witness = c.body();
    } catch (std::exception const& e) {
      witness = std::string("exception: ") + e.what();
    }
    double const elapsed = std::chrono::duration<double>(Clock::now() - start).count();
    if (witness.empty() && elapsed > c.limit_s) {
      witness = "time limit exceeded";
    }
    bool const pass = witness.empty();
    failed += !pass;
    std::printf("%s %d %-24s %8.3f s (limit %.0f s)%s%s\n", pass ? "PASS" : "FAIL", c.id, c.name,
                elapsed, c.limit_s, pass ? "" : "  ", witness.c_str());
  }
  return failed ? 1 : 0;
}
