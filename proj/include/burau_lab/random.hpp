#ifndef BURAU_LAB_RANDOM_HPP_
#define BURAU_LAB_RANDOM_HPP_

// Seeded generators of words, subgroup elements and braids for property
// checks.  All draws go through std::mt19937_64 and uniform_int_distribution
// on explicit bounds, so a seed reproduces the same sequence.

#include <cstdint>
#include <random>
#include <vector>

#include "schreier.hpp"
#include "word.hpp"

namespace burau_lab {

  using Rng = std::mt19937_64;

  inline std::int64_t uniform(Rng& rng, std::int64_t lo, std::int64_t hi) {
    return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng);
  }

  // Up to max_len letters x_k^{+-1}; the reduced result may be shorter.
  inline Word random_word(Rng& rng, int s, int max_len) {
    std::vector<Letter> raw;
    auto const          len = uniform(rng, 0, max_len);
    for (std::int64_t k = 0; k < len; ++k) {
      raw.push_back({static_cast<int>(uniform(rng, 1, s - 1)), uniform(rng, 0, 1) ? 1 : -1});
    }
    return reduce(s, raw);
  }

  // Product of up to max_terms Beta(i, j)^{+-1}, |i| <= spread: an element
  // of the kernel R_0 of the winding map.
  inline Word random_r0_word(Rng& rng, int s, int max_terms, std::int64_t spread = 2) {
    Word w(s);
    auto const terms = uniform(rng, 0, max_terms);
    for (std::int64_t k = 0; k < terms; ++k) {
      auto g = SubgroupGenerator::beta(s, uniform(rng, -spread, spread),
                                       static_cast<int>(uniform(rng, 2, s - 1)))
                   .expansion();
      w = w * (uniform(rng, 0, 1) ? g : invert(g));
    }
    return w;
  }

  // Random product of the free generators of R_n for the given transversal.
  inline Word random_subgroup_word(Rng& rng, Transversal const& t, int max_terms) {
    auto const gens = schreier_generators(t);
    Word       w(t.s());
    auto const terms = uniform(rng, 0, max_terms);
    for (std::int64_t k = 0; k < terms && !gens.empty(); ++k) {
      auto const& g = gens[static_cast<std::size_t>(
          uniform(rng, 0, static_cast<std::int64_t>(gens.size()) - 1))];
      w = w * (uniform(rng, 0, 1) ? g.expansion() : invert(g.expansion()));
    }
    return w;
  }

  // Up to max_len letters sigma_i^{+-1} with 1 <= i <= max_index.
  inline BraidWord random_braid(Rng& rng, int max_index, int max_len) {
    BraidWord  b;
    auto const len = uniform(rng, 0, max_len);
    for (std::int64_t k = 0; k < len; ++k) {
      b = b * sigma(static_cast<int>(uniform(rng, 1, max_index)), uniform(rng, 0, 1) ? 1 : -1);
    }
    return b;
  }

}  // namespace burau_lab

#endif  // BURAU_LAB_RANDOM_HPP_
