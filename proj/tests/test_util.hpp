#pragma once

#include <random>
#include <vector>

#include "qkzlab/poly.hpp"

namespace qkzlab::testutil {

// Deterministic small random polynomials for property tests.
inline Poly random_poly(std::mt19937_64& rng, const RegistryPtr& reg, int max_terms,
                        int max_exp, int max_coeff, bool laurent = false) {
  std::uniform_int_distribution<int> nterms(0, max_terms);
  std::uniform_int_distribution<int> expd(laurent ? -max_exp : 0, max_exp);
  std::uniform_int_distribution<int> coeffd(-max_coeff, max_coeff);
  Poly p(reg);
  int k = nterms(rng);
  for (int i = 0; i < k; ++i) {
    ExpVec e(reg->size());
    for (auto& x : e) x = expd(rng);
    p.add_term(e, coeffd(rng));
  }
  return p;
}

// Permutation-expansion determinant, independent of the production routine.
inline Poly determinant_bruteforce(const PolyMatrix& m) {
  const std::size_t n = m.rows();
  std::vector<std::size_t> perm(n);
  for (std::size_t i = 0; i < n; ++i) perm[i] = i;
  Poly acc(m.registry());
  do {
    int sign = 1;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (perm[i] > perm[j]) sign = -sign;
    Poly prod = Poly::constant(m.registry(), 1);
    for (std::size_t i = 0; i < n; ++i) prod = prod * m.at(i, perm[i]);
    acc += sign > 0 ? prod : -prod;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return acc;
}

}  // namespace qkzlab::testutil
