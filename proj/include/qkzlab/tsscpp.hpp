#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qkzlab/poly.hpp"

namespace qkzlab {

enum class Step : std::uint8_t { Vertical, Diagonal };

// A family of non-intersecting lattice paths. Path i (1-based) starts at
// (i, -i) and takes steps (0,1) or (1,1); it has i steps and ends on y = 0,
// or i+1 steps ending on y = 1 when modified. Step k of path i (0-based)
// lies in slice i - k; the extra modified step lies in slice 0.
struct NilpConfig {
  int n = 1;
  bool modified = false;
  std::vector<std::vector<Step>> paths;  // paths[i-1] holds path i

  // Arrival x-offsets r_1 < ... < r_{n-1}: arrival points are (r_i, 0), or
  // (r_i + 1, 1) when modified. For modified configurations r_1 and all
  // consecutive differences are odd.
  std::vector<int> endpoints() const;
  std::string json() const;  // [["V","D"],...] per path
};

// Vertical-step weight per slice; slice 0 is meaningful only when modified.
struct WeightSpec {
  int n = 1;
  bool modified = false;
  std::vector<Poly> slice;  // index 0..n-1

  static WeightSpec symbols(const RegistryPtr& reg, int n, bool modified);
  static WeightSpec uniform(const RegistryPtr& reg, int n, bool modified,
                            const Poly& top, const Poly& bulk);
};

enum class GenMethod { Direct, Lgv, Extract };

// Registry holding tau, t, the slice symbols and the extraction variables
// for size n.
RegistryPtr tsscpp_registry(int n);

std::vector<NilpConfig> enumerate_nilp(int n, bool modified);

Poly config_weight(const NilpConfig& c, const WeightSpec& w);

// Weighted sum over single paths from (i,-i) to the arrival point with
// x-offset r: the coefficient of u^{2i-r} in prod_k (1 + t_k u), k running
// over the path's slices.
Poly weighted_path_count(int i, int r, const WeightSpec& w, bool modified);

// Generating polynomial of the weighted configurations, by direct
// enumeration, by the determinant formula, or by coefficient extraction.
// All three agree.
Poly gen_poly(int n, const WeightSpec& w, GenMethod method, bool modified);

// Modified generating polynomial with top-slice weight t0 and all bulk
// weights equal. The arguments live in (or transport into) tsscpp_registry(n).
Poly nprime_specialized(int n, const Poly& t0, const Poly& bulk);

Int asm_count_formula(int n);
// Product formula cross-checked against exhaustive enumeration; n <= 6.
Int asm_count(int n);
// Counts refined by the column of the unique 1 in the top row; n <= 6.
std::vector<Int> asm_refined(int n);

}  // namespace qkzlab
