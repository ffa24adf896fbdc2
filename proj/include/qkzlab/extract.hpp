#pragma once

#include <vector>

#include "qkzlab/poly.hpp"

namespace qkzlab {

// A rational function presented as a product of polynomial factors, each
// denominator factor expandable as a power series around 0 in the extraction
// variables. Parameters outside extraction_vars pass through symbolically.
struct SeriesFactor {
  enum class Polarity { Numerator, Denominator };
  Polarity polarity{Polarity::Numerator};
  Poly body;
};

struct SeriesProduct {
  RegistryPtr registry;
  std::vector<SeriesFactor> factors;
  std::vector<Variable> extraction_vars;

  SeriesProduct& num(Poly p);
  SeriesProduct& den(Poly p);
};

// Truncation state for series arithmetic: either a per-variable exponent box
// or a total-degree cap over the tracked variables. Intermediate series carry
// their valid order; combining two series takes the meet.
class Truncation {
 public:
  static Truncation box(const RegistryPtr& reg, const std::vector<Variable>& vars,
                        const std::vector<int>& caps);
  static Truncation total_degree(const RegistryPtr& reg,
                                 const std::vector<Variable>& vars, int cap);

  bool keeps(const ExpVec& e) const;
  Truncation meet(const Truncation& other) const;
  int iteration_bound() const;
  const std::vector<std::size_t>& tracked_slots() const { return slots_; }

 private:
  std::vector<std::size_t> slots_;
  std::vector<int> caps_;   // aligned with slots_; empty in total-degree mode
  int total_cap_ = -1;
};

Poly truncate(const Poly& p, const Truncation& t);
Poly mul_truncated(const Poly& a, const Poly& b, const Truncation& t);

// Series inverse of f around 0 in the tracked variables. The part of f that
// is constant in all tracked variables must be a unit monomial.
Poly invert_truncated(const Poly& f, const Truncation& t);

// Coefficient of prod_l u_l^{e_l} in the Taylor expansion of the product
// around 0, exact in all remaining parameters.
Poly coefficient_of(const SeriesProduct& sp, const std::vector<int>& exponents);

// Left minus right side of the Schur generating-series identity, both sides
// expanded to total degree <= order in u_1..u_n. Parity Even restricts the
// exponent sequences to even r_0 and odd gaps, and squares the geometric
// factors on the right.
enum class SchurParity { All, Even };
Poly schur_sum_residual(int n, int order, SchurParity parity);

}  // namespace qkzlab
