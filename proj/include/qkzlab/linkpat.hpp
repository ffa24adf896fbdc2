#pragma once

#include <string>
#include <utility>
#include <vector>

#include "qkzlab/poly.hpp"

namespace qkzlab {

// Noncrossing perfect matching of 2n labelled points, stored as a fixed-point
// free involution. Sites are 1-based.
class LinkPattern {
 public:
  LinkPattern() = default;
  // pairs of matched sites; validated (involution, no fixed point, noncrossing)
  static LinkPattern from_pairs(int n, const std::vector<std::pair<int, int>>& pairs);
  static LinkPattern from_match(std::vector<int> match);  // match[0] unused
  static LinkPattern parse(const std::string& text);      // "(1,6)(2,3)(4,5)"

  int half_size() const { return n_; }
  int match(int site) const { return match_[site]; }
  bool is_opening(int site) const { return match_[site] > site; }

  std::vector<int> openings() const;
  std::vector<int> epsilon() const;  // +1 at openings, -1 at closings
  int depth() const;                 // n^2 + sum_i i*eps_i

  // Relabel sites i -> i+1 (mod 2n).
  LinkPattern rotated() const;

  std::string str() const;
  bool operator==(const LinkPattern& other) const { return match_ == other.match_; }
  bool operator<(const LinkPattern& other) const;  // by opening sequence

 private:
  int n_ = 0;
  std::vector<int> match_;
};

// All Catalan(n) patterns, ordered lexicographically by opening sequence.
std::vector<LinkPattern> enumerate_link_patterns(int n);

// Temperley-Lieb generator e_i acting at sites (i, i+1), cyclic at i = 2n.
// Returns the image pattern and the number of closed loops formed (0 or 1).
std::pair<LinkPattern, int> tl_apply(int i, const LinkPattern& pi);

// Non-decreasing integer sequence indexing the contour-integral components.
struct OpeningSequence {
  std::vector<int> a;

  int size() const { return static_cast<int>(a.size()); }
  bool non_decreasing() const;
  std::string str() const;                              // "(1,3,5)"
  static OpeningSequence parse(const std::string& text);
  auto operator<=>(const OpeningSequence&) const = default;
};

// The 2^{n-1} sequences with a_1 = 1 and a_l in {2l-2, 2l-1}, in
// lexicographic order.
std::vector<OpeningSequence> sequences_An(int n);
bool in_family_An(const OpeningSequence& a, int n);

// Strictly increasing sequences with a_l <= 2l-1; in bijection with link
// patterns via opening positions. Lexicographic order, aligned with
// enumerate_link_patterns.
std::vector<OpeningSequence> catalan_sequences(int n);

// Patterns whose odd-site openings are exactly the odd entries of a.
// Throws SequenceNotInFamily when a is not in the 2^{n-1} family.
std::vector<LinkPattern> partition_L(const OpeningSequence& a, int n);

// Chebyshev-like coefficients: U_{-1}=0, U_0=1, U_{k+1} = -tau U_k - U_{k-1};
// indices at or below -1 give zero.
Poly chebyshev_u(int k, const RegistryPtr& reg);

// Coefficient of the component indexed by pi in the expansion of the
// sequence component indexed by a, as a polynomial in tau:
//   prod over arches (i, pi(i)) of U_{#{l : i <= a_l < pi(i)} - (pi(i)-i+1)/2}
Poly basis_coefficient(const OpeningSequence& a, const LinkPattern& pi,
                       const RegistryPtr& reg);

}  // namespace qkzlab
