#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "qkzlab/errors.hpp"

namespace qkzlab {

using Int = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>,
                                           boost::multiprecision::et_off>;

// Symbol catalogue. The enum order is the canonical monomial-comparison
// order: q < tau < t < t_k < z < z_i < u_l < alpha_l < x < w_l.
enum class VarKind : std::uint8_t { Q, Tau, T, TSlice, ZGeneric, Z, U, Alpha, X, W };

struct Variable {
  VarKind kind{VarKind::Q};
  std::int32_t index{0};

  friend auto operator<=>(const Variable&, const Variable&) = default;

  std::string name() const;
  static std::optional<Variable> parse(std::string_view text);

  static Variable q() { return {VarKind::Q, 0}; }
  static Variable tau() { return {VarKind::Tau, 0}; }
  static Variable t() { return {VarKind::T, 0}; }
  static Variable t_slice(int k) { return {VarKind::TSlice, k}; }
  static Variable z_generic() { return {VarKind::ZGeneric, 0}; }
  static Variable z(int i) { return {VarKind::Z, i}; }
  static Variable u(int l) { return {VarKind::U, l}; }
  static Variable alpha(int l) { return {VarKind::Alpha, l}; }
  static Variable x() { return {VarKind::X, 0}; }
  static Variable w(int l) { return {VarKind::W, l}; }
};

// Immutable ordered set of variables. All terms of a polynomial are dense
// exponent vectors over one registry; the canonical variable order fixes the
// monomial order (lexicographic on exponent vectors).
class Registry {
 public:
  explicit Registry(std::vector<Variable> vars);

  std::size_t size() const { return vars_.size(); }
  const Variable& var(std::size_t slot) const { return vars_[slot]; }
  const std::vector<Variable>& vars() const { return vars_; }
  std::optional<std::size_t> find(Variable v) const;
  std::size_t slot(Variable v) const;  // throws RegistryMismatch if absent

  bool operator==(const Registry& other) const { return vars_ == other.vars_; }

 private:
  std::vector<Variable> vars_;
};

using RegistryPtr = std::shared_ptr<const Registry>;

RegistryPtr make_registry(std::vector<Variable> vars);

using ExpVec = std::vector<std::int32_t>;
using TermMap = std::map<ExpVec, Int>;

// Sparse multivariate Laurent polynomial with arbitrary-precision integer
// coefficients. Canonical form: no zero coefficients are ever stored, so
// equality is equality of term maps. Values are immutable in spirit: every
// operation returns a fresh polynomial.
class Poly {
 public:
  Poly() = default;  // zero over no registry; usable only as a placeholder
  explicit Poly(RegistryPtr reg) : reg_(std::move(reg)) {}

  static Poly zero(RegistryPtr reg) { return Poly(std::move(reg)); }
  static Poly constant(RegistryPtr reg, Int c);
  static Poly monomial(RegistryPtr reg, ExpVec exps, Int c);
  // c * v^exp
  static Poly variable(RegistryPtr reg, Variable v, int exp = 1, Int c = 1);

  const RegistryPtr& registry() const { return reg_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }

  bool operator==(const Poly& other) const;
  bool operator!=(const Poly& other) const { return !(*this == other); }

  Poly operator-() const;
  Poly& operator+=(const Poly& other);
  Poly& operator-=(const Poly& other);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  Poly& operator*=(const Poly& other) { return *this = *this * other; }
  Poly operator*(const Int& c) const;
  Poly pow(unsigned k) const;

  // True iff the polynomial is a single term with coefficient +1 or -1.
  bool is_unit_monomial() const;
  bool is_constant() const;
  // The constant term (coefficient of the all-zero monomial).
  Int constant_term() const;
  Int coefficient(const ExpVec& e) const;

  bool uses(Variable v) const;
  std::optional<int> min_exponent(Variable v) const;
  std::optional<int> max_exponent(Variable v) const;
  // Degree in a set of variables: max over terms of the exponent sum.
  // nullopt for the zero polynomial.
  std::optional<int> degree(const std::vector<Variable>& vars) const;
  bool is_homogeneous(const std::vector<Variable>& vars, int deg) const;

  std::string str() const;

  // Internal: add c * exps, normalizing away zeros.
  void add_term(const ExpVec& exps, const Int& c);

 private:
  RegistryPtr reg_;
  TermMap terms_;

  void check_same_registry(const Poly& other) const;
};

// value may be any polynomial when v occurs only with exponents >= 0;
// otherwise it must be a unit monomial.
Poly substitute(const Poly& p, Variable v, const Poly& value);

// Simultaneous substitution v -> monomial (unit coefficient required),
// applied to every listed variable at once. Variables not listed are kept.
Poly substitute_monomials(const Poly& p,
                          const std::vector<std::pair<Variable, Poly>>& images);

// Rebuild p over another registry containing all variables p actually uses.
Poly transport(const Poly& p, const RegistryPtr& reg);

// Sum over all permutations of vars with the sign of the permutation.
Poly antisymmetrize(const Poly& p, const std::vector<Variable>& vars);

// Sub-sum of terms whose exponent in every listed variable is <= 0.
Poly keep_nonpositive(const Poly& p, const std::vector<Variable>& vars);

// Exact division by (hi - lo) where hi and lo are unit-coefficient monomials
// given as polynomials. Throws InexactDivision when p is not a multiple.
Poly divide_exact_binomial(const Poly& p, const Poly& hi, const Poly& lo);

class PolyMatrix {
 public:
  PolyMatrix(std::size_t rows, std::size_t cols, RegistryPtr reg);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Poly& at(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  const Poly& at(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }
  const RegistryPtr& registry() const { return reg_; }

 private:
  std::size_t rows_, cols_;
  RegistryPtr reg_;
  std::vector<Poly> entries_;
};

Poly determinant(const PolyMatrix& m);

}  // namespace qkzlab
