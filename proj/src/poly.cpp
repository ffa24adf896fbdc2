#include "qkzlab/poly.hpp"

#include <algorithm>
#include <charconv>
#include <functional>
#include <numeric>
#include <sstream>

namespace qkzlab {

namespace {

// Base spelling per kind; indexed kinds append "_<index>".
const char* kind_base(VarKind k) {
  switch (k) {
    case VarKind::Q: return "q";
    case VarKind::Tau: return "tau";
    case VarKind::T: return "t";
    case VarKind::TSlice: return "t";
    case VarKind::ZGeneric: return "z";
    case VarKind::Z: return "z";
    case VarKind::U: return "u";
    case VarKind::Alpha: return "alpha";
    case VarKind::X: return "x";
    case VarKind::W: return "w";
  }
  return "?";
}

bool kind_has_index(VarKind k) {
  switch (k) {
    case VarKind::TSlice:
    case VarKind::Z:
    case VarKind::U:
    case VarKind::Alpha:
    case VarKind::W:
      return true;
    default:
      return false;
  }
}

// Order used when printing the factors of a monomial: alphabetical on the
// base name, un-indexed before indexed, then numeric index. This reads
// naturally ("t^2*tau", "q^2*z_1*z_3") while term order stays the registry
// lexicographic order.
bool print_before(const Variable& a, const Variable& b) {
  std::string_view ba = kind_base(a.kind), bb = kind_base(b.kind);
  if (ba != bb) return ba < bb;
  bool ia = kind_has_index(a.kind), ib = kind_has_index(b.kind);
  if (ia != ib) return !ia;
  return a.index < b.index;
}

}  // namespace

std::string Variable::name() const {
  std::string s = kind_base(kind);
  if (kind_has_index(kind)) {
    s += '_';
    s += std::to_string(index);
  }
  return s;
}

std::optional<Variable> Variable::parse(std::string_view text) {
  auto indexed = [&](std::string_view base, VarKind k) -> std::optional<Variable> {
    if (text.size() <= base.size() + 1 || text.substr(0, base.size()) != base ||
        text[base.size()] != '_')
      return std::nullopt;
    int idx = 0;
    auto digits = text.substr(base.size() + 1);
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), idx);
    if (ec != std::errc{} || ptr != digits.data() + digits.size()) return std::nullopt;
    return Variable{k, idx};
  };
  if (text == "q") return q();
  if (text == "tau") return tau();
  if (text == "t") return t();
  if (text == "z") return z_generic();
  if (text == "x") return x();
  if (auto v = indexed("t", VarKind::TSlice)) return v;
  if (auto v = indexed("z", VarKind::Z)) return v;
  if (auto v = indexed("u", VarKind::U)) return v;
  if (auto v = indexed("alpha", VarKind::Alpha)) return v;
  if (auto v = indexed("w", VarKind::W)) return v;
  return std::nullopt;
}

Registry::Registry(std::vector<Variable> vars) : vars_(std::move(vars)) {
  std::sort(vars_.begin(), vars_.end());
  vars_.erase(std::unique(vars_.begin(), vars_.end()), vars_.end());
}

std::optional<std::size_t> Registry::find(Variable v) const {
  auto it = std::lower_bound(vars_.begin(), vars_.end(), v);
  if (it == vars_.end() || *it != v) return std::nullopt;
  return static_cast<std::size_t>(it - vars_.begin());
}

std::size_t Registry::slot(Variable v) const {
  if (auto s = find(v)) return *s;
  throw RegistryMismatch("variable " + v.name() + " not in registry");
}

RegistryPtr make_registry(std::vector<Variable> vars) {
  return std::make_shared<const Registry>(std::move(vars));
}

Poly Poly::constant(RegistryPtr reg, Int c) {
  Poly p(std::move(reg));
  if (c != 0) p.terms_.emplace(ExpVec(p.reg_->size(), 0), std::move(c));
  return p;
}

Poly Poly::monomial(RegistryPtr reg, ExpVec exps, Int c) {
  Poly p(std::move(reg));
  if (exps.size() != p.reg_->size())
    throw RegistryMismatch("exponent vector width does not match registry");
  if (c != 0) p.terms_.emplace(std::move(exps), std::move(c));
  return p;
}

Poly Poly::variable(RegistryPtr reg, Variable v, int exp, Int c) {
  auto slot = reg->slot(v);
  ExpVec e(reg->size(), 0);
  e[slot] = exp;
  return monomial(std::move(reg), std::move(e), std::move(c));
}

void Poly::check_same_registry(const Poly& other) const {
  if (reg_ == other.reg_) return;
  if (reg_ && other.reg_ && *reg_ == *other.reg_) return;
  throw RegistryMismatch("operands built over different registries");
}

bool Poly::operator==(const Poly& other) const {
  if (reg_ != other.reg_ && !(reg_ && other.reg_ && *reg_ == *other.reg_)) {
    // A zero polynomial compares equal to zero regardless of registry.
    return terms_.empty() && other.terms_.empty();
  }
  return terms_ == other.terms_;
}

void Poly::add_term(const ExpVec& exps, const Int& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(exps, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Poly Poly::operator-() const {
  Poly r(reg_);
  for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
  return r;
}

Poly& Poly::operator+=(const Poly& other) {
  check_same_registry(other);
  for (const auto& [e, c] : other.terms_) add_term(e, c);
  return *this;
}

Poly& Poly::operator-=(const Poly& other) {
  check_same_registry(other);
  for (const auto& [e, c] : other.terms_) add_term(e, -c);
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  a.check_same_registry(b);
  Poly r(a.reg_ ? a.reg_ : b.reg_);
  if (a.terms_.empty() || b.terms_.empty()) return r;
  const std::size_t width = a.terms_.begin()->first.size();
  ExpVec e(width);
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      for (std::size_t i = 0; i < width; ++i) e[i] = ea[i] + eb[i];
      r.add_term(e, ca * cb);
    }
  }
  return r;
}

Poly Poly::operator*(const Int& c) const {
  Poly r(reg_);
  if (c == 0) return r;
  for (const auto& [e, cc] : terms_) r.terms_.emplace(e, cc * c);
  return r;
}

Poly Poly::pow(unsigned k) const {
  Poly r = Poly::constant(reg_, 1);
  Poly base = *this;
  while (k) {
    if (k & 1u) r = r * base;
    k >>= 1u;
    if (k) base = base * base;
  }
  return r;
}

bool Poly::is_unit_monomial() const {
  if (terms_.size() != 1) return false;
  const Int& c = terms_.begin()->second;
  return c == 1 || c == -1;
}

bool Poly::is_constant() const {
  if (terms_.empty()) return true;
  if (terms_.size() != 1) return false;
  const ExpVec& e = terms_.begin()->first;
  return std::all_of(e.begin(), e.end(), [](auto k) { return k == 0; });
}

Int Poly::constant_term() const {
  if (!reg_) return 0;
  ExpVec zero(reg_->size(), 0);
  return coefficient(zero);
}

Int Poly::coefficient(const ExpVec& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Int(0) : it->second;
}

bool Poly::uses(Variable v) const {
  auto slot = reg_ ? reg_->find(v) : std::nullopt;
  if (!slot) return false;
  for (const auto& [e, c] : terms_)
    if (e[*slot] != 0) return true;
  return false;
}

std::optional<int> Poly::min_exponent(Variable v) const {
  auto slot = reg_ ? reg_->find(v) : std::nullopt;
  if (!slot || terms_.empty()) return std::nullopt;
  int m = terms_.begin()->first[*slot];
  for (const auto& [e, c] : terms_) m = std::min(m, static_cast<int>(e[*slot]));
  return m;
}

std::optional<int> Poly::max_exponent(Variable v) const {
  auto slot = reg_ ? reg_->find(v) : std::nullopt;
  if (!slot || terms_.empty()) return std::nullopt;
  int m = terms_.begin()->first[*slot];
  for (const auto& [e, c] : terms_) m = std::max(m, static_cast<int>(e[*slot]));
  return m;
}

std::optional<int> Poly::degree(const std::vector<Variable>& vars) const {
  if (terms_.empty()) return std::nullopt;
  std::vector<std::size_t> slots;
  for (auto v : vars)
    if (auto s = reg_->find(v)) slots.push_back(*s);
  int best = 0;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    int d = 0;
    for (auto s : slots) d += e[s];
    best = first ? d : std::max(best, d);
    first = false;
  }
  return best;
}

bool Poly::is_homogeneous(const std::vector<Variable>& vars, int deg) const {
  std::vector<std::size_t> slots;
  for (auto v : vars)
    if (auto s = reg_->find(v)) slots.push_back(*s);
  for (const auto& [e, c] : terms_) {
    int d = 0;
    for (auto s : slots) d += e[s];
    if (d != deg) return false;
  }
  return true;
}

std::string Poly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  // print slots sorted by natural variable-name order
  std::vector<std::size_t> order(reg_->size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return print_before(reg_->var(a), reg_->var(b));
  });
  for (const auto& [e, c] : terms_) {
    std::string mono;
    for (auto s : order) {
      if (e[s] == 0) continue;
      if (!mono.empty()) mono += '*';
      mono += reg_->var(s).name();
      if (e[s] != 1) {
        mono += '^';
        mono += std::to_string(e[s]);
      }
    }
    Int a = c < 0 ? Int(-c) : c;
    std::string body;
    if (mono.empty()) {
      body = a.str();
    } else if (a == 1) {
      body = mono;
    } else {
      body = a.str() + "*" + mono;
    }
    if (first) {
      if (c < 0) out << '-';
      out << body;
      first = false;
    } else {
      out << (c < 0 ? " - " : " + ") << body;
    }
  }
  return out.str();
}

Poly substitute(const Poly& p, Variable v, const Poly& value) {
  const auto& reg = p.registry();
  auto slot = reg ? reg->find(v) : std::nullopt;
  if (!slot) return p;

  int min_exp = 0, max_exp = 0;
  for (const auto& [e, c] : p.terms()) {
    min_exp = std::min(min_exp, static_cast<int>(e[*slot]));
    max_exp = std::max(max_exp, static_cast<int>(e[*slot]));
  }
  if (min_exp == 0 && max_exp == 0) return p;

  if (min_exp < 0 && !value.is_unit_monomial())
    throw NonUnitSubstitutionIntoLaurent(
        "substitution for " + v.name() +
        " must be a unit monomial (variable occurs with negative exponent)");

  Poly value_local = transport(value, reg);

  // Precompute needed powers of the value. Negative powers only arise for a
  // unit monomial, where inversion is exact.
  std::map<int, Poly> powers;
  powers[0] = Poly::constant(reg, 1);
  for (int k = 1; k <= max_exp; ++k) powers[k] = powers[k - 1] * value_local;
  if (min_exp < 0) {
    const auto& [me, mc] = *value_local.terms().begin();
    ExpVec inv_e(me.size());
    for (std::size_t i = 0; i < me.size(); ++i) inv_e[i] = -me[i];
    Poly inv = Poly::monomial(reg, inv_e, mc);  // mc is +-1, self-inverse
    for (int k = -1; k >= min_exp; --k) powers[k] = powers[k + 1] * inv;
  }

  Poly result(reg);
  for (const auto& [e, c] : p.terms()) {
    int k = e[*slot];
    ExpVec rest = e;
    rest[*slot] = 0;
    result += Poly::monomial(reg, std::move(rest), c) * powers[k];
  }
  return result;
}

Poly substitute_monomials(const Poly& p,
                          const std::vector<std::pair<Variable, Poly>>& images) {
  const auto& reg = p.registry();
  struct Image {
    std::size_t slot;
    ExpVec exps;
    bool negative;  // coefficient -1
  };
  std::vector<Image> imgs;
  for (const auto& [v, mono] : images) {
    auto slot = reg->find(v);
    if (!slot) continue;
    if (!mono.is_unit_monomial())
      throw NonUnitSubstitutionIntoLaurent("image of " + v.name() +
                                           " must be a unit monomial");
    Poly local = transport(mono, reg);
    const auto& [me, mc] = *local.terms().begin();
    imgs.push_back({*slot, me, mc < 0});
  }
  Poly result(reg);
  ExpVec e(reg->size());
  for (const auto& [pe, pc] : p.terms()) {
    e.assign(pe.begin(), pe.end());
    bool negate = false;
    for (const auto& img : imgs) e[img.slot] = 0;
    for (const auto& img : imgs) {
      int k = pe[img.slot];
      if (k == 0) continue;
      for (std::size_t i = 0; i < e.size(); ++i) e[i] += k * img.exps[i];
      if (img.negative && (k & 1)) negate = !negate;
    }
    result.add_term(e, negate ? Int(-pc) : pc);
  }
  return result;
}

Poly transport(const Poly& p, const RegistryPtr& reg) {
  Poly result(reg);
  if (p.registry() == reg || (p.registry() && *p.registry() == *reg)) {
    for (const auto& [e, c] : p.terms()) result.add_term(e, c);
    return result;
  }
  const auto& src = p.registry();
  std::vector<std::optional<std::size_t>> slot_map(src ? src->size() : 0);
  for (std::size_t i = 0; i < slot_map.size(); ++i) slot_map[i] = reg->find(src->var(i));
  ExpVec e(reg->size());
  for (const auto& [pe, pc] : p.terms()) {
    std::fill(e.begin(), e.end(), 0);
    for (std::size_t i = 0; i < pe.size(); ++i) {
      if (pe[i] == 0) continue;
      if (!slot_map[i])
        throw RegistryMismatch("variable " + src->var(i).name() +
                               " missing from target registry");
      e[*slot_map[i]] = pe[i];
    }
    result.add_term(e, pc);
  }
  return result;
}

namespace {

// Generates permutations with their signs via Heap's algorithm.
void for_each_permutation(std::size_t n,
                          const std::function<void(const std::vector<std::size_t>&, int)>& fn) {
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  std::vector<std::size_t> c(n, 0);
  int sign = 1;
  fn(perm, sign);
  std::size_t i = 0;
  while (i < n) {
    if (c[i] < i) {
      std::swap(perm[i % 2 == 0 ? 0 : c[i]], perm[i]);
      sign = -sign;
      fn(perm, sign);
      ++c[i];
      i = 0;
    } else {
      c[i] = 0;
      ++i;
    }
  }
}

}  // namespace

Poly antisymmetrize(const Poly& p, const std::vector<Variable>& vars) {
  const auto& reg = p.registry();
  std::vector<std::size_t> slots;
  slots.reserve(vars.size());
  for (auto v : vars) slots.push_back(reg->slot(v));

  Poly result(reg);
  ExpVec e;
  for_each_permutation(slots.size(), [&](const std::vector<std::size_t>& perm, int sign) {
    for (const auto& [pe, pc] : p.terms()) {
      e = pe;
      for (std::size_t i = 0; i < slots.size(); ++i) e[slots[perm[i]]] = pe[slots[i]];
      result.add_term(e, sign > 0 ? pc : Int(-pc));
    }
  });
  return result;
}

Poly keep_nonpositive(const Poly& p, const std::vector<Variable>& vars) {
  const auto& reg = p.registry();
  std::vector<std::size_t> slots;
  for (auto v : vars)
    if (auto s = reg->find(v)) slots.push_back(*s);
  Poly result(reg);
  for (const auto& [e, c] : p.terms()) {
    bool keep = true;
    for (auto s : slots)
      if (e[s] > 0) { keep = false; break; }
    if (keep) result.add_term(e, c);
  }
  return result;
}

Poly divide_exact_binomial(const Poly& p, const Poly& hi, const Poly& lo) {
  const auto& reg = p.registry();
  if (!hi.is_unit_monomial() || !lo.is_unit_monomial())
    throw InexactDivision("divisor monomials must be unit monomials");
  if (p.is_zero()) return p;

  Poly divisor = transport(hi, reg) - transport(lo, reg);
  if (divisor.term_count() != 2)
    throw InexactDivision("divisor monomials must be distinct");
  // Reduction order: lexicographic on exponent vectors, largest term first.
  // The divisor must not have negative exponents (all callers divide by
  // (z_i - z_j) or (q^2 - 1) shaped binomials).
  ExpVec ehi = std::prev(divisor.terms().end())->first;
  Int chi = std::prev(divisor.terms().end())->second;
  ExpVec elo = divisor.terms().begin()->first;
  Int clo = divisor.terms().begin()->second;
  const std::size_t width = ehi.size();
  for (std::size_t i = 0; i < width; ++i)
    if (ehi[i] < 0 || elo[i] < 0)
      throw InexactDivision("divisor must have non-negative exponents");

  // Shift p so all exponents are non-negative; divide; shift back. In the
  // shifted ring an exact quotient has non-negative exponents, so a negative
  // quotient shift proves inexactness (and guarantees termination).
  ExpVec offset(width, 0);
  for (const auto& [e, c] : p.terms())
    for (std::size_t i = 0; i < width; ++i)
      offset[i] = std::min(offset[i], e[i]);

  TermMap rem;
  {
    ExpVec e(width);
    for (const auto& [pe, pc] : p.terms()) {
      for (std::size_t i = 0; i < width; ++i) e[i] = pe[i] - offset[i];
      rem.emplace(e, pc);
    }
  }

  Poly quot(reg);
  ExpVec shift(width), other(width);
  while (!rem.empty()) {
    auto lead = std::prev(rem.end());
    const ExpVec le = lead->first;
    Int lc = lead->second;
    for (std::size_t i = 0; i < width; ++i) {
      shift[i] = le[i] - ehi[i];
      if (shift[i] < 0) throw InexactDivision("remainder not divisible");
    }
    Int qc = chi < 0 ? Int(-lc) : lc;
    rem.erase(lead);
    // rem -= qc * x^shift * divisor; the leading part was just erased
    for (std::size_t i = 0; i < width; ++i) other[i] = shift[i] + elo[i];
    Int sub = Int(-qc * clo);
    auto [it, inserted] = rem.try_emplace(other, sub);
    if (!inserted) {
      it->second += sub;
      if (it->second == 0) rem.erase(it);
    }
    for (std::size_t i = 0; i < width; ++i) shift[i] += offset[i];
    quot.add_term(shift, qc);
  }
  return quot;
}

PolyMatrix::PolyMatrix(std::size_t rows, std::size_t cols, RegistryPtr reg)
    : rows_(rows), cols_(cols), reg_(std::move(reg)),
      entries_(rows * cols, Poly(reg_)) {}

namespace {

Poly det_laplace(const PolyMatrix& m, std::size_t row, std::uint32_t colmask,
                 std::map<std::uint32_t, Poly>& memo) {
  const std::size_t n = m.rows();
  if (row == n) return Poly::constant(m.registry(), 1);
  auto it = memo.find(colmask);
  if (it != memo.end()) return it->second;
  Poly acc(m.registry());
  int sign = 1;
  for (std::size_t c = 0; c < n; ++c) {
    if (!(colmask & (1u << c))) continue;
    if (!m.at(row, c).is_zero()) {
      Poly sub = det_laplace(m, row + 1, colmask & ~(1u << c), memo);
      Poly contrib = m.at(row, c) * sub;
      acc += sign > 0 ? contrib : -contrib;
    }
    sign = -sign;
  }
  memo.emplace(colmask, acc);
  return acc;
}

}  // namespace

Poly determinant(const PolyMatrix& m) {
  if (m.rows() != m.cols()) throw NotSquare("determinant of a non-square matrix");
  if (m.rows() == 0) return Poly::constant(m.registry(), 1);
  if (m.rows() > 31) throw Error("matrix too large for Laplace expansion");
  std::map<std::uint32_t, Poly> memo;
  std::uint32_t full = (m.rows() == 31) ? 0x7fffffffu : ((1u << m.rows()) - 1u);
  return det_laplace(m, 0, full, memo);
}

}  // namespace qkzlab
