#include "qkzlab/extract.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace qkzlab {

SeriesProduct& SeriesProduct::num(Poly p) {
  factors.push_back({SeriesFactor::Polarity::Numerator, std::move(p)});
  return *this;
}

SeriesProduct& SeriesProduct::den(Poly p) {
  factors.push_back({SeriesFactor::Polarity::Denominator, std::move(p)});
  return *this;
}

Truncation Truncation::box(const RegistryPtr& reg, const std::vector<Variable>& vars,
                           const std::vector<int>& caps) {
  Truncation t;
  for (std::size_t i = 0; i < vars.size(); ++i) {
    t.slots_.push_back(reg->slot(vars[i]));
    t.caps_.push_back(caps[i]);
  }
  return t;
}

Truncation Truncation::total_degree(const RegistryPtr& reg,
                                    const std::vector<Variable>& vars, int cap) {
  Truncation t;
  for (auto v : vars) t.slots_.push_back(reg->slot(v));
  t.total_cap_ = cap;
  return t;
}

bool Truncation::keeps(const ExpVec& e) const {
  if (!caps_.empty()) {
    for (std::size_t i = 0; i < slots_.size(); ++i)
      if (e[slots_[i]] > caps_[i]) return false;
  }
  if (total_cap_ >= 0) {
    int d = 0;
    for (auto s : slots_) d += e[s];
    if (d > total_cap_) return false;
  }
  return true;
}

Truncation Truncation::meet(const Truncation& other) const {
  if (slots_ != other.slots_)
    throw Error("cannot combine series truncated in different variables");
  Truncation t = *this;
  if (!other.caps_.empty()) {
    if (t.caps_.empty()) {
      t.caps_ = other.caps_;
    } else {
      for (std::size_t i = 0; i < t.caps_.size(); ++i)
        t.caps_[i] = std::min(t.caps_[i], other.caps_[i]);
    }
  }
  if (other.total_cap_ >= 0)
    t.total_cap_ = t.total_cap_ < 0 ? other.total_cap_
                                    : std::min(t.total_cap_, other.total_cap_);
  return t;
}

int Truncation::iteration_bound() const {
  if (total_cap_ >= 0) return total_cap_;
  return std::accumulate(caps_.begin(), caps_.end(), 0);
}

Poly truncate(const Poly& p, const Truncation& t) {
  Poly r(p.registry());
  for (const auto& [e, c] : p.terms())
    if (t.keeps(e)) r.add_term(e, c);
  return r;
}

Poly mul_truncated(const Poly& a, const Poly& b, const Truncation& t) {
  Poly r(a.registry() ? a.registry() : b.registry());
  if (a.is_zero() || b.is_zero()) return r;
  const std::size_t width = a.terms().begin()->first.size();
  ExpVec e(width);
  for (const auto& [ea, ca] : a.terms()) {
    for (const auto& [eb, cb] : b.terms()) {
      for (std::size_t i = 0; i < width; ++i) e[i] = ea[i] + eb[i];
      if (t.keeps(e)) r.add_term(e, ca * cb);
    }
  }
  return r;
}

Poly invert_truncated(const Poly& f, const Truncation& t) {
  const auto& reg = f.registry();
  const auto& slots = t.tracked_slots();

  Poly unit_part(reg), rest(reg);
  for (const auto& [e, c] : f.terms()) {
    bool constant_in_series = true;
    for (auto s : slots) {
      if (e[s] < 0)
        throw NonUnitDenominator("denominator factor has a pole at 0: " + f.str());
      if (e[s] != 0) constant_in_series = false;
    }
    (constant_in_series ? unit_part : rest).add_term(e, c);
  }
  if (!unit_part.is_unit_monomial())
    throw NonUnitDenominator(
        "denominator factor is not a unit of the series ring around 0: " + f.str());

  const auto& [ue, uc] = *unit_part.terms().begin();
  ExpVec inv_e(ue.size());
  for (std::size_t i = 0; i < ue.size(); ++i) inv_e[i] = -ue[i];
  Poly inv_unit = Poly::monomial(reg, inv_e, uc);  // uc is +-1

  // f = unit * (1 + g) with g of positive series degree; invert by the
  // finite geometric series within the truncation.
  Poly g = mul_truncated(rest, inv_unit, t);
  Poly acc = Poly::constant(reg, 1);
  Poly power = Poly::constant(reg, 1);
  const int bound = t.iteration_bound();
  for (int k = 1; k <= bound; ++k) {
    power = mul_truncated(power, -g, t);
    if (power.is_zero()) break;
    acc += power;
  }
  return mul_truncated(acc, inv_unit, t);
}

Poly coefficient_of(const SeriesProduct& sp, const std::vector<int>& exponents) {
  if (exponents.size() != sp.extraction_vars.size())
    throw Error("exponent list does not match the extraction variables");
  for (int e : exponents)
    if (e < 0) throw Error("extraction exponents must be non-negative");

  Truncation t = Truncation::box(sp.registry, sp.extraction_vars, exponents);
  Poly acc = Poly::constant(sp.registry, 1);
  for (const auto& f : sp.factors) {
    Poly body = transport(f.body, sp.registry);
    if (f.polarity == SeriesFactor::Polarity::Numerator)
      acc = mul_truncated(acc, body, t);
    else
      acc = mul_truncated(acc, invert_truncated(body, t), t);
  }

  std::vector<std::size_t> slots;
  for (auto v : sp.extraction_vars) slots.push_back(sp.registry->slot(v));
  Poly r(sp.registry);
  ExpVec stripped;
  for (const auto& [e, c] : acc.terms()) {
    bool match = true;
    for (std::size_t i = 0; i < slots.size(); ++i)
      if (e[slots[i]] != exponents[i]) { match = false; break; }
    if (!match) continue;
    stripped = e;
    for (auto s : slots) stripped[s] = 0;
    r.add_term(stripped, c);
  }
  return r;
}

namespace {

void enumerate_sequences(int n, int order, bool even, std::vector<int>& seq,
                         int used, const std::function<void(const std::vector<int>&)>& fn) {
  if (static_cast<int>(seq.size()) == n) {
    fn(seq);
    return;
  }
  int start;
  if (seq.empty()) {
    start = 0;
  } else {
    start = seq.back() + 1;
  }
  for (int r = start; used + r <= order; ++r) {
    if (even) {
      if (seq.empty()) {
        if (r % 2 != 0) continue;  // first exponent even
      } else if ((r - seq.back()) % 2 == 0) {
        continue;  // gaps odd
      }
    }
    seq.push_back(r);
    enumerate_sequences(n, order, even, seq, used + r, fn);
    seq.pop_back();
  }
}

}  // namespace

Poly schur_sum_residual(int n, int order, SchurParity parity) {
  std::vector<Variable> us;
  for (int l = 1; l <= n; ++l) us.push_back(Variable::u(l));
  auto reg = make_registry(us);
  Truncation t = Truncation::total_degree(reg, us, order);
  const bool even = parity == SchurParity::Even;

  // Left side: sum over the admissible exponent sequences of
  // det(u_i^{r_{j-1}}); only sequences with total degree <= order survive
  // the truncation.
  Poly lhs(reg);
  std::vector<int> seq;
  enumerate_sequences(n, order, even, seq, 0, [&](const std::vector<int>& r) {
    ExpVec e(reg->size());
    for (int i = 0; i < n; ++i) e[reg->slot(us[i])] = r[i];
    lhs += antisymmetrize(Poly::monomial(reg, e, 1), us);
  });

  // Right side: Vandermonde over products of geometric factors.
  Poly rhs = Poly::constant(reg, 1);
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      Poly vand = Poly::variable(reg, Variable::u(j)) - Poly::variable(reg, Variable::u(i));
      rhs = mul_truncated(rhs, vand, t);
      Poly den = Poly::constant(reg, 1) -
                 Poly::variable(reg, Variable::u(i)) * Poly::variable(reg, Variable::u(j));
      rhs = mul_truncated(rhs, invert_truncated(den, t), t);
    }
  }
  for (int i = 1; i <= n; ++i) {
    Poly den = Poly::constant(reg, 1) -
               Poly::variable(reg, Variable::u(i), even ? 2 : 1);
    rhs = mul_truncated(rhs, invert_truncated(den, t), t);
  }

  return truncate(lhs, t) - rhs;
}

}  // namespace qkzlab
