#include "qkzlab/tsscpp.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "qkzlab/errors.hpp"
#include "qkzlab/extract.hpp"

namespace qkzlab {

std::vector<int> NilpConfig::endpoints() const {
  std::vector<int> out;
  for (int i = 1; i < n; ++i) {
    const auto& steps = paths[i - 1];
    int diag = static_cast<int>(std::count(steps.begin(), steps.end(), Step::Diagonal));
    out.push_back(modified ? i + diag - 1 : i + diag);
  }
  return out;
}

std::string NilpConfig::json() const {
  std::string out = "[";
  for (std::size_t p = 0; p < paths.size(); ++p) {
    if (p) out += ',';
    out += '[';
    for (std::size_t s = 0; s < paths[p].size(); ++s) {
      if (s) out += ',';
      out += paths[p][s] == Step::Vertical ? "\"V\"" : "\"D\"";
    }
    out += ']';
  }
  out += ']';
  return out;
}

WeightSpec WeightSpec::symbols(const RegistryPtr& reg, int n, bool modified) {
  WeightSpec w{n, modified, {}};
  for (int k = 0; k < n; ++k)
    w.slice.push_back(Poly::variable(reg, Variable::t_slice(k)));
  return w;
}

WeightSpec WeightSpec::uniform(const RegistryPtr& reg, int n, bool modified,
                               const Poly& top, const Poly& bulk) {
  WeightSpec w{n, modified, {}};
  w.slice.push_back(transport(top, reg));
  for (int k = 1; k < n; ++k) w.slice.push_back(transport(bulk, reg));
  return w;
}

RegistryPtr tsscpp_registry(int n) {
  std::vector<Variable> vars = {Variable::tau(), Variable::t()};
  for (int k = 0; k < n; ++k) vars.push_back(Variable::t_slice(k));
  for (int l = 1; l <= n; ++l) vars.push_back(Variable::u(l));
  return make_registry(std::move(vars));
}

std::vector<NilpConfig> enumerate_nilp(int n, bool modified) {
  std::vector<NilpConfig> out;
  NilpConfig cur{n, modified, {}};
  std::set<std::pair<int, int>> occupied;
  std::vector<int> arrivals;  // r_i of completed paths

  std::function<void(int)> place_path = [&](int i) {
    if (i == n) {
      out.push_back(cur);
      return;
    }
    const int steps = modified ? i + 1 : i;
    std::vector<Step> path;
    std::vector<std::pair<int, int>> pts;
    std::function<void(int, int, int)> walk = [&](int x, int y, int k) {
      if (k == steps) {
        int r = modified ? x - 1 : x;
        if (!arrivals.empty()) {
          if (r <= arrivals.back()) return;
          if (modified && (r - arrivals.back()) % 2 == 0) return;
        } else if (modified && r % 2 == 0) {
          return;
        }
        arrivals.push_back(r);
        cur.paths.push_back(path);
        place_path(i + 1);
        cur.paths.pop_back();
        arrivals.pop_back();
        return;
      }
      for (Step s : {Step::Vertical, Step::Diagonal}) {
        int nx = s == Step::Vertical ? x : x + 1;
        int ny = y + 1;
        if (occupied.contains({nx, ny})) continue;
        occupied.insert({nx, ny});
        path.push_back(s);
        walk(nx, ny, k + 1);
        path.pop_back();
        occupied.erase({nx, ny});
      }
    };
    occupied.insert({i, -i});
    walk(i, -i, 0);
    occupied.erase({i, -i});
  };
  place_path(1);
  return out;
}

Poly config_weight(const NilpConfig& c, const WeightSpec& w) {
  const auto& reg = w.slice.empty() ? tsscpp_registry(c.n) : w.slice.front().registry();
  Poly weight = Poly::constant(reg, 1);
  for (int i = 1; i < c.n; ++i) {
    const auto& steps = c.paths[i - 1];
    for (std::size_t k = 0; k < steps.size(); ++k) {
      if (steps[k] != Step::Vertical) continue;
      weight = weight * w.slice[i - static_cast<int>(k)];
    }
  }
  return weight;
}

Poly weighted_path_count(int i, int r, const WeightSpec& w, bool modified) {
  const auto& reg = w.slice.front().registry();
  const int vertical = 2 * i - r;
  Poly gen = Poly::constant(reg, 1);
  Poly u = Poly::variable(reg, Variable::u(1));
  for (int k = modified ? 0 : 1; k <= i; ++k)
    gen = gen * (Poly::constant(reg, 1) + w.slice[k] * u);
  Poly out(reg);
  for (const auto& [e, c] : gen.terms()) {
    if (e[reg->slot(Variable::u(1))] != vertical) continue;
    ExpVec stripped = e;
    stripped[reg->slot(Variable::u(1))] = 0;
    out.add_term(stripped, c);
  }
  return out;
}

namespace {

Poly gen_poly_direct(int n, const WeightSpec& w, bool modified) {
  const auto& reg = w.slice.front().registry();
  Poly acc(reg);
  for (const auto& c : enumerate_nilp(n, modified)) acc += config_weight(c, w);
  return acc;
}

Poly gen_poly_lgv(int n, const WeightSpec& w, bool modified) {
  const auto& reg = w.slice.front().registry();
  if (n == 1) return Poly::constant(reg, 1);
  const int m = n - 1;

  // cache of single-path generating polynomials
  std::map<std::pair<int, int>, Poly> pcache;
  auto entry = [&](int i, int r) -> const Poly& {
    auto key = std::make_pair(i, r);
    auto it = pcache.find(key);
    if (it == pcache.end())
      it = pcache.emplace(key, weighted_path_count(i, r, w, modified)).first;
    return it->second;
  };

  Poly acc(reg);
  std::vector<int> r;
  std::function<void(int)> sweep = [&](int j) {
    if (j > m) {
      PolyMatrix mat(m, m, reg);
      for (int i = 1; i <= m; ++i)
        for (int k = 1; k <= m; ++k) mat.at(i - 1, k - 1) = entry(i, r[k - 1]);
      acc += determinant(mat);
      return;
    }
    int lo = j == 1 ? (modified ? 1 : 1) : r.back() + 1;
    for (int v = lo; v <= 2 * j; ++v) {
      if (modified) {
        if (j == 1 && v % 2 == 0) continue;
        if (j > 1 && (v - r.back()) % 2 == 0) continue;
      }
      r.push_back(v);
      sweep(j + 1);
      r.pop_back();
    }
  };
  sweep(1);
  return acc;
}

Poly gen_poly_extract(int n, const WeightSpec& w, bool modified) {
  const auto& reg = w.slice.front().registry();
  Poly one = Poly::constant(reg, 1);
  std::vector<Variable> us;
  for (int l = 1; l <= n; ++l) us.push_back(Variable::u(l));

  SeriesProduct sp{reg, {}, us};
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      Poly ui = Poly::variable(reg, Variable::u(i));
      Poly uj = Poly::variable(reg, Variable::u(j));
      sp.num((uj - ui) * (one + w.slice[i] * uj));
      sp.den(one - ui * uj);
    }
    Poly ui = Poly::variable(reg, Variable::u(i));
    if (modified) {
      sp.num(one + w.slice[0] * ui);
      sp.den(one - ui * ui);
    } else {
      sp.den(one - ui);
    }
  }
  std::vector<int> exps;
  for (int i = 1; i <= n; ++i) exps.push_back(2 * i - 2);
  return coefficient_of(sp, exps);
}

}  // namespace

Poly gen_poly(int n, const WeightSpec& w, GenMethod method, bool modified) {
  if (n < 1) throw Error("size must be at least 1");
  switch (method) {
    case GenMethod::Direct: return gen_poly_direct(n, w, modified);
    case GenMethod::Lgv: return gen_poly_lgv(n, w, modified);
    case GenMethod::Extract: return gen_poly_extract(n, w, modified);
  }
  throw Error("unknown method");
}

Poly nprime_specialized(int n, const Poly& t0, const Poly& bulk) {
  auto reg = tsscpp_registry(n);
  return gen_poly(n, WeightSpec::uniform(reg, n, true, t0, bulk), GenMethod::Lgv, true);
}

Int asm_count_formula(int n) {
  // prod_{k=0}^{n-1} (3k+1)! / (n+k)!
  auto factorial = [](int m) {
    Int f = 1;
    for (int i = 2; i <= m; ++i) f *= i;
    return f;
  };
  Int num = 1, den = 1;
  for (int k = 0; k < n; ++k) {
    num *= factorial(3 * k + 1);
    den *= factorial(n + k);
  }
  return num / den;
}

namespace {

// Exhaustive alternating-sign matrix enumeration. Rows are generated entry
// by entry, keeping row and column partial sums in {0,1}.
void asm_enumerate(int n, const std::function<void(int top_one_col)>& visit) {
  std::vector<int> colsum(n, 0);
  int top_col = -1;

  std::function<void(int)> row_loop = [&](int row) {
    if (row == n) {
      visit(top_col);
      return;
    }
    std::function<void(int, int)> entry_loop = [&](int col, int rowsum) {
      if (col == n) {
        if (rowsum == 1) row_loop(row + 1);
        return;
      }
      for (int e : {1, 0, -1}) {
        int rs = rowsum + e;
        if (rs < 0 || rs > 1) continue;
        int cs = colsum[col] + e;
        if (cs < 0 || cs > 1) continue;
        // columns must be able to reach sum 1 by the last row
        if (row == n - 1 && cs != 1) continue;
        colsum[col] = cs;
        bool set_top = row == 0 && e == 1;
        if (set_top) top_col = col;
        entry_loop(col + 1, rs);
        if (set_top) top_col = -1;
        colsum[col] -= e;
      }
    };
    entry_loop(0, 0);
  };
  row_loop(0);
}

}  // namespace

Int asm_count(int n) {
  if (n > 6)
    throw SizeTooLargeForBruteForce(
        "exhaustive check limited to n <= 6; use asm_count_formula");
  Int brute = 0;
  asm_enumerate(n, [&](int) { brute += 1; });
  Int formula = asm_count_formula(n);
  if (brute != formula)
    throw Error("ASM formula and enumeration disagree at n=" + std::to_string(n));
  return formula;
}

std::vector<Int> asm_refined(int n) {
  if (n > 6)
    throw SizeTooLargeForBruteForce("refined enumeration limited to n <= 6");
  std::vector<Int> counts(n, 0);
  asm_enumerate(n, [&](int top_one_col) { counts[top_one_col] += 1; });
  return counts;
}

}  // namespace qkzlab
