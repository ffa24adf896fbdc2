#include "qkzlab/linkpat.hpp"

#include <algorithm>
#include <charconv>
#include <functional>
#include <sstream>

#include "qkzlab/errors.hpp"

namespace qkzlab {

namespace {

void validate(const std::vector<int>& match) {
  const int N = static_cast<int>(match.size()) - 1;
  if (N % 2 != 0) throw Error("link pattern needs an even number of sites");
  for (int i = 1; i <= N; ++i) {
    int j = match[i];
    if (j < 1 || j > N || j == i || match[j] != i)
      throw Error("not a fixed-point free involution");
  }
  // noncrossing: openings close in stack order
  std::vector<int> stack;
  for (int i = 1; i <= N; ++i) {
    if (match[i] > i) {
      stack.push_back(i);
    } else {
      if (stack.empty() || stack.back() != match[i])
        throw Error("link pattern has crossing arches");
      stack.pop_back();
    }
  }
}

}  // namespace

LinkPattern LinkPattern::from_match(std::vector<int> match) {
  validate(match);
  LinkPattern p;
  p.n_ = static_cast<int>(match.size() - 1) / 2;
  p.match_ = std::move(match);
  return p;
}

LinkPattern LinkPattern::from_pairs(int n, const std::vector<std::pair<int, int>>& pairs) {
  std::vector<int> match(2 * n + 1, 0);
  for (auto [i, j] : pairs) {
    if (i < 1 || j < 1 || i > 2 * n || j > 2 * n) throw Error("site out of range");
    match[i] = j;
    match[j] = i;
  }
  return from_match(std::move(match));
}

LinkPattern LinkPattern::parse(const std::string& text) {
  std::vector<std::pair<int, int>> pairs;
  std::size_t pos = 0;
  int max_site = 0;
  while (pos < text.size()) {
    while (pos < text.size() && (text[pos] == ' ' || text[pos] == ')')) ++pos;
    if (pos >= text.size()) break;
    if (text[pos] != '(') throw Error("bad link pattern text: " + text);
    std::size_t close = text.find(')', pos);
    if (close == std::string::npos) throw Error("bad link pattern text: " + text);
    std::string inner = text.substr(pos + 1, close - pos - 1);
    std::size_t comma = inner.find(',');
    if (comma == std::string::npos) throw Error("bad link pattern text: " + text);
    int i = std::stoi(inner.substr(0, comma));
    int j = std::stoi(inner.substr(comma + 1));
    pairs.emplace_back(i, j);
    max_site = std::max({max_site, i, j});
    pos = close + 1;
  }
  if (max_site % 2 != 0) throw Error("bad link pattern text: " + text);
  return from_pairs(max_site / 2, pairs);
}

std::vector<int> LinkPattern::openings() const {
  std::vector<int> out;
  for (int i = 1; i <= 2 * n_; ++i)
    if (is_opening(i)) out.push_back(i);
  return out;
}

std::vector<int> LinkPattern::epsilon() const {
  std::vector<int> out(2 * n_);
  for (int i = 1; i <= 2 * n_; ++i) out[i - 1] = is_opening(i) ? 1 : -1;
  return out;
}

int LinkPattern::depth() const {
  int d = n_ * n_;
  for (int i = 1; i <= 2 * n_; ++i) d += is_opening(i) ? i : -i;
  return d;
}

LinkPattern LinkPattern::rotated() const {
  const int N = 2 * n_;
  std::vector<int> match(N + 1, 0);
  for (int i = 1; i <= N; ++i) {
    int ii = i % N + 1;
    match[ii] = match_[i] % N + 1;
  }
  return from_match(std::move(match));
}

std::string LinkPattern::str() const {
  std::ostringstream out;
  for (int i = 1; i <= 2 * n_; ++i)
    if (is_opening(i)) out << '(' << i << ',' << match_[i] << ')';
  if (n_ == 0) out << "()";
  return out.str();
}

bool LinkPattern::operator<(const LinkPattern& other) const {
  auto a = openings(), b = other.openings();
  if (a != b) return a < b;
  return match_ < other.match_;
}

std::vector<LinkPattern> enumerate_link_patterns(int n) {
  std::vector<LinkPattern> out;
  std::vector<int> match(2 * n + 1, 0);
  std::vector<int> stack;
  // depth-first over balanced parenthesis strings, '(' before ')', which
  // yields opening sequences in increasing lexicographic order
  std::function<void(int)> rec = [&](int site) {
    if (site > 2 * n) {
      out.push_back(LinkPattern::from_match(match));
      return;
    }
    int remaining = 2 * n - site + 1;
    if (static_cast<int>(stack.size()) < remaining) {
      stack.push_back(site);
      rec(site + 1);
      stack.pop_back();
    }
    if (!stack.empty()) {
      int open = stack.back();
      stack.pop_back();
      match[open] = site;
      match[site] = open;
      rec(site + 1);
      stack.push_back(open);
    }
  };
  rec(1);
  return out;
}

std::pair<LinkPattern, int> tl_apply(int i, const LinkPattern& pi) {
  const int N = 2 * pi.half_size();
  if (i < 1 || i > N) throw Error("site out of range");
  int j = i % N + 1;
  if (pi.match(i) == j) return {pi, 1};
  std::vector<int> match(N + 1);
  for (int s = 1; s <= N; ++s) match[s] = pi.match(s);
  int a = match[i], b = match[j];
  match[i] = j;
  match[j] = i;
  match[a] = b;
  match[b] = a;
  return {LinkPattern::from_match(std::move(match)), 0};
}

bool OpeningSequence::non_decreasing() const {
  for (std::size_t i = 1; i < a.size(); ++i)
    if (a[i] < a[i - 1]) return false;
  return true;
}

std::string OpeningSequence::str() const {
  std::ostringstream out;
  out << '(';
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (i) out << ',';
    out << a[i];
  }
  out << ')';
  return out.str();
}

OpeningSequence OpeningSequence::parse(const std::string& text) {
  OpeningSequence s;
  std::string body = text;
  if (!body.empty() && body.front() == '(') body = body.substr(1);
  if (!body.empty() && body.back() == ')') body.pop_back();
  std::istringstream in(body);
  std::string tok;
  while (std::getline(in, tok, ',')) {
    if (!tok.empty()) s.a.push_back(std::stoi(tok));
  }
  return s;
}

std::vector<OpeningSequence> sequences_An(int n) {
  std::vector<OpeningSequence> out;
  const int count = 1 << (n - 1);
  for (int mask = 0; mask < count; ++mask) {
    OpeningSequence s;
    s.a.push_back(1);
    for (int l = 2; l <= n; ++l) {
      bool high = mask & (1 << (n - l));
      s.a.push_back(high ? 2 * l - 1 : 2 * l - 2);
    }
    out.push_back(std::move(s));
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool in_family_An(const OpeningSequence& a, int n) {
  if (a.size() != n) return false;
  if (n == 0) return true;
  if (a.a[0] != 1) return false;
  for (int l = 2; l <= n; ++l)
    if (a.a[l - 1] != 2 * l - 2 && a.a[l - 1] != 2 * l - 1) return false;
  return true;
}

std::vector<OpeningSequence> catalan_sequences(int n) {
  std::vector<OpeningSequence> out;
  OpeningSequence cur;
  std::function<void(int)> rec = [&](int l) {
    if (l > n) {
      out.push_back(cur);
      return;
    }
    int lo = l == 1 ? 1 : cur.a.back() + 1;
    for (int v = lo; v <= 2 * l - 1; ++v) {
      cur.a.push_back(v);
      rec(l + 1);
      cur.a.pop_back();
    }
  };
  rec(1);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<LinkPattern> partition_L(const OpeningSequence& a, int n) {
  if (!in_family_An(a, n))
    throw SequenceNotInFamily("sequence " + a.str() + " is not in the partition family");
  std::vector<bool> odd_open(2 * n + 1, false);
  for (int v : a.a)
    if (v % 2 == 1) odd_open[v] = true;
  std::vector<LinkPattern> out;
  for (const auto& pi : enumerate_link_patterns(n)) {
    bool ok = true;
    for (int m = 1; 2 * m - 1 <= 2 * n; ++m) {
      if (pi.is_opening(2 * m - 1) != odd_open[2 * m - 1]) { ok = false; break; }
    }
    if (ok) out.push_back(pi);
  }
  return out;
}

Poly chebyshev_u(int k, const RegistryPtr& reg) {
  if (k <= -1) return Poly::zero(reg);
  Poly minus_tau = Poly::variable(reg, Variable::tau(), 1, -1);
  Poly prev = Poly::zero(reg);        // U_{-1}
  Poly cur = Poly::constant(reg, 1);  // U_0
  for (int i = 0; i < k; ++i) {
    Poly next = minus_tau * cur - prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

Poly basis_coefficient(const OpeningSequence& a, const LinkPattern& pi,
                       const RegistryPtr& reg) {
  Poly coeff = Poly::constant(reg, 1);
  for (int i = 1; i <= 2 * pi.half_size(); ++i) {
    int j = pi.match(i);
    if (j < i) continue;
    int count = 0;
    for (int v : a.a)
      if (i <= v && v < j) ++count;
    int index = count - (j - i + 1) / 2;
    if (index <= -1) return Poly::zero(reg);
    coeff = coeff * chebyshev_u(index, reg);
  }
  return coeff;
}

}  // namespace qkzlab
