#include "brauer.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

namespace mf {

BrauerDiagram::BrauerDiagram(int n, const std::vector<std::pair<int, int>>& pairs)
    : n_(n), partner_(2 * n + 1, 0) {
  if (n < 1) throw Error("diagram: order must be positive");
  if ((int)pairs.size() != n) throw Error("diagram: expected n pairs");
  for (auto [a, b] : pairs) {
    if (a < 1 || a > 2 * n || b < 1 || b > 2 * n || a == b)
      throw Error("diagram: point out of range");
    if (partner_[a] || partner_[b]) throw Error("diagram: point paired twice");
    partner_[a] = b;
    partner_[b] = a;
  }
}

BrauerDiagram BrauerDiagram::identity(int n) {
  std::vector<std::pair<int, int>> p;
  for (int i = 1; i <= n; ++i) p.push_back({i, i + n});
  return BrauerDiagram(n, p);
}

BrauerDiagram BrauerDiagram::transposition(int n, int r, int s) {
  std::vector<std::pair<int, int>> p;
  for (int i = 1; i <= n; ++i) {
    if (i == r)
      p.push_back({r, s + n});
    else if (i == s)
      p.push_back({s, r + n});
    else
      p.push_back({i, i + n});
  }
  return BrauerDiagram(n, p);
}

BrauerDiagram BrauerDiagram::projection(int n, int r, int s) {
  std::vector<std::pair<int, int>> p{{r, s}, {r + n, s + n}};
  for (int i = 1; i <= n; ++i)
    if (i != r && i != s) p.push_back({i, i + n});
  return BrauerDiagram(n, p);
}

BrauerDiagram BrauerDiagram::from_permutation(const std::vector<int>& sigma) {
  int n = (int)sigma.size() - 1;  // sigma is 1-based
  std::vector<std::pair<int, int>> p;
  for (int i = 1; i <= n; ++i) p.push_back({i, sigma[i] + n});
  return BrauerDiagram(n, p);
}

bool BrauerDiagram::is_permutation() const {
  for (int i = 1; i <= n_; ++i)
    if (partner_[i] <= n_) return false;
  return true;
}

std::vector<int> BrauerDiagram::to_permutation() const {
  if (!is_permutation()) throw Error("diagram: not a permutation");
  std::vector<int> s(n_ + 1, 0);
  for (int i = 1; i <= n_; ++i) s[i] = partner_[i] - n_;
  return s;
}

std::vector<std::pair<int, int>> BrauerDiagram::pairs() const {
  std::vector<std::pair<int, int>> out;
  for (int p = 1; p <= 2 * n_; ++p)
    if (partner_[p] > p) out.push_back({p, partner_[p]});
  return out;
}

BrauerDiagram BrauerDiagram::transpose() const {
  auto flip = [this](int p) { return p <= n_ ? p + n_ : p - n_; };
  std::vector<std::pair<int, int>> out;
  for (auto [a, b] : pairs()) out.push_back({flip(a), flip(b)});
  return BrauerDiagram(n_, out);
}

std::string BrauerDiagram::text() const {
  std::ostringstream os;
  os << "{";
  bool first = true;
  for (auto [a, b] : pairs()) {
    if (!first) os << ", ";
    first = false;
    os << a << "-" << b;
  }
  os << "}";
  return os.str();
}

BrauerDiagram BrauerDiagram::parse(const std::string& s) {
  std::string t;
  for (char c : s)
    if (!std::isspace((unsigned char)c)) t.push_back(c);
  if (t.size() < 2 || t.front() != '{' || t.back() != '}')
    throw Error("diagram: expected {a-b, ...}");
  t = t.substr(1, t.size() - 2);
  std::vector<std::pair<int, int>> pairs;
  int maxp = 0;
  std::stringstream ss(t);
  std::string item;
  while (std::getline(ss, item, ',')) {
    auto dash = item.find('-');
    if (dash == std::string::npos) throw Error("diagram: expected a-b pair");
    int a = std::stoi(item.substr(0, dash));
    int b = std::stoi(item.substr(dash + 1));
    pairs.push_back({a, b});
    maxp = std::max({maxp, a, b});
  }
  if (maxp % 2 != 0 || (int)pairs.size() * 2 != maxp)
    throw Error("diagram: not a perfect matching of {1..2n}");
  return BrauerDiagram(maxp / 2, pairs);
}

std::vector<BrauerDiagram> all_diagrams(int n) {
  if (n > 6) throw Error("brauer: order capped at 6");
  std::vector<BrauerDiagram> out;
  std::vector<int> partner(2 * n + 1, 0);
  std::vector<std::pair<int, int>> acc;
  auto rec = [&](auto&& self) -> void {
    int a = 0;
    for (int p = 1; p <= 2 * n; ++p)
      if (!partner[p]) {
        a = p;
        break;
      }
    if (!a) {
      out.push_back(BrauerDiagram(n, acc));
      return;
    }
    for (int b = a + 1; b <= 2 * n; ++b) {
      if (partner[b]) continue;
      partner[a] = b;
      partner[b] = a;
      acc.push_back({a, b});
      self(self);
      acc.pop_back();
      partner[a] = 0;
      partner[b] = 0;
    }
  };
  rec(rec);
  return out;
}

std::vector<BrauerDiagram> all_permutation_diagrams(int n) {
  std::vector<int> s(n + 1);
  std::iota(s.begin() + 1, s.end(), 1);
  std::vector<BrauerDiagram> out;
  do {
    out.push_back(BrauerDiagram::from_permutation(s));
  } while (std::next_permutation(s.begin() + 1, s.end()));
  return out;
}

DiagramProduct multiply(const BrauerDiagram& a, const BrauerDiagram& b) {
  if (a.n() != b.n()) throw Error("brauer: order mismatch in product");
  const int n = a.n();
  // Nodes of the stacked picture: 1..n final bottom (bottom of b), n+1..2n
  // final top (top of a), 2n+1..3n glue (bottom of a = top of b).  Every
  // node carries one edge per box it belongs to: outer nodes have degree 1,
  // glue nodes degree 2.  Components are either paths joining two outer
  // nodes (the pairs of the product) or cycles among glue nodes (loops).
  auto enc_b = [n](int p) { return p <= n ? p : 2 * n + (p - n); };
  auto enc_a = [n](int p) { return p > n ? p : 2 * n + p; };
  std::vector<std::vector<int>> adj(3 * n + 1);
  for (auto [x, y] : b.pairs()) {
    adj[enc_b(x)].push_back(enc_b(y));
    adj[enc_b(y)].push_back(enc_b(x));
  }
  for (auto [x, y] : a.pairs()) {
    adj[enc_a(x)].push_back(enc_a(y));
    adj[enc_a(y)].push_back(enc_a(x));
  }
  std::vector<char> seen(3 * n + 1, 0);
  std::vector<std::pair<int, int>> pairs;
  for (int p0 = 1; p0 <= 2 * n; ++p0) {
    if (seen[p0]) continue;
    seen[p0] = 1;
    int prev = p0, cur = adj[p0][0];
    while (cur > 2 * n) {
      seen[cur] = 1;
      int next = (adj[cur][0] == prev) ? adj[cur][1] : adj[cur][0];
      prev = cur;
      cur = next;
    }
    seen[cur] = 1;
    pairs.push_back({p0, cur});
  }
  int loops = 0;
  for (int g = 2 * n + 1; g <= 3 * n; ++g) {
    if (seen[g]) continue;
    ++loops;
    int prev = g, cur = adj[g][0];
    seen[g] = 1;
    while (cur != g) {
      seen[cur] = 1;
      int next = (adj[cur][0] == prev) ? adj[cur][1] : adj[cur][0];
      prev = cur;
      cur = next;
    }
  }
  return {loops, BrauerDiagram(n, pairs)};
}

std::vector<int> oriented_cycle_successor(const BrauerDiagram& pi) {
  const int n = pi.n();
  auto secondary = [n](int p) { return p <= n ? p + n : p - n; };
  std::vector<int> Sigma(2 * n + 1, 0);
  std::vector<char> seen(2 * n + 1, 0);
  for (int s = 1; s <= 2 * n; ++s) {
    if (seen[s]) continue;
    // s is the smallest element of its cycle: orient so that the primary
    // edge at s is outgoing.
    int p = s;
    bool primary_next = true;
    while (!seen[p]) {
      seen[p] = 1;
      int q = primary_next ? pi.partner(p) : secondary(p);
      Sigma[p] = q;
      primary_next = !primary_next;
      p = q;
    }
  }
  return Sigma;
}

CycleData cycle_data(const BrauerDiagram& pi) {
  const int n = pi.n();
  std::vector<int> Sigma = oriented_cycle_successor(pi);
  int loops = 0;
  {
    std::vector<char> seen(2 * n + 1, 0);
    for (int s = 1; s <= 2 * n; ++s) {
      if (seen[s]) continue;
      ++loops;
      for (int p = s; !seen[p]; p = Sigma[p]) seen[p] = 1;
    }
  }
  CycleData cd;
  cd.loops = loops;
  cd.eps.assign(n + 1, 0);
  for (int i = 1; i <= n; ++i)
    cd.eps[i] = (pi.partner(i) == Sigma[i]) ? 1 : -1;
  // sigma_pi: remove top points from the cycles of Sigma
  cd.sigma.assign(n + 1, 0);
  for (int i = 1; i <= n; ++i) {
    int q = Sigma[i];
    while (q > n) q = Sigma[q];
    cd.sigma[i] = q;
  }
  return cd;
}

int cycle_count(const BrauerDiagram& pi) { return cycle_data(pi).loops; }

int permutation_cycles(const std::vector<int>& s) {
  int n = (int)s.size() - 1;
  std::vector<char> seen(n + 1, 0);
  int c = 0;
  for (int i = 1; i <= n; ++i) {
    if (seen[i]) continue;
    ++c;
    for (int j = i; !seen[j]; j = s[j]) seen[j] = 1;
  }
  return c;
}

int superposition_loops(const BrauerDiagram& a, const BrauerDiagram& b) {
  if (a.n() != b.n()) throw Error("brauer: order mismatch");
  const int n = a.n();
  // Draw the pairs of a and of b in a single box; every point carries one
  // a-edge and one b-edge, so the picture is a union of alternating cycles.
  // This count equals the total exponent of lambda in t(a) b together with
  // the cycle count of the resulting diagram.
  std::vector<char> seen(2 * n + 1, 0);
  int loops = 0;
  for (int s = 1; s <= 2 * n; ++s) {
    if (seen[s]) continue;
    ++loops;
    int p = s;
    bool use_a = true;
    while (!seen[p]) {
      seen[p] = 1;
      p = use_a ? a.partner(p) : b.partner(p);
      use_a = !use_a;
    }
  }
  return loops;
}

int distance(const BrauerDiagram& a, const BrauerDiagram& b) {
  if (a.n() != b.n()) throw Error("brauer: order mismatch in distance");
  return a.n() - superposition_loops(a, b);
}

BrauerVector::BrauerVector(const BrauerDiagram& d, Rat lambda, Rat coeff)
    : n_(d.n()), lambda_(std::move(lambda)) {
  add(d, coeff);
}

void BrauerVector::add(const BrauerDiagram& d, const Rat& c) {
  if (d.n() != n_) throw Error("brauer: order mismatch in vector");
  if (c == 0) return;
  auto it = terms_.find(d);
  if (it == terms_.end()) {
    terms_.emplace(d, c);
  } else {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

BrauerVector& BrauerVector::operator+=(const BrauerVector& o) {
  for (auto& [d, c] : o.terms_) add(d, c);
  return *this;
}

BrauerVector& BrauerVector::operator*=(const Rat& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& kv : terms_) kv.second *= c;
  return *this;
}

BrauerVector BrauerVector::multiplied_by(const BrauerVector& o) const {
  BrauerVector out(n_, lambda_);
  for (auto& [d1, c1] : terms_)
    for (auto& [d2, c2] : o.terms()) {
      DiagramProduct p = multiply(d1, d2);
      out.add(p.diagram, c1 * c2 * rat_pow(lambda_, p.loops));
    }
  return out;
}

BrauerDiagram swap_points(const BrauerDiagram& pi, int a, int b) {
  int a2 = pi.partner(a), b2 = pi.partner(b);
  if (a2 == b) return pi;  // swapping inside one pair
  auto pairs = pi.pairs();
  std::vector<std::pair<int, int>> out;
  for (auto [x, y] : pairs) {
    bool hits = (x == a || y == a || x == b || y == b);
    if (!hits) out.push_back({x, y});
  }
  out.push_back({b, a2});
  out.push_back({a, b2});
  return BrauerDiagram(pi.n(), out);
}

ForcedPair force_pair(const BrauerDiagram& pi, int a, int b) {
  if (pi.partner(a) == b) return {true, pi};
  int a2 = pi.partner(a), b2 = pi.partner(b);
  auto pairs = pi.pairs();
  std::vector<std::pair<int, int>> out;
  for (auto [x, y] : pairs) {
    bool hits = (x == a || y == a || x == b || y == b);
    if (!hits) out.push_back({x, y});
  }
  out.push_back({a, b});
  out.push_back({a2, b2});
  return {false, BrauerDiagram(pi.n(), out)};
}

TPResult tp_action(TPKind kind, int l, int m, int sl, int sm,
                   const BrauerDiagram& pi) {
  const int n = pi.n();
  if (l == m || l < 1 || m < 1 || l > n || m > n)
    throw Error("brauer: T/P indices must be distinct points of {1..n}");
  if (sl == -1 && sm == 1) return tp_action(kind, m, l, 1, -1, pi);
  if (kind == TPKind::T) {
    if (sl == 1 && sm == 1) return {0, swap_points(pi, l, m)};
    if (sl == -1 && sm == -1) return {0, swap_points(pi, n + l, n + m)};
    ForcedPair f = force_pair(pi, l, n + m);  // T^{+-} = F_{l, n+m}
    return {f.loop ? 1 : 0, f.diagram};
  }
  if (sl == 1 && sm == 1) {
    ForcedPair f = force_pair(pi, l, m);
    return {f.loop ? 1 : 0, f.diagram};
  }
  if (sl == -1 && sm == -1) {
    ForcedPair f = force_pair(pi, n + l, n + m);
    return {f.loop ? 1 : 0, f.diagram};
  }
  return {0, swap_points(pi, l, n + m)};  // P^{+-} = S_{l, n+m}
}

BrauerVector tp_action_vec(TPKind kind, int l, int m, int sl, int sm,
                           const BrauerDiagram& pi, const Rat& lambda) {
  TPResult r = tp_action(kind, l, m, sl, sm, pi);
  return BrauerVector(r.diagram, lambda, rat_pow(lambda, r.lambda_exp));
}

std::vector<std::vector<Rat>> rational_inverse(
    const std::vector<std::vector<Rat>>& m) {
  const int d = (int)m.size();
  std::vector<std::vector<Rat>> a = m, inv(d, std::vector<Rat>(d, 0));
  for (int i = 0; i < d; ++i) inv[i][i] = 1;
  for (int col = 0; col < d; ++col) {
    int piv = -1;
    for (int r = col; r < d; ++r)
      if (a[r][col] != 0) {
        piv = r;
        break;
      }
    if (piv < 0) throw Error("weingarten: Gram matrix singular (N too small)");
    std::swap(a[piv], a[col]);
    std::swap(inv[piv], inv[col]);
    Rat p = a[col][col];
    for (int j = 0; j < d; ++j) {
      a[col][j] /= p;
      inv[col][j] /= p;
    }
    for (int r = 0; r < d; ++r) {
      if (r == col || a[r][col] == 0) continue;
      Rat f = a[r][col];
      for (int j = 0; j < d; ++j) {
        a[r][j] -= f * a[col][j];
        inv[r][j] -= f * inv[col][j];
      }
    }
  }
  return inv;
}

int rational_rank(std::vector<std::vector<Rat>> m) {
  if (m.empty()) return 0;
  const int rows = (int)m.size(), cols = (int)m[0].size();
  int rank = 0;
  for (int col = 0; col < cols && rank < rows; ++col) {
    int piv = -1;
    for (int r = rank; r < rows; ++r)
      if (m[r][col] != 0) {
        piv = r;
        break;
      }
    if (piv < 0) continue;
    std::swap(m[piv], m[rank]);
    for (int r = 0; r < rows; ++r) {
      if (r == rank || m[r][col] == 0) continue;
      Rat f = m[r][col] / m[rank][col];
      for (int j = col; j < cols; ++j) m[r][j] -= f * m[rank][j];
    }
    ++rank;
  }
  return rank;
}

Rat WeingartenMatrix::value(const BrauerDiagram& pi) const {
  BrauerDiagram id = BrauerDiagram::identity(n);
  for (size_t i = 0; i < basis.size(); ++i)
    if (basis[i] == id) {
      for (size_t j = 0; j < basis.size(); ++j)
        if (basis[j] == pi) return inverse[i][j];
    }
  throw Error("weingarten: diagram not in basis");
}

WeingartenMatrix weingarten(WeingartenKind kind, int n, long N) {
  if (n > 6) throw Error("brauer: order capped at 6");
  WeingartenMatrix w;
  w.kind = kind;
  w.n = n;
  w.N = N;
  w.basis = (kind == WeingartenKind::Unitary) ? all_permutation_diagrams(n)
                                              : all_diagrams(n);
  Rat lam = (kind == WeingartenKind::Symplectic) ? Rat(-2 * N) : Rat(N);
  const int d = (int)w.basis.size();
  w.gram.assign(d, std::vector<Rat>(d, 0));
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      w.gram[i][j] = rat_pow(lam, superposition_loops(w.basis[i], w.basis[j]));
  w.inverse = rational_inverse(w.gram);
  return w;
}

}  // namespace mf
