#include "matrix_reps.hpp"

#include <algorithm>

namespace mf {

namespace {

// One free value per pair of pi; fills vals[1..2n] and calls f once per
// assignment.
template <class F>
void for_each_pair_assignment(const BrauerDiagram& pi, long N, F&& f) {
  auto pairs = pi.pairs();
  const int n = pi.n();
  std::vector<int> vals(2 * n + 1, 0);
  std::vector<int> choice(n, 0);
  while (true) {
    for (int k = 0; k < n; ++k) {
      vals[pairs[k].first] = choice[k];
      vals[pairs[k].second] = choice[k];
    }
    f(vals);
    int k = n - 1;
    while (k >= 0 && choice[k] == N - 1) choice[k--] = 0;
    if (k < 0) break;
    ++choice[k];
  }
}

std::vector<std::vector<int>> sigma_cycles(const CycleData& cd) {
  const int n = (int)cd.sigma.size() - 1;
  std::vector<char> seen(n + 1, 0);
  std::vector<std::vector<int>> cycles;
  for (int i = 1; i <= n; ++i) {
    if (seen[i]) continue;
    std::vector<int> c;
    for (int j = i; !seen[j]; j = cd.sigma[j]) {
      seen[j] = 1;
      c.push_back(j);
    }
    cycles.push_back(c);
  }
  return cycles;
}

// iota_1 : H -> M_2(C) on basis units.
GaussRat iota1(int unit, int a, int b) {
  switch (unit) {
    case 0:
      return a == b ? GaussRat(Rat(1)) : GaussRat();
    case 1:  // i -> diag(i, -i)
      if (a != b) return {};
      return GaussRat(Rat(0), a == 0 ? Rat(1) : Rat(-1));
    case 2:  // j -> [[0,-1],[1,0]]
      if (a == b) return {};
      return GaussRat(a == 0 ? Rat(-1) : Rat(1));
    default:  // k -> [[0,-i],[-i,0]]
      if (a == b) return {};
      return GaussRat(Rat(0), Rat(-1));
  }
}

}  // namespace

void check_tensor_guard(int n, long N) {
  if (n > 4 || ipow(N, n) > 1296)
    throw Error("matrix_reps: tensor resource guard exceeded");
}

MatQ rho_R(const BrauerDiagram& pi, long N) {
  MatI m = rho_R_int(pi, N);
  MatQ out(m.rows, m.cols);
  for (size_t i = 0; i < m.a.size(); ++i) out.a[i] = m.a[i];
  return out;
}

MatI rho_R_int(const BrauerDiagram& pi, long N) {
  const int n = pi.n();
  check_tensor_guard(n, N);
  const long dim = ipow(N, n);
  MatI out((int)dim, (int)dim);
  for_each_pair_assignment(pi, N, [&](const std::vector<int>& vals) {
    std::vector<int> row(vals.begin() + n + 1, vals.begin() + 2 * n + 1);
    std::vector<int> col(vals.begin() + 1, vals.begin() + n + 1);
    out.at((int)flat_index(row, N), (int)flat_index(col, N)) += 1;
  });
  return out;
}

MatQ rho_C(const BrauerDiagram& pi, long N) {
  const long dim = ipow(N, pi.n());
  if (!pi.is_permutation()) return MatQ((int)dim, (int)dim);
  return rho_R(pi, N);
}

int horizontal_plus(const BrauerDiagram& pi) {
  const int n = pi.n();
  std::vector<int> Sigma = oriented_cycle_successor(pi);
  int h = 0;
  for (auto [p, q] : pi.pairs()) {  // p < q by construction
    bool horizontal = (q <= n) || (p > n);
    if (horizontal && Sigma[p] == q) ++h;
  }
  return h;
}

int horizontal_minus(const BrauerDiagram& pi) {
  const int n = pi.n();
  std::vector<int> Sigma = oriented_cycle_successor(pi);
  int h = 0;
  for (auto [p, q] : pi.pairs()) {
    bool horizontal = (q <= n) || (p > n);
    if (horizontal && Sigma[q] == p) ++h;
  }
  return h;
}

MatG eta_tensor(const BrauerDiagram& pi, long N) {
  const int n = pi.n();
  check_tensor_guard(n, 2 * N);
  const long M = 2 * N;  // acting dimension per factor
  const long dim = ipow(M, n);
  // J[a][b] = -1 iff b = a+N (a < N), +1 iff b = a-N (a >= N).
  auto pairs = pi.pairs();
  MatG base((int)dim, (int)dim);
  std::vector<int> vals(2 * n + 1, 0);
  std::vector<int> choice(n, 0);  // i_k value for the smaller point of pair k
  while (true) {
    int sign = 1;
    for (int k = 0; k < n; ++k) {
      int ik = choice[k];
      int il;
      if (ik < N) {
        il = ik + (int)N;
        sign = -sign;
      } else {
        il = ik - (int)N;
      }
      vals[pairs[k].first] = ik;
      vals[pairs[k].second] = il;
    }
    std::vector<int> row(vals.begin() + n + 1, vals.begin() + 2 * n + 1);
    std::vector<int> col(vals.begin() + 1, vals.begin() + n + 1);
    base.at((int)flat_index(row, M), (int)flat_index(col, M)) +=
        GaussRat(Rat(sign));
    int k = n - 1;
    while (k >= 0 && choice[k] == M - 1) choice[k--] = 0;
    if (k < 0) break;
    ++choice[k];
  }
  // Right-multiply by J^{xn}: column c comes from the unique m with
  // m_k = c_k + N (c_k < N, factor +1) or m_k = c_k - N (c_k >= N, -1).
  MatG out((int)dim, (int)dim);
  std::vector<int> cidx(n, 0);
  for (long c = 0; c < dim; ++c) {
    long tmp = c;
    for (int k = n - 1; k >= 0; --k) {
      cidx[k] = int(tmp % M);
      tmp /= M;
    }
    int sign = 1;
    std::vector<int> midx(n);
    for (int k = 0; k < n; ++k) {
      if (cidx[k] < N) {
        midx[k] = cidx[k] + (int)N;
      } else {
        midx[k] = cidx[k] - (int)N;
        sign = -sign;
      }
    }
    long m = flat_index(midx, M);
    for (long r = 0; r < dim; ++r) {
      GaussRat v = base.at((int)r, (int)m);
      if (!(v == GaussRat()))
        out.at((int)r, (int)c) += GaussRat(v.re * sign, v.im * sign);
    }
  }
  return out;
}

MatG rho_H_complex(const BrauerDiagram& pi, long N) {
  const int n = pi.n();
  int hdiff = (horizontal_plus(pi) - horizontal_minus(pi)) / 2;
  int exp = n - cycle_count(pi) + hdiff;
  MatG e = eta_tensor(pi, N);
  if (exp % 2 == 0) return e;
  for (auto& v : e.a) v = GaussRat(-v.re, -v.im);
  return e;
}

HTensor gamma_rep(const BrauerDiagram& pi) {
  const int n = pi.n();
  if (n > 4) throw Error("matrix_reps: tensor resource guard exceeded");
  CycleData cd = cycle_data(pi);
  auto cycles = sigma_cycles(cd);
  HTensor out(n);
  std::vector<int> u(n + 1, 0);  // unit choice per letter, 1-based
  while (true) {
    // prefactor: product over cycles of (-2 Re)(gamma_{i_s} ... gamma_{i_1})
    Rat coeff = 1;
    bool zero = false;
    for (const auto& c : cycles) {
      int unit = 0, sign = 1;
      for (auto it = c.rbegin(); it != c.rend(); ++it) {
        UnitProduct p = unit_mul(unit, u[*it]);
        sign *= p.sign;
        unit = p.unit;
      }
      if (unit != 0) {
        zero = true;
        break;
      }
      coeff *= Rat(-2 * sign);
    }
    if (!zero) {
      // basis target gamma_1^{-eps_1} x ... : inverse flips imaginary units
      int sign = 1;
      long b = 0;
      for (int k = 1; k <= n; ++k) {
        if (cd.eps[k] == 1) sign *= unit_inv_sign(u[k]);
        b = b * 4 + u[k];
      }
      out.coef(b) += coeff * sign;
    }
    int k = n;
    while (k >= 1 && u[k] == 3) u[k--] = 0;
    if (k < 1) break;
    ++u[k];
  }
  return out.scaled(rat_pow(rat(-1, 2), n));
}

QuatMatTensor rho_H(const BrauerDiagram& pi, long N) {
  const int n = pi.n();
  check_tensor_guard(n, N);
  QuatMatTensor t;
  t.N = N;
  t.n = n;
  t.dim = ipow(N, n);
  MatI r = rho_R_int(pi, N);
  HTensor g = gamma_rep(pi);
  HTensor zero(n);
  t.entries.assign(size_t(t.dim) * t.dim, zero);
  for (long i = 0; i < t.dim; ++i)
    for (long j = 0; j < t.dim; ++j)
      if (r.at((int)i, (int)j) != 0)
        t.at(i, j) = g.scaled(Rat(r.at((int)i, (int)j)));
  return t;
}

MatG iota_tensor(const QuatMatTensor& t) {
  const long M = 2 * t.N;
  const long dim = ipow(M, t.n);
  MatG out((int)dim, (int)dim);
  std::vector<int> ridx(t.n), cidx(t.n);
  for (long r = 0; r < t.dim; ++r) {
    long tmp = r;
    for (int k = t.n - 1; k >= 0; --k) {
      ridx[k] = int(tmp % t.N);
      tmp /= t.N;
    }
    for (long c = 0; c < t.dim; ++c) {
      tmp = c;
      for (int k = t.n - 1; k >= 0; --k) {
        cidx[k] = int(tmp % t.N);
        tmp /= t.N;
      }
      const HTensor& h = t.at(r, c);
      for (long b = 0; b < h.dim(); ++b) {
        if (h.coef(b) == 0) continue;
        // decode units
        std::vector<int> units(t.n);
        long bb = b;
        for (int k = t.n - 1; k >= 0; --k) {
          units[k] = int(bb % 4);
          bb /= 4;
        }
        // sum over block choices (a_k, b_k)
        std::vector<int> ab(2 * t.n, 0);
        while (true) {
          GaussRat v(h.coef(b));
          bool zero = false;
          long rr = 0, cc = 0;
          for (int k = 0; k < t.n; ++k) {
            GaussRat f = iota1(units[k], ab[2 * k], ab[2 * k + 1]);
            if (f == GaussRat()) {
              zero = true;
              break;
            }
            v = v * f;
            rr = rr * M + (ridx[k] + t.N * ab[2 * k]);
            cc = cc * M + (cidx[k] + t.N * ab[2 * k + 1]);
          }
          if (!zero) out.at((int)rr, (int)cc) += v;
          int k = 2 * t.n - 1;
          while (k >= 0 && ab[k] == 1) ab[k--] = 0;
          if (k < 0) break;
          ++ab[k];
        }
      }
    }
  }
  return out;
}

Rat casimir_constant(Algebra kind, long N) {
  long beta = kind == Algebra::R ? 1 : kind == Algebra::C ? 2 : 4;
  return Rat(-1) + Rat(2 - beta) / (beta * N);
}

Rat casimir_constant_su(long N) { return Rat(-1) + Rat(1) / (N * N); }

CasimirTensor casimir_tensor(Algebra kind, long N) {
  long beta = kind == Algebra::R ? 1 : kind == Algebra::C ? 2 : 4;
  int units = kind == Algebra::R ? 1 : kind == Algebra::C ? 2 : 4;
  CasimirTensor t;
  t.kind = kind;
  t.N = N;
  std::array<std::array<Rat, 4>, 4> zero{};
  for (auto& row : zero) row.fill(Rat(0));
  t.entries.assign(size_t(N) * N * N * N, zero);
  Rat pref = Rat(1) / (beta * N);
  for (int a = 0; a < N; ++a)
    for (int b = 0; b < N; ++b)
      for (int u = 0; u < units; ++u) {
        // -T x Re^K : E_ab x E_ba with unit u x u^{-1}
        t.at(a, b, b, a)[u][u] += -pref * unit_inv_sign(u);
        // +P x Co^K : E_ab x E_ab with unit u x u
        t.at(a, b, a, b)[u][u] += pref;
      }
  return t;
}

Mat<QuatQ> casimir_contract(const CasimirTensor& t) {
  const int N = (int)t.N;
  Mat<QuatQ> out(N, N);
  for (int a = 0; a < N; ++a)
    for (int d = 0; d < N; ++d)
      for (int b = 0; b < N; ++b) {
        const auto& e = t.at(a, b, b, d);
        for (int u = 0; u < 4; ++u)
          for (int v = 0; v < 4; ++v) {
            if (e[u][v] == 0) continue;
            UnitProduct p = unit_mul(u, v);
            QuatQ q = QuatQ::unit(p.unit);
            out.at(a, d) += QuatQ(e[u][v] * p.sign) * q;
          }
      }
  return out;
}

MatG casimir_operator(Algebra kind, long N) {
  auto to_gauss = [](const MatQ& m) {
    MatG g(m.rows, m.cols);
    for (size_t i = 0; i < m.a.size(); ++i) g.a[i] = GaussRat(m.a[i]);
    return g;
  };
  BrauerDiagram t12 = BrauerDiagram::transposition(2, 1, 2);
  BrauerDiagram k12 = BrauerDiagram::projection(2, 1, 2);
  if (kind == Algebra::R)
    return to_gauss(rho_R(t12, N).scaled(Rat(-1) / N) +
                    rho_R(k12, N).scaled(Rat(1) / N));
  if (kind == Algebra::C) return to_gauss(rho_C(t12, N).scaled(Rat(-1) / N));
  MatG a = rho_H_complex(t12, N);
  MatG b = rho_H_complex(k12, N);
  MatG out(a.rows, a.cols);
  Rat half_inv(1, 2 * N);
  for (size_t i = 0; i < a.a.size(); ++i) {
    GaussRat d = a.a[i] - b.a[i];
    out.a[i] = GaussRat(d.re * half_inv, d.im * half_inv);
  }
  return out;
}

Rat power_sum_R(const BrauerDiagram& pi, const std::vector<MatQ>& ms) {
  if ((int)ms.size() != pi.n()) throw Error("power_sum: need n matrices");
  CycleData cd = cycle_data(pi);
  Rat out = 1;
  for (const auto& c : sigma_cycles(cd)) {
    MatQ p = MatQ::id(ms[0].rows);
    for (auto it = c.rbegin(); it != c.rend(); ++it) {
      const MatQ& m = ms[*it - 1];
      p = p * (cd.eps[*it] == 1 ? m : m.transpose());
    }
    out *= p.trace();
  }
  return out;
}

Rat power_sum_H(const BrauerDiagram& pi, const std::vector<Mat<QuatQ>>& ms) {
  if ((int)ms.size() != pi.n()) throw Error("power_sum: need n matrices");
  CycleData cd = cycle_data(pi);
  Rat out = 1;
  for (const auto& c : sigma_cycles(cd)) {
    Mat<QuatQ> p = Mat<QuatQ>::id(ms[0].rows);
    for (auto it = c.rbegin(); it != c.rend(); ++it) {
      const Mat<QuatQ>& m = ms[*it - 1];
      if (cd.eps[*it] == 1) {
        p = p * m;
      } else {
        Mat<QuatQ> adj(m.cols, m.rows);
        for (int r = 0; r < m.rows; ++r)
          for (int col = 0; col < m.cols; ++col)
            adj.at(col, r) = m.at(r, col).conj();
        p = p * adj;
      }
    }
    out *= Rat(-2) * p.trace().real();
  }
  return out;
}

GaussRat power_sum_C(const BrauerDiagram& pi, const std::vector<MatG>& ms) {
  if (!pi.is_permutation()) throw Error("power_sum: C kind needs permutation");
  CycleData cd = cycle_data(pi);
  GaussRat out{Rat(1)};
  for (const auto& c : sigma_cycles(cd)) {
    MatG p = MatG::id(ms[0].rows);
    for (auto it = c.rbegin(); it != c.rend(); ++it) p = p * ms[*it - 1];
    out = out * p.trace();
  }
  return out;
}

Rat trace_form_R(const BrauerDiagram& pi, const std::vector<MatQ>& ms) {
  const int n = pi.n();
  const long N = ms[0].rows;
  Rat out = 0;
  for_each_pair_assignment(pi, N, [&](const std::vector<int>& vals) {
    Rat term = 1;
    for (int k = 1; k <= n; ++k) term *= ms[k - 1].at(vals[k], vals[n + k]);
    out += term;
  });
  return out;
}

Rat trace_form_H(const BrauerDiagram& pi, const std::vector<Mat<QuatQ>>& ms) {
  const int n = pi.n();
  const long N = ms[0].rows;
  QuatMatTensor rho = rho_H(pi, N);
  // X = rho_H(pi) o (M_1 x ... x M_n); apply (-2 Re Tr)^{xn}.
  Rat out = 0;
  std::vector<int> ridx(n), midx(n);
  for (long r = 0; r < rho.dim; ++r) {
    long tmp = r;
    for (int k = n - 1; k >= 0; --k) {
      ridx[k] = int(tmp % N);
      tmp /= N;
    }
    for (long m = 0; m < rho.dim; ++m) {
      tmp = m;
      for (int k = n - 1; k >= 0; --k) {
        midx[k] = int(tmp % N);
        tmp /= N;
      }
      // (x M)(m, r) as an element of H^{xn} (diagonal entry of the product
      // X(r,r) = sum_m rho(r,m) (xM)(m,r))
      HTensor factor(n);
      factor.coef(0) = 1;
      bool zero = false;
      for (int k = 0; k < n && !zero; ++k) {
        const QuatQ& q = ms[k].at(midx[k], ridx[k]);
        HTensor qk(n);
        long stride = ipow(4, n - 1 - k);
        if (q == QuatQ()) {
          zero = true;
          break;
        }
        // multiply factor by (1 x .. x q x .. x 1)
        HTensor unit_q(n);
        const Rat comps[4] = {q.w, q.x, q.y, q.z};
        for (int u = 0; u < 4; ++u)
          if (comps[u] != 0) unit_q.coef(u * stride) += comps[u];
        factor = factor * unit_q;
      }
      if (zero) continue;
      HTensor contrib = rho.at(r, m) * factor;
      out += contrib.coef(0);
    }
  }
  return out * rat_pow(Rat(-2), n);
}

}  // namespace mf
