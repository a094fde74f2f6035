#pragma once

// Explicit dense-tensor representations of the Brauer algebra on (K^N)^{xn}
// for K in {R, C, H}, the Casimir tensors and the power-sum evaluations.
// Everything here is exact (rational / Gaussian-rational / quaternionic
// entries) and serves as the ground-truth oracle for the diagram algebra
// and the moment systems.

#include <vector>

#include "brauer.hpp"
#include "dense.hpp"
#include "quaternion.hpp"

namespace mf {

enum class Algebra { R, C, H };

// Resource guard shared by the dense constructions.
void check_tensor_guard(int n, long N);

// rho_R(pi) on (R^N)^{xn}: 0/1 entries; an algebra homomorphism from
// B_{n,N} after linear extension.
MatQ rho_R(const BrauerDiagram& pi, long N);
MatI rho_R_int(const BrauerDiagram& pi, long N);

// rho_C(sigma) on (C^N)^{xn}; zero on non-permutation diagrams.
MatQ rho_C(const BrauerDiagram& pi, long N);

// The signed complex symplectic representation on (C^{2N})^{xn}:
//   rho_H_complex(pi) = (-1)^{n - l(pi) + (h+ - h-)/2} eta(pi),
// an algebra homomorphism from B_{n,-2N}.
MatG eta_tensor(const BrauerDiagram& pi, long N);
MatG rho_H_complex(const BrauerDiagram& pi, long N);
// Horizontal edges oriented rightward / leftward by the cycle orientation.
int horizontal_plus(const BrauerDiagram& pi);
int horizontal_minus(const BrauerDiagram& pi);

// gamma(pi) in H^{xn}; linear extension is a homomorphism B_{n,-2} -> H^{xn}.
HTensor gamma_rep(const BrauerDiagram& pi);

// rho_H(pi) = rho_R(pi) (x) gamma(pi), stored as an N^n x N^n matrix with
// entries in H^{xn}.
struct QuatMatTensor {
  long N = 0;
  int n = 0;
  long dim = 0;                 // N^n
  std::vector<HTensor> entries;  // row-major, dim x dim
  const HTensor& at(long r, long c) const { return entries[r * dim + c]; }
  HTensor& at(long r, long c) { return entries[r * dim + c]; }
};
QuatMatTensor rho_H(const BrauerDiagram& pi, long N);
// Factorwise block embedding into M_{(2N)^n}(C).
MatG iota_tensor(const QuatMatTensor& t);

// --- Casimir ---------------------------------------------------------------

// c_g = -1 + (2 - beta)/(beta N); for su(N) use casimir_constant_su.
Rat casimir_constant(Algebra kind, long N);
Rat casimir_constant_su(long N);

// The Casimir element of u(N,K) as an element of M_N(K) (x) M_N(K): for each
// pair of elementary-matrix positions, a 4x4 rational table of coefficients
// on unit (x) unit.
struct CasimirTensor {
  Algebra kind;
  long N;
  // entry((a,b),(c,d))[u][v] = coefficient of (E_ab unit_u) (x) (E_cd unit_v)
  std::vector<std::array<std::array<Rat, 4>, 4>> entries;
  std::array<std::array<Rat, 4>, 4>& at(int a, int b, int c, int d) {
    return entries[((size_t(a) * N + b) * N + c) * N + d];
  }
  const std::array<std::array<Rat, 4>, 4>& at(int a, int b, int c, int d) const {
    return entries[((size_t(a) * N + b) * N + c) * N + d];
  }
};
CasimirTensor casimir_tensor(Algebra kind, long N);
// X (x) Y -> XY applied to the tensor; equals c_g * I_N.
Mat<QuatQ> casimir_contract(const CasimirTensor& t);
// The tensor realized as an operator on (K^N)^{x2} ((C^{2N})^{x2} for H).
MatG casimir_operator(Algebra kind, long N);

// --- Power sums -------------------------------------------------------------

// Product over the cycles of sigma_pi of Tr(M^{eps...}...), with transposes
// (K=R) or adjoints (K=H) at the eps=-1 slots; the quaternionic version uses
// the (-2 Re Tr) normalisation per factor.
Rat power_sum_R(const BrauerDiagram& pi, const std::vector<MatQ>& ms);
Rat power_sum_H(const BrauerDiagram& pi, const std::vector<Mat<QuatQ>>& ms);
GaussRat power_sum_C(const BrauerDiagram& pi, const std::vector<MatG>& ms);

// Trace-form oracles Tr^{xn}(rho(pi) o M_1 x ... x M_n).
Rat trace_form_R(const BrauerDiagram& pi, const std::vector<MatQ>& ms);
Rat trace_form_H(const BrauerDiagram& pi, const std::vector<Mat<QuatQ>>& ms);

}  // namespace mf
