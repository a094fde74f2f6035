#include "doctest.h"

#include "matrix_reps.hpp"

using namespace mf;

namespace {

// small deterministic pseudo-random rationals
struct MiniRng {
  unsigned long s = 0x9e3779b97f4a7c15UL;
  long next(long lo, long hi) {
    s = s * 6364136223846793005UL + 1442695040888963407UL;
    return lo + long((s >> 33) % (unsigned long)(hi - lo + 1));
  }
  Rat next_rat() { return Rat(next(-4, 4), next(1, 3)); }
};

MatQ random_matq(MiniRng& rng, int N) {
  MatQ m(N, N);
  for (auto& v : m.a) v = rng.next_rat();
  return m;
}

Mat<QuatQ> random_matquat(MiniRng& rng, int N) {
  Mat<QuatQ> m(N, N);
  for (auto& v : m.a)
    v = QuatQ(rng.next_rat(), rng.next_rat(), rng.next_rat(), rng.next_rat());
  return m;
}

MatG to_gauss(const MatQ& m) {
  MatG g(m.rows, m.cols);
  for (size_t i = 0; i < m.a.size(); ++i) g.a[i] = GaussRat(m.a[i]);
  return g;
}

}  // namespace

TEST_CASE("rho_R basics") {
  const long N = 3;
  CHECK(rho_R(BrauerDiagram::identity(2), N) == MatQ::id(9));
  SUBCASE("(1 2) acts as the flip operator") {
    MatQ t = rho_R(BrauerDiagram::transposition(2, 1, 2), N);
    for (int r1 = 0; r1 < N; ++r1)
      for (int r2 = 0; r2 < N; ++r2)
        for (int c1 = 0; c1 < N; ++c1)
          for (int c2 = 0; c2 < N; ++c2)
            CHECK(t.at(r1 * N + r2, c1 * N + c2) ==
                  Rat((r1 == c2 && r2 == c1) ? 1 : 0));
  }
  SUBCASE("<1 2> acts as the projector tensor") {
    MatQ p = rho_R(BrauerDiagram::projection(2, 1, 2), N);
    for (int r1 = 0; r1 < N; ++r1)
      for (int r2 = 0; r2 < N; ++r2)
        for (int c1 = 0; c1 < N; ++c1)
          for (int c2 = 0; c2 < N; ++c2)
            CHECK(p.at(r1 * N + r2, c1 * N + c2) ==
                  Rat((r1 == r2 && c1 == c2) ? 1 : 0));
  }
  SUBCASE("trace is N^l(pi) on all of B3, N = 4") {
    for (const auto& pi : all_diagrams(3))
      CHECK(rho_R_int(pi, 4).trace() == ipow(4, cycle_count(pi)));
  }
  SUBCASE("resource guard") {
    CHECK_THROWS_AS(rho_R(BrauerDiagram::identity(4), 7), Error);
  }
}

TEST_CASE("rho_R homomorphism oracle on B3 at N=4") {
  const long N = 4;
  auto diagrams = all_diagrams(3);
  std::vector<MatI> reps;
  for (const auto& d : diagrams) reps.push_back(rho_R_int(d, N));
  for (size_t i = 0; i < diagrams.size(); ++i)
    for (size_t j = 0; j < diagrams.size(); ++j) {
      DiagramProduct p = multiply(diagrams[i], diagrams[j]);
      MatI lhs = reps[i] * reps[j];
      MatI rhs = rho_R_int(p.diagram, N);
      long scale = ipow(N, p.loops);
      bool equal = true;
      for (size_t k = 0; k < lhs.a.size(); ++k)
        if (lhs.a[k] != scale * rhs.a[k]) equal = false;
      REQUIRE(equal);
    }
}

TEST_CASE("faithfulness at N >= n: Gram matrix of B3 has full rank") {
  WeingartenMatrix w = weingarten(WeingartenKind::Orthogonal, 3, 4);
  CHECK(rational_rank(w.gram) == 15);
}

TEST_CASE("rho_C vanishes off the symmetric group") {
  CHECK(rho_C(BrauerDiagram::projection(2, 1, 2), 3) == MatQ(9, 9));
  CHECK(rho_C(BrauerDiagram::transposition(2, 1, 2), 3) ==
        rho_R(BrauerDiagram::transposition(2, 1, 2), 3));
}

TEST_CASE("gamma") {
  SUBCASE("identity maps to 1 x ... x 1") {
    for (int n = 1; n <= 3; ++n)
      CHECK(gamma_rep(BrauerDiagram::identity(n)) == HTensor::one(n));
  }
  SUBCASE("gamma((1 2)) = -1/2 Re^H") {
    HTensor g = gamma_rep(BrauerDiagram::transposition(2, 1, 2));
    HTensor expect(2);
    expect.coef(0 * 4 + 0) = rat(-1, 2);
    for (int u = 1; u < 4; ++u) expect.coef(u * 4 + u) = rat(1, 2);
    CHECK(g == expect);
  }
  SUBCASE("homomorphism on B2 with lambda = -2") {
    auto diagrams = all_diagrams(2);
    for (const auto& a : diagrams)
      for (const auto& b : diagrams) {
        DiagramProduct p = multiply(a, b);
        HTensor lhs = gamma_rep(a) * gamma_rep(b);
        HTensor rhs = gamma_rep(p.diagram).scaled(rat_pow(Rat(-2), p.loops));
        REQUIRE(lhs == rhs);
      }
  }
}

TEST_CASE("iota o rho_H equals the signed eta tensor") {
  for (long N : {1L, 2L})
    for (const auto& pi : all_diagrams(2)) {
      MatG via_iota = iota_tensor(rho_H(pi, N));
      MatG direct = rho_H_complex(pi, N);
      REQUIRE(via_iota == direct);
    }
}

TEST_CASE("rho_H_complex is a homomorphism from B2 at lambda = -2N") {
  const long N = 2;
  auto diagrams = all_diagrams(2);
  for (const auto& a : diagrams)
    for (const auto& b : diagrams) {
      DiagramProduct p = multiply(a, b);
      MatG lhs = rho_H_complex(a, N) * rho_H_complex(b, N);
      MatG rhs = rho_H_complex(p.diagram, N);
      Rat scale = rat_pow(Rat(-2 * N), p.loops);
      for (size_t k = 0; k < lhs.a.size(); ++k) {
        REQUIRE(lhs.a[k].re == scale * rhs.a[k].re);
        REQUIRE(lhs.a[k].im == scale * rhs.a[k].im);
      }
    }
}

TEST_CASE("casimir") {
  SUBCASE("constants") {
    CHECK(casimir_constant(Algebra::C, 3) == Rat(-1));
    CHECK(casimir_constant(Algebra::C, 17) == Rat(-1));
    CHECK(casimir_constant(Algebra::R, 3) == rat(-2, 3));
    CHECK(casimir_constant(Algebra::H, 2) == rat(-9, 8));
    CHECK(casimir_constant_su(2) == rat(-3, 4));
  }
  SUBCASE("contraction gives c_g I_N") {
    for (auto kind : {Algebra::R, Algebra::C, Algebra::H})
      for (long N : {2L, 3L}) {
        Mat<QuatQ> m = casimir_contract(casimir_tensor(kind, N));
        Rat c = casimir_constant(kind, N);
        for (int r = 0; r < N; ++r)
          for (int col = 0; col < N; ++col)
            CHECK(m.at(r, col) == (r == col ? QuatQ(c) : QuatQ()));
      }
  }
  SUBCASE("iota_{1,2}(C_so(N)) = -(T - P)/N, two routes") {
    const long N = 3;
    CasimirTensor t = casimir_tensor(Algebra::R, N);
    MatG op((int)(N * N), (int)(N * N));
    for (int a = 0; a < N; ++a)
      for (int b = 0; b < N; ++b)
        for (int c = 0; c < N; ++c)
          for (int d = 0; d < N; ++d)
            op.at(a * N + c, b * N + d) += GaussRat(t.at(a, b, c, d)[0][0]);
    CHECK(op == casimir_operator(Algebra::R, N));
    MatQ expect =
        rho_R(BrauerDiagram::transposition(2, 1, 2), N).scaled(Rat(-1) / N) +
        rho_R(BrauerDiagram::projection(2, 1, 2), N).scaled(Rat(1) / N);
    CHECK(op == to_gauss(expect));
  }
}

TEST_CASE("power sums") {
  MiniRng rng;
  SUBCASE("identity gives the product of traces") {
    std::vector<MatQ> ms{random_matq(rng, 3), random_matq(rng, 3)};
    CHECK(power_sum_R(BrauerDiagram::identity(2), ms) ==
          ms[0].trace() * ms[1].trace());
  }
  SUBCASE("(1 2) gives Tr(M2 M1)") {
    std::vector<MatQ> ms{random_matq(rng, 3), random_matq(rng, 3)};
    CHECK(power_sum_R(BrauerDiagram::transposition(2, 1, 2), ms) ==
          (ms[1] * ms[0]).trace());
  }
  SUBCASE("matches the trace form on all of B2, K = R") {
    for (const auto& pi : all_diagrams(2)) {
      std::vector<MatQ> ms{random_matq(rng, 3), random_matq(rng, 3)};
      REQUIRE(power_sum_R(pi, ms) == trace_form_R(pi, ms));
    }
  }
  SUBCASE("matches the trace form on all of B2, K = H") {
    for (const auto& pi : all_diagrams(2)) {
      std::vector<Mat<QuatQ>> ms{random_matquat(rng, 2), random_matquat(rng, 2)};
      REQUIRE(power_sum_H(pi, ms) == trace_form_H(pi, ms));
    }
  }
}
