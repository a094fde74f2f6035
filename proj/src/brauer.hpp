#pragma once

// The Brauer algebra B_{n,lambda}: pairings of {1,...,2n} (bottom points
// 1..n, top points n+1..2n), stacking products with loop counting, the
// cycle data (sigma_pi, eps_pi, l(pi)) of a diagram, the swap/forcing
// operator family T/P, the diagram metric and Weingarten matrices.

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "rational.hpp"

namespace mf {

class BrauerDiagram {
 public:
  BrauerDiagram() : n_(0) {}
  // pairs over points 1..2n, each point in exactly one pair
  BrauerDiagram(int n, const std::vector<std::pair<int, int>>& pairs);

  static BrauerDiagram identity(int n);
  // the transposition (r s), 1 <= r < s <= n
  static BrauerDiagram transposition(int n, int r, int s);
  // the elementary projection <r s>: pairs {r,s} and {r+n,s+n}
  static BrauerDiagram projection(int n, int r, int s);
  // embedding of a permutation: pairs {i, sigma(i)+n}; sigma is 1-based
  static BrauerDiagram from_permutation(const std::vector<int>& sigma);

  int n() const { return n_; }
  int partner(int p) const { return partner_[p]; }
  bool is_permutation() const;
  // for permutation diagrams: sigma with sigma[i] = j iff {i, j+n} paired
  std::vector<int> to_permutation() const;

  std::vector<std::pair<int, int>> pairs() const;
  // swaps points i <-> n+i in every pair; involution
  BrauerDiagram transpose() const;

  std::string text() const;                        // {1-8, 2-9, ...}
  static BrauerDiagram parse(const std::string&);  // whitespace-insensitive

  auto operator<=>(const BrauerDiagram& o) const = default;
  bool operator==(const BrauerDiagram& o) const = default;

 private:
  int n_;
  std::vector<int> partner_;  // index 0 unused; partner_[p] for p in 1..2n
};

// All (2n-1)!! pairings of {1,...,2n}, in a deterministic order.
std::vector<BrauerDiagram> all_diagrams(int n);
// The n! permutation diagrams.
std::vector<BrauerDiagram> all_permutation_diagrams(int n);

// Stacking product a.b (a on top of b): returns the induced pairing and the
// number of closed loops formed, so that a.b = lambda^loops * diagram.
struct DiagramProduct {
  int loops;
  BrauerDiagram diagram;
};
DiagramProduct multiply(const BrauerDiagram& a, const BrauerDiagram& b);

// sigma_pi, eps_pi and the cycle count l(pi) extracted from the graph with
// primary edges (the pairs of pi) and secondary edges {i, n+i}, each cycle
// oriented so that the primary edge at its smallest element is outgoing.
struct CycleData {
  std::vector<int> sigma;  // 1-based permutation of {1..n}
  std::vector<int> eps;    // 1-based signs, +1 / -1
  int loops;               // number of cycles l(pi)
};
CycleData cycle_data(const BrauerDiagram& pi);

int cycle_count(const BrauerDiagram& pi);           // l(pi)
// The oriented successor Sigma_pi on {1..2n} (primary edge outgoing at the
// smallest element of each cycle); 1-based, index 0 unused.
std::vector<int> oriented_cycle_successor(const BrauerDiagram& pi);
int permutation_cycles(const std::vector<int>& s);  // cycles of a 1-based perm

// Number of closed loops in the one-box superposition of the pairs of a
// and b; equals the total lambda exponent of t(a) b plus the cycle count of
// the resulting diagram.
int superposition_loops(const BrauerDiagram& a, const BrauerDiagram& b);

// d(pi, pi') = n - l(t(pi) pi'); a metric of diameter n-1.
int distance(const BrauerDiagram& a, const BrauerDiagram& b);

// An element of B_{n,lambda}: rational combination of diagrams.  Zero
// coefficients are never stored.
class BrauerVector {
 public:
  BrauerVector(int n, Rat lambda) : n_(n), lambda_(std::move(lambda)) {}
  BrauerVector(const BrauerDiagram& d, Rat lambda, Rat coeff = 1);

  int n() const { return n_; }
  const Rat& lambda() const { return lambda_; }
  const std::map<BrauerDiagram, Rat>& terms() const { return terms_; }

  void add(const BrauerDiagram& d, const Rat& c);
  BrauerVector& operator+=(const BrauerVector& o);
  BrauerVector& operator*=(const Rat& c);
  bool operator==(const BrauerVector& o) const {
    return n_ == o.n_ && terms_ == o.terms_;
  }

  BrauerVector multiplied_by(const BrauerVector& o) const;

 private:
  int n_;
  Rat lambda_;
  std::map<BrauerDiagram, Rat> terms_;
};

// Point-level operations of the operator family.  Swapping the points of a
// common pair leaves the diagram unchanged; forcing an existing pair yields
// a loop factor lambda.
BrauerDiagram swap_points(const BrauerDiagram& pi, int a, int b);
struct ForcedPair {
  bool loop;  // true iff {a,b} was already a pair of pi
  BrauerDiagram diagram;
};
ForcedPair force_pair(const BrauerDiagram& pi, int a, int b);

enum class TPKind { T, P };

// T_{lm}^{sl sm} / P_{lm}^{sl sm} applied to a diagram; the result is a
// single diagram together with the lambda exponent it carries.
struct TPResult {
  int lambda_exp;  // 0 or 1
  BrauerDiagram diagram;
};
TPResult tp_action(TPKind kind, int l, int m, int sl, int sm,
                   const BrauerDiagram& pi);
// Linear-extension wrapper returning a BrauerVector in B_{n,lambda}.
BrauerVector tp_action_vec(TPKind kind, int l, int m, int sl, int sm,
                           const BrauerDiagram& pi, const Rat& lambda);

enum class WeingartenKind { Unitary, Orthogonal, Symplectic };

// The Gram matrix and its exact rational inverse.  For the unitary kind both
// are indexed by permutation diagrams, otherwise by all of B_n; the Gram
// entry at (p, p') is lam^{l(t(p) p')} with lam = N for unitary/orthogonal
// and lam = -2N for symplectic.  Throws if the Gram matrix is singular
// ("N too small").
struct WeingartenMatrix {
  WeingartenKind kind;
  int n;
  long N;
  std::vector<BrauerDiagram> basis;
  std::vector<std::vector<Rat>> gram;
  std::vector<std::vector<Rat>> inverse;
  // Weingarten function value Wg(pi) = inverse entry at (identity, pi).
  Rat value(const BrauerDiagram& pi) const;
};
WeingartenMatrix weingarten(WeingartenKind kind, int n, long N);

// Exact solve used by the Weingarten computation; throws Error if singular.
std::vector<std::vector<Rat>> rational_inverse(
    const std::vector<std::vector<Rat>>& m);
int rational_rank(std::vector<std::vector<Rat>> m);

}  // namespace mf
