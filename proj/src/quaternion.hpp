#pragma once

#include <array>
#include <vector>

#include "dense.hpp"
#include "rational.hpp"

namespace mf {

// Quaternion with exact rational coefficients on (1, i, j, k).
struct QuatQ {
  Rat w, x, y, z;
  QuatQ() : w(0), x(0), y(0), z(0) {}
  QuatQ(Rat w_) : w(std::move(w_)), x(0), y(0), z(0) {}
  QuatQ(Rat w_, Rat x_, Rat y_, Rat z_)
      : w(std::move(w_)), x(std::move(x_)), y(std::move(y_)), z(std::move(z_)) {}
  static QuatQ unit(int u) {  // 0:1 1:i 2:j 3:k
    QuatQ q;
    (u == 0 ? q.w : u == 1 ? q.x : u == 2 ? q.y : q.z) = 1;
    return q;
  }
  QuatQ operator+(const QuatQ& o) const {
    return {w + o.w, x + o.x, y + o.y, z + o.z};
  }
  QuatQ& operator+=(const QuatQ& o) {
    w += o.w;
    x += o.x;
    y += o.y;
    z += o.z;
    return *this;
  }
  QuatQ operator*(const QuatQ& o) const {
    return {w * o.w - x * o.x - y * o.y - z * o.z,
            w * o.x + x * o.w + y * o.z - z * o.y,
            w * o.y - x * o.z + y * o.w + z * o.x,
            w * o.z + x * o.y - y * o.x + z * o.w};
  }
  QuatQ conj() const { return {w, -x, -y, -z}; }
  Rat real() const { return w; }
  bool operator==(const QuatQ& o) const = default;
};

// Multiplication of basis units: unit(a) * unit(b) = sign * unit(c).
struct UnitProduct {
  int sign;
  int unit;
};
UnitProduct unit_mul(int a, int b);
inline int unit_inv_sign(int u) { return u == 0 ? 1 : -1; }  // u^{-1} = +-u

// Element of the 4^n-dimensional real algebra H^{tensor n}, coefficients on
// basis tensors unit(b_1) x ... x unit(b_n).
class HTensor {
 public:
  explicit HTensor(int n) : n_(n), coef_(ipow(4, n), Rat(0)) {}
  static HTensor one(int n) {
    HTensor t(n);
    t.coef_[0] = 1;
    return t;
  }
  int n() const { return n_; }
  const Rat& coef(long b) const { return coef_[b]; }
  Rat& coef(long b) { return coef_[b]; }
  long dim() const { return (long)coef_.size(); }

  HTensor operator+(const HTensor& o) const;
  HTensor& operator+=(const HTensor& o);
  HTensor scaled(const Rat& c) const;
  HTensor operator*(const HTensor& o) const;
  bool operator==(const HTensor& o) const = default;

 private:
  int n_;
  std::vector<Rat> coef_;
};

// Block embedding of M_N(H) into M_{2N}(C):
//   A + jB  ->  [[A, -conj(B)], [B, conj(A)]].
MatG iota(const Mat<QuatQ>& m);
Mat<QuatQ> quat_mat_from_blocks(const MatQ& mw, const MatQ& mx, const MatQ& my,
                                const MatQ& mz);

}  // namespace mf
