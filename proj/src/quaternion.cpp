#include "quaternion.hpp"

namespace mf {

UnitProduct unit_mul(int a, int b) {
  // 0:1 1:i 2:j 3:k
  if (a == 0) return {1, b};
  if (b == 0) return {1, a};
  if (a == b) return {-1, 0};
  // i j = k, j k = i, k i = j, and antisymmetry
  static const int table[4][4] = {
      {0, 0, 0, 0}, {0, 0, 3, 2}, {0, 3, 0, 1}, {0, 2, 1, 0}};
  static const int sign[4][4] = {
      {1, 1, 1, 1}, {1, 1, 1, -1}, {1, -1, 1, 1}, {1, 1, -1, 1}};
  return {sign[a][b], table[a][b]};
}

HTensor HTensor::operator+(const HTensor& o) const {
  HTensor out = *this;
  out += o;
  return out;
}

HTensor& HTensor::operator+=(const HTensor& o) {
  for (long b = 0; b < dim(); ++b) coef_[b] += o.coef_[b];
  return *this;
}

HTensor HTensor::scaled(const Rat& c) const {
  HTensor out = *this;
  for (auto& v : out.coef_) v *= c;
  return out;
}

HTensor HTensor::operator*(const HTensor& o) const {
  HTensor out(n_);
  for (long b1 = 0; b1 < dim(); ++b1) {
    if (coef_[b1] == 0) continue;
    for (long b2 = 0; b2 < dim(); ++b2) {
      if (o.coef_[b2] == 0) continue;
      int sign = 1;
      long target = 0;
      long place = dim() / 4;
      for (int k = 0; k < n_; ++k) {
        int ua = int((b1 / place) % 4), ub = int((b2 / place) % 4);
        UnitProduct p = unit_mul(ua, ub);
        sign *= p.sign;
        target = target * 4 + p.unit;
        place /= 4;
      }
      out.coef_[target] += coef_[b1] * o.coef_[b2] * sign;
    }
  }
  return out;
}

MatG iota(const Mat<QuatQ>& m) {
  const int N = m.rows;
  MatG out(2 * N, 2 * N);
  for (int r = 0; r < N; ++r)
    for (int c = 0; c < N; ++c) {
      const QuatQ& q = m.at(r, c);
      GaussRat alpha(q.w, q.x);  // A = w + x i
      GaussRat beta(q.y, -q.z);  // B = y - z i
      out.at(r, c) = alpha;
      out.at(r, c + N) = GaussRat(-beta.re, beta.im);  // -conj(B)
      out.at(r + N, c) = beta;
      out.at(r + N, c + N) = alpha.conj();
    }
  return out;
}

Mat<QuatQ> quat_mat_from_blocks(const MatQ& mw, const MatQ& mx, const MatQ& my,
                                const MatQ& mz) {
  const int N = mw.rows;
  Mat<QuatQ> out(N, N);
  for (int r = 0; r < N; ++r)
    for (int c = 0; c < N; ++c)
      out.at(r, c) = QuatQ(mw.at(r, c), mx.at(r, c), my.at(r, c), mz.at(r, c));
  return out;
}

}  // namespace mf
