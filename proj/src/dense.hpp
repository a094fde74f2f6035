#pragma once

#include <cstdint>
#include <vector>

#include "rational.hpp"

namespace mf {

// Gaussian rational: exact complex number re + im*i.
struct GaussRat {
  Rat re, im;
  GaussRat() : re(0), im(0) {}
  GaussRat(Rat r) : re(std::move(r)), im(0) {}
  GaussRat(Rat r, Rat i) : re(std::move(r)), im(std::move(i)) {}
  GaussRat operator+(const GaussRat& o) const { return {re + o.re, im + o.im}; }
  GaussRat operator-(const GaussRat& o) const { return {re - o.re, im - o.im}; }
  GaussRat operator*(const GaussRat& o) const {
    return {re * o.re - im * o.im, re * o.im + im * o.re};
  }
  GaussRat& operator+=(const GaussRat& o) {
    re += o.re;
    im += o.im;
    return *this;
  }
  GaussRat conj() const { return {re, -im}; }
  bool operator==(const GaussRat& o) const = default;
};

template <class T>
struct Mat {
  int rows = 0, cols = 0;
  std::vector<T> a;
  Mat() = default;
  Mat(int r, int c) : rows(r), cols(c), a(size_t(r) * c, T(0)) {}
  T& at(int r, int c) { return a[size_t(r) * cols + c]; }
  const T& at(int r, int c) const { return a[size_t(r) * cols + c]; }
  static Mat id(int d) {
    Mat m(d, d);
    for (int i = 0; i < d; ++i) m.at(i, i) = T(1);
    return m;
  }
  Mat operator*(const Mat& o) const {
    Mat out(rows, o.cols);
    for (int i = 0; i < rows; ++i)
      for (int k = 0; k < cols; ++k) {
        const T& v = at(i, k);
        if (v == T(0)) continue;
        for (int j = 0; j < o.cols; ++j) out.at(i, j) += v * o.at(k, j);
      }
    return out;
  }
  Mat operator+(const Mat& o) const {
    Mat out = *this;
    for (size_t i = 0; i < a.size(); ++i) out.a[i] += o.a[i];
    return out;
  }
  Mat scaled(const T& c) const {
    Mat out = *this;
    for (auto& v : out.a) v = v * c;
    return out;
  }
  T trace() const {
    T t(0);
    for (int i = 0; i < rows; ++i) t += at(i, i);
    return t;
  }
  Mat transpose() const {
    Mat out(cols, rows);
    for (int i = 0; i < rows; ++i)
      for (int j = 0; j < cols; ++j) out.at(j, i) = at(i, j);
    return out;
  }
  bool operator==(const Mat& o) const = default;
};

using MatI = Mat<long>;
using MatQ = Mat<Rat>;
using MatG = Mat<GaussRat>;

inline long ipow(long b, int e) {
  long r = 1;
  while (e-- > 0) r *= b;
  return r;
}

// Flat index of a multi-index (i_1..i_n), each in 0..N-1, factor 1 most
// significant.
inline long flat_index(const std::vector<int>& idx, long N) {
  long f = 0;
  for (int v : idx) f = f * N + v;
  return f;
}

}  // namespace mf
