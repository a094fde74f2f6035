#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace mf {

using Rat = mpq_class;

struct Error : std::runtime_error {
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

inline Rat rat(long num, long den = 1) {
  Rat q(num, den);
  q.canonicalize();
  return q;
}

inline Rat rat_pow(const Rat& base, long e) {
  if (e < 0) {
    if (base == 0) throw Error("rational: division by zero in power");
    Rat inv = 1 / base;
    return rat_pow(inv, -e);
  }
  Rat acc = 1, b = base;
  while (e > 0) {
    if (e & 1) acc *= b;
    b *= b;
    e >>= 1;
  }
  return acc;
}

// Accepts "p", "p/q" and plain decimals such as "-0.75" (converted exactly).
inline Rat rat_parse(const std::string& s) {
  if (s.empty()) throw Error("rational: empty literal");
  auto dot = s.find('.');
  if (dot == std::string::npos) {
    Rat q;
    if (q.set_str(s, 10) != 0) throw Error("rational: bad literal '" + s + "'");
    q.canonicalize();
    return q;
  }
  std::string digits = s.substr(0, dot) + s.substr(dot + 1);
  size_t frac_len = s.size() - dot - 1;
  if (frac_len == 0) throw Error("rational: bad literal '" + s + "'");
  Rat num;
  if (num.set_str(digits, 10) != 0) throw Error("rational: bad literal '" + s + "'");
  Rat den = 1;
  for (size_t i = 0; i < frac_len; ++i) den *= 10;
  Rat q = num / den;
  q.canonicalize();
  return q;
}

inline std::string rat_str(const Rat& q) { return q.get_str(); }

inline double rat_double(const Rat& q) { return q.get_d(); }

}  // namespace mf
