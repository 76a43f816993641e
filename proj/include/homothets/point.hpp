#pragma once

#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

#include "homothets/rational.hpp"

namespace homothets {

// A point (or direction) with exact rational coordinates.
struct Point {
  std::vector<Rational> coords;

  Point() = default;
  explicit Point(std::vector<Rational> c) : coords(std::move(c)) {}
  Point(std::initializer_list<Rational> c) : coords(c) {}

  int dimension() const { return static_cast<int>(coords.size()); }
  const Rational& operator[](int i) const { return coords[static_cast<std::size_t>(i)]; }
  Rational& operator[](int i) { return coords[static_cast<std::size_t>(i)]; }

  bool operator==(const Point& other) const { return coords == other.coords; }
  bool operator!=(const Point& other) const { return coords != other.coords; }
};

inline void require_same_dimension(const Point& a, const Point& b) {
  if (a.dimension() != b.dimension())
    throw std::invalid_argument("dimension mismatch between points");
}

inline Point operator+(const Point& a, const Point& b) {
  require_same_dimension(a, b);
  Point r = a;
  for (int i = 0; i < a.dimension(); ++i) r[i] += b[i];
  return r;
}

inline Point operator-(const Point& a, const Point& b) {
  require_same_dimension(a, b);
  Point r = a;
  for (int i = 0; i < a.dimension(); ++i) r[i] -= b[i];
  return r;
}

inline Point operator-(const Point& a) {
  Point r = a;
  for (int i = 0; i < a.dimension(); ++i) r[i] = -r[i];
  return r;
}

inline Point operator*(const Rational& s, const Point& a) {
  Point r = a;
  for (int i = 0; i < a.dimension(); ++i) r[i] *= s;
  return r;
}

inline Rational dot(const Point& a, const Point& b) {
  require_same_dimension(a, b);
  Rational r = 0;
  for (int i = 0; i < a.dimension(); ++i) r += a[i] * b[i];
  return r;
}

inline bool lex_less(const Point& a, const Point& b) {
  return a.coords < b.coords;
}

inline bool is_zero(const Point& a) {
  for (const auto& c : a.coords)
    if (c != 0) return false;
  return true;
}

// Sign of the 2D cross product (b - a) x (c - a): >0 left turn, <0 right.
inline int orientation2(const Point& a, const Point& b, const Point& c) {
  const Rational v =
      (b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0]);
  if (v > 0) return 1;
  if (v < 0) return -1;
  return 0;
}

inline std::string point_to_string(const Point& p) {
  std::string out = "(";
  for (int i = 0; i < p.dimension(); ++i) {
    if (i) out += ", ";
    out += rational_to_string(p[i]);
  }
  out += ")";
  return out;
}

}  // namespace homothets
